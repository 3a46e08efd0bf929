#pragma once

#include <string>
#include <utility>

#include "twistknot/format.hpp"
#include "twistknot/matrix.hpp"
#include "twistknot/polynomial.hpp"
#include "twistknot/riley.hpp"
#include "twistknot/words.hpp"

namespace twistknot {

// Adjoint images of the generators on the Lie algebra in the basis {E, H, F}
// (columns are the coordinates of M E M^-1, M H M^-1, M F M^-1).
inline PolyMat3 adjoint_x() {
    const MPoly s = poly_s(), si = poly_si();
    PolyMat3 x;
    x(0, 0) = s;
    x(0, 1) = MPoly::constant(-2);
    x(0, 2) = -si;
    x(1, 1) = MPoly::one();
    x(1, 2) = si;
    x(2, 2) = si;
    return x;
}

inline PolyMat3 adjoint_y() {
    const MPoly s = poly_s(), si = poly_si(), u = poly_u();
    PolyMat3 y;
    y(0, 0) = s;
    y(1, 0) = s * u;
    y(1, 1) = MPoly::one();
    y(2, 0) = -s * u * u;
    y(2, 1) = MPoly::constant(-2) * u;
    y(2, 2) = si;
    return y;
}

// Adjoint image of an arbitrary word; inverse letters use the adjugate
// (all adjoint images have determinant 1).
inline PolyMat3 adjoint_of_word(const Word& word) {
    const PolyMat3 x = adjoint_x();
    const PolyMat3 y = adjoint_y();
    const PolyMat3 xi = x.adjugate();
    const PolyMat3 yi = y.adjugate();
    PolyMat3 acc = PolyMat3::identity();
    for (char ch : word) {
        switch (ch) {
            case 'x': acc = acc * x; break;
            case 'X': acc = acc * xi; break;
            case 'y': acc = acc * y; break;
            case 'Y': acc = acc * yi; break;
            default: throw ParseError(std::string("invalid word letter '") + ch + "'");
        }
    }
    return acc;
}

// Adjoint image of the commutator w = y x^-1 y^-1 x.
inline PolyMat3 adjoint_w() {
    const PolyMat3 x = adjoint_x();
    const PolyMat3 y = adjoint_y();
    return y * x.adjugate() * y.adjugate() * x;
}

namespace detail {

struct AdjointSet {
    PolyMat3 x, y, xi, yi, w, wi;

    static AdjointSet make(bool at_s1) {
        AdjointSet a;
        a.x = adjoint_x();
        a.y = adjoint_y();
        if (at_s1) {
            a.x = subs_one_entries(a.x);
            a.y = subs_one_entries(a.y);
        }
        a.xi = a.x.adjugate();
        a.yi = a.y.adjugate();
        a.w = a.y * a.xi * a.yi * a.x;
        a.wi = a.w.adjugate();
        return a;
    }

    static PolyMat3 subs_one_entries(const PolyMat3& m) {
        PolyMat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r(i, j) = m(i, j).subs_one(Var::s);
        return r;
    }
};

}  // namespace detail

// The t-cleared deformation matrix whose characteristic-style determinant
// det(t*1 + Zc) carries the torsion numerator: Zc = t * Z_m with
//   m > 0 : Z_m = (1 - tX) S_m(W^-1) (t^-1 X^-1 - X^-1 Y)
//   m < 0 : Z_m = (1 - tX) S_|m|(W)  (Y X^-1 - t^-1 Y X^-1 Y^-1)
inline PolyMat3 torsion_z_cleared(int m, bool at_s1 = false) {
    if (m == 0) throw Unknot("no torsion for m = 0");
    auto adj = detail::AdjointSet::make(at_s1);
    const MPoly t = poly_t();
    const PolyMat3 id = PolyMat3::identity();
    PolyMat3 left = id - adj.x.scaled(t);
    if (m > 0) {
        PolyMat3 s = geometric_sum(adj.wi, m);
        PolyMat3 right = adj.xi - (adj.xi * adj.y).scaled(t);
        return left * s * right;
    }
    PolyMat3 s = geometric_sum(adj.w, -m);
    PolyMat3 yxi = adj.y * adj.xi;
    PolyMat3 right = yxi.scaled(t) - yxi * adj.yi;
    return left * s * right;
}

// det(t*1 + Zc): the torsion numerator, equal to t^3 det(1 + Z_m).
inline MPoly torsion_numerator_raw(int m) {
    PolyMat3 zc = torsion_z_cleared(m);
    return (PolyMat3::scalar(poly_t()) + zc).det();
}

// Numerator and denominator of the torsion polynomial, each up to a unit
// (+-t^k): numerator det(t*1 + Zc) = t^3 det Phi(dr/dx), denominator
// det(tY - 1) = (t-1)(t-s)(t-1/s).
struct TorsionPolynomial {
    TwistKnot knot;
    MPoly numerator;
    MPoly denominator;
    std::string normalization = "numerator and denominator each defined up to a unit t^k";
};

inline TorsionPolynomial torsion_polynomial(const TwistKnot& knot) {
    TorsionPolynomial out;
    out.knot = knot;
    out.numerator = torsion_numerator_raw(knot.m);
    out.denominator = (adjoint_y().scaled(poly_t()) - PolyMat3::identity()).det();
    return out;
}

// Torsion divided by the sign tau_0, as a polynomial on the curve: the
// canonical representative modulo the defining polynomial phi.
struct TorsionValue {
    TwistKnot knot;
    MPoly phi;      // curve defining polynomial
    MPoly bracket;  // value * (s + 1/s - 2), the pre-division form
    MPoly value;    // the torsion normalised by tau_0
};

namespace detail {

// Reduce every t-coefficient modulo phi, then perform exact division by
// (t-1)^order and evaluate at t = 1. Division must be exact; the coefficient
// reduction first is what makes it so.
inline MPoly divide_t_limit(const MPoly& num, const MPoly& phi, int order) {
    auto uni = num.as_univariate(Var::t);
    std::map<int, MPoly> reduced;
    for (const auto& [k, coeff] : uni) {
        MPoly r = coeff.reduce_mod(phi, Var::u);
        if (!r.is_zero()) reduced[k] = std::move(r);
    }
    MPoly n = MPoly::from_univariate(Var::t, reduced);
    for (int i = 0; i < order; ++i) n = n.divide_linear(Var::t, Rational(1));
    return n.subs_one(Var::t).reduce_mod(phi, Var::u);
}

}  // namespace detail

inline TorsionValue torsion_value(const TwistKnot& knot) {
    TorsionValue out;
    out.knot = knot;
    out.phi = riley_polynomial(knot.m);
    // Entry-level reduction before the determinant: every later step factors
    // through the quotient ring, and re-reducing the t-coefficients restores
    // the canonical representatives, so the result is identical to reducing
    // the raw determinant -- at a fraction of the cost.
    PolyMat3 zc = reduce_entries_mod(torsion_z_cleared(knot.m), out.phi, Var::u);
    MPoly num = (PolyMat3::scalar(poly_t()) + zc).det();
    out.bracket = detail::divide_t_limit(num, out.phi, 2);
    MPoly sigma2 = sigma_poly() - MPoly::constant(2);
    out.value = out.bracket.exact_div(sigma2);
    return out;
}

inline TorsionValue torsion_value(int m) { return torsion_value(twist_knot_from_m(m)); }

// Same value through the trace-calculus route: the determinant limit
// rewritten as traces and adjugate traces of the geometric sums.
inline TorsionValue torsion_value_trace_formula(const TwistKnot& knot) {
    int m = knot.m;
    if (m == 0) throw Unknot("no torsion for m = 0");
    auto adj = detail::AdjointSet::make(false);
    const PolyMat3 id = PolyMat3::identity();
    MPoly sig = sigma_poly();
    MPoly two_minus_sig = MPoly::constant(2) - sig;
    MPoly p;
    if (m > 0) {
        PolyMat3 s = geometric_sum(adj.wi, m);
        PolyMat3 as = s.adjugate();
        PolyMat3 ixs = adj.xi * s;
        PolyMat3 mix = (id + adj.xi * adj.y) * s;
        p = ixs.trace() + MPoly::constant(3) * (adj.x * as).trace() +
            (adj.yi * adj.w * as).trace() - ixs.trace() * mix.trace() + (ixs * mix).trace() +
            two_minus_sig * two_minus_sig * s.det();
    } else {
        PolyMat3 s = geometric_sum(adj.w, -m);
        PolyMat3 as = s.adjugate();
        PolyMat3 ixsw = adj.xi * s * adj.w;
        PolyMat3 mix = (id + adj.xi * adj.y) * s * adj.w;
        p = -ixsw.trace() + MPoly::constant(3) * (adj.x * adj.wi * as).trace() +
            (adj.yi * as).trace() - ixsw.trace() * mix.trace() + (ixsw * mix).trace() -
            two_minus_sig * two_minus_sig * s.det();
    }
    TorsionValue out;
    out.knot = knot;
    out.phi = riley_polynomial(m);
    out.bracket = p.reduce_mod(out.phi, Var::u);
    out.value = out.bracket.exact_div(sig - MPoly::constant(2));
    return out;
}

inline TorsionValue torsion_value_trace_formula(int m) {
    return torsion_value_trace_formula(twist_knot_from_m(m));
}

// Torsion at the parabolic specialisation s = 1, where the numerator picks
// up (t-1)^4 and the remaining factor is the table-normalised value.
struct HolonomyTorsion {
    TwistKnot knot;
    MPoly phi1;         // phi(1, u)
    MPoly table_value;  // torsion divided by -tau_0 (m>0) resp. tau_0 (m<0)
    std::string sign_factor;  // the unit relating table_value to the torsion
    bool hyperbolic = true;
};

inline HolonomyTorsion torsion_at_holonomy_symbolic(const TwistKnot& knot) {
    int m = knot.m;
    HolonomyTorsion out;
    out.knot = knot;
    out.phi1 = riley_polynomial_at_s1(m);
    out.hyperbolic = (m != 1);
    PolyMat3 zc = reduce_entries_mod(torsion_z_cleared(m, true), out.phi1, Var::u);
    MPoly num = (PolyMat3::scalar(poly_t()) + zc).det();
    MPoly val = detail::divide_t_limit(num, out.phi1, 4);
    // The torsion itself is -tau_0 * val for either sign of m; the published
    // normalisation divides by -tau_0 for m > 0 and by tau_0 for m < 0.
    if (m > 0) {
        out.table_value = val;
        out.sign_factor = "-tau_0";
    } else {
        out.table_value = -val;
        out.sign_factor = "tau_0";
    }
    return out;
}

inline HolonomyTorsion torsion_at_holonomy_symbolic(int m) {
    return torsion_at_holonomy_symbolic(twist_knot_from_m(m));
}

// Factored form of sigma_3(Zc) = det Zc, used as an engine invariant:
// +- (t-1)^2 (1-ts)(1-t/s)(t-s)(t-1/s) det S, sign +1 for m > 0 and -1 for
// m < 0.
inline std::pair<MPoly, MPoly> sigma3_factorization_sides(int m) {
    PolyMat3 zc = torsion_z_cleared(m);
    MPoly lhs = zc.det();
    const MPoly t = poly_t(), s = poly_s(), si = poly_si(), one = MPoly::one();
    auto adj = detail::AdjointSet::make(false);
    PolyMat3 gs = m > 0 ? geometric_sum(adj.wi, m) : geometric_sum(adj.w, -m);
    MPoly rhs = (t - one).pow(2) * (one - t * s) * (one - t * si) * (t - s) * (t - si) * gs.det();
    if (m < 0) rhs = -rhs;
    return {lhs, rhs};
}

}  // namespace twistknot
