#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "twistknot/closedform.hpp"
#include "twistknot/matrix.hpp"
#include "twistknot/real.hpp"
#include "twistknot/riley.hpp"
#include "twistknot/words.hpp"

namespace twistknot {

using CMat2 = Matrix<Complex, 2>;

// Parabolic representation of the two generators at a root u of phi(1, u):
// rho(x) = [[1,1],[0,1]], rho(y) = [[1,0],[-u,1]].
inline CMat2 parabolic_x() {
    CMat2 m = CMat2::identity();
    m(0, 1) = Complex(1);
    return m;
}

inline CMat2 parabolic_y(const Complex& u) {
    CMat2 m = CMat2::identity();
    m(1, 0) = -u;
    return m;
}

// Evaluate a word in the parabolic representation; inverse letters use the
// adjugate (determinant 1).
inline CMat2 evaluate_word_parabolic(const Word& word, const Complex& u) {
    const CMat2 x = parabolic_x();
    const CMat2 y = parabolic_y(u);
    const CMat2 xi = x.adjugate();
    const CMat2 yi = y.adjugate();
    CMat2 acc = CMat2::identity();
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

// All roots of phi(1, u), sorted deterministically (their count equals the
// degree; they come in conjugate pairs off the real axis).
inline std::vector<Complex> parabolic_roots(int m, std::uint64_t seed = 7) {
    return roots_of_univariate(riley_polynomial_at_s1(m), Var::u, seed);
}

struct CuspShape {
    Complex u;       // the curve parameter
    Complex shape;   // the cusp shape c = (2u + 4)/u
    bool geometric;  // closest to the limiting shape 2 + 2i
};

// Cusp shapes at every non-real parabolic root. Listed with positive
// imaginary shape first; the conjugate pair nearest 2 + 2i is flagged as
// the geometric candidate.
inline std::vector<CuspShape> cusp_shapes(int m, std::uint64_t seed = 7) {
    if (m == 1) throw NotHyperbolic("the m = 1 knot is not hyperbolic");
    std::vector<CuspShape> out;
    Real tol = Real(1) / Real::pow2(27);
    for (const Complex& u : parabolic_roots(m, seed)) {
        if (u.im.abs() < tol * (Real(1) + u.abs())) continue;  // real root
        CuspShape cs;
        cs.u = u;
        cs.shape = (Complex(2) * u + Complex(4)) / u;
        cs.geometric = false;
        out.push_back(cs);
    }
    if (out.empty()) throw NotHyperbolic("no non-real parabolic root found");
    std::sort(out.begin(), out.end(), [](const CuspShape& p, const CuspShape& q) {
        if (p.shape.im.sign() != q.shape.im.sign()) return p.shape.im.sign() > q.shape.im.sign();
        if (p.shape.re != q.shape.re) return p.shape.re < q.shape.re;
        return p.shape.im < q.shape.im;
    });
    const Complex target(Real(2), Real(2));
    std::size_t best = 0;
    std::optional<Real> best_dist;
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i].shape.im.sign() <= 0) continue;
        Real dist = (out[i].shape - target).abs();
        if (!best_dist || dist < *best_dist) {
            best_dist = dist;
            best = i;
        }
    }
    out[best].geometric = true;
    // Flag the conjugate partner as well.
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i == best) continue;
        if ((out[i].shape - out[best].shape.conj()).abs() <
            Real(1) / Real::pow2(27) * (Real(1) + out[best].shape.abs()))
            out[i].geometric = true;
    }
    return out;
}

inline CuspShape geometric_cusp(int m, std::uint64_t seed = 7) {
    for (const CuspShape& cs : cusp_shapes(m, seed)) {
        if (cs.geometric && cs.shape.im.sign() > 0) return cs;
    }
    throw NotHyperbolic("no geometric cusp candidate");
}

// Residuals of the structural identities satisfied by Omega = rho(w)^m and
// the longitude at a parabolic root.
struct ParabolicChecks {
    Complex u;
    Real omega_upper_left;       // |Omega_11|
    Real shear_relation;         // |u Omega_12 + Omega_21|
    Real normalisation;          // |u Omega_12^2 - 1|
    Real diagonal_relation;      // |Omega_22 + (u+2) Omega_12|
    Real longitude_trace;        // |tr rho(lambda) + 2|
    Real longitude_lower_left;   // |rho(lambda)_21|
    Real cusp_round_trip;        // |u - 4/(c - 2)|
    Complex cusp;                // c = -2 Omega_12 Omega_22
};

inline ParabolicChecks parabolic_identity_checks(int m, const Complex& u) {
    ParabolicChecks out;
    out.u = u;
    CMat2 omega = evaluate_word_parabolic(word_pow(word_w(), m), u);
    Complex w12 = omega(0, 1), w22 = omega(1, 1);
    out.omega_upper_left = omega(0, 0).abs();
    out.shear_relation = (u * w12 + omega(1, 0)).abs();
    out.normalisation = (u * w12 * w12 - Complex(1)).abs();
    out.diagonal_relation = (w22 + (u + Complex(2)) * w12).abs();
    CMat2 lambda = evaluate_word_parabolic(longitude_word(m), u);
    out.longitude_trace = (lambda.trace() + Complex(2)).abs();
    out.longitude_lower_left = lambda(1, 0).abs();
    out.cusp = Complex(0) - Complex(2) * w12 * w22;
    out.cusp_round_trip = (u - Complex(4) / (out.cusp - Complex(2))).abs();
    return out;
}

// Tolerance for the parabolic identity residuals at working precision: the
// residual polynomials evaluate through matrix entries whose size is
// governed by the trace sequence, |t_k(tau)| ~ |tau|^k with tau = u^2 + 2,
// so the rounding noise scales like (1 + |tau|)^(|m|+1) * 2^-prec. Sixteen
// bits of headroom absorb coefficient growth and accumulation.
inline Real parabolic_identity_tolerance(const Complex& u, int m) {
    int mm = m < 0 ? -m : m;
    Real tau_mag = (u * u + Complex(2)).abs();
    return (Real(1) + tau_mag).pow_si(mm + 1) *
           Real::pow2(-static_cast<long>(Real::default_prec()) + 16);
}

// Cusp shape of a parabolic two-bridge representation from its defining
// word: n - 2 Omega_12 Omega_22, after checking Omega fixes infinity.
inline Complex cusp_shape_two_bridge(const Word& omega_word_in, long n_exponent, const Complex& u,
                                     const Real& tol) {
    CMat2 omega = evaluate_word_parabolic(omega_word_in, u);
    if (!(omega(0, 0).abs() < tol))
        throw NotParabolic("word image does not fix the parabolic point: |entry| = " +
                           omega(0, 0).abs().to_string(6));
    return Complex(n_exponent) - Complex(2) * omega(0, 1) * omega(1, 1);
}

// --- Torsion growth ----------------------------------------------------------

struct GrowthPoint {
    int m;                 // family index (the knot is the sign * m member)
    int crossings;
    Complex u_geometric;
    Real torsion_abs;      // |torsion| at the geometric root
};

struct GrowthFit {
    double slope = 0;
    double intercept = 0;
    std::vector<GrowthPoint> points;
};

// Least-squares slope of log |torsion at the geometric root| against
// log(crossing number) over a range of the family.
inline GrowthFit torsion_growth_fit(int sign, int from, int to, std::uint64_t seed = 7) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    GrowthFit fit;
    for (int k = from; k <= to; ++k) {
        int m = sign * k;
        if (m == 0 || m == 1) continue;  // unknot / not hyperbolic
        GrowthPoint pt;
        pt.m = k;
        pt.crossings = twist_knot_from_m(m).crossing_number();
        CuspShape geo = geometric_cusp(m, seed);
        pt.u_geometric = geo.u;
        pt.torsion_abs = closed_form_torsion_holonomy(geo.u, m).abs();
        fit.points.push_back(std::move(pt));
    }
    if (fit.points.size() < 3)
        throw InsufficientData("need at least three family members for a slope fit");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(fit.points.size());
    for (const auto& pt : fit.points) {
        double x = std::log(static_cast<double>(pt.crossings));
        double y = pt.torsion_abs.log().to_double();
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    fit.intercept = (sy - fit.slope * sx) / n;
    return fit;
}

}  // namespace twistknot
