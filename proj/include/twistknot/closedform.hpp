#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "twistknot/polynomial.hpp"
#include "twistknot/real.hpp"
#include "twistknot/riley.hpp"

namespace twistknot {

// Eigenvalues xi+- of the commutator matrix at a numeric point:
// xi = (tau +- sqrt((tau+2)(tau-2)))/2 with tau = u^2 + (2 - s - 1/s)u + 2,
// principal square-root branch, xi+ xi- = 1.
struct EigenData {
    Complex tau;
    Complex xi_plus;
    Complex xi_minus;
    bool degenerate = false;  // |xi+ - xi-| below the collision threshold

    // Chebyshev value t_k at this point: (xi+^k - xi-^k)/(xi+ - xi-),
    // extended by t_{-k} = -t_k; near-collinear eigenvalues switch to the
    // limit branch t_k = k xi^{k-1}.
    Complex t(int k) const {
        if (k == 0) return Complex(0);
        bool neg = k < 0;
        int n = neg ? -k : k;
        Complex val;
        if (degenerate) {
            val = Complex(n) * xi_plus.powi(n - 1);
        } else {
            val = (xi_plus.powi(n) - xi_minus.powi(n)) / (xi_plus - xi_minus);
        }
        return neg ? -val : val;
    }
};

inline EigenData eigen_data(const Complex& s, const Complex& u) {
    EigenData e;
    Complex two(2);
    e.tau = u * u + (two - s - Complex(1) / s) * u + two;
    Complex disc = ((e.tau + two) * (e.tau - two)).sqrt();
    e.xi_plus = (e.tau + disc) / two;
    e.xi_minus = (e.tau - disc) / two;
    Real tol = Real::pow2(-27);  // ~1e-8 collision threshold
    e.degenerate = (e.xi_plus - e.xi_minus).abs() < tol;
    return e;
}

namespace detail {

// Shared auxiliaries of the closed-form coefficients C1, C2, C3.
struct ClosedFormAux {
    Complex s, u, xp, xm, cc, a1, a2, b1, b2, d2, d4, sig1;
    Complex s_inv;

    static ClosedFormAux make(const Complex& s, const Complex& u, const EigenData& e) {
        ClosedFormAux q;
        q.s = s;
        q.u = u;
        q.xp = e.xi_plus;
        q.xm = e.xi_minus;
        q.s_inv = Complex(1) / s;
        Complex one(1);
        q.cc = u + one - q.s_inv;
        q.a1 = (q.xm - one) * (q.xp + s) + (s - one) * (s - one) * u - s * u * u;
        q.a2 = (one - s * u - q.xp) * (one + (q.xp - s) / q.cc);
        q.b1 = (q.xp - one) * (q.xm + s) + (s - one) * (s - one) * u - s * u * u;
        q.b2 = (one - s * u - q.xm) * (one + (q.xm - s) / q.cc);
        Complex diff = q.xp - q.xm;
        q.d2 = diff * diff;
        q.d4 = q.d2 * q.d2;
        q.sig1 = s + q.s_inv + one;
        return q;
    }

    Complex c1(long m) const {
        Complex mv(m), one(1);
        Complex ep = cc * (one - xp) + a1 * s_inv;  // recurring bracket at xi+
        Complex em = cc * (one - xm) + b1 * s_inv;  // recurring bracket at xi-
        Complex r = (a1 * a1 * Complex(3 * m + 1) * s_inv + mv * s_inv * b1 * b1 * (xp * xp + one) -
                     mv * d2 * sig1) /
                    d2;
        r = r - mv / d4 *
                    (ep * ep * (d2 * sig1 - (a1 * a1 + b1 * b1) * s_inv) +
                     Complex(2) * a1 * b2 * s_inv * ep * (cc * (one - xp) + a2 * s_inv));
        r = r - mv / d4 *
                    ((a1 * a1 * s_inv) *
                         (d2 * (u * u + Complex(4) * u + Complex(3)) - ep * ep - em * em) +
                     Complex(2) * a1 * a2 * s_inv * ep * (cc * (one - xm) + b2 * s_inv));
        return r;
    }

    Complex c2(long m) const {
        Complex mv(m), one(1);
        Complex ep = cc * (one - xp) + a1 * s_inv;
        Complex em = cc * (one - xm) + b1 * s_inv;
        Complex r = (b1 * b1 * Complex(3 * m + 1) * s_inv + mv * s_inv * a1 * a1 * (xm * xm + one) -
                     mv * d2 * sig1) /
                    d2;
        r = r - mv / d4 *
                    (em * em * (d2 * sig1 - (a1 * a1 + b1 * b1) * s_inv) +
                     Complex(2) * a2 * b1 * s_inv * em * (cc * (one - xm) + b2 * s_inv));
        r = r - mv / d4 *
                    ((b1 * b1 * s_inv) *
                         (d2 * (u * u + Complex(4) * u + Complex(3)) - ep * ep - em * em) +
                     Complex(2) * b1 * b2 * s_inv * em * (cc * (one - xp) + a2 * s_inv));
        return r;
    }

    Complex c3(long m, const Complex& tm) const {
        Complex mv(m), one(1);
        Complex ab_over_s = (a1 * a1 + b1 * b1) * s_inv;
        Complex r = mv / d2 * (d2 * sig1 - ab_over_s);
        r = r + tm * tm / d2 * (Complex(4) * d2 * sig1 - Complex(5) * ab_over_s);
        Complex q1 = cc * (one - xp) * b1 + a1 * b1 * s_inv;
        Complex q2 = cc * (one - xp) * b2 + a2 * b2 * s_inv;
        Complex q3 = cc * (one - xm) * a1 + a1 * b1 * s_inv;
        Complex q4 = cc * (one - xm) * a2 + a2 * b2 * s_inv;
        r = r - tm * tm / d4 *
                    (q1 * q1 * s_inv - q2 * q2 * s_inv + q3 * q3 * s_inv - q4 * q4 * s_inv);
        Complex sm2 = s + s_inv - Complex(2);
        r = r + mv * sm2 * sm2 * tm * tm;
        return r;
    }
};

}  // namespace detail

// Relative tolerance for the on-curve membership test, scaled by the size
// of the point and the degree of the curve polynomial.
inline Real off_curve_tolerance(const Complex& u, int degree) {
    Real base = Real(1) / Real::pow2(33) / Real(10);  // ~1e-10
    Real scale = (Real(1) + u.abs()).pow_si(degree);
    return base * scale;
}

// The closed-form evaluation of the torsion (divided by tau_0) at a point
// (s, u) on the curve of J(2, 2m):
//   m > 0 : [ C1 xi+^(m-1) + C2 xi-^(m-1) ] t_|m| + C3, over (s + 1/s - 2)
//   m < 0 : [ -C1 xi+^(m-1) - C2 xi-^(m-1) ] t_|m| + C3, same divisor.
inline Complex closed_form_torsion(const Complex& s, const Complex& u, int m) {
    if (m == 0) throw Unknot("no torsion for m = 0");
    MPoly phi = riley_polynomial(m);
    std::array<Complex, kNumVars> point = {s, u, Complex(0), Complex(0), Complex(0), Complex(0)};
    auto conv = [](const Rational& q) { return Complex(Real(q)); };
    Complex residue = phi.eval(point, conv);
    if (!(residue.abs() < off_curve_tolerance(u, riley_degree_u(m))))
        throw OffCurve("point does not satisfy the curve polynomial: |phi| = " +
                       residue.abs().to_string(6));

    EigenData e = eigen_data(s, u);
    if (e.degenerate)
        throw DegenerateEigenvalues("eigenvalues collide; closed-form coefficients have poles");
    auto aux = detail::ClosedFormAux::make(s, u, e);
    long mm = m > 0 ? m : -m;
    Complex tm = e.t(static_cast<int>(mm));
    Complex head = aux.c1(m) * e.xi_plus.powi(m - 1) * tm + aux.c2(m) * e.xi_minus.powi(m - 1) * tm;
    Complex closed = (m > 0 ? head : -head) + aux.c3(m, tm);
    return closed / (s + Complex(1) / s - Complex(2));
}

// Closed form at the parabolic point s = 1 (table normalisation): with
// power sums p_j = xi+^j + xi-^j,
//   m > 0 : [ (4 + m(u^2-4u+8)) t_m p_m + (t_m p_{m-1} - 1)(u^2-4) m
//             + (-5u^2-8u+4) t_m^2 ] / (u^2+4)
//   m < 0 : the mirrored numerator with (-4 + ...), p_{|m|+1}, +1; the
//           quotient then enters with an overall minus sign.
inline Complex closed_form_torsion_holonomy(const Complex& u, int m) {
    if (m == 0) throw Unknot("no torsion for m = 0");
    EigenData e = eigen_data(Complex(1), u);
    int mm = m > 0 ? m : -m;
    Complex tm = e.t(mm);
    auto psum = [&](int j) {
        // p_0 = 2, p_1 = u^2 + 2, p_{j+1} = (u^2+2) p_j - p_{j-1}
        Complex p0(2);
        Complex p1 = u * u + Complex(2);
        if (j == 0) return p0;
        for (int i = 1; i < j; ++i) {
            Complex p2 = (u * u + Complex(2)) * p1 - p0;
            p0 = p1;
            p1 = p2;
        }
        return p1;
    };
    Complex m_c(mm);
    Complex quad = u * u - Complex(4) * u + Complex(8);
    Complex tail = (-Complex(5) * u * u - Complex(8) * u + Complex(4)) * tm * tm;
    Complex expr;
    if (m > 0) {
        expr = (Complex(4) + m_c * quad) * tm * psum(mm) +
               (tm * psum(mm - 1) - Complex(1)) * (u * u - Complex(4)) * m_c + tail;
    } else {
        expr = (-Complex(4) + m_c * quad) * tm * psum(mm) +
               (tm * psum(mm + 1) + Complex(1)) * (u * u - Complex(4)) * m_c + tail;
    }
    Complex table = expr / (u * u + Complex(4));
    return m > 0 ? table : -table;
}

// --- Polynomial root finding -------------------------------------------------

// Simultaneous (Aberth) iteration on a complex-coefficient polynomial given
// in ascending coefficient order. Deterministic for a fixed seed.
inline std::vector<Complex> polynomial_roots(std::vector<Complex> coeffs, std::uint64_t seed,
                                             int max_iter = 500) {
    while (!coeffs.empty() && coeffs.back().abs().is_zero()) coeffs.pop_back();
    if (coeffs.size() < 2) throw std::invalid_argument("root finding needs degree >= 1");
    const int n = static_cast<int>(coeffs.size()) - 1;

    // Monic normalisation.
    Complex lead = coeffs.back();
    for (auto& c : coeffs) c = c / lead;

    // Internal working precision: the Horner evaluation loses about as many
    // bits as the top coefficient exponent to cancellation near a root, so
    // that height is carried as guard bits on top of the target accuracy
    // (plus a fixed pad for accumulation). Without the lift, root clusters
    // of high-degree polynomials with large middle coefficients cannot be
    // resolved to target accuracy at all.
    const long target = static_cast<long>(Real::default_prec());
    long height = 0;
    for (const auto& c : coeffs) {
        Real mag = c.abs();
        if (!mag.is_zero()) height = std::max(height, mag.exponent());
    }
    const long work = target + std::max(height, 0L) + 32;
    for (auto& c : coeffs)
        c = Complex(c.re.at_precision(work), c.im.at_precision(work));

    auto eval_both = [&](const Complex& z) {
        Complex p(0), dp(0);
        for (int k = n; k >= 0; --k) {
            dp = dp * z + p;
            p = p * z + coeffs[static_cast<std::size_t>(k)];
        }
        return std::pair<Complex, Complex>(p, dp);
    };

    // Rounding-noise floor of the Horner evaluation at |z|: no residual can
    // be meaningfully driven below it, so a root counts as converged there.
    std::vector<Real> mags;
    mags.reserve(coeffs.size());
    for (const auto& c : coeffs) mags.push_back(c.abs());
    auto noise_floor = [&](const Real& az) {
        Real acc(0);
        for (int k = n; k >= 0; --k) acc = acc * az + mags[static_cast<std::size_t>(k)];
        return acc * Real::pow2(-work + 6);
    };

    // Fujiwara inclusion radius for the monic polynomial: every root lies in
    // |z| <= 2 max_k |a_(n-k)|^(1/k), with the constant term halved. Scaling
    // the start circle to the roots matters: a plain coefficient-magnitude
    // bound can overshoot by many orders, and the contraction of the
    // simultaneous iteration (about 1 - 1/n per sweep from far out) would
    // then need more sweeps than any sane cap to come back down.
    Real radius(0);
    for (int k = 1; k <= n; ++k) {
        Real mag = coeffs[static_cast<std::size_t>(n - k)].abs();
        if (k == n) mag = mag / Real(2);
        if (mag.is_zero()) continue;
        Real rk = mag.nth_root(static_cast<unsigned long>(k));
        if (radius < rk) radius = rk;
    }
    radius = Real(2) * radius;
    if (radius < Real(1)) radius = Real(1);

    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Real two_pi = Real(2) * Real::const_pi();
    std::vector<Complex> z(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Real angle = two_pi * Real(unit(rng));
        Real r = radius * Real(0.5 + 0.5 * unit(rng));
        z[static_cast<std::size_t>(i)] = Complex(r * angle.cos(), r * angle.sin());
    }

    Real eps = Real::pow2(-target + 8);
    for (int iter = 0; iter < max_iter; ++iter) {
        bool converged = true;
        for (int i = 0; i < n; ++i) {
            auto [p, dp] = eval_both(z[static_cast<std::size_t>(i)]);
            if (p.abs() < noise_floor(z[static_cast<std::size_t>(i)].abs())) continue;
            if (dp.abs().is_zero()) {
                // Nudge off a critical point.
                z[static_cast<std::size_t>(i)] +=
                    Complex(radius * Real(0.001), radius * Real(0.002));
                converged = false;
                continue;
            }
            Complex newton = p / dp;
            Complex repulsion(0);
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                repulsion += Complex(1) / (z[static_cast<std::size_t>(i)] -
                                           z[static_cast<std::size_t>(j)]);
            }
            Complex denom = Complex(1) - newton * repulsion;
            Complex step = denom.abs().is_zero() ? newton : newton / denom;
            z[static_cast<std::size_t>(i)] -= step;
            if (!(step.abs() < eps * (Real(1) + z[static_cast<std::size_t>(i)].abs())))
                converged = false;
        }
        if (converged) {
            // Newton polish.
            for (auto& root : z) {
                for (int k = 0; k < 3; ++k) {
                    auto [p, dp] = eval_both(root);
                    if (p.abs() < noise_floor(root.abs())) break;
                    if (dp.abs().is_zero()) break;
                    root -= p / dp;
                }
            }
            // Deliver at the caller's precision; the guard bits are internal.
            for (auto& root : z)
                root = Complex(root.re.at_precision(static_cast<mpfr_prec_t>(target)),
                               root.im.at_precision(static_cast<mpfr_prec_t>(target)));
            // Sort by real part at the delivered accuracy, then by imaginary
            // part. The real-part key is quantised so that mathematical ties
            // (conjugate pairs above all) are broken by the imaginary part
            // rather than by rounding crumbs, keeping the order reproducible
            // across precisions and iteration paths.
            Real grain = Real::pow2(radius.exponent() - target + 24);
            auto key = [&](const Real& re) { return (re / grain).round_to_integer(); };
            std::sort(z.begin(), z.end(), [&](const Complex& x, const Complex& y) {
                Real kx = key(x.re), ky = key(y.re);
                if (kx != ky) return kx < ky;
                return x.im < y.im;
            });
            return z;
        }
    }
    throw RootFindingDiverged("simultaneous iteration did not converge");
}

// Roots of a univariate MPoly (exact rational coefficients converted once,
// directly at working precision).
inline std::vector<Complex> roots_of_univariate(const MPoly& p, Var v, std::uint64_t seed) {
    auto uni = p.as_univariate(v);
    if (uni.empty()) throw std::invalid_argument("zero polynomial has no root set");
    int deg = uni.rbegin()->first;
    std::vector<Complex> coeffs(static_cast<std::size_t>(deg) + 1, Complex(0));
    for (const auto& [k, c] : uni) {
        if (!c.is_constant())
            throw std::invalid_argument("root finding expects a univariate polynomial");
        coeffs[static_cast<std::size_t>(k)] = Complex(Real(c.constant_term()));
    }
    return polynomial_roots(std::move(coeffs), seed);
}

}  // namespace twistknot
