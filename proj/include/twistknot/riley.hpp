#pragma once

#include <utility>
#include <vector>

#include "twistknot/matrix.hpp"
#include "twistknot/polynomial.hpp"
#include "twistknot/words.hpp"

namespace twistknot {

// sigma = s + 1/s, the trace of the meridian image squared root pair.
inline MPoly sigma_poly() { return poly_s() + poly_si(); }

// Trace of the commutator matrix: tau = u^2 + (2 - s - 1/s) u + 2.
inline MPoly tau_poly() {
    return poly_u().pow(2) + (MPoly::constant(2) - sigma_poly()) * poly_u() + MPoly::constant(2);
}

// Chebyshev-like sequence t_0 = 0, t_1 = 1, t_{k+1} = tau t_k - t_{k-1},
// extended by t_{-k} = -t_k. The argument defaults to the commutator trace.
inline MPoly chebyshev_t(int k, const MPoly& tau) {
    bool neg = k < 0;
    int n = neg ? -k : k;
    MPoly t0 = MPoly::zero();
    MPoly t1 = MPoly::one();
    if (n == 0) return t0;
    for (int i = 1; i < n; ++i) {
        MPoly t2 = tau * t1 - t0;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    return neg ? -t1 : t1;
}

inline MPoly chebyshev_t(int k) { return chebyshev_t(k, tau_poly()); }

// The commutator image rho(w) conjugated into a square-root-free form: an
// SL2 matrix with entries in Z[s, 1/s, u].
inline PolyMat2 riley_matrix_w() {
    const MPoly s = poly_s(), si = poly_si(), u = poly_u();
    PolyMat2 w;
    w(0, 0) = MPoly::one() - s * u;
    w(0, 1) = si - u - MPoly::one();
    w(1, 0) = -u + s * u * (u + MPoly::one());
    w(1, 1) = -u * si + (u + MPoly::one()) * (u + MPoly::one());
    return w;
}

// Riley polynomial via the matrix power: phi_m = W^m[0,0] + (1-s) W^m[0,1].
inline MPoly riley_polynomial_matrix(int m) {
    if (m == 0) throw Unknot("no Riley polynomial for m = 0");
    PolyMat2 wm = riley_matrix_w().pow(m);
    return wm(0, 0) + (MPoly::one() - poly_s()) * wm(0, 1);
}

// Riley polynomial via the trace recurrence:
// phi_m = (s + 1/s - 1 - u) t_m - t_{m-1}.
inline MPoly riley_polynomial_closed(int m) {
    if (m == 0) throw Unknot("no Riley polynomial for m = 0");
    MPoly tau = tau_poly();
    return (sigma_poly() - MPoly::one() - poly_u()) * chebyshev_t(m, tau) -
           chebyshev_t(m - 1, tau);
}

// Primary accessor (closed form; the matrix route is the cross-check).
inline MPoly riley_polynomial(int m) { return riley_polynomial_closed(m); }

// Riley polynomial specialised at s = 1, computed directly in u (tau
// becomes u^2 + 2): phi(1, u) = (1 - u) t_m - t_{m-1}.
inline MPoly riley_polynomial_at_s1(int m) {
    if (m == 0) throw Unknot("no Riley polynomial for m = 0");
    MPoly tau1 = poly_u().pow(2) + MPoly::constant(2);
    return (MPoly::one() - poly_u()) * chebyshev_t(m, tau1) - chebyshev_t(m - 1, tau1);
}

// Degree in u: 2m-1 for m > 0, 2|m| for m < 0.
inline int riley_degree_u(int m) { return m > 0 ? 2 * m - 1 : -2 * m; }

// Trace of rho(xy) on the curve: b = s + 1/s - u.
inline MPoly trace_xy_poly() { return sigma_poly() - poly_u(); }

struct RileyPolynomial {
    TwistKnot knot;
    MPoly phi;
    int degree_u = 0;
};

inline RileyPolynomial riley_for_knot(const TwistKnot& knot) {
    RileyPolynomial out;
    out.knot = knot;
    out.phi = riley_polynomial(knot.m);
    out.degree_u = riley_degree_u(knot.m);
    return out;
}

}  // namespace twistknot
