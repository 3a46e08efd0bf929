// Tests for the defining-curve polynomials of the twist-knot family:
// the Chebyshev-style trace recurrence, the matrix route, published
// reference strings, degree bookkeeping, and the s <-> 1/s symmetry.
#include <catch2/catch_amalgamated.hpp>

#include "twistknot/format.hpp"
#include "twistknot/published.hpp"
#include "twistknot/riley.hpp"
#include "twistknot/words.hpp"

using namespace twistknot;

TEST_CASE("commutator matrix invariants") {
    PolyMat2 w = riley_matrix_w();

    CHECK(w.det() == MPoly::one());
    CHECK(w.trace() == tau_poly());

    // tau spelled out: u^2 + (2 - s - 1/s) u + 2.
    MPoly expected = poly_u() * poly_u() +
                     (MPoly::constant(2) - poly_s() - poly_si()) * poly_u() +
                     MPoly::constant(2);
    CHECK(tau_poly() == expected);

    // The inverse is the adjugate (det = 1), and W * W^{-1} = I.
    CHECK(w * w.adjugate() == PolyMat2::identity());
}

TEST_CASE("trace sequence properties") {
    // Generic argument: any polynomial works; use a bare variable.
    const MPoly tau = poly_u();

    CHECK(chebyshev_t(0, tau) == MPoly::zero());
    CHECK(chebyshev_t(1, tau) == MPoly::one());
    CHECK(chebyshev_t(2, tau) == tau);

    SECTION("three-term recurrence") {
        for (int k = 1; k <= 10; ++k) {
            CHECK(chebyshev_t(k + 1, tau) ==
                  tau * chebyshev_t(k, tau) - chebyshev_t(k - 1, tau));
        }
    }

    SECTION("odd extension to negative indices") {
        for (int k = 1; k <= 8; ++k) {
            CHECK(chebyshev_t(-k, tau) == -chebyshev_t(k, tau));
        }
    }

    SECTION("degenerate arguments") {
        // At tau = 2 the sequence is t_k = k; at tau = -2 it alternates.
        for (int k = -6; k <= 6; ++k) {
            CHECK(chebyshev_t(k, MPoly::constant(2)) == MPoly::constant(k));
            long alt = (k % 2 == 0) ? -k : k;
            CHECK(chebyshev_t(k, MPoly::constant(-2)) == MPoly::constant(alt));
        }
    }

    SECTION("default argument is the commutator trace") {
        CHECK(chebyshev_t(3) == chebyshev_t(3, tau_poly()));
    }
}

TEST_CASE("matrix route agrees with the trace recurrence") {
    for (int m = -8; m <= 8; ++m) {
        if (m == 0) continue;
        INFO("m = " << m);
        CHECK(riley_polynomial_matrix(m) == riley_polynomial_closed(m));
    }
}

TEST_CASE("rileypolynomial recurrence in the family index") {
    // phi_{m+1} = tau phi_m - phi_{m-1}, with phi_0 = 1 filling the gap.
    const MPoly tau = tau_poly();
    const MPoly phi0 = MPoly::one();
    CHECK(riley_polynomial(2) == tau * riley_polynomial(1) - phi0);
    CHECK(riley_polynomial(-2) == tau * riley_polynomial(-1) - phi0);
    for (int m : {2, 3, 4, 5, -2, -3, -4, -5}) {
        INFO("m = " << m);
        int step = m > 0 ? 1 : -1;
        CHECK(riley_polynomial(m + step) ==
              tau * riley_polynomial(m) - riley_polynomial(m - step));
    }
}

TEST_CASE("published worked examples") {
    for (const auto& ex : published::worked_examples()) {
        INFO("m = " << ex.m);
        std::string got = to_sigma_string(riley_polynomial(ex.m));
        INFO(first_difference(got, ex.riley));
        CHECK(golden_equal(got, ex.riley));
    }
}

TEST_CASE("degree and leading coefficient in u") {
    for (int m = -10; m <= 10; ++m) {
        if (m == 0) continue;
        INFO("m = " << m);
        MPoly phi = riley_polynomial(m);
        int deg = riley_degree_u(m);
        CHECK(deg == (m > 0 ? 2 * m - 1 : -2 * m));
        CHECK(phi.degree(Var::u) == deg);
        // Leading u-coefficient is -1 for m > 0 and +1 for m < 0.
        MPoly lead = phi.coeff_of(Var::u, deg);
        CHECK(lead == MPoly::constant(m > 0 ? -1 : 1));
        // Constant term in u never vanishes (u = 0 is never on the curve).
        CHECK(!phi.coeff_of(Var::u, 0).is_zero());
    }
}

TEST_CASE("symmetry under s to 1/s") {
    const Rational sv(5, 2), svi(2, 5), uv(7, 3);
    for (int m : {1, 2, 3, 4, -1, -2, -3, -4}) {
        INFO("m = " << m);
        MPoly phi = riley_polynomial(m);
        CHECK(phi.subs_rational(Var::s, sv).subs_rational(Var::u, uv) ==
              phi.subs_rational(Var::s, svi).subs_rational(Var::u, uv));
        // sigma_collect throws unless the polynomial is symmetric, so a
        // successful round trip is itself the symmetry certificate.
        CHECK_NOTHROW(to_sigma_string(phi));
    }
}

TEST_CASE("specialisation at s = 1") {
    for (int m = -10; m <= 10; ++m) {
        if (m == 0) continue;
        INFO("m = " << m);
        CHECK(riley_polynomial(m).subs_one(Var::s) == riley_polynomial_at_s1(m));
    }
    // The specialised polynomial keeps the full u-degree.
    CHECK(riley_polynomial_at_s1(3).degree(Var::u) == riley_degree_u(3));
    CHECK(riley_polynomial_at_s1(-3).degree(Var::u) == riley_degree_u(-3));
}

TEST_CASE("family index zero is the unknot") {
    CHECK_THROWS_AS(riley_polynomial(0), Unknot);
    CHECK_THROWS_AS(riley_polynomial_matrix(0), Unknot);
    CHECK_THROWS_AS(riley_polynomial_at_s1(0), Unknot);
}

TEST_CASE("knot-level accessor") {
    RileyPolynomial fig8 = riley_for_knot(parse_knot_spec("4_1"));
    CHECK(fig8.knot.m == -1);
    CHECK(fig8.degree_u == 2);
    CHECK(fig8.phi == riley_polynomial(-1));

    RileyPolynomial trefoil = riley_for_knot(parse_knot_spec("J(2,2)"));
    CHECK(trefoil.knot.m == 1);
    CHECK(trefoil.phi == riley_polynomial(1));
    CHECK(to_sigma_string(trefoil.phi) ==
          std::string(published::worked_examples()[0].riley));
}

TEST_CASE("trace of the product generator pair") {
    // b = s + 1/s - u; at s = 1 this is 2 - u.
    CHECK(trace_xy_poly() == sigma_poly() - poly_u());
    CHECK(trace_xy_poly().subs_one(Var::s) ==
          MPoly::constant(2) - poly_u());
}
