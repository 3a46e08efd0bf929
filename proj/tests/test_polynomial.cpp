#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "twistknot/format.hpp"
#include "twistknot/polynomial.hpp"
#include "twistknot/real.hpp"

using namespace twistknot;

namespace {

// Small random Laurent polynomial in s and ordinary polynomial in u.
MPoly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> su_exp(-2, 3);
    std::uniform_int_distribution<int> u_exp(0, 3);
    std::uniform_int_distribution<int> nterms(0, 5);
    MPoly p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Monomial m;
        m.exp[static_cast<int>(Var::s)] = su_exp(rng);
        m.exp[static_cast<int>(Var::u)] = u_exp(rng);
        p += MPoly::term(Rational(coeff(rng)), m);
    }
    return p;
}

}  // namespace

TEST_CASE("canonical text form") {
    MPoly p = 13 * poly_u() * poly_u() - 7 * poly_u() + MPoly::constant(19);
    CHECK(p.to_string() == "13*u^2 - 7*u + 19");
    CHECK(MPoly::zero().to_string() == "0");
    CHECK((-poly_u()).to_string() == "-u");
    MPoly laurent = MPoly::variable(Var::s, -2) * poly_u().pow(3);
    CHECK(laurent.to_string() == "s^-2*u^3");
    MPoly half = MPoly::constant(Rational(1, 2)) * poly_u();
    CHECK(half.to_string() == "1/2*u");
}

TEST_CASE("ring laws on random operands") {
    std::mt19937_64 rng(20260816);
    for (int trial = 0; trial < 200; ++trial) {
        MPoly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p + q) * r == p * r + q * r);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p - p == MPoly::zero());
        CHECK(p * MPoly::one() == p);
        CHECK(p * MPoly::zero() == MPoly::zero());
    }
}

TEST_CASE("powers, including Laurent monomials") {
    MPoly s = poly_s();
    CHECK(s.pow(-3) * s.pow(3) == MPoly::one());
    MPoly sig = s + poly_si();
    CHECK(sig.pow(2) == s.pow(2) + MPoly::constant(2) + s.pow(-2));
    CHECK_THROWS_AS(sig.pow(-1), std::invalid_argument);
    CHECK_THROWS_AS(poly_u().pow(-1), std::invalid_argument);
    CHECK(MPoly::zero().pow(0) == MPoly::one());
}

TEST_CASE("degree bookkeeping") {
    MPoly p = poly_s().pow(2) * poly_u() + poly_si() + MPoly::constant(5);
    CHECK(p.degree(Var::s) == 2);
    CHECK(p.min_degree(Var::s) == -1);
    CHECK(p.degree(Var::u) == 1);
    CHECK(p.min_degree(Var::u) == 0);
    CHECK(p.depends_on(Var::u));
    CHECK_FALSE(p.depends_on(Var::t));
    CHECK(MPoly::zero().degree(Var::u) == 0);
}

TEST_CASE("substitution of a fraction clears denominators") {
    // p(u) = 13u^2 - 7u + 19 under u <- 4/(c-2).
    MPoly p = 13 * poly_u() * poly_u() - 7 * poly_u() + MPoly::constant(19);
    MPoly den = poly_c() - MPoly::constant(2);
    auto [num, cleared] = p.subs_fraction(Var::u, MPoly::constant(4), den);
    CHECK(num.to_string() == "19*c^2 - 104*c + 340");
    CHECK(cleared == den.pow(2));
    // Substituting the fraction into a constant is the constant.
    auto [cnum, cden] = MPoly::constant(3).subs_fraction(Var::u, MPoly::constant(4), den);
    CHECK(cnum == MPoly::constant(3));
    CHECK(cden == MPoly::one());
}

TEST_CASE("polynomial substitution matches repeated multiplication") {
    std::mt19937_64 rng(99);
    MPoly value = poly_s() + poly_si() - poly_u();
    for (int trial = 0; trial < 20; ++trial) {
        MPoly p = random_poly(rng);
        // Only substitute into non-negative powers of u.
        MPoly direct;
        for (const auto& [mono, coeff] : p.terms()) {
            MPoly term = MPoly::term(coeff, Monomial::of_var(Var::s, mono[Var::s]));
            direct += term * value.pow(mono[Var::u]);
        }
        CHECK(p.subs_poly(Var::u, value) == direct);
    }
}

TEST_CASE("exact division, Laurent aware") {
    MPoly s = poly_s(), si = poly_si();
    MPoly num = s.pow(2) - s.pow(-2);
    MPoly den = s - si;
    CHECK(num.exact_div(den) == s + si);
    // Multivariate: (u^2 - s^2) / (u - s) = u + s.
    MPoly num2 = poly_u().pow(2) - s.pow(2);
    CHECK(num2.exact_div(poly_u() - s) == poly_u() + s);
    CHECK_THROWS_AS((poly_u().pow(2) + MPoly::one()).exact_div(poly_u() + MPoly::one()),
                    NotDivisible);
    CHECK_THROWS_AS(poly_u().exact_div(MPoly::zero()), DivisionByZero);
    // Random products divide exactly back to a factor.
    std::mt19937_64 rng(7);
    int checked = 0;
    while (checked < 50) {
        MPoly p = random_poly(rng), q = random_poly(rng);
        if (p.is_zero() || q.is_zero()) continue;
        CHECK((p * q).exact_div(q) == p);
        ++checked;
    }
}

TEST_CASE("synthetic division by a linear factor") {
    MPoly p = poly_u().pow(3) - MPoly::one();
    CHECK(p.divide_linear(Var::u, Rational(1)) ==
          poly_u().pow(2) + poly_u() + MPoly::one());
    CHECK_THROWS_AS(p.divide_linear(Var::u, Rational(2)), NotDivisible);
    // (t-1)^2 divides out twice.
    MPoly q = (poly_t() - MPoly::one()).pow(2) * (poly_t() + MPoly::constant(5));
    MPoly once = q.divide_linear(Var::t, Rational(1));
    MPoly twice = once.divide_linear(Var::t, Rational(1));
    CHECK(twice == poly_t() + MPoly::constant(5));
}

TEST_CASE("canonical reduction modulo a unit-leading modulus") {
    MPoly mod = poly_u().pow(2) + MPoly::one();  // u^2 + 1
    CHECK(poly_u().pow(3).reduce_mod(mod, Var::u) == -poly_u());
    CHECK(poly_u().pow(4).reduce_mod(mod, Var::u) == MPoly::one());
    // Multivariate coefficients ride along.
    MPoly p = poly_s() * poly_u().pow(2) + poly_u();
    CHECK(p.reduce_mod(mod, Var::u) == poly_u() - poly_s());
    // Reduction is a ring homomorphism on representatives.
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 40; ++trial) {
        MPoly p1 = random_poly(rng), p2 = random_poly(rng);
        MPoly lhs = (p1 * p2).reduce_mod(mod, Var::u);
        MPoly rhs = (p1.reduce_mod(mod, Var::u) * p2.reduce_mod(mod, Var::u))
                        .reduce_mod(mod, Var::u);
        CHECK(lhs == rhs);
    }
    MPoly bad = poly_s() * poly_u().pow(2) + MPoly::one();
    CHECK_THROWS_AS(poly_u().pow(3).reduce_mod(bad, Var::u), std::invalid_argument);
}

TEST_CASE("content and primitive part") {
    MPoly p = 4 * poly_u() + MPoly::constant(8);
    auto [g, prim] = p.content_and_primitive();
    CHECK(g == Rational(4));
    CHECK(prim == poly_u() + MPoly::constant(2));
    MPoly n = -4 * poly_u() - MPoly::constant(8);
    auto [gn, primn] = n.content_and_primitive();
    CHECK(gn == Rational(-4));
    CHECK(primn == poly_u() + MPoly::constant(2));
    // Rational content: (3/2)u + 9/4 -> content 3/4, primitive 2u + 3.
    MPoly q = MPoly::constant(Rational(3, 2)) * poly_u() + MPoly::constant(Rational(9, 4));
    auto [gq, primq] = q.content_and_primitive();
    CHECK(gq == Rational(3, 4));
    CHECK(primq == 2 * poly_u() + MPoly::constant(3));
}

TEST_CASE("parser round trip") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 100; ++trial) {
        MPoly p = random_poly(rng);
        CHECK(parse_poly(p.to_string()) == p);
    }
    CHECK(parse_poly("(s+s^-1)^2 - 7") == (poly_s() + poly_si()).pow(2) - MPoly::constant(7));
    CHECK(parse_poly("-u^3 + 2*(s+s^-1)*u") ==
          -poly_u().pow(3) + 2 * (poly_s() + poly_si()) * poly_u());
    CHECK(parse_poly("(u^2-1)/(u-1)") == poly_u() + MPoly::one());
    CHECK(parse_poly("1/2*u") == MPoly::constant(Rational(1, 2)) * poly_u());
    CHECK_THROWS_AS(parse_poly("u +"), ParseError);
    CHECK_THROWS_AS(parse_poly("w"), ParseError);
    CHECK_THROWS_AS(parse_poly("(u"), ParseError);
    CHECK_THROWS_AS(parse_poly("u^-1"), std::invalid_argument);
}

TEST_CASE("sigma-collected display round trips through the parser") {
    MPoly sig = poly_s() + poly_si();
    MPoly p = sig.pow(2) * poly_u() - 3 * sig + MPoly::constant(2) -
              poly_u().pow(2) + MPoly::constant(5) * poly_u();
    std::string text = to_sigma_string(p);
    CHECK(parse_poly(text) == p);
    // Display conventions.
    CHECK(to_sigma_string(sig - MPoly::one() - poly_u()) == "(s+s^-1) - 1 - u");
    CHECK(to_sigma_string(MPoly::constant(-3)) == "-3");
    CHECK(to_sigma_string(MPoly::zero()) == "0");
    // Not symmetric in s <-> 1/s: rejected.
    CHECK_THROWS_AS(to_sigma_string(poly_s() + poly_u()), std::invalid_argument);
}

TEST_CASE("latex rendering of univariate polynomials") {
    MPoly p = 13 * poly_u() * poly_u() - 7 * poly_u() + MPoly::constant(19);
    CHECK(to_latex_univariate(p, Var::u, "u") == "13u^2-7u+19");
    MPoly big = poly_u().pow(10) - poly_u();
    CHECK(to_latex_univariate(big, Var::u, "u") == "u^{10}-u");
    CHECK(to_latex_univariate(MPoly::zero(), Var::u, "u") == "0");
}

TEST_CASE("numeric evaluation agrees with rational substitution") {
    MPoly p = poly_u().pow(2) + poly_si();  // u^2 + 1/s
    std::array<Real, kNumVars> point;
    point[static_cast<int>(Var::s)] = Real(3);
    point[static_cast<int>(Var::u)] = Real(Rational(1, 2));
    Real got = p.eval<Real>(point, [](const Rational& q) { return Real(q); });
    Rational want = p.subs_rational(Var::u, Rational(1, 2))
                        .subs_rational(Var::s, Rational(3))
                        .constant_term();
    CHECK((got - Real(want)).abs() < Real(Rational(1, 1000000000)));
}

TEST_CASE("golden comparison helpers") {
    CHECK(golden_equal(" 13*u^2 -7*u+ 19 ", "13*u^2 - 7*u + 19"));
    CHECK_FALSE(golden_equal("13*u^2", "13*u^3"));
    std::string diff = first_difference("13*u^2", "13*u^3");
    CHECK(diff.find("position 5") != std::string::npos);
}
