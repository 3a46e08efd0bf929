#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "twistknot/matrix.hpp"

using namespace twistknot;

namespace {

Matrix<MPoly, 3> random_mat3(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    Matrix<MPoly, 3> m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = MPoly::constant(coeff(rng));
    return m;
}

Matrix<MPoly, 2> random_mat2(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    Matrix<MPoly, 2> m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m(i, j) = MPoly::constant(coeff(rng));
    return m;
}

// A unimodular 3x3 built from elementary shears.
Matrix<MPoly, 3> random_unimodular3(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> pos(0, 2);
    Matrix<MPoly, 3> m = Matrix<MPoly, 3>::identity();
    for (int step = 0; step < 6; ++step) {
        int i = pos(rng), j = pos(rng);
        if (i == j) continue;
        Matrix<MPoly, 3> shear = Matrix<MPoly, 3>::identity();
        shear(i, j) = MPoly::constant(coeff(rng));
        m = m * shear;
    }
    return m;
}

}  // namespace

TEST_CASE("determinant and adjugate") {
    std::mt19937_64 rng(11);
    const auto id3 = Matrix<MPoly, 3>::identity();
    for (int trial = 0; trial < 50; ++trial) {
        auto a = random_mat3(rng);
        // A * adj(A) = det(A) * I.
        CHECK(a * a.adjugate() == id3.scaled(a.det()));
        CHECK(a.adjugate() * a == id3.scaled(a.det()));
        auto b = random_mat3(rng);
        CHECK((a * b).det() == a.det() * b.det());
        CHECK((a * b).trace() == (b * a).trace());
    }
    const auto id2 = Matrix<MPoly, 2>::identity();
    for (int trial = 0; trial < 50; ++trial) {
        auto a = random_mat2(rng);
        CHECK(a * a.adjugate() == id2.scaled(a.det()));
    }
}

TEST_CASE("powers of unimodular matrices") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_unimodular3(rng);
        REQUIRE(a.det() == MPoly::one());
        CHECK(a.pow(3) == a * a * a);
        CHECK(a.pow(-2) * a.pow(2) == Matrix<MPoly, 3>::identity());
        CHECK(a.pow(0) == Matrix<MPoly, 3>::identity());
    }
    Matrix<MPoly, 3> stretched = Matrix<MPoly, 3>::identity();
    stretched(0, 0) = MPoly::constant(2);
    CHECK_THROWS_AS(stretched.pow(-1), NotUnimodular);
}

TEST_CASE("geometric sums telescope") {
    std::mt19937_64 rng(37);
    const auto id = Matrix<MPoly, 3>::identity();
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_mat3(rng);
        auto s4 = geometric_sum(a, 4);
        // S_4(A) (A - 1) = A^4 - 1.
        CHECK(s4 * (a - id) == a.pow(4) - id);
        CHECK(geometric_sum(a, 0) == Matrix<MPoly, 3>());
        CHECK(geometric_sum(a, 1) == id);
    }
}

TEST_CASE("elementary symmetric functions of a 3x3") {
    std::mt19937_64 rng(41);
    const auto id = Matrix<MPoly, 3>::identity();
    for (int trial = 0; trial < 30; ++trial) {
        auto a = random_mat3(rng);
        auto sig = sigma_invariants(a);
        CHECK((id + a).det() ==
              MPoly::one() + sig.sigma1 + sig.sigma2 + sig.sigma3);
        // det(t + A) = t^3 + sigma1 t^2 + sigma2 t + sigma3.
        auto shifted = Matrix<MPoly, 3>::scalar(poly_t()) + a;
        MPoly t = poly_t();
        CHECK(shifted.det() ==
              t.pow(3) + sig.sigma1 * t.pow(2) + sig.sigma2 * t + sig.sigma3);
    }
}

TEST_CASE("mixed minor sum identity") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 30; ++trial) {
        auto a = random_mat3(rng);
        auto b = random_mat3(rng);
        CHECK(mixed_minor_sum(a, b) == a.trace() * b.trace() - (a * b).trace());
    }
}

TEST_CASE("entrywise reduction commutes with the quotient map") {
    std::mt19937_64 rng(47);
    MPoly mod = poly_u().pow(2) + MPoly::one();
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix<MPoly, 3> a, b;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                a(i, j) = MPoly::constant(coeff(rng)) * poly_u().pow(i + j) +
                          MPoly::constant(coeff(rng));
                b(i, j) = MPoly::constant(coeff(rng)) * poly_u().pow(j) +
                          MPoly::constant(coeff(rng)) * poly_u();
            }
        auto lhs = reduce_entries_mod(a * b, mod, Var::u);
        auto rhs = reduce_entries_mod(reduce_entries_mod(a, mod, Var::u) *
                                          reduce_entries_mod(b, mod, Var::u),
                                      mod, Var::u);
        CHECK(lhs == rhs);
    }
}
