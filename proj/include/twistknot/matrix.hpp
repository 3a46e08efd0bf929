#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "twistknot/errors.hpp"
#include "twistknot/polynomial.hpp"

namespace twistknot {

template <class T>
struct RingTraits {
    static T zero() { return T(0); }
    static T one() { return T(1); }
};

template <>
struct RingTraits<MPoly> {
    static MPoly zero() { return MPoly(); }
    static MPoly one() { return MPoly::one(); }
};

// Dense square matrix over a commutative ring. Only the sizes that occur in
// the computations (2 and 3) get determinants and adjugates.
template <class T, int N>
class Matrix {
  public:
    Matrix() : e_{} {
        for (auto& x : e_) x = RingTraits<T>::zero();
    }

    static Matrix identity() {
        Matrix m;
        for (int i = 0; i < N; ++i) m(i, i) = RingTraits<T>::one();
        return m;
    }

    static Matrix scalar(const T& v) {
        Matrix m;
        for (int i = 0; i < N; ++i) m(i, i) = v;
        return m;
    }

    T& operator()(int i, int j) { return e_[static_cast<std::size_t>(i * N + j)]; }
    const T& operator()(int i, int j) const { return e_[static_cast<std::size_t>(i * N + j)]; }

    bool operator==(const Matrix& o) const { return e_ == o.e_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator+(const Matrix& o) const {
        Matrix r;
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        Matrix r;
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
        return r;
    }

    Matrix operator-() const {
        Matrix r;
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = -e_[k];
        return r;
    }

    Matrix operator*(const Matrix& o) const {
        Matrix r;
        for (int i = 0; i < N; ++i) {
            for (int j = 0; j < N; ++j) {
                T acc = RingTraits<T>::zero();
                for (int k = 0; k < N; ++k) acc = acc + (*this)(i, k) * o(k, j);
                r(i, j) = acc;
            }
        }
        return r;
    }

    Matrix scaled(const T& v) const {
        Matrix r;
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * v;
        return r;
    }

    T trace() const {
        T acc = RingTraits<T>::zero();
        for (int i = 0; i < N; ++i) acc = acc + (*this)(i, i);
        return acc;
    }

    T det() const {
        static_assert(N == 2 || N == 3, "determinant implemented for N = 2, 3 only");
        const Matrix& m = *this;
        if constexpr (N == 2) {
            return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
        } else {
            return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                   m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                   m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
        }
    }

    // Adjugate (transposed cofactor matrix): A * adj(A) = det(A) * I.
    Matrix adjugate() const {
        static_assert(N == 2 || N == 3, "adjugate implemented for N = 2, 3 only");
        const Matrix& m = *this;
        Matrix r;
        if constexpr (N == 2) {
            r(0, 0) = m(1, 1);
            r(0, 1) = -m(0, 1);
            r(1, 0) = -m(1, 0);
            r(1, 1) = m(0, 0);
        } else {
            r(0, 0) = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
            r(0, 1) = m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2);
            r(0, 2) = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
            r(1, 0) = m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2);
            r(1, 1) = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
            r(1, 2) = m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2);
            r(2, 0) = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
            r(2, 1) = m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1);
            r(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
        }
        return r;
    }

    // Integer power. Negative exponents require det == 1 exactly (the
    // inverse is then the adjugate); intended for exact coefficient rings.
    Matrix pow(long n) const {
        if (n < 0) {
            if (!(det() == RingTraits<T>::one()))
                throw NotUnimodular("negative power of a matrix with det != 1");
            return adjugate().pow(-n);
        }
        Matrix result = identity();
        Matrix base = *this;
        while (n > 0) {
            if (n & 1) result = result * base;
            base = (n >>= 1) > 0 ? base * base : base;
        }
        return result;
    }

  private:
    std::array<T, static_cast<std::size_t>(N) * N> e_;
};

// I + A + A^2 + ... + A^(k-1) for k >= 0, built by S <- S*A + I so that no
// power of A is formed twice.
template <class T, int N>
Matrix<T, N> geometric_sum(const Matrix<T, N>& a, long k) {
    if (k < 0) throw std::invalid_argument("geometric_sum needs k >= 0");
    Matrix<T, N> s;  // zero
    const Matrix<T, N> id = Matrix<T, N>::identity();
    for (long i = 0; i < k; ++i) s = s * a + id;
    return s;
}

// Elementary symmetric functions of the eigenvalues of a 3x3 matrix:
// det(1 + A) = 1 + sigma1 + sigma2 + sigma3.
template <class T>
struct SigmaInvariants {
    T sigma1, sigma2, sigma3;
};

template <class T>
SigmaInvariants<T> sigma_invariants(const Matrix<T, 3>& a) {
    return SigmaInvariants<T>{a.trace(), a.adjugate().trace(), a.det()};
}

// The six mixed 2x2 minors whose sum equals tr(A) tr(B) - tr(AB) for 3x3
// matrices. Exposed separately so the identity itself stays checkable.
template <class T>
T mixed_minor_sum(const Matrix<T, 3>& a, const Matrix<T, 3>& b) {
    auto minor2 = [](const T& p, const T& q, const T& r, const T& s) { return p * s - q * r; };
    return minor2(a(0, 0), a(0, 2), b(2, 0), b(2, 2)) +
           minor2(b(0, 0), b(0, 2), a(2, 0), a(2, 2)) +
           minor2(a(1, 1), a(1, 2), b(2, 1), b(2, 2)) +
           minor2(b(1, 1), b(1, 2), a(2, 1), a(2, 2)) +
           minor2(a(0, 0), a(0, 1), b(1, 0), b(1, 1)) +
           minor2(b(0, 0), b(0, 1), a(1, 0), a(1, 1));
}

using PolyMat2 = Matrix<MPoly, 2>;
using PolyMat3 = Matrix<MPoly, 3>;

// Entrywise canonical reduction modulo a fixed polynomial in one variable.
template <int N>
Matrix<MPoly, N> reduce_entries_mod(const Matrix<MPoly, N>& m, const MPoly& modulus, Var v) {
    Matrix<MPoly, N> r;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) r(i, j) = m(i, j).reduce_mod(modulus, v);
    return r;
}

template <int N>
std::string matrix_to_string(const Matrix<MPoly, N>& m) {
    std::string out = "[";
    for (int i = 0; i < N; ++i) {
        out += i == 0 ? "[" : " [";
        for (int j = 0; j < N; ++j) {
            out += m(i, j).to_string();
            if (j + 1 < N) out += ", ";
        }
        out += "]";
        if (i + 1 < N) out += ",\n";
    }
    out += "]";
    return out;
}

}  // namespace twistknot
