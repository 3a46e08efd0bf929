#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cstdio>
#include <string>
#include <utility>

#include "twistknot/errors.hpp"
#include "twistknot/rational.hpp"

namespace twistknot {

// Arbitrary-precision binary float (MPFR, round-to-nearest). The working
// precision is a process-wide default captured at construction time;
// arithmetic results take the larger precision of their operands.
class Real {
  public:
    static mpfr_prec_t& default_prec() {
        static mpfr_prec_t p = 128;
        return p;
    }

    Real() : Real(default_prec(), nullptr) { mpfr_set_zero(v_, 1); }

    Real(long n) : Real(default_prec(), nullptr) { mpfr_set_si(v_, n, MPFR_RNDN); }  // NOLINT

    Real(int n) : Real(static_cast<long>(n)) {}  // NOLINT

    explicit Real(double d) : Real(default_prec(), nullptr) { mpfr_set_d(v_, d, MPFR_RNDN); }

    // Exact rational -> float conversion at the requested precision. This is
    // the only sanctioned route from exact data into numerics: it rounds
    // once, directly at working precision.
    explicit Real(const Rational& q, mpfr_prec_t prec = 0)
        : Real(prec > 0 ? prec : default_prec(), nullptr) {
        mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
    }

    Real(const Real& o) : Real(mpfr_get_prec(o.v_), nullptr) { mpfr_set(v_, o.v_, MPFR_RNDN); }

    Real(Real&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }

    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }

    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }

    ~Real() { mpfr_clear(v_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    friend Real operator+(const Real& x, const Real& y) {
        Real r(std::max(x.prec(), y.prec()), nullptr);
        mpfr_add(r.v_, x.v_, y.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator-(const Real& x, const Real& y) {
        Real r(std::max(x.prec(), y.prec()), nullptr);
        mpfr_sub(r.v_, x.v_, y.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator*(const Real& x, const Real& y) {
        Real r(std::max(x.prec(), y.prec()), nullptr);
        mpfr_mul(r.v_, x.v_, y.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator/(const Real& x, const Real& y) {
        Real r(std::max(x.prec(), y.prec()), nullptr);
        mpfr_div(r.v_, x.v_, y.v_, MPFR_RNDN);
        return r;
    }

    Real operator-() const {
        Real r(prec(), nullptr);
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    Real& operator+=(const Real& o) { return *this = *this + o; }
    Real& operator-=(const Real& o) { return *this = *this - o; }
    Real& operator*=(const Real& o) { return *this = *this * o; }
    Real& operator/=(const Real& o) { return *this = *this / o; }

    friend bool operator==(const Real& x, const Real& y) { return mpfr_cmp(x.v_, y.v_) == 0; }
    friend bool operator!=(const Real& x, const Real& y) { return mpfr_cmp(x.v_, y.v_) != 0; }
    friend bool operator<(const Real& x, const Real& y) { return mpfr_cmp(x.v_, y.v_) < 0; }
    friend bool operator<=(const Real& x, const Real& y) { return mpfr_cmp(x.v_, y.v_) <= 0; }
    friend bool operator>(const Real& x, const Real& y) { return mpfr_cmp(x.v_, y.v_) > 0; }
    friend bool operator>=(const Real& x, const Real& y) { return mpfr_cmp(x.v_, y.v_) >= 0; }

    Real abs() const {
        Real r(prec(), nullptr);
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }

    Real sqrt() const {
        Real r(prec(), nullptr);
        mpfr_sqrt(r.v_, v_, MPFR_RNDN);
        return r;
    }

    // Principal k-th root (of a non-negative value).
    Real nth_root(unsigned long k) const {
        Real r(prec(), nullptr);
        mpfr_rootn_ui(r.v_, v_, k, MPFR_RNDN);
        return r;
    }

    // Binary exponent e with |x| in [2^(e-1), 2^e); 0 for a zero value.
    long exponent() const { return mpfr_zero_p(v_) ? 0 : static_cast<long>(mpfr_get_exp(v_)); }

    // Nearest integer, as an exactly-representable value.
    Real round_to_integer() const {
        Real r(prec(), nullptr);
        mpfr_rint(r.v_, v_, MPFR_RNDN);
        return r;
    }

    // The same value carried at an explicit precision (exact when widening).
    Real at_precision(mpfr_prec_t p) const {
        Real r(p, nullptr);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    Real log() const {
        Real r(prec(), nullptr);
        mpfr_log(r.v_, v_, MPFR_RNDN);
        return r;
    }

    Real pow_si(long e) const {
        Real r(prec(), nullptr);
        mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
        return r;
    }

    static Real hypot(const Real& x, const Real& y) {
        Real r(std::max(x.prec(), y.prec()), nullptr);
        mpfr_hypot(r.v_, x.v_, y.v_, MPFR_RNDN);
        return r;
    }

    Real cos() const {
        Real r(prec(), nullptr);
        mpfr_cos(r.v_, v_, MPFR_RNDN);
        return r;
    }

    Real sin() const {
        Real r(prec(), nullptr);
        mpfr_sin(r.v_, v_, MPFR_RNDN);
        return r;
    }

    static Real const_pi() {
        Real r;
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

    // 2^e at the ambient precision (exact).
    static Real pow2(long e) {
        Real r;
        mpfr_set_si_2exp(r.v_, 1, e, MPFR_RNDN);
        return r;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // Shortest-ish decimal form; digits defaults to the full precision of
    // the value. Used for the decimal-string number encoding in output.
    std::string to_string(int digits = 0) const {
        if (digits <= 0)
            digits = std::max(6, static_cast<int>(static_cast<double>(prec()) * 0.30103) + 1);
        char* buf = nullptr;
        mpfr_asprintf(&buf, "%.*Rg", digits, v_);
        std::string out(buf ? buf : "nan");
        mpfr_free_str(buf);
        return out;
    }

  private:
    // Tagged constructor: initialise at an explicit precision, value unset.
    Real(mpfr_prec_t prec, std::nullptr_t) { mpfr_init2(v_, std::max<mpfr_prec_t>(prec, 2)); }

    mpfr_t v_;
};

// Complex numbers over any real field type F (used with F = Real; std
// complex is specified for built-in floating types only).
template <class F>
struct Cplx {
    F re{}, im{};

    Cplx() = default;
    Cplx(long n) : re(n), im(0) {}  // NOLINT
    Cplx(int n) : re(static_cast<long>(n)), im(0) {}  // NOLINT
    explicit Cplx(F r) : re(std::move(r)), im(0) {}
    Cplx(F r, F i) : re(std::move(r)), im(std::move(i)) {}

    static Cplx i() { return Cplx(F(0), F(1)); }

    Cplx conj() const { return Cplx(re, -im); }

    F norm2() const { return re * re + im * im; }

    F abs() const { return F::hypot(re, im); }

    friend Cplx operator+(const Cplx& x, const Cplx& y) { return Cplx(x.re + y.re, x.im + y.im); }
    friend Cplx operator-(const Cplx& x, const Cplx& y) { return Cplx(x.re - y.re, x.im - y.im); }
    Cplx operator-() const { return Cplx(-re, -im); }

    friend Cplx operator*(const Cplx& x, const Cplx& y) {
        return Cplx(x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re);
    }

    friend Cplx operator/(const Cplx& x, const Cplx& y) {
        F d = y.norm2();
        if (d.is_zero()) throw DivisionByZero("complex division by zero");
        return Cplx((x.re * y.re + x.im * y.im) / d, (x.im * y.re - x.re * y.im) / d);
    }

    Cplx& operator+=(const Cplx& o) { return *this = *this + o; }
    Cplx& operator-=(const Cplx& o) { return *this = *this - o; }
    Cplx& operator*=(const Cplx& o) { return *this = *this * o; }
    Cplx& operator/=(const Cplx& o) { return *this = *this / o; }

    friend bool operator==(const Cplx& x, const Cplx& y) { return x.re == y.re && x.im == y.im; }
    friend bool operator!=(const Cplx& x, const Cplx& y) { return !(x == y); }

    // Principal branch (branch cut along the negative real axis, image in
    // the closed right half-plane).
    Cplx sqrt() const {
        if (re.is_zero() && im.is_zero()) return Cplx();
        F d = abs();
        F t = ((d + re.abs()) / F(2)).sqrt();
        if (re.sign() >= 0) {
            return Cplx(t, im / (F(2) * t));
        }
        F w = im.abs() / (F(2) * t);
        return im.sign() >= 0 ? Cplx(w, t) : Cplx(w, -t);
    }

    Cplx powi(long n) const {
        if (n < 0) return (Cplx(1) / *this).powi(-n);
        Cplx result(1);
        Cplx base = *this;
        while (n > 0) {
            if (n & 1) result *= base;
            base = (n >>= 1) > 0 ? base * base : base;
        }
        return result;
    }
};

using Complex = Cplx<Real>;

inline Complex complex_from_rationals(const Rational& re, const Rational& im,
                                      mpfr_prec_t prec = 0) {
    return Complex(Real(re, prec), Real(im, prec));
}

}  // namespace twistknot
