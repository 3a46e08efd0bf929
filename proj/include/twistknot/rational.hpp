#pragma once

#include <gmpxx.h>

#include <string>

#include "twistknot/errors.hpp"

namespace twistknot {

// Arbitrary-precision rational scalar. GMP keeps mpq_class canonical
// (reduced, positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational_from_long(long n) { return Rational(n); }

inline Rational rational_from_pair(long num, long den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline int sign_of(const Rational& q) { return sgn(q); }

inline Rational pow_rational(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    if (base == 0) {
        if (exp < 0) throw DivisionByZero("0 raised to a negative power");
        return Rational(0);
    }
    Rational out;
    unsigned long mag = static_cast<unsigned long>(exp < 0 ? -exp : exp);
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), mag);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), mag);
    if (exp < 0) {
        Rational inv;
        mpq_inv(inv.get_mpq_t(), out.get_mpq_t());
        return inv;
    }
    return out;
}

// "p" when the denominator is 1, otherwise "p/q".
inline std::string to_string(const Rational& q) { return q.get_str(); }

// gcd on rationals: gcd of numerators over lcm of denominators. Returns a
// non-negative value; gcd(0, x) = |x|.
inline Rational rational_gcd(const Rational& x, const Rational& y) {
    Integer num_gcd, den_lcm;
    mpz_gcd(num_gcd.get_mpz_t(), x.get_num_mpz_t(), y.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), x.get_den_mpz_t(), y.get_den_mpz_t());
    Rational out(num_gcd, den_lcm);
    out.canonicalize();
    return out;
}

}  // namespace twistknot
