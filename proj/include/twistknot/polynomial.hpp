#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twistknot/errors.hpp"
#include "twistknot/rational.hpp"

namespace twistknot {

// Variables of the ambient polynomial ring. Only `s` is Laurent (may carry
// negative exponents); everything else is an ordinary polynomial variable.
//   s : eigenvalue parameter of the meridian image
//   u : curve coordinate (lower-left entry parameter)
//   t : deformation variable of the one-variable torsion polynomial
//   a : meridian trace coordinate on the character variety
//   b : product trace coordinate on the character variety
//   c : cusp-shape coordinate
enum class Var : int { s = 0, u = 1, t = 2, a = 3, b = 4, c = 5 };

inline constexpr int kNumVars = 6;

inline constexpr char kVarNames[kNumVars] = {'s', 'u', 't', 'a', 'b', 'c'};

// Comparison priority for the fixed monomial order (lexicographic with
// t > u > c > b > a > s). Map iteration in descending order then yields the
// display order used throughout: highest t first, then u, then c, ...
inline constexpr std::array<int, kNumVars> kVarPriority = {
    static_cast<int>(Var::t), static_cast<int>(Var::u), static_cast<int>(Var::c),
    static_cast<int>(Var::b), static_cast<int>(Var::a), static_cast<int>(Var::s)};

struct Monomial {
    std::array<int, kNumVars> exp{};

    static Monomial unit() { return Monomial{}; }

    static Monomial of_var(Var v, int e = 1) {
        Monomial m;
        m.exp[static_cast<int>(v)] = e;
        return m;
    }

    int operator[](Var v) const { return exp[static_cast<int>(v)]; }

    bool is_unit() const {
        return std::all_of(exp.begin(), exp.end(), [](int e) { return e == 0; });
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kNumVars; ++i) r.exp[i] = exp[i] + o.exp[i];
        return r;
    }

    // Componentwise divisibility test; negative s-exponents make every
    // s-power divisible by every other, which matches the Laurent semantics
    // (division is performed after an s-shift normalises exponents, so this
    // is only consulted with non-negative entries).
    bool divisible_by(const Monomial& o) const {
        for (int i = 0; i < kNumVars; ++i)
            if (exp[i] < o.exp[i]) return false;
        return true;
    }

    Monomial divide(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kNumVars; ++i) r.exp[i] = exp[i] - o.exp[i];
        return r;
    }

    bool operator==(const Monomial& o) const { return exp == o.exp; }
};

struct MonomialLess {
    bool operator()(const Monomial& x, const Monomial& y) const {
        for (int p : kVarPriority) {
            if (x.exp[p] != y.exp[p]) return x.exp[p] < y.exp[p];
        }
        return false;
    }
};

// Sparse multivariate polynomial over the rationals, Laurent in `s` only.
// The term map is kept free of zero coefficients at all times, so equality
// of polynomials is equality of maps.
class MPoly {
  public:
    using TermMap = std::map<Monomial, Rational, MonomialLess>;

    MPoly() = default;

    static MPoly zero() { return MPoly(); }

    static MPoly constant(const Rational& q) {
        MPoly p;
        if (q != 0) p.terms_[Monomial::unit()] = q;
        return p;
    }

    static MPoly constant(long n) { return constant(Rational(n)); }

    static MPoly one() { return constant(1); }

    static MPoly variable(Var v, int e = 1) {
        if (e < 0 && v != Var::s)
            throw std::invalid_argument("negative exponent on a non-Laurent variable");
        if (e == 0) return one();
        MPoly p;
        p.terms_[Monomial::of_var(v, e)] = 1;
        return p;
    }

    static MPoly term(const Rational& coeff, const Monomial& m) {
        MPoly p;
        if (coeff != 0) p.terms_[m] = coeff;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
    }

    // The constant term (zero if absent).
    Rational constant_term() const {
        auto it = terms_.find(Monomial::unit());
        return it == terms_.end() ? Rational(0) : it->second;
    }

    std::size_t num_terms() const { return terms_.size(); }

    const TermMap& terms() const { return terms_; }

    bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly& operator+=(const MPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    MPoly& operator-=(const MPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend MPoly operator+(MPoly x, const MPoly& y) { return x += y; }
    friend MPoly operator-(MPoly x, const MPoly& y) { return x -= y; }

    MPoly operator-() const {
        MPoly r(*this);
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    friend MPoly operator*(const MPoly& x, const MPoly& y) {
        MPoly r;
        if (x.is_zero() || y.is_zero()) return r;
        // Convolve against the smaller operand for fewer map rebuilds.
        const MPoly& small = x.terms_.size() <= y.terms_.size() ? x : y;
        const MPoly& large = x.terms_.size() <= y.terms_.size() ? y : x;
        for (const auto& [ms, cs] : small.terms_) {
            for (const auto& [ml, cl] : large.terms_) {
                r.add_term(ms * ml, cs * cl);
            }
        }
        return r;
    }

    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    MPoly& scale(const Rational& q) {
        if (q == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= q;
        return *this;
    }

    friend MPoly operator*(MPoly p, const Rational& q) { return p.scale(q); }
    friend MPoly operator*(const Rational& q, MPoly p) { return p.scale(q); }

    // Multiply by a single variable power (the only route by which negative
    // exponents enter, and then only for s).
    MPoly times_var(Var v, int e) const {
        if (e == 0) return *this;
        if (v != Var::s) {
            if (e < 0 && min_degree(v) + e < 0)
                throw std::invalid_argument("shift would create a negative exponent");
        }
        MPoly r;
        Monomial shift = Monomial::of_var(v, e);
        for (const auto& [m, c] : terms_) r.terms_[m * shift] = c;
        return r;
    }

    MPoly pow(long n) const {
        if (n < 0) {
            // Only invertible single-term polynomials have negative powers.
            if (terms_.size() != 1)
                throw std::invalid_argument("negative power of a non-monomial");
            const auto& [m, c] = *terms_.begin();
            for (int i = 0; i < kNumVars; ++i) {
                if (m.exp[i] != 0 && i != static_cast<int>(Var::s))
                    throw std::invalid_argument("negative power of a non-Laurent monomial");
            }
            Monomial inv;
            for (int i = 0; i < kNumVars; ++i) inv.exp[i] = -m.exp[i];
            Rational ic = pow_rational(c, -1);
            return term(ic, inv).pow(-n);
        }
        MPoly result = one();
        MPoly base(*this);
        while (n > 0) {
            if (n & 1) result *= base;
            base = (n >>= 1) > 0 ? base * base : base;
        }
        return result;
    }

    // Highest exponent of v over all terms; 0 for the zero polynomial.
    int degree(Var v) const {
        int d = 0;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            int e = m[v];
            if (first || e > d) d = e;
            first = false;
        }
        return d;
    }

    // Lowest exponent of v over all terms; 0 for the zero polynomial.
    int min_degree(Var v) const {
        int d = 0;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            int e = m[v];
            if (first || e < d) d = e;
            first = false;
        }
        return d;
    }

    bool depends_on(Var v) const {
        for (const auto& [m, c] : terms_)
            if (m[v] != 0) return true;
        return false;
    }

    // Coefficient of v^k, as a polynomial in the remaining variables.
    MPoly coeff_of(Var v, int k) const {
        MPoly r;
        for (const auto& [m, c] : terms_) {
            if (m[v] == k) {
                Monomial stripped = m;
                stripped.exp[static_cast<int>(v)] = 0;
                r.terms_[stripped] = c;
            }
        }
        return r;
    }

    // View as a univariate polynomial in v with MPoly coefficients.
    std::map<int, MPoly> as_univariate(Var v) const {
        std::map<int, MPoly> out;
        for (const auto& [m, c] : terms_) {
            Monomial stripped = m;
            stripped.exp[static_cast<int>(v)] = 0;
            out[m[v]].terms_[stripped] = c;
        }
        return out;
    }

    static MPoly from_univariate(Var v, const std::map<int, MPoly>& coeffs) {
        MPoly r;
        for (const auto& [k, p] : coeffs) {
            for (const auto& [m, c] : p.terms_) {
                Monomial lifted = m;
                lifted.exp[static_cast<int>(v)] += k;
                r.add_term(lifted, c);
            }
        }
        return r;
    }

    // Set v = 1 (drops the exponent; valid for Laurent s as well).
    MPoly subs_one(Var v) const {
        MPoly r;
        for (const auto& [m, c] : terms_) {
            Monomial stripped = m;
            stripped.exp[static_cast<int>(v)] = 0;
            r.add_term(stripped, c);
        }
        return r;
    }

    // Set v = q for a rational q (q != 0 required when negative exponents of
    // v occur).
    MPoly subs_rational(Var v, const Rational& q) const {
        MPoly r;
        for (const auto& [m, c] : terms_) {
            Monomial stripped = m;
            stripped.exp[static_cast<int>(v)] = 0;
            r.add_term(stripped, c * pow_rational(q, m[v]));
        }
        return r;
    }

    // Substitute v <- value for a polynomial value (v-exponents must be
    // non-negative).
    MPoly subs_poly(Var v, const MPoly& value) const {
        if (min_degree(v) < 0)
            throw std::invalid_argument("polynomial substitution into negative exponents");
        auto uni = as_univariate(v);
        // Horner from the top degree down.
        MPoly acc;
        int prev = -1;
        for (auto it = uni.rbegin(); it != uni.rend(); ++it) {
            if (prev >= 0)
                for (int i = 0; i < prev - it->first; ++i) acc *= value;
            acc += it->second;
            prev = it->first;
        }
        if (prev > 0) acc *= value.pow(prev);
        return acc;
    }

    // Substitute v <- num/den and clear denominators: returns (N, D) with
    // P(v <- num/den) = N / D and D = den^deg_v(P).
    std::pair<MPoly, MPoly> subs_fraction(Var v, const MPoly& num, const MPoly& den) const {
        if (min_degree(v) < 0)
            throw std::invalid_argument("fraction substitution into negative exponents");
        int k = degree(v);
        auto uni = as_univariate(v);
        // N = sum_j coeff_j * num^j * den^(k-j), assembled Horner-style in num
        // with a trailing den power.
        MPoly n;
        for (int j = k; j >= 0; --j) {
            n *= num;
            auto it = uni.find(j);
            if (it != uni.end()) n += it->second * den.pow(k - j);
        }
        return {n, den.pow(k)};
    }

    // --- Exact division -------------------------------------------------

    // Quotient of an exact multivariate division. Both operands may be
    // Laurent in s: exponents are shifted to be non-negative, the plain
    // division runs under the fixed monomial order, and the shift is undone
    // on the quotient. Throws NotDivisible when no exact quotient exists.
    MPoly exact_div(const MPoly& divisor) const {
        if (divisor.is_zero()) throw DivisionByZero("exact division by zero");
        if (is_zero()) return MPoly();
        int a = min_degree(Var::s);
        int d = divisor.min_degree(Var::s);
        MPoly num = a == 0 ? *this : times_var(Var::s, -a);
        MPoly den = d == 0 ? divisor : divisor.times_var(Var::s, -d);

        const auto& lead = *den.terms_.rbegin();
        MPoly q;
        MPoly r(num);
        while (!r.is_zero()) {
            const auto& rl = *r.terms_.rbegin();
            if (!rl.first.divisible_by(lead.first))
                throw NotDivisible("leading term not divisible in exact division");
            Monomial qm = rl.first.divide(lead.first);
            Rational qc = rl.second / lead.second;
            MPoly step = term(qc, qm);
            q += step;
            r -= step * den;
        }
        int shift = a - d;
        return shift == 0 ? q : q.times_var(Var::s, shift);
    }

    // Synthetic division by (v - r). Requires non-negative v-exponents.
    // Throws NotDivisible unless the remainder vanishes identically.
    MPoly divide_linear(Var v, const Rational& r) const {
        if (min_degree(v) < 0)
            throw std::invalid_argument("synthetic division across negative exponents");
        if (is_zero()) return MPoly();
        auto uni = as_univariate(v);
        int n = uni.rbegin()->first;
        std::vector<MPoly> dense(static_cast<std::size_t>(n) + 1);
        for (auto& [k, p] : uni) dense[static_cast<std::size_t>(k)] = std::move(p);
        // q_{k-1} = c_k + r * q_k, remainder = c_0 + r * q_0.
        std::map<int, MPoly> quot;
        MPoly carry;
        for (int k = n; k >= 1; --k) {
            carry = dense[static_cast<std::size_t>(k)] + carry * MPoly::constant(r);
            if (!carry.is_zero()) quot[k - 1] = carry;
        }
        MPoly rem = dense[0] + carry * MPoly::constant(r);
        if (!rem.is_zero()) throw NotDivisible("nonzero remainder in synthetic division");
        return from_univariate(v, quot);
    }

    // Canonical remainder of *this modulo `modulus`, viewed in the variable
    // v. The leading v-coefficient of the modulus must be a nonzero rational
    // constant (true of every modulus used here, whose leading coefficient
    // is a unit).
    MPoly reduce_mod(const MPoly& modulus, Var v) const {
        if (modulus.is_zero()) throw DivisionByZero("reduction modulo zero");
        int dm = modulus.degree(v);
        MPoly lead = modulus.coeff_of(v, dm);
        if (!lead.is_constant() || lead.is_zero())
            throw std::invalid_argument("modulus leading coefficient must be a nonzero constant");
        Rational lc = lead.constant_term();
        if (min_degree(v) < 0)
            throw std::invalid_argument("reduction across negative exponents");
        if (degree(v) < dm || is_zero()) return *this;

        auto uni = as_univariate(v);
        auto mod_uni = modulus.as_univariate(v);
        int top = uni.rbegin()->first;
        std::vector<MPoly> dense(static_cast<std::size_t>(top) + 1);
        for (auto& [k, p] : uni) dense[static_cast<std::size_t>(k)] = std::move(p);
        for (int d = top; d >= dm; --d) {
            MPoly& lead_d = dense[static_cast<std::size_t>(d)];
            if (lead_d.is_zero()) continue;
            MPoly factor = lead_d;
            factor.scale(Rational(1) / lc);
            for (const auto& [j, mj] : mod_uni) {
                dense[static_cast<std::size_t>(d - dm + j)] -= factor * mj;
            }
            // The top coefficient cancels exactly by construction.
        }
        std::map<int, MPoly> out;
        for (int k = 0; k < dm && k < static_cast<int>(dense.size()); ++k)
            if (!dense[static_cast<std::size_t>(k)].is_zero())
                out[k] = std::move(dense[static_cast<std::size_t>(k)]);
        return from_univariate(v, out);
    }

    // --- Content --------------------------------------------------------

    // Greatest common rational divisor of the coefficients, signed to match
    // the leading (highest term order) coefficient; (0, zero) for zero.
    std::pair<Rational, MPoly> content_and_primitive() const {
        if (is_zero()) return {Rational(0), MPoly()};
        Rational g(0);
        for (const auto& [m, c] : terms_) g = rational_gcd(g, c);
        if (sign_of(terms_.rbegin()->second) < 0) g = -g;
        MPoly prim(*this);
        prim.scale(Rational(1) / g);
        return {g, prim};
    }

    // --- Numeric evaluation ----------------------------------------------

    // Evaluate at a point. `conv` converts a Rational coefficient into C;
    // C needs *, +, and (for negative s-exponents) /.
    template <class C, class Conv>
    C eval(const std::array<C, kNumVars>& point, Conv conv) const {
        std::array<std::map<int, C>, kNumVars> cache;
        auto power = [&](int v, int e) -> const C& {
            auto& slot = cache[static_cast<std::size_t>(v)];
            auto it = slot.find(e);
            if (it != slot.end()) return it->second;
            C val = conv(Rational(1));
            if (e > 0) {
                val = point[static_cast<std::size_t>(v)];
                for (int i = 1; i < e; ++i) val = val * point[static_cast<std::size_t>(v)];
            } else if (e < 0) {
                C inv = conv(Rational(1)) / point[static_cast<std::size_t>(v)];
                val = inv;
                for (int i = 1; i < -e; ++i) val = val * inv;
            }
            return slot.emplace(e, std::move(val)).first->second;
        };
        C acc = conv(Rational(0));
        for (const auto& [m, c] : terms_) {
            C t = conv(c);
            for (int v = 0; v < kNumVars; ++v)
                if (m.exp[v] != 0) t = t * power(v, m.exp[v]);
            acc = acc + t;
        }
        return acc;
    }

    // --- Canonical text form ----------------------------------------------

    // Terms in descending monomial order; coefficients fold their sign into
    // the separator; unit coefficients are dropped next to variables.
    // Examples: "13*u^2 - 7*u + 19", "s^-2*u^3 + 1/2*u", "0".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const Monomial& m = it->first;
            Rational c = it->second;
            bool neg = sign_of(c) < 0;
            if (first) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            first = false;
            Rational mag = neg ? Rational(-c) : c;
            std::string vars;
            // Variables inside a monomial read alphabetically.
            static constexpr std::array<int, kNumVars> display_order = {
                static_cast<int>(Var::a), static_cast<int>(Var::b), static_cast<int>(Var::c),
                static_cast<int>(Var::s), static_cast<int>(Var::t), static_cast<int>(Var::u)};
            for (int p : display_order) {
                int e = m.exp[p];
                if (e == 0) continue;
                if (!vars.empty()) vars += "*";
                vars += kVarNames[p];
                if (e != 1) {
                    vars += "^";
                    vars += std::to_string(e);
                }
            }
            if (vars.empty()) {
                out += twistknot::to_string(mag);
            } else if (mag == 1) {
                out += vars;
            } else {
                out += twistknot::to_string(mag) + "*" + vars;
            }
        }
        return out;
    }

  private:
    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TermMap terms_;
};

inline MPoly operator+(MPoly p, const Rational& q) { return p += MPoly::constant(q); }
inline MPoly operator+(const Rational& q, MPoly p) { return p += MPoly::constant(q); }
inline MPoly operator-(MPoly p, const Rational& q) { return p -= MPoly::constant(q); }
inline MPoly operator-(const Rational& q, const MPoly& p) { return MPoly::constant(q) - p; }

// Convenience constructors used throughout the computation code.
inline MPoly poly_s() { return MPoly::variable(Var::s); }
inline MPoly poly_si() { return MPoly::variable(Var::s, -1); }
inline MPoly poly_u() { return MPoly::variable(Var::u); }
inline MPoly poly_t() { return MPoly::variable(Var::t); }
inline MPoly poly_a() { return MPoly::variable(Var::a); }
inline MPoly poly_b() { return MPoly::variable(Var::b); }
inline MPoly poly_c() { return MPoly::variable(Var::c); }

// --- Parser ---------------------------------------------------------------
//
// Grammar (whitespace ignored):
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor (('*'|'/') factor)*
//   factor  := primary ['^' ['-'] integer]
//   primary := integer | variable | '(' expr ')'
// '/' performs exact division (integers give rationals, polynomial divisors
// must divide exactly). '^' with a negative exponent requires an invertible
// monomial base, which keeps negative exponents confined to s.
class PolyParser {
  public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    MPoly parse() {
        MPoly e = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("trailing characters at offset " + std::to_string(pos_));
        return e;
    }

  private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    MPoly expr() {
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        MPoly acc = term();
        if (neg) acc = -acc;
        while (true) {
            if (eat('+')) {
                acc += term();
            } else if (eat('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    MPoly term() {
        MPoly acc = factor();
        while (true) {
            if (eat('*')) {
                acc *= factor();
            } else if (eat('/')) {
                acc = acc.exact_div(factor());
            } else {
                return acc;
            }
        }
    }

    MPoly factor() {
        MPoly base = primary();
        if (eat('^')) {
            bool neg = eat('-');
            long e = integer_literal_long();
            return base.pow(neg ? -e : e);
        }
        return base;
    }

    MPoly primary() {
        char ch = peek();
        if (ch == '(') {
            eat('(');
            MPoly inner = expr();
            if (!eat(')')) throw ParseError("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            return MPoly::constant(Rational(integer_literal()));
        }
        for (int i = 0; i < kNumVars; ++i) {
            if (ch == kVarNames[i]) {
                ++pos_;
                return MPoly::variable(static_cast<Var>(i));
            }
        }
        throw ParseError(std::string("unexpected character '") + ch + "' at offset " +
                         std::to_string(pos_));
    }

    Integer integer_literal() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected integer at offset " + std::to_string(pos_));
        return Integer(std::string(text_.substr(start, pos_ - start)), 10);
    }

    long integer_literal_long() {
        Integer n = integer_literal();
        if (!n.fits_slong_p()) throw ParseError("exponent out of range");
        return n.get_si();
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

inline MPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace twistknot
