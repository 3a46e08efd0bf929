#pragma once

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "twistknot/errors.hpp"

namespace twistknot {

// Free words on two generators, encoded as strings over the alphabet
// {x, X, y, Y} where an upper-case letter is the inverse of its lower-case
// partner. The empty string is the identity.

inline bool is_word_letter(char ch) { return ch == 'x' || ch == 'X' || ch == 'y' || ch == 'Y'; }

inline char letter_inverse(char ch) {
    return static_cast<char>(std::isupper(static_cast<unsigned char>(ch))
                                 ? std::tolower(static_cast<unsigned char>(ch))
                                 : std::toupper(static_cast<unsigned char>(ch)));
}

inline char letter_generator(char ch) {
    return static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
}

inline int letter_exponent(char ch) {
    return std::isupper(static_cast<unsigned char>(ch)) ? -1 : 1;
}

using Word = std::string;

inline Word validate_word(std::string_view text) {
    for (char ch : text) {
        if (!is_word_letter(ch))
            throw ParseError(std::string("invalid word letter '") + ch + "'");
    }
    return Word(text);
}

// Invert each letter in place (x <-> X, y <-> Y) without reversing.
inline Word word_bar(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (char ch : w) out.push_back(letter_inverse(ch));
    return out;
}

inline Word word_reverse(const Word& w) { return Word(w.rbegin(), w.rend()); }

// Group inverse: reverse the order and invert each letter.
inline Word word_inverse(const Word& w) { return word_bar(word_reverse(w)); }

inline Word free_reduce(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (char ch : w) {
        if (!out.empty() && out.back() == letter_inverse(ch)) {
            out.pop_back();
        } else {
            out.push_back(ch);
        }
    }
    return out;
}

inline Word cyclic_reduce(const Word& w) {
    Word r = free_reduce(w);
    std::size_t lo = 0, hi = r.size();
    while (hi - lo >= 2 && r[lo] == letter_inverse(r[hi - 1])) {
        ++lo;
        --hi;
    }
    return r.substr(lo, hi - lo);
}

inline Word word_pow(const Word& w, long k) {
    if (k == 0) return Word();
    const Word base = k > 0 ? w : word_inverse(w);
    Word out;
    out.reserve(base.size() * static_cast<std::size_t>(k > 0 ? k : -k));
    for (long i = 0; i < (k > 0 ? k : -k); ++i) out += base;
    return out;
}

inline long exponent_sum(const Word& w) {
    long total = 0;
    for (char ch : w) total += letter_exponent(ch);
    return total;
}

// --- Twist knots ------------------------------------------------------------

// Canonical parameterisation of a twist knot. The family is indexed by a
// single integer m != 0; even/odd input parameters and the (-2, n) form all
// normalise onto it.
struct TwistKnot {
    int m = 0;            // canonical parameter
    std::string source;   // the spec string the user provided
    bool odd_form = false;  // reached through an odd second parameter

    // Second parameter of the canonical even form J(2, 2m).
    int even_n() const { return 2 * m; }

    // Crossing number: 2m+1 for m > 0, 2|m|+2 for m < 0.
    int crossing_number() const { return m > 0 ? 2 * m + 1 : -2 * m + 2; }

    std::string canonical_name() const { return "J(2," + std::to_string(2 * m) + ")"; }
};

// Normalise J(two, n). J(-2, n) is the same knot as J(2, n+1); an even
// second parameter 2m yields m directly and an odd one 2k+1 yields -k
// (the mirror-equivalent even form). Parameters describing the unknot are
// rejected.
inline TwistKnot normalize_twist_knot(int two, long n, std::string source = "") {
    if (two != 2 && two != -2)
        throw ParseError("first twist parameter must be 2 or -2");
    long nn = n;
    if (two == -2) nn += 1;
    TwistKnot k;
    k.source = source.empty() ? ("J(" + std::to_string(two) + "," + std::to_string(n) + ")")
                              : std::move(source);
    if (nn % 2 == 0) {
        long m = nn / 2;
        if (m == 0) throw Unknot(k.source + " is the unknot");
        if (m < -1000 || m > 1000) throw ParseError("twist parameter out of supported range");
        k.m = static_cast<int>(m);
    } else {
        long m = -((nn - 1) / 2);
        if (m == 0) throw Unknot(k.source + " is the unknot");
        if (m < -1000 || m > 1000) throw ParseError("twist parameter out of supported range");
        k.m = static_cast<int>(m);
        k.odd_form = true;
    }
    return k;
}

inline TwistKnot twist_knot_from_m(int m) {
    if (m == 0) throw Unknot("m = 0 is the unknot");
    TwistKnot k;
    k.m = m;
    k.source = k.canonical_name();
    return k;
}

// Accepts J(2,n), J(-2,n) and the handful of Rolfsen names that appear in
// the examples.
inline TwistKnot parse_knot_spec(std::string_view raw) {
    std::string text;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch))) text.push_back(ch);

    static const std::map<std::string, std::pair<int, long>> rolfsen = {
        {"3_1", {2, 2}},  {"4_1", {2, -2}}, {"5_2", {2, 4}},
        {"6_1", {2, -4}}, {"7_2", {2, 6}},  {"8_1", {2, -6}},
    };
    if (auto it = rolfsen.find(text); it != rolfsen.end())
        return normalize_twist_knot(it->second.first, it->second.second, std::string(raw));

    if (text.size() >= 6 && text[0] == 'J' && text[1] == '(' && text.back() == ')') {
        std::string inner = text.substr(2, text.size() - 3);
        auto comma = inner.find(',');
        if (comma != std::string::npos) {
            std::string first = inner.substr(0, comma);
            std::string second = inner.substr(comma + 1);
            int two = 0;
            long n = 0;
            bool numeric = true;
            try {
                std::size_t used1 = 0, used2 = 0;
                two = std::stoi(first, &used1);
                n = std::stol(second, &used2);
                numeric = used1 == first.size() && used2 == second.size();
            } catch (const std::logic_error&) {
                numeric = false;  // not an integer pair; rejected below
            }
            if (numeric) return normalize_twist_knot(two, n, std::string(raw));
        }
    }
    throw ParseError("unrecognised knot spec: " + std::string(raw));
}

// --- Presentation words ------------------------------------------------------

// w = [y, x^-1] = y x^-1 y^-1 x; its reverse and its bar appear throughout.
inline Word word_w() { return "yXYx"; }
inline Word word_w_bar() { return "YxyX"; }      // = [y^-1, x] = (reverse of w)^-1
inline Word word_w_reversed() { return "xYXy"; }  // = [x, y^-1]

// The length-(4|m| or 4m-2) word whose trace sequence drives the
// character-variety recursion: w^m for m < 0 and x^-1 wbar^(m-1) y^-1 for
// m > 0.
inline Word omega_word(int m) {
    if (m == 0) return Word();
    if (m < 0) return word_pow(word_w(), m);
    return free_reduce("X" + word_pow(word_w_bar(), m - 1) + "Y");
}

// Relator of the two-generator presentation: w^m x w^-m y^-1.
inline Word relator_word(int m, bool reduce = true) {
    Word r = word_pow(word_w(), m) + "x" + word_pow(word_w(), -m) + "Y";
    return reduce ? free_reduce(r) : r;
}

// Preferred longitude (reversed w)^m w^m; the meridian-exponent correction
// vanishes for this family since the word already has exponent sum zero.
inline Word longitude_word(int m) {
    return free_reduce(word_pow(word_w_reversed(), m) + word_pow(word_w(), m));
}

// --- Free group ring and Fox derivatives -------------------------------------

// Integer group-ring element of the free group, keyed by freely reduced
// words.
class GroupRing {
  public:
    using TermMap = std::map<Word, long>;

    GroupRing() = default;

    static GroupRing of_word(const Word& w, long coeff = 1) {
        GroupRing r;
        r.add(free_reduce(w), coeff);
        return r;
    }

    static GroupRing unit() { return of_word(Word()); }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    void add(const Word& w, long coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = terms_.try_emplace(w, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    GroupRing& operator+=(const GroupRing& o) {
        for (const auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }

    GroupRing& operator-=(const GroupRing& o) {
        for (const auto& [w, c] : o.terms_) add(w, -c);
        return *this;
    }

    friend GroupRing operator+(GroupRing x, const GroupRing& y) { return x += y; }
    friend GroupRing operator-(GroupRing x, const GroupRing& y) { return x -= y; }

    friend GroupRing operator*(const GroupRing& x, const GroupRing& y) {
        GroupRing r;
        for (const auto& [wx, cx] : x.terms_)
            for (const auto& [wy, cy] : y.terms_) r.add(free_reduce(wx + wy), cx * cy);
        return r;
    }

    GroupRing left_mul(const Word& w, long coeff = 1) const {
        GroupRing r;
        for (const auto& [wt, c] : terms_) r.add(free_reduce(w + wt), coeff * c);
        return r;
    }

    bool operator==(const GroupRing& o) const { return terms_ == o.terms_; }
    bool operator!=(const GroupRing& o) const { return !(*this == o); }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [w, c] : terms_) {
            if (!out.empty()) out += c < 0 ? " - " : " + ";
            else if (c < 0) out += "-";
            long mag = c < 0 ? -c : c;
            std::string word = w.empty() ? "1" : w;
            out += (mag == 1) ? word : std::to_string(mag) + "*" + word;
        }
        return out;
    }

  private:
    TermMap terms_;
};

// Free (Fox) derivative with respect to one generator, with the left-prefix
// convention: d(uv) = du + u dv, d(g)/dg = 1, d(g^-1)/dg = -g^-1.
inline GroupRing fox_derivative(const Word& word, char gen) {
    if (gen != 'x' && gen != 'y') throw ParseError("fox derivative generator must be x or y");
    GroupRing out;
    Word prefix;
    for (char ch : word) {
        if (letter_generator(ch) == gen) {
            if (letter_exponent(ch) > 0) {
                out.add(prefix, 1);
            } else {
                out.add(free_reduce(prefix + ch), -1);
            }
        }
        prefix = free_reduce(prefix + ch);
    }
    return out;
}

// The closed form of the x-derivative of the relator, assembled from group
// ring operations: w^m (1 + (1-x) S_m(w^-1) (x^-1 - x^-1 y)) for m > 0.
inline GroupRing relator_fox_x_closed_form(int m) {
    if (m <= 0) throw std::invalid_argument("closed form stated for m > 0");
    const Word w = word_w();
    GroupRing s;  // 1 + w^-1 + ... + w^(-m+1)
    for (int i = 0; i < m; ++i) s.add(word_pow(w, -i), 1);
    GroupRing one_minus_x = GroupRing::unit() - GroupRing::of_word("x");
    GroupRing tail = GroupRing::of_word("X") - GroupRing::of_word("Xy");
    GroupRing inner = GroupRing::unit() + one_minus_x * s * tail;
    return inner.left_mul(word_pow(w, m));
}

}  // namespace twistknot
