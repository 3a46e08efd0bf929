#pragma once

#include <map>
#include <string>
#include <vector>

#include "twistknot/errors.hpp"
#include "twistknot/polynomial.hpp"

namespace twistknot {

// Coefficients collected by powers of u, each coefficient a polynomial in
// sigma = s + 1/s: sigma_powers[k][d] is the rational multiplying
// (s + 1/s)^d u^k. Only defined for polynomials symmetric under s <-> 1/s.
using SigmaCollected = std::map<int, std::map<int, Rational>>;

inline SigmaCollected sigma_collect(const MPoly& p) {
    SigmaCollected out;
    const MPoly sigma = poly_s() + poly_si();
    auto by_u = p.as_univariate(Var::u);
    for (const auto& [k, coeff] : by_u) {
        MPoly rem = coeff;
        std::map<int, Rational>& slot = out[k];
        while (!rem.is_zero()) {
            int d = rem.degree(Var::s);
            if (d < 0 || -rem.min_degree(Var::s) != d)
                throw std::invalid_argument("polynomial is not symmetric in s <-> 1/s");
            MPoly top = rem.coeff_of(Var::s, d);
            if (!top.is_constant())
                throw std::invalid_argument("unexpected variables in an s-coefficient");
            Rational alpha = top.constant_term();
            if (d == 0) {
                if (alpha != 0) slot[0] = alpha;
                break;
            }
            slot[d] = alpha;
            rem -= sigma.pow(d) * alpha;
        }
        if (slot.empty()) out.erase(k);
    }
    return out;
}

namespace detail {

// One term "alpha * (s+s^-1)^d", sign included, for descending-σ rendering.
inline std::string sigma_term(const Rational& alpha, int d, bool leading) {
    std::string out;
    bool neg = sign_of(alpha) < 0;
    if (leading) {
        if (neg) out += "-";
    } else {
        out += neg ? " - " : " + ";
    }
    Rational mag = neg ? Rational(-alpha) : alpha;
    std::string var;
    if (d == 1) var = "(s+s^-1)";
    else if (d > 1) var = "(s+s^-1)^" + std::to_string(d);
    if (var.empty()) {
        out += to_string(mag);
    } else if (mag == 1) {
        out += var;
    } else {
        out += to_string(mag) + "*" + var;
    }
    return out;
}

inline std::string sigma_coeff_string(const std::map<int, Rational>& coeff) {
    std::string out;
    bool leading = true;
    for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) {
        out += sigma_term(it->second, it->first, leading);
        leading = false;
    }
    return out.empty() ? "0" : out;
}

inline std::string join_pieces(const std::vector<std::string>& pieces) {
    std::string out;
    for (const auto& piece : pieces) {
        if (out.empty()) {
            out = piece;
        } else if (!piece.empty() && piece[0] == '-') {
            out += " - " + piece.substr(1);
        } else {
            out += " + " + piece;
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace detail

// Canonical display for the symmetric Laurent polynomials of the worked
// examples: ascending powers of u, each coefficient written in descending
// powers of (s+s^-1), e.g.
//   "-10*(s+s^-1) + 1 + (5*(s+s^-1)^2 - 7*(s+s^-1) + 1)*u + (-5*(s+s^-1) - 3)*u^2".
inline std::string to_sigma_string(const MPoly& p) {
    if (p.is_zero()) return "0";
    SigmaCollected col = sigma_collect(p);
    std::vector<std::string> pieces;
    for (const auto& [k, coeff] : col) {
        std::string upow;
        if (k == 1) upow = "u";
        else if (k > 1) upow = "u^" + std::to_string(k);
        if (k == 0) {
            pieces.push_back(detail::sigma_coeff_string(coeff));
            continue;
        }
        if (coeff.size() == 1) {
            const auto& [d, alpha] = *coeff.begin();
            std::string term = detail::sigma_term(alpha, d, true);
            // Unit coefficient folds into the u power ("u^2", "-u^3").
            if (term == "1") pieces.push_back(upow);
            else if (term == "-1") pieces.push_back("-" + upow);
            else pieces.push_back(term + "*" + upow);
        } else {
            pieces.push_back("(" + detail::sigma_coeff_string(coeff) + ")*" + upow);
        }
    }
    return detail::join_pieces(pieces);
}

// LaTeX rendering of a univariate polynomial with integer coefficients,
// descending powers, implicit multiplication: "13u^2-7u+19".
inline std::string to_latex_univariate(const MPoly& p, Var v, const std::string& var_name) {
    if (p.is_zero()) return "0";
    auto uni = p.as_univariate(v);
    std::string out;
    for (auto it = uni.rbegin(); it != uni.rend(); ++it) {
        const auto& [k, coeff] = *it;
        if (!coeff.is_constant())
            throw std::invalid_argument("latex rendering expects a univariate polynomial");
        Rational c = coeff.constant_term();
        bool neg = sign_of(c) < 0;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? "-" : "+";
        }
        Rational mag = neg ? Rational(-c) : c;
        std::string vpart;
        if (k == 1) vpart = var_name;
        else if (k > 9) vpart = var_name + "^{" + std::to_string(k) + "}";
        else if (k > 1) vpart = var_name + "^" + std::to_string(k);
        if (vpart.empty()) out += to_string(mag);
        else if (mag == 1) out += vpart;
        else out += to_string(mag) + vpart;
    }
    return out;
}

// Strip every whitespace character; the golden comparisons are whitespace
// insensitive but otherwise exact.
inline std::string strip_whitespace(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
    return out;
}

// First position where two whitespace-stripped strings differ, with a short
// context window, for GoldenMismatch messages.
inline std::string first_difference(const std::string& got, const std::string& want) {
    std::string g = strip_whitespace(got), w = strip_whitespace(want);
    std::size_t i = 0;
    while (i < g.size() && i < w.size() && g[i] == w[i]) ++i;
    auto window = [&](const std::string& str) {
        std::size_t lo = i > 20 ? i - 20 : 0;
        std::string snip = str.substr(lo, 45);
        return (lo > 0 ? "..." : "") + snip + (lo + 45 < str.size() ? "..." : "");
    };
    return "first difference at position " + std::to_string(i) + ":\n  computed: " + window(g) +
           "\n  expected: " + window(w);
}

inline bool golden_equal(const std::string& got, const std::string& want) {
    return strip_whitespace(got) == strip_whitespace(want);
}

}  // namespace twistknot
