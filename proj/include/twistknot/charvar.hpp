#pragma once

#include <string>
#include <unordered_map>
#include <utility>

#include "twistknot/polynomial.hpp"
#include "twistknot/riley.hpp"
#include "twistknot/words.hpp"

namespace twistknot {

// Trace polynomials on the SL2 character variety of the free group on x, y,
// in the coordinates a = tr(x) = tr(y) and b = tr(xy). Every word trace
// rewrites into Z[a, b] by three moves:
//   tr(W1 g^-1 W2) = a tr(W1 W2) - tr(W1 g W2)          (inverse removal)
//   tr(g g V)      = a tr(g V) - tr(V)    cyclically    (double letter)
//   tr((xy)^k)     = p_k,  p_0 = 2, p_1 = b, p_{k+1} = b p_k - p_{k-1}
// The empty word has the genuine trace tr(1) = 2.
class TraceEngine {
  public:
    const MPoly& trace(const Word& word) {
        Word w = cyclic_reduce(word);
        auto it = memo_.find(w);
        if (it != memo_.end()) return it->second;
        MPoly val = compute(w);
        return memo_.emplace(std::move(w), std::move(val)).first->second;
    }

  private:
    MPoly compute(const Word& w) {
        const std::size_t n = w.size();
        if (n == 0) return MPoly::constant(2);
        if (n == 1) return MPoly::variable(Var::a);
        const MPoly a = MPoly::variable(Var::a);
        for (std::size_t i = 0; i < n; ++i) {
            if (std::isupper(static_cast<unsigned char>(w[i]))) {
                Word w1 = w.substr(0, i);
                Word w2 = w.substr(i + 1);
                Word with_pos = w1 + letter_inverse(w[i]) + w2;
                return a * trace(w1 + w2) - trace(with_pos);
            }
        }
        // All-positive word: cyclic double letter first.
        for (std::size_t i = 0; i < n; ++i) {
            if (w[i] == w[(i + 1) % n]) {
                Word rot = w.substr(i) + w.substr(0, i);
                Word v = rot.substr(2);
                return a * trace(rot.substr(0, 1) + v) - trace(v);
            }
        }
        // Alternating xyxy...: tr((xy)^k) with n = 2k.
        const MPoly b = MPoly::variable(Var::b);
        std::size_t k = n / 2;
        MPoly p0 = MPoly::constant(2);
        MPoly p1 = b;
        for (std::size_t j = 1; j < k; ++j) {
            MPoly p2 = b * p1 - p0;
            p0 = std::move(p1);
            p1 = std::move(p2);
        }
        return p1;
    }

    std::unordered_map<Word, MPoly> memo_;
};

// Stateless convenience wrapper around a per-call engine.
inline MPoly trace_polynomial(const Word& word) {
    TraceEngine engine;
    return engine.trace(word);
}

// Trace of the commutator w = [y, x^-1].
inline MPoly commutator_trace() { return trace_polynomial(word_w()); }

// Trace of w^2, the recursion multiplier: c(a,b) = I_w^2 - 2.
inline MPoly commutator_square_trace() {
    MPoly iw = commutator_trace();
    return iw * iw - MPoly::constant(2);
}

// The defining polynomial of the abelian locus, tr(xy^-1) - 2 = a^2 - b - 2.
inline MPoly abelian_locus() {
    return MPoly::variable(Var::a).pow(2) - MPoly::variable(Var::b) - MPoly::constant(2);
}

// Direct alternating-sum formula for the character-variety polynomial:
// Phi_m = sum_j (-1)^j I_{Omega^(j)} + (-1)^(k+1), where Omega^(j) deletes j
// letters from each end of Omega_m (length 2k+2) before any reduction.
inline MPoly char_var_direct_le(int m, TraceEngine& engine) {
    if (m == 0) return MPoly::one();
    Word wd = omega_word(m);
    if (wd.size() % 2 != 0) throw std::logic_error("omega word has odd length");
    int k = static_cast<int>(wd.size()) / 2 - 1;
    MPoly total;
    int sign = 1;
    for (int j = 0; j <= k; ++j) {
        MPoly term = engine.trace(wd);
        total += sign > 0 ? term : -term;
        wd = wd.substr(1, wd.size() - 2);
        sign = -sign;
    }
    total += MPoly::constant(sign);
    return total;
}

inline MPoly char_var_direct_le(int m) {
    TraceEngine engine;
    return char_var_direct_le(m, engine);
}

namespace detail {

// Alternating four-term head of the deletion sequence of a word: the
// increment R carried by the length-two recursion of Phi. All traces are
// genuine (empty word included).
inline MPoly deletion_head(const Word& om, TraceEngine& engine) {
    MPoly t0 = engine.trace(om);
    MPoly t1 = engine.trace(om.substr(1, om.size() - 2));
    MPoly t2 = engine.trace(om.substr(2, om.size() - 4));
    MPoly t3 = engine.trace(om.substr(3, om.size() - 6));
    return t0 - t1 + t2 - t3;
}

}  // namespace detail

// R+_m for m >= 0: head of the deletion sequence of Omega_{m+2}.
inline MPoly char_var_r_pos(int m, TraceEngine& engine) {
    if (m < 0) throw std::invalid_argument("R+ sequence needs m >= 0");
    return detail::deletion_head(omega_word(m + 2), engine);
}

// R-_m for m <= 0: head of the deletion sequence of Omega_{m-2}.
inline MPoly char_var_r_neg(int m, TraceEngine& engine) {
    if (m > 0) throw std::invalid_argument("R- sequence needs m <= 0");
    return detail::deletion_head(omega_word(m - 2), engine);
}

// Character-variety polynomial by the two-step recursion
//   Phi_{m+2} = Phi_m + R+_m (m >= 0),   Phi_{m-2} = Phi_m + R-_m (m <= 0),
// with the R-sequence advanced by R_{m+-4} = c R_{m+-2} - R_m along each
// parity, seeded from the genuine-trace heads.
inline MPoly char_var_polynomial(int m) {
    TraceEngine engine;
    if (m == 0) return MPoly::one();
    if (m == 1) return MPoly::variable(Var::b) - MPoly::one();
    if (m == -1) {
        const MPoly a = MPoly::variable(Var::a), b = MPoly::variable(Var::b);
        return -a.pow(2) * b + MPoly::constant(2) * a.pow(2) + b.pow(2) - b - MPoly::one();
    }
    const MPoly c = commutator_square_trace();
    if (m > 0) {
        int base = m % 2;
        MPoly r_prev = char_var_r_pos(base, engine);
        MPoly r_cur = char_var_r_pos(base + 2, engine);
        MPoly phi = char_var_polynomial(base) + r_prev;
        for (int j = base + 2; j <= m - 2; j += 2) {
            phi += r_cur;
            MPoly r_next = c * r_cur - r_prev;
            r_prev = std::move(r_cur);
            r_cur = std::move(r_next);
        }
        return phi;
    }
    int base = -((-m) % 2);
    MPoly r_prev = char_var_r_neg(base, engine);
    MPoly r_cur = char_var_r_neg(base - 2, engine);
    MPoly phi = char_var_polynomial(base) + r_prev;
    for (int j = base - 2; j >= m + 2; j -= 2) {
        phi += r_cur;
        MPoly r_next = c * r_cur - r_prev;
        r_prev = std::move(r_cur);
        r_cur = std::move(r_next);
    }
    return phi;
}

// Phi_m pulled back to the curve coordinates: a^2 -> sigma + 2 and
// b -> sigma - u, with sigma stored in the s slot. Phi_m is even in a, so
// the substitution is polynomial.
inline MPoly char_var_on_curve(const MPoly& phi_ab) {
    const MPoly sigma = poly_s();  // the s slot holds sigma = s + 1/s here
    const MPoly repl_a2 = sigma + MPoly::constant(2);
    auto by_a = phi_ab.as_univariate(Var::a);
    MPoly out;
    for (const auto& [e, coeff] : by_a) {
        if (e % 2 != 0)
            throw std::invalid_argument("polynomial is not even in a");
        out += coeff * repl_a2.pow(e / 2);
    }
    return out.subs_poly(Var::b, sigma - poly_u());
}

// Riley polynomial written in sigma = s + 1/s (stored in the s slot), for
// exact divisibility checks against char_var_on_curve.
inline MPoly riley_polynomial_sigma(int m) {
    const MPoly sigma = poly_s();
    MPoly tau = poly_u().pow(2) + (MPoly::constant(2) - sigma) * poly_u() + MPoly::constant(2);
    return (sigma - MPoly::one() - poly_u()) * chebyshev_t(m, tau) - chebyshev_t(m - 1, tau);
}

// Exact statement of the vanishing of Phi_m on the Riley curve: the
// pullback of Phi_m is divisible by the sigma-form Riley polynomial.
inline bool char_var_vanishes_on_curve(int m) {
    MPoly pulled = char_var_on_curve(char_var_polynomial(m));
    MPoly phi = riley_polynomial_sigma(m);
    return pulled.reduce_mod(phi, Var::u).is_zero();
}

}  // namespace twistknot
