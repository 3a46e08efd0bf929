#pragma once

#include <string>
#include <vector>

#include "twistknot/format.hpp"
#include "twistknot/polynomial.hpp"
#include "twistknot/published.hpp"
#include "twistknot/torsion.hpp"

namespace twistknot {

// One row of a holonomy-torsion table: the value as a polynomial in the
// curve coordinate u, and the same value rewritten in the cusp-shape
// coordinate via u = 4/(c - 2), with the numerator made primitive.
struct HolonomyTableRow {
    int index;            // 1..max; the knot is J(2, 2*index) or J(2, -2*index)
    int m;                // signed family parameter (+index or -index)
    MPoly u_poly;         // table value as a polynomial in u
    MPoly c_primitive;    // primitive numerator in c
    Rational c_content;   // content, signed to match the leading c-term
    int c_exponent;       // k in the denominator (c-2)^k
    std::string u_form;   // canonical display strings
    std::string c_form;
};

namespace detail {

inline std::string format_c_fraction(const Rational& content, const MPoly& prim, int k) {
    if (k == 0) {
        MPoly value = prim;
        value.scale(content);
        return value.to_string();
    }
    std::string prefix;
    if (content == -1)
        prefix = "-";
    else if (content != 1)
        prefix = twistknot::to_string(content) + "*";
    return prefix + "(" + prim.to_string() + ")/(c-2)^" + std::to_string(k);
}

}  // namespace detail

inline HolonomyTableRow holonomy_table_row(int sign, int index) {
    if (index < 1) throw std::invalid_argument("table rows are indexed from 1");
    HolonomyTableRow row;
    row.index = index;
    row.m = sign > 0 ? index : -index;
    row.u_poly = torsion_at_holonomy_symbolic(row.m).table_value;
    row.c_exponent = row.u_poly.degree(Var::u);
    auto [numer, denom] = row.u_poly.subs_fraction(
        Var::u, MPoly::constant(4), poly_c() - MPoly::constant(2));
    auto [content, prim] = numer.content_and_primitive();
    row.c_content = content;
    row.c_primitive = prim;
    row.u_form = row.u_poly.to_string();
    row.c_form = detail::format_c_fraction(content, prim, row.c_exponent);
    return row;
}

inline std::vector<HolonomyTableRow> holonomy_table(int sign, int max_index) {
    std::vector<HolonomyTableRow> rows;
    rows.reserve(static_cast<std::size_t>(max_index));
    for (int i = 1; i <= max_index; ++i) rows.push_back(holonomy_table_row(sign, i));
    return rows;
}

// Internal consistency of a row: substituting c = (2u + 4)/u back into the
// numerator must reproduce the u-polynomial scaled by 4^k.
inline void self_check_row(const HolonomyTableRow& row) {
    MPoly numer = row.c_primitive;
    numer.scale(row.c_content);
    auto [back, denom] = numer.subs_fraction(
        Var::c, MPoly::constant(2) * poly_u() + MPoly::constant(4), poly_u());
    MPoly expected = row.u_poly * pow_rational(Rational(4), row.c_exponent);
    if (back != expected)
        throw GoldenMismatch("cusp-shape substitution does not invert for row " +
                             std::to_string(row.index));
}

// Compare a computed row against its reference strings (whitespace
// insensitive, otherwise exact).
inline void verify_row_against(const HolonomyTableRow& row, const published::TableRow& ref) {
    if (!golden_equal(row.u_form, ref.u_form))
        throw GoldenMismatch("row " + std::to_string(row.index) + " (u form): " +
                             first_difference(row.u_form, ref.u_form));
    if (!golden_equal(row.c_form, ref.c_form))
        throw GoldenMismatch("row " + std::to_string(row.index) + " (c form): " +
                             first_difference(row.c_form, ref.c_form));
}

// Verify a generated table; rows within the reference range must match the
// reference strings exactly, and every row must pass the substitution
// self-check. Returns the number of rows compared against references.
inline int verify_table(int sign, const std::vector<HolonomyTableRow>& rows) {
    const auto refs_pos = published::table_positive();
    const auto refs_neg = published::table_negative();
    int compared = 0;
    for (const auto& row : rows) {
        self_check_row(row);
        const auto& refs = sign > 0 ? refs_pos : refs_neg;
        if (row.index >= 1 && row.index <= static_cast<int>(refs.size())) {
            verify_row_against(row, refs[static_cast<std::size_t>(row.index - 1)]);
            ++compared;
        }
    }
    return compared;
}

}  // namespace twistknot
