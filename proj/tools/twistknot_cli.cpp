// Command-line front end for the twist-knot torsion engine.
//
// Subcommands cover the defining curve polynomials, the adjoint torsion
// polynomial and its value on the curve, the specialisation at the holonomy
// representation, cusp shapes and parabolic identity reports, the
// character-variety recursion, reference tables, worked examples, growth
// asymptotics, and numeric cross-checks between independent evaluation
// routes. Data goes to stdout; progress notes go to stderr. All numbers in
// JSON output are encoded as decimal strings.
//
// Exit codes: 0 success, 1 computation or verification failure, 2 usage.

#include <CLI11.hpp>
#include <json.hpp>

#include "twistknot/twistknot.hpp"

#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::ordered_json;
using namespace twistknot;

namespace {

// ---------------------------------------------------------------------------
// Shared option plumbing
// ---------------------------------------------------------------------------

enum class Fmt { text, js, csv, latex };

struct Opt {
    Fmt fmt = Fmt::text;
    std::string fmt_name = "text";
    long precision = 128;
    std::uint64_t seed = 7;
    bool verify = false;
};

// Unsupported format/command combinations are usage errors (exit 2).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Fmt parse_fmt(const std::string& name) {
    if (name == "text") return Fmt::text;
    if (name == "json") return Fmt::js;
    if (name == "csv") return Fmt::csv;
    if (name == "latex") return Fmt::latex;
    throw UsageError("unknown format '" + name + "'");
}

[[noreturn]] void reject_format(const std::string& cmd, const Opt& o, const std::string& hint = "") {
    std::string msg = "format '" + o.fmt_name + "' is not available for '" + cmd + "'";
    if (!hint.empty()) msg += " (" + hint + ")";
    throw UsageError(msg);
}

// ---------------------------------------------------------------------------
// Formatting helpers
// ---------------------------------------------------------------------------

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        out += ch;
        if (ch == '"') out += '"';
    }
    out += '"';
    return out;
}

std::string dstr(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// Text rendering of a complex number, e.g. "-0.5 + 0.8660254037844386i".
std::string complex_text(const Complex& z, int digits = 0) {
    return z.re.to_string(digits) + (z.im.sign() < 0 ? " - " : " + ") + z.im.abs().to_string(digits) +
           "i";
}

ordered_json complex_json(const Complex& z) {
    return ordered_json{{"re", z.re.to_string()}, {"im", z.im.to_string()}};
}

ordered_json knot_json(const TwistKnot& k) {
    return ordered_json{{"name", k.canonical_name()},
                        {"m", std::to_string(k.m)},
                        {"n", std::to_string(k.even_n())},
                        {"crossing_number", std::to_string(k.crossing_number())},
                        {"source", k.source}};
}

std::string knot_text(const TwistKnot& k) {
    std::string out = k.canonical_name();
    if (!k.source.empty() && k.source != k.canonical_name()) out += "  [" + k.source + "]";
    return out;
}

void emit_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

// Evaluate a polynomial in (s, u) at complex arguments; unused slots are
// immaterial for the polynomials handled here.
Complex eval_su(const MPoly& p, const Complex& s0, const Complex& u0) {
    std::array<Complex, kNumVars> pt = {s0, u0, Complex(1), Complex(0), Complex(0), Complex(0)};
    return p.eval(pt, [](const Rational& q) { return Complex(Real(q)); });
}

Complex eval_u(const MPoly& p, const Complex& u0) { return eval_su(p, Complex(1), u0); }

// LaTeX for a table row's cusp-field form: content * primitive / (c-2)^k.
std::string latex_c_form(const HolonomyTableRow& row) {
    std::string prim = to_latex_univariate(row.c_primitive, Var::c, "c");
    Rational content = row.c_content;
    std::string sign;
    if (content < 0) {
        sign = "-";
        content = -content;
    }
    bool prim_is_one = row.c_primitive.is_constant() && row.c_primitive.constant_term() == Rational(1);
    std::string mult;
    if (content != Rational(1))
        mult = to_string(content) + (prim_is_one ? "" : "\\,");
    std::string num = prim_is_one ? (mult.empty() ? "1" : mult) : mult + "\\left(" + prim + "\\right)";
    if (content == Rational(1) && !prim_is_one) num = prim;
    if (row.c_exponent == 0) return sign + num;
    return sign + "\\frac{" + num + "}{(c-2)^{" + std::to_string(row.c_exponent) + "}}";
}

// ---------------------------------------------------------------------------
// Cross-check core: closed-form evaluation against the symbolic value at
// random points of the defining curve. Deterministic for a fixed seed.
// ---------------------------------------------------------------------------

struct CrosscheckResult {
    int requested = 0;
    int used = 0;
    int skipped = 0;  // eigenvalue-degenerate or off-curve sample points
    Real max_rel_err = Real(0);
};

CrosscheckResult crosscheck_core(int m, int points, std::uint64_t seed) {
    CrosscheckResult r;
    r.requested = points;
    TorsionValue tv = torsion_value(m);
    std::mt19937_64 rng(seed ^ 0x517cc1b727220a95ULL);
    int stall = 0;
    while (r.used < points && stall < 400) {
        ++stall;
        long num = 120 + static_cast<long>(rng() % 181);  // |s0| in [1.2, 3.0]
        bool neg = (rng() & 1) != 0;
        Rational s0q = rational_from_pair(neg ? -num : num, 100);
        MPoly spec = tv.phi.subs_rational(Var::s, s0q);
        if (!spec.depends_on(Var::u)) continue;
        std::vector<Complex> roots;
        try {
            roots = roots_of_univariate(spec, Var::u, rng());
        } catch (const RootFindingDiverged&) {
            continue;
        }
        Complex s0{Real(s0q), Real(0)};
        for (const Complex& u0 : roots) {
            if (r.used >= points) break;
            Complex want;
            try {
                want = closed_form_torsion(s0, u0, m);
            } catch (const DegenerateEigenvalues&) {
                ++r.skipped;
                continue;
            } catch (const OffCurve&) {
                ++r.skipped;
                continue;
            }
            Complex got = eval_su(tv.value, s0, u0);
            Real scale = want.abs();
            if (scale < Real(1)) scale = Real(1);
            Real rel = (got - want).abs() / scale;
            if (r.max_rel_err < rel) r.max_rel_err = rel;
            ++r.used;
        }
    }
    return r;
}

Real crosscheck_tolerance() { return Real(rational_from_pair(1, 1000000000)); }

// ---------------------------------------------------------------------------
// Holonomy specialisation through the trace route: specialise the generic
// value at s = 1, reduce modulo phi(1, u), and apply the table sign.
// ---------------------------------------------------------------------------

HolonomyTorsion holonomy_from_trace(const TwistKnot& k) {
    TorsionValue tv = torsion_value_trace_formula(k);
    HolonomyTorsion out;
    out.knot = k;
    out.phi1 = riley_polynomial_at_s1(k.m);
    MPoly specialised = tv.value.subs_one(Var::s).reduce_mod(out.phi1, Var::u);
    out.table_value = k.m > 0 ? -specialised : specialised;
    out.sign_factor = k.m > 0 ? "-tau_0" : "tau_0";
    out.hyperbolic = (k.m != 1);
    return out;
}

// ---------------------------------------------------------------------------
// riley
// ---------------------------------------------------------------------------

int run_riley(const Opt& o, const std::string& spec) {
    RileyPolynomial r = riley_for_knot(parse_knot_spec(spec));
    std::string sigma = to_sigma_string(r.phi);
    if (o.fmt == Fmt::text) {
        std::cout << "knot: " << knot_text(r.knot) << "\n"
                  << "crossing_number: " << r.knot.crossing_number() << "\n"
                  << "degree_u: " << r.degree_u << "\n"
                  << "phi: " << r.phi.to_string() << "\n"
                  << "phi_sigma: " << sigma << "\n";
        return 0;
    }
    if (o.fmt == Fmt::js) {
        emit_json(ordered_json{{"knot", knot_json(r.knot)},
                               {"phi", r.phi.to_string()},
                               {"phi_sigma", sigma},
                               {"degree_u", std::to_string(r.degree_u)}});
        return 0;
    }
    reject_format("riley", o);
}

// ---------------------------------------------------------------------------
// torsion
// ---------------------------------------------------------------------------

int run_torsion_generic(const Opt& o, const TwistKnot& k, const std::string& path) {
    TorsionValue tv;
    bool paths_agree = false;
    if (path == "trace") {
        tv = torsion_value_trace_formula(k);
    } else {
        tv = torsion_value(k);
    }
    if (path == "both") {
        TorsionValue other = torsion_value_trace_formula(k);
        if (!(tv.value == other.value) || !(tv.bracket == other.bracket))
            throw GoldenMismatch("determinant and trace routes disagree for " + k.canonical_name());
        paths_agree = true;
    }
    std::string value_sigma = to_sigma_string(tv.value);
    std::string bracket_sigma = to_sigma_string(tv.bracket);
    if (o.fmt == Fmt::text) {
        std::cout << "knot: " << knot_text(k) << "\n"
                  << "normalisation: torsion divided by the sign tau_0\n"
                  << "phi: " << tv.phi.to_string() << "\n"
                  << "value: " << value_sigma << "\n"
                  << "bracket: " << bracket_sigma << "\n"
                  << "path: " << path << "\n";
        if (paths_agree) std::cout << "paths_agree: determinant and trace routes match exactly\n";
        return 0;
    }
    if (o.fmt == Fmt::js) {
        ordered_json j{{"knot", knot_json(k)},       {"sign_factor", "tau_0"},
                       {"phi", tv.phi.to_string()},  {"poly_u_s", tv.value.to_string()},
                       {"poly_u_s_sigma", value_sigma}, {"bracket_sigma", bracket_sigma},
                       {"path", path}};
        if (path == "both") j["paths_agree"] = paths_agree;
        emit_json(j);
        return 0;
    }
    reject_format("torsion", o, "latex output requires --at-holonomy");
}

int run_torsion_holonomy(const Opt& o, const TwistKnot& k, const std::string& path) {
    HolonomyTorsion ht;
    bool paths_agree = false;
    if (path == "trace") {
        ht = holonomy_from_trace(k);
    } else {
        ht = torsion_at_holonomy_symbolic(k);
    }
    if (path == "both") {
        HolonomyTorsion other = holonomy_from_trace(k);
        if (!(ht.table_value == other.table_value))
            throw GoldenMismatch("determinant and trace specialisations disagree for " +
                                 k.canonical_name());
        paths_agree = true;
    }
    std::string latex_row = to_latex_univariate(ht.table_value, Var::u, "u");
    if (o.fmt == Fmt::text) {
        std::cout << "knot: " << knot_text(k) << "\n"
                  << "hyperbolic: " << (ht.hyperbolic ? "yes" : "no") << "\n"
                  << "sign_factor: " << ht.sign_factor << "\n"
                  << "phi_1: " << ht.phi1.to_string() << "\n"
                  << "table_value: " << ht.table_value.to_string() << "\n"
                  << "latex_row: " << latex_row << "\n"
                  << "path: " << path << "\n";
        if (paths_agree) std::cout << "paths_agree: determinant and trace routes match exactly\n";
        return 0;
    }
    if (o.fmt == Fmt::js) {
        ordered_json j{{"knot", knot_json(k)},
                       {"sign_factor", ht.sign_factor},
                       {"hyperbolic", ht.hyperbolic},
                       {"phi_1", ht.phi1.to_string()},
                       {"poly_u", ht.table_value.to_string()},
                       {"table_row_latex", latex_row},
                       {"path", path}};
        if (path == "both") j["paths_agree"] = paths_agree;
        emit_json(j);
        return 0;
    }
    if (o.fmt == Fmt::latex) {
        std::cout << latex_row << "\n";
        return 0;
    }
    reject_format("torsion --at-holonomy", o);
}

// ---------------------------------------------------------------------------
// torsion-poly
// ---------------------------------------------------------------------------

int run_torsion_poly(const Opt& o, const std::string& spec) {
    TorsionPolynomial tp = torsion_polynomial(parse_knot_spec(spec));
    if (o.fmt == Fmt::text) {
        std::cout << "knot: " << knot_text(tp.knot) << "\n"
                  << "numerator: " << tp.numerator.to_string() << "\n"
                  << "denominator: " << tp.denominator.to_string() << "\n"
                  << "normalization: " << tp.normalization << "\n";
        return 0;
    }
    if (o.fmt == Fmt::js) {
        emit_json(ordered_json{{"knot", knot_json(tp.knot)},
                               {"numerator", tp.numerator.to_string()},
                               {"denominator", tp.denominator.to_string()},
                               {"normalization", tp.normalization}});
        return 0;
    }
    reject_format("torsion-poly", o);
}

// ---------------------------------------------------------------------------
// holonomy: per-root identity report, cusp shapes, torsion values
// ---------------------------------------------------------------------------

struct RootReport {
    Complex u;
    bool real = false;
    bool has_shape = false;
    Complex shape;
    bool geometric = false;
    Complex torsion;
    ParabolicChecks checks;
    Real max_residual = Real(0);
    Real tolerance = Real(0);
    bool ok = true;
    Real closed_form_residual = Real(0);
};

int run_holonomy(const Opt& o, const std::string& spec) {
    TwistKnot k = parse_knot_spec(spec);
    HolonomyTorsion sym = torsion_at_holonomy_symbolic(k);
    std::vector<Complex> roots = parabolic_roots(k.m, o.seed);
    std::vector<CuspShape> shapes;
    if (k.m != 1) shapes = cusp_shapes(k.m, o.seed);

    Real real_tol = Real::pow2(-27);
    std::vector<RootReport> reports;
    bool all_ok = true;
    for (const Complex& u : roots) {
        RootReport rep;
        rep.u = u;
        rep.real = u.im.abs() < real_tol * (Real(1) + u.abs());
        rep.checks = parabolic_identity_checks(k.m, u);
        rep.tolerance = parabolic_identity_tolerance(u, k.m);
        const std::array<Real, 7> residuals = {
            rep.checks.omega_upper_left,  rep.checks.shear_relation,
            rep.checks.normalisation,     rep.checks.diagonal_relation,
            rep.checks.longitude_trace,   rep.checks.longitude_lower_left,
            rep.checks.cusp_round_trip};
        for (const Real& x : residuals)
            if (rep.max_residual < x) rep.max_residual = x;
        rep.ok = rep.max_residual < rep.tolerance;
        rep.torsion = closed_form_torsion_holonomy(u, k.m);
        Complex sym_at_root = eval_u(sym.table_value, u);
        Real scale = sym_at_root.abs();
        if (scale < Real(1)) scale = Real(1);
        rep.closed_form_residual = (sym_at_root - rep.torsion).abs() / scale;
        if (!(rep.closed_form_residual < rep.tolerance)) rep.ok = false;
        if (!rep.real) {
            for (const CuspShape& cs : shapes) {
                if ((cs.u - u).abs() < real_tol * (Real(1) + u.abs())) {
                    rep.has_shape = true;
                    rep.shape = cs.shape;
                    rep.geometric = cs.geometric;
                    break;
                }
            }
        }
        all_ok = all_ok && rep.ok;
        reports.push_back(rep);
    }

    if (o.fmt == Fmt::text) {
        std::cout << "knot: " << knot_text(k) << "\n"
                  << "hyperbolic: " << (sym.hyperbolic ? "yes" : "no") << "\n"
                  << "sign_factor: " << sym.sign_factor << "\n"
                  << "phi_1: " << sym.phi1.to_string() << "\n"
                  << "table_value: " << sym.table_value.to_string() << "\n"
                  << "roots: " << reports.size() << "\n";
        int idx = 0;
        for (const RootReport& rep : reports) {
            ++idx;
            std::cout << "root " << idx << ": u = " << complex_text(rep.u, 12) << "\n"
                      << "  real_root: " << (rep.real ? "yes" : "no") << "\n";
            if (rep.has_shape)
                std::cout << "  cusp_shape: " << complex_text(rep.shape, 12)
                          << (rep.geometric ? "  (geometric candidate)" : "") << "\n";
            std::cout << "  torsion: " << complex_text(rep.torsion, 12) << "\n"
                      << "  identity_max_residual: " << rep.max_residual.to_string(3) << "\n"
                      << "  closed_form_residual: " << rep.closed_form_residual.to_string(3) << "\n"
                      << "  tolerance: " << rep.tolerance.to_string(3) << "\n"
                      << "  ok: " << (rep.ok ? "yes" : "no") << "\n";
        }
        std::cout << "all_identities_ok: " << (all_ok ? "yes" : "no") << "\n";
    } else if (o.fmt == Fmt::js) {
        ordered_json jroots = ordered_json::array();
        for (const RootReport& rep : reports) {
            ordered_json identities{
                {"omega_upper_left", rep.checks.omega_upper_left.to_string()},
                {"shear_relation", rep.checks.shear_relation.to_string()},
                {"normalisation", rep.checks.normalisation.to_string()},
                {"diagonal_relation", rep.checks.diagonal_relation.to_string()},
                {"longitude_trace", rep.checks.longitude_trace.to_string()},
                {"longitude_lower_left", rep.checks.longitude_lower_left.to_string()},
                {"cusp_round_trip", rep.checks.cusp_round_trip.to_string()},
                {"max_residual", rep.max_residual.to_string()},
                {"tolerance", rep.tolerance.to_string()},
                {"ok", rep.ok}};
            ordered_json jr{{"u", complex_json(rep.u)},
                            {"real_root", rep.real},
                            {"torsion", complex_json(rep.torsion)},
                            {"closed_form_residual", rep.closed_form_residual.to_string()},
                            {"identities", identities}};
            if (rep.has_shape) {
                jr["cusp_shape"] = complex_json(rep.shape);
                jr["geometric"] = rep.geometric;
            }
            jroots.push_back(jr);
        }
        emit_json(ordered_json{{"knot", knot_json(k)},
                               {"hyperbolic", sym.hyperbolic},
                               {"sign_factor", sym.sign_factor},
                               {"phi_1", sym.phi1.to_string()},
                               {"table_value", sym.table_value.to_string()},
                               {"roots", jroots},
                               {"all_identities_ok", all_ok}});
    } else if (o.fmt == Fmt::csv) {
        std::cout << "index,u_re,u_im,real_root,cusp_re,cusp_im,geometric,torsion_re,torsion_im,"
                     "max_residual,tolerance,ok\n";
        int idx = 0;
        for (const RootReport& rep : reports) {
            ++idx;
            std::cout << idx << "," << rep.u.re.to_string() << "," << rep.u.im.to_string() << ","
                      << (rep.real ? "1" : "0") << ","
                      << (rep.has_shape ? rep.shape.re.to_string() : std::string()) << ","
                      << (rep.has_shape ? rep.shape.im.to_string() : std::string()) << ","
                      << (rep.geometric ? "1" : "0") << "," << rep.torsion.re.to_string() << ","
                      << rep.torsion.im.to_string() << "," << rep.max_residual.to_string() << ","
                      << rep.tolerance.to_string() << "," << (rep.ok ? "1" : "0") << "\n";
        }
    } else {
        reject_format("holonomy", o);
    }
    if (o.verify && !all_ok) {
        std::cerr << "verification failed: parabolic identities exceeded tolerance\n";
        return 1;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// cusp-shape
// ---------------------------------------------------------------------------

int run_cusp_shape(const Opt& o, const std::string& spec) {
    TwistKnot k = parse_knot_spec(spec);
    std::vector<CuspShape> shapes = cusp_shapes(k.m, o.seed);
    if (o.fmt == Fmt::text) {
        std::cout << "knot: " << knot_text(k) << "\n"
                  << "shapes: " << shapes.size() << "\n";
        int idx = 0;
        for (const CuspShape& cs : shapes) {
            ++idx;
            std::cout << "shape " << idx << ": " << complex_text(cs.shape, 12)
                      << (cs.geometric ? "  (geometric candidate)" : "") << "\n"
                      << "  at u = " << complex_text(cs.u, 12) << "\n";
        }
        return 0;
    }
    if (o.fmt == Fmt::js) {
        ordered_json arr = ordered_json::array();
        for (const CuspShape& cs : shapes)
            arr.push_back(ordered_json{{"u", complex_json(cs.u)},
                                       {"shape", complex_json(cs.shape)},
                                       {"geometric", cs.geometric}});
        emit_json(ordered_json{{"knot", knot_json(k)}, {"shapes", arr}});
        return 0;
    }
    if (o.fmt == Fmt::csv) {
        std::cout << "index,u_re,u_im,shape_re,shape_im,geometric\n";
        int idx = 0;
        for (const CuspShape& cs : shapes) {
            ++idx;
            std::cout << idx << "," << cs.u.re.to_string() << "," << cs.u.im.to_string() << ","
                      << cs.shape.re.to_string() << "," << cs.shape.im.to_string() << ","
                      << (cs.geometric ? "1" : "0") << "\n";
        }
        return 0;
    }
    reject_format("cusp-shape", o);
}

// ---------------------------------------------------------------------------
// charvar
// ---------------------------------------------------------------------------

int run_charvar(const Opt& o, int m, bool oracle) {
    MPoly phi = char_var_polynomial(m);
    bool oracle_checked = oracle || o.verify;
    bool oracle_agrees = true;
    bool vanishing_checked = false;
    bool vanishes = true;
    if (oracle_checked) {
        MPoly direct = char_var_direct_le(m);
        oracle_agrees = (phi == direct);
        if (!oracle_agrees)
            throw GoldenMismatch("recursion and direct construction disagree for m = " +
                                 std::to_string(m));
    }
    if (o.verify && m != 0) {
        vanishing_checked = true;
        vanishes = char_var_vanishes_on_curve(m);
        if (!vanishes)
            throw GoldenMismatch("character-variety polynomial does not vanish on the curve, m = " +
                                 std::to_string(m));
    }
    if (o.fmt == Fmt::text) {
        std::cout << "m: " << m << "\n"
                  << "knot: J(2," << 2 * m << ")\n"
                  << "phi_hat: " << phi.to_string() << "\n";
        if (oracle_checked)
            std::cout << "oracle: recursion matches the direct construction\n";
        if (vanishing_checked)
            std::cout << "on_curve: vanishes on the defining curve\n";
        return 0;
    }
    if (o.fmt == Fmt::js) {
        ordered_json j{{"m", std::to_string(m)},
                       {"knot", "J(2," + std::to_string(2 * m) + ")"},
                       {"phi_hat", phi.to_string()},
                       {"oracle_checked", oracle_checked},
                       {"oracle_agrees", oracle_checked ? ordered_json(oracle_agrees) : ordered_json()}};
        if (vanishing_checked) j["vanishes_on_curve"] = vanishes;
        emit_json(j);
        return 0;
    }
    reject_format("charvar", o);
}

// ---------------------------------------------------------------------------
// tables
// ---------------------------------------------------------------------------

std::vector<HolonomyTableRow> build_family(int sign, int max_m) {
    std::vector<HolonomyTableRow> rows;
    rows.reserve(static_cast<std::size_t>(max_m));
    for (int i = 1; i <= max_m; ++i) {
        std::cerr << "tables: computing " << (sign > 0 ? "J(2,+2m)" : "J(2,-2m)")
                  << " row m = " << i << "\n";
        rows.push_back(holonomy_table_row(sign, i));
        self_check_row(rows.back());
    }
    return rows;
}

int run_tables(const Opt& o, int max_m) {
    std::vector<HolonomyTableRow> pos = build_family(+1, max_m);
    std::vector<HolonomyTableRow> neg = build_family(-1, max_m);
    int compared = 0;
    if (o.verify) {
        compared += verify_table(+1, pos);
        compared += verify_table(-1, neg);
        std::cerr << "tables: verified " << compared << " rows against bundled references\n";
    }
    if (o.fmt == Fmt::text) {
        std::cout << "family J(2,+2m)  (torsion divided by -tau_0)\n";
        for (const HolonomyTableRow& r : pos)
            std::cout << "  m = " << r.index << "\n"
                      << "    u: " << r.u_form << "\n"
                      << "    c: " << r.c_form << "\n";
        std::cout << "family J(2,-2m)  (torsion divided by tau_0)\n";
        for (const HolonomyTableRow& r : neg)
            std::cout << "  m = " << r.index << "\n"
                      << "    u: " << r.u_form << "\n"
                      << "    c: " << r.c_form << "\n";
        if (o.verify) std::cout << "verified_rows: " << compared << "\n";
        return 0;
    }
    if (o.fmt == Fmt::js) {
        auto family_json = [](const std::vector<HolonomyTableRow>& rows, const char* sign_factor) {
            ordered_json arr = ordered_json::array();
            for (const HolonomyTableRow& r : rows)
                arr.push_back(ordered_json{{"m", std::to_string(r.index)},
                                           {"sign_factor", sign_factor},
                                           {"u_form", r.u_form},
                                           {"c_form", r.c_form}});
            return arr;
        };
        ordered_json j{{"max_m", std::to_string(max_m)},
                       {"positive", family_json(pos, "-tau_0")},
                       {"negative", family_json(neg, "tau_0")}};
        if (o.verify) j["verified_rows"] = std::to_string(compared);
        emit_json(j);
        return 0;
    }
    if (o.fmt == Fmt::csv) {
        std::cout << "family,m,sign_factor,u_form,c_form\n";
        for (const HolonomyTableRow& r : pos)
            std::cout << "positive," << r.index << ",-tau_0," << csv_field(r.u_form) << ","
                      << csv_field(r.c_form) << "\n";
        for (const HolonomyTableRow& r : neg)
            std::cout << "negative," << r.index << ",tau_0," << csv_field(r.u_form) << ","
                      << csv_field(r.c_form) << "\n";
        return 0;
    }
    // LaTeX: two deterministic tabulars, rows in increasing m, u-polynomials
    // printed with descending powers.
    auto latex_family = [](const std::vector<HolonomyTableRow>& rows, const char* header,
                           const char* sign_factor) {
        std::ostringstream out;
        out << "\\begin{table}[ht]\n\\centering\n"
            << "\\begin{tabular}{c l l}\n\\hline\n"
            << "$m$ & torsion of " << header << " (divided by $" << sign_factor
            << "$) & cusp-field form \\\\\n\\hline\n";
        for (const HolonomyTableRow& r : rows) {
            out << "$" << r.index << "$ & $" << to_latex_univariate(r.u_poly, Var::u, "u")
                << "$ & $" << latex_c_form(r) << "$ \\\\\n";
        }
        out << "\\hline\n\\end{tabular}\n\\end{table}\n";
        return out.str();
    };
    std::cout << latex_family(pos, "$J(2,2m)$", "-\\tau_0")
              << latex_family(neg, "$J(2,-2m)$", "\\tau_0");
    return 0;
}

// ---------------------------------------------------------------------------
// examples
// ---------------------------------------------------------------------------

struct ComputedExample {
    int m = 0;
    std::string riley, value, bracket;
};

std::vector<ComputedExample> compute_examples() {
    std::vector<ComputedExample> out;
    for (const published::WorkedExample& e : published::worked_examples()) {
        ComputedExample c;
        c.m = e.m;
        c.riley = to_sigma_string(riley_polynomial(e.m));
        TorsionValue tv = torsion_value(e.m);
        c.value = to_sigma_string(tv.value);
        c.bracket = to_sigma_string(tv.bracket);
        out.push_back(c);
    }
    return out;
}

std::string compute_figure_eight_longitude_trace() {
    MPoly lam = trace_polynomial(longitude_word(-1));
    MPoly on_curve = char_var_on_curve(lam);
    MPoly reduced = on_curve.reduce_mod(riley_polynomial_sigma(-1), Var::u);
    MPoly genuine = reduced.subs_poly(Var::s, sigma_poly());
    return to_sigma_string(genuine);
}

void verify_examples(const std::vector<ComputedExample>& got) {
    auto refs = published::worked_examples();
    for (std::size_t i = 0; i < refs.size(); ++i) {
        const published::WorkedExample& want = refs[i];
        const ComputedExample& have = got[i];
        if (!golden_equal(have.riley, want.riley))
            throw GoldenMismatch("curve polynomial mismatch, m = " + std::to_string(want.m) + ": " +
                                 first_difference(have.riley, want.riley));
        if (!golden_equal(have.value, want.torsion_value))
            throw GoldenMismatch("torsion value mismatch, m = " + std::to_string(want.m) + ": " +
                                 first_difference(have.value, want.torsion_value));
        if (!golden_equal(have.bracket, want.torsion_bracket))
            throw GoldenMismatch("torsion bracket mismatch, m = " + std::to_string(want.m) + ": " +
                                 first_difference(have.bracket, want.torsion_bracket));
    }
    std::string lt = compute_figure_eight_longitude_trace();
    if (!golden_equal(lt, published::figure_eight_longitude_trace()))
        throw GoldenMismatch("longitude trace mismatch: " +
                             first_difference(lt, published::figure_eight_longitude_trace()));
}

int run_examples(const Opt& o) {
    std::vector<ComputedExample> got = compute_examples();
    if (o.verify) {
        verify_examples(got);
        std::cerr << "examples: all worked examples match bundled references\n";
    }
    if (o.fmt == Fmt::text) {
        for (const ComputedExample& e : got) {
            std::cout << "J(2," << 2 * e.m << ")  (m = " << e.m << ")\n"
                      << "  riley: " << e.riley << "\n"
                      << "  torsion_value: " << e.value << "\n"
                      << "  torsion_bracket: " << e.bracket << "\n";
        }
        std::cout << "figure_eight_longitude_trace: " << compute_figure_eight_longitude_trace()
                  << "\n";
        if (o.verify) std::cout << "verified: yes\n";
        return 0;
    }
    if (o.fmt == Fmt::js) {
        ordered_json arr = ordered_json::array();
        for (const ComputedExample& e : got)
            arr.push_back(ordered_json{{"m", std::to_string(e.m)},
                                       {"knot", "J(2," + std::to_string(2 * e.m) + ")"},
                                       {"riley", e.riley},
                                       {"torsion_value", e.value},
                                       {"torsion_bracket", e.bracket}});
        ordered_json j{{"examples", arr},
                       {"figure_eight_longitude_trace", compute_figure_eight_longitude_trace()}};
        if (o.verify) j["verified"] = true;
        emit_json(j);
        return 0;
    }
    if (o.fmt == Fmt::csv) {
        std::cout << "m,knot,riley,torsion_value,torsion_bracket\n";
        for (const ComputedExample& e : got)
            std::cout << e.m << ",J(2," << 2 * e.m << ")," << csv_field(e.riley) << ","
                      << csv_field(e.value) << "," << csv_field(e.bracket) << "\n";
        return 0;
    }
    reject_format("examples", o);
}

// ---------------------------------------------------------------------------
// asymptotics
// ---------------------------------------------------------------------------

int run_asymptotics(const Opt& o, const std::string& sign_name, int from, int to) {
    if (from > to) throw UsageError("--from must not exceed --to");
    int sign = sign_name == "+" ? 1 : -1;
    std::cerr << "asymptotics: fitting |torsion| growth for m = " << from << ".." << to
              << " (sign " << sign_name << ")\n";
    GrowthFit fit = torsion_growth_fit(sign, from, to, o.seed);
    if (o.fmt == Fmt::text) {
        std::cout << "sign: " << sign_name << "\n"
                  << "range: m = " << from << ".." << to << "\n"
                  << "points: " << fit.points.size() << "\n"
                  << "slope: " << dstr(fit.slope) << "\n"
                  << "intercept: " << dstr(fit.intercept) << "\n"
                  << "m crossings |torsion|\n";
        for (const GrowthPoint& p : fit.points)
            std::cout << p.m << " " << p.crossings << " " << p.torsion_abs.to_string(12) << "\n";
        return 0;
    }
    if (o.fmt == Fmt::js) {
        ordered_json arr = ordered_json::array();
        for (const GrowthPoint& p : fit.points)
            arr.push_back(ordered_json{{"m", std::to_string(p.m)},
                                       {"crossings", std::to_string(p.crossings)},
                                       {"u_geometric", complex_json(p.u_geometric)},
                                       {"torsion_abs", p.torsion_abs.to_string()}});
        emit_json(ordered_json{{"sign", sign_name},
                               {"from", std::to_string(from)},
                               {"to", std::to_string(to)},
                               {"points", arr},
                               {"slope", dstr(fit.slope)},
                               {"intercept", dstr(fit.intercept)}});
        return 0;
    }
    if (o.fmt == Fmt::csv) {
        std::cout << "m,crossings,torsion_abs\n";
        for (const GrowthPoint& p : fit.points)
            std::cout << p.m << "," << p.crossings << "," << p.torsion_abs.to_string() << "\n";
        return 0;
    }
    reject_format("asymptotics", o);
}

// ---------------------------------------------------------------------------
// crosscheck
// ---------------------------------------------------------------------------

int run_crosscheck(const Opt& o, const std::string& spec, int points) {
    TwistKnot k = parse_knot_spec(spec);
    std::cerr << "crosscheck: sampling " << points << " curve points for " << k.canonical_name()
              << "\n";
    CrosscheckResult r = crosscheck_core(k.m, points, o.seed);
    Real tol = crosscheck_tolerance();
    bool pass = r.used >= points && r.max_rel_err < tol;
    if (o.fmt == Fmt::text) {
        std::cout << "knot: " << knot_text(k) << "\n"
                  << "points: " << r.used << "\n"
                  << "skipped: " << r.skipped << "\n"
                  << "max_rel_err: " << r.max_rel_err.to_string(6) << "\n"
                  << "tolerance: 1e-9\n"
                  << "pass: " << (pass ? "yes" : "no") << "\n";
    } else if (o.fmt == Fmt::js) {
        emit_json(ordered_json{{"knot", knot_json(k)},
                               {"points", std::to_string(r.used)},
                               {"skipped", std::to_string(r.skipped)},
                               {"max_rel_err", r.max_rel_err.to_string()},
                               {"tolerance", "1e-9"},
                               {"pass", pass}});
    } else if (o.fmt == Fmt::csv) {
        std::cout << "points,skipped,max_rel_err,pass\n"
                  << r.used << "," << r.skipped << "," << r.max_rel_err.to_string() << ","
                  << (pass ? "1" : "0") << "\n";
    } else {
        reject_format("crosscheck", o);
    }
    return pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// selfcheck
// ---------------------------------------------------------------------------

struct CheckOutcome {
    std::string name;
    bool pass = false;
    double seconds = 0;
    std::string detail;
};

int run_selfcheck(const Opt& o) {
    if (o.fmt != Fmt::text && o.fmt != Fmt::js) reject_format("selfcheck", o);
    using Clock = std::chrono::steady_clock;
    std::vector<CheckOutcome> outcomes;

    auto run_check = [&](const std::string& name, const std::function<std::string()>& body) {
        CheckOutcome out;
        out.name = name;
        auto t0 = Clock::now();
        try {
            out.detail = body();
            out.pass = true;
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail = e.what();
        }
        out.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        if (o.fmt == Fmt::text) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.3f", out.seconds);
            std::cout << (out.pass ? "[PASS] " : "[FAIL] ") << name << "  (" << buf << " s)";
            if (!out.pass) std::cout << "  " << out.detail;
            std::cout << "\n" << std::flush;
        }
        outcomes.push_back(out);
    };

    run_check("curve polynomial: matrix route matches recurrence, |m| <= 12", [] {
        for (int m = -12; m <= 12; ++m) {
            if (m == 0) continue;
            if (!(riley_polynomial_matrix(m) == riley_polynomial_closed(m)))
                throw GoldenMismatch("routes disagree at m = " + std::to_string(m));
        }
        return std::string();
    });

    run_check("curve polynomial: family recursion, |m| <= 20", [] {
        MPoly tau = tau_poly();
        auto member = [](int m) { return m == 0 ? MPoly::one() : riley_polynomial(m); };
        for (int m = -19; m <= 19; ++m) {
            MPoly lhs = member(m + 1);
            MPoly rhs = tau * member(m) - member(m - 1);
            if (!(lhs == rhs)) throw GoldenMismatch("recursion fails at m = " + std::to_string(m));
        }
        return std::string();
    });

    run_check("torsion: determinant route matches trace route, |m| <= 6", [] {
        for (int m = -6; m <= 6; ++m) {
            if (m == 0) continue;
            TorsionValue a = torsion_value(m);
            TorsionValue b = torsion_value_trace_formula(m);
            if (!(a.value == b.value) || !(a.bracket == b.bracket))
                throw GoldenMismatch("routes disagree at m = " + std::to_string(m));
        }
        return std::string();
    });

    run_check("torsion: holonomy specialisation matches both routes, |m| <= 6", [] {
        for (int m = -6; m <= 6; ++m) {
            if (m == 0) continue;
            HolonomyTorsion det = torsion_at_holonomy_symbolic(m);
            HolonomyTorsion tr = holonomy_from_trace(twist_knot_from_m(m));
            if (!(det.table_value == tr.table_value))
                throw GoldenMismatch("specialisations disagree at m = " + std::to_string(m));
        }
        return std::string();
    });

    run_check("closed form matches symbolic value at sampled curve points", [&] {
        Real tol = crosscheck_tolerance();
        for (int m : {2, -2, 3, -3}) {
            CrosscheckResult r = crosscheck_core(m, 12, o.seed);
            if (r.used < 12)
                throw GoldenMismatch("only " + std::to_string(r.used) + " usable points at m = " +
                                     std::to_string(m));
            if (!(r.max_rel_err < tol))
                throw GoldenMismatch("max relative error " + r.max_rel_err.to_string(6) +
                                     " at m = " + std::to_string(m));
        }
        return std::string();
    });

    run_check("character variety: recursion matches direct construction, |m| <= 5", [] {
        for (int m = -5; m <= 5; ++m)
            if (!(char_var_polynomial(m) == char_var_direct_le(m)))
                throw GoldenMismatch("disagreement at m = " + std::to_string(m));
        return std::string();
    });

    run_check("character variety: vanishing on the defining curve, |m| <= 3", [] {
        for (int m : {1, 2, 3, -1, -2, -3})
            if (!char_var_vanishes_on_curve(m))
                throw GoldenMismatch("does not vanish at m = " + std::to_string(m));
        return std::string();
    });

    run_check("parabolic identities at holonomy roots, |m| <= 6", [&] {
        for (int m = -6; m <= 6; ++m) {
            if (m == 0 || m == 1) continue;
            for (const Complex& u : parabolic_roots(m, o.seed)) {
                ParabolicChecks pc = parabolic_identity_checks(m, u);
                Real tol = parabolic_identity_tolerance(u, m);
                const std::array<Real, 7> residuals = {
                    pc.omega_upper_left,  pc.shear_relation,      pc.normalisation,
                    pc.diagonal_relation, pc.longitude_trace,     pc.longitude_lower_left,
                    pc.cusp_round_trip};
                for (const Real& x : residuals)
                    if (!(x < tol))
                        throw GoldenMismatch("residual " + x.to_string(3) + " exceeds " +
                                             tol.to_string(3) + " at m = " + std::to_string(m));
            }
        }
        return std::string();
    });

    run_check("holonomy table rows match bundled references, m <= 4", [] {
        int compared = 0;
        for (int sign : {+1, -1}) {
            std::vector<HolonomyTableRow> rows = holonomy_table(sign, 4);
            for (const HolonomyTableRow& r : rows) self_check_row(r);
            compared += verify_table(sign, rows);
        }
        return "compared " + std::to_string(compared) + " rows";
    });

    run_check("worked examples match bundled references", [] {
        verify_examples(compute_examples());
        return std::string();
    });

    int failed = 0;
    for (const CheckOutcome& c : outcomes)
        if (!c.pass) ++failed;

    if (o.fmt == Fmt::text) {
        std::cout << "selfcheck: " << (outcomes.size() - static_cast<std::size_t>(failed)) << "/"
                  << outcomes.size() << " checks passed\n";
    } else {
        ordered_json arr = ordered_json::array();
        for (const CheckOutcome& c : outcomes) {
            ordered_json j{{"name", c.name}, {"pass", c.pass}, {"seconds", dstr(c.seconds)}};
            if (!c.detail.empty()) j["detail"] = c.detail;
            arr.push_back(j);
        }
        emit_json(ordered_json{{"checks", arr},
                               {"passed", std::to_string(outcomes.size() - static_cast<std::size_t>(failed))},
                               {"total", std::to_string(outcomes.size())},
                               {"pass", failed == 0}});
    }
    return failed == 0 ? 0 : 1;
}

}  // namespace

// ---------------------------------------------------------------------------
// main
// ---------------------------------------------------------------------------

int main(int argc, char** argv) {
    CLI::App app{"twistknot: exact adjoint torsion engine for the twist-knot family J(2,n)"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    long precision = 128;
    std::uint64_t seed = 7;
    bool verify = false;
    app.add_option("--format", format, "output format: text, json, csv, latex")
        ->check(CLI::IsMember({"text", "json", "csv", "latex"}))
        ->capture_default_str();
    app.add_option("--precision", precision, "working precision in bits (>= 53)")
        ->check(CLI::Range(53L, 65536L))
        ->capture_default_str();
    app.add_option("--seed", seed, "seed for root finding and curve-point sampling")
        ->capture_default_str();
    app.add_flag("--verify", verify, "check computed output against bundled reference data");

    const char* knot_help = "twist knot: J(2,n), m=<int>, or an alias such as 4_1";

    auto* c_riley = app.add_subcommand("riley", "defining curve polynomial of a twist knot");
    std::string riley_knot;
    c_riley->add_option("--knot", riley_knot, knot_help)->required();

    auto* c_torsion = app.add_subcommand("torsion", "adjoint torsion on the defining curve");
    std::string torsion_knot, torsion_path = "det";
    bool at_holonomy = false;
    c_torsion->add_option("--knot", torsion_knot, knot_help)->required();
    c_torsion->add_flag("--at-holonomy", at_holonomy, "specialise at the holonomy representation");
    c_torsion->add_option("--path", torsion_path, "evaluation route: det, trace, or both")
        ->check(CLI::IsMember({"det", "trace", "both"}))
        ->capture_default_str();

    auto* c_tpoly = app.add_subcommand("torsion-poly",
                                       "torsion polynomial as numerator and denominator");
    std::string tpoly_knot;
    c_tpoly->add_option("--knot", tpoly_knot, knot_help)->required();

    auto* c_holonomy = app.add_subcommand(
        "holonomy", "roots at the holonomy with identity report, cusp shapes, and torsion");
    std::string holonomy_knot;
    c_holonomy->add_option("--knot", holonomy_knot, knot_help)->required();

    auto* c_cusp = app.add_subcommand("cusp-shape", "cusp shapes at the non-real holonomy roots");
    std::string cusp_knot;
    c_cusp->add_option("--knot", cusp_knot, knot_help)->required();

    auto* c_charvar = app.add_subcommand("charvar",
                                         "character-variety polynomial from the trace recursion");
    int charvar_m = 0;
    bool charvar_oracle = false;
    c_charvar->add_option("--m", charvar_m, "family parameter m of J(2,2m)")->required();
    c_charvar->add_flag("--oracle", charvar_oracle,
                        "also compute the direct construction and compare");

    auto* c_tables = app.add_subcommand("tables", "holonomy torsion tables for both families");
    int tables_max_m = 10;
    c_tables->add_option("--max-m", tables_max_m, "last row of each family")
        ->check(CLI::Range(1, 40))
        ->capture_default_str();

    auto* c_examples = app.add_subcommand("examples", "worked low-index examples");

    auto* c_asym = app.add_subcommand("asymptotics",
                                      "growth of |torsion| against the crossing number");
    std::string asym_sign = "-";
    int asym_from = 5, asym_to = 50;
    c_asym->add_option("--sign", asym_sign, "family sign: + or -")
        ->check(CLI::IsMember({"+", "-"}))
        ->capture_default_str();
    c_asym->add_option("--from", asym_from, "first family index")
        ->check(CLI::Range(2, 2000))
        ->capture_default_str();
    c_asym->add_option("--to", asym_to, "last family index")
        ->check(CLI::Range(2, 2000))
        ->capture_default_str();

    auto* c_cross = app.add_subcommand(
        "crosscheck", "closed-form evaluation against the symbolic value at random curve points");
    std::string cross_knot;
    int cross_points = 50;
    c_cross->add_option("--knot", cross_knot, knot_help)->required();
    c_cross->add_option("--points", cross_points, "number of curve points to sample")
        ->check(CLI::Range(1, 100000))
        ->capture_default_str();

    auto* c_self = app.add_subcommand("selfcheck", "run the full invariant suite with timings");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    Real::default_prec() = static_cast<mpfr_prec_t>(precision);

    Opt o;
    o.fmt_name = format;
    o.precision = precision;
    o.seed = seed;
    o.verify = verify;

    try {
        o.fmt = parse_fmt(format);
        if (*c_riley) return run_riley(o, riley_knot);
        if (*c_torsion) {
            TwistKnot k = parse_knot_spec(torsion_knot);
            return at_holonomy ? run_torsion_holonomy(o, k, torsion_path)
                               : run_torsion_generic(o, k, torsion_path);
        }
        if (*c_tpoly) return run_torsion_poly(o, tpoly_knot);
        if (*c_holonomy) return run_holonomy(o, holonomy_knot);
        if (*c_cusp) return run_cusp_shape(o, cusp_knot);
        if (*c_charvar) return run_charvar(o, charvar_m, charvar_oracle);
        if (*c_tables) return run_tables(o, tables_max_m);
        if (*c_examples) return run_examples(o);
        if (*c_asym) return run_asymptotics(o, asym_sign, asym_from, asym_to);
        if (*c_cross) return run_crosscheck(o, cross_knot, cross_points);
        if (*c_self) return run_selfcheck(o);
        std::cerr << "error: no subcommand selected\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const twistknot::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const GoldenMismatch& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
