// adoforge command-line front end.
//
// Subcommands: fk, alexander, ado, refined, rmatrix, verify.  Every JSON
// document carries the schema tag "adoforge/1" and lists polynomial terms in
// ascending key order, so identical invocations emit identical bytes.
// Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 runtime
// failure (invalid input domain, missing or corrupt fixture).

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "adoforge/ado.hpp"
#include "adoforge/alexander.hpp"
#include "adoforge/json_io.hpp"
#include "adoforge/refined.hpp"
#include "adoforge/rmatrix.hpp"
#include "adoforge/torus_fk.hpp"
#include "adoforge/verify.hpp"

namespace {

using namespace adoforge;

void emit(const Json& doc, const std::string& format, const std::string& text) {
    if (format == "json") {
        std::cout << dump_json(doc);
    } else {
        std::cout << text << "\n";
    }
}

std::string xt_rational_str(const XTRational& d) {
    if (d.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = d.rbegin(); it != d.rend(); ++it) {
        if (!first) os << " + ";
        os << "(" << it->second << ")*x^" << it->first[0] << "*t^" << it->first[1];
        first = false;
    }
    return os.str();
}

int run_fk(std::int64_t s, std::int64_t t, std::int64_t mmax, std::int64_t at_root,
           const std::string& format) {
    const TorusKnot K(s, t);
    if (mmax < 0) mmax = default_m_max(K, at_root > 0 ? at_root : 3);
    if (at_root > 0) {
        const FkAtRoot f = fk_at_root(K, at_root, mmax);
        Json terms = Json::array();
        std::ostringstream text;
        text << "F_K[" << K.name() << "] at q = zeta_" << at_root << ", m <= " << mmax
             << " (odd under x -> 1/x):";
        for (const auto& [m, c] : f.coeffs) {
            terms.push_back(Json{{"e", Json::array({m})}, {"c", json_cyclotomic(c)}});
            text << "\n  (" << c.str() << ") * (x^{" << m << "/2} - x^{-" << m << "/2})";
        }
        const Json doc{{"schema", kSchema},
                       {"name", "F_K[" + K.name() + "] at q=zeta_" + std::to_string(at_root)},
                       {"p", f.p},
                       {"odd_mirror", f.odd_mirror},
                       {"truncation_m", f.truncation_m},
                       {"vars", Json::array({"x"})},
                       {"half_exponents", true},
                       {"terms", std::move(terms)}};
        emit(doc, format, text.str());
        return 0;
    }
    const QSeries f = fk_series(K, mmax);
    Json terms = Json::array();
    std::ostringstream text;
    text << "F_K[" << K.name() << "] = (1/2) q^" << f.prefactor_exponent << " * sum over odd m <= "
         << f.truncation_m << ":";
    for (const FkTerm& term : f.terms) {
        terms.push_back(
            Json{{"m", term.m}, {"sign", term.sign}, {"q_exponent", term.q_exponent}});
        text << "\n  " << (term.sign > 0 ? "+" : "-") << " q^" << term.q_exponent << " (x^{"
             << term.m << "/2} - x^{-" << term.m << "/2})";
    }
    const Json doc{{"schema", kSchema},
                   {"name", "F_K[" + K.name() + "]"},
                   {"prefactor_q_exponent", json_rational(f.prefactor_exponent)},
                   {"truncation_m", f.truncation_m},
                   {"vars", Json::array({"x", "q"})},
                   {"half_exponents", true},
                   {"terms", std::move(terms)}};
    emit(doc, format, text.str());
    return 0;
}

int run_alexander(std::int64_t s, std::int64_t t, std::int64_t compose,
                  const std::string& format) {
    const TorusKnot K(s, t);
    HalfLaurent d = alexander(K);
    std::string name = "Delta[" + K.name() + "]";
    if (compose != 1) {
        d = d.compose_power(compose);
        name += "(x^" + std::to_string(compose) + ")";
    }
    emit(json_half_laurent(name, d), format, name + " = " + d.str());
    return 0;
}

int run_ado(std::int64_t p, std::int64_t s, const std::string& method, std::int64_t mmax,
            const std::string& format) {
    const TorusKnot K(2, 2 * s + 1);
    const std::string name = "ADO_" + std::to_string(p) + "[" + K.name() + "]";
    auto closed = [&] {
        if (p == 3) return ado3_closed(s);
        return s <= 6 ? ado4_seed(2 * s + 1) : ado4_algorithm(s);
    };
    auto from_fk = [&] { return ado_from_fk(p, K, mmax); };
    if (method == "closed" || method == "algorithm") {
        const HalfLaurent a = closed();
        emit(json_half_laurent(name, a), format, name + " = " + a.str());
        return 0;
    }
    if (method == "from-fk") {
        const HalfLaurent a = from_fk();
        emit(json_half_laurent(name, a), format, name + " = " + a.str());
        return 0;
    }
    // method == "all": three independent computations plus their comparison.
    const HalfLaurent a_closed = closed();
    const HalfLaurent a_fk = from_fk();
    const AdoCompareResult rm = ado_compare(s, p, AdoReference::closed);
    const NormalizationMatch cmp_fk = compare_up_to_normalization(a_closed, a_fk, p);
    const bool fk_ok = cmp_fk.kind != NormalizationMatch::Kind::different;
    const bool all_ok = fk_ok && rm.matched;
    Json doc{{"schema", kSchema},
             {"name", name},
             {"closed", json_half_laurent(name + " closed", a_closed)},
             {"from_fk", json_half_laurent(name + " from F_K", a_fk)},
             {"rmatrix_num", json_half_laurent(name + " tangle num", rm.computed)},
             {"comparisons",
              Json{{"closed_vs_from_fk",
                    cmp_fk.kind == NormalizationMatch::Kind::equal ? "equal"
                    : fk_ok ? "equal_after"
                            : "mismatch"},
                   {"closed_vs_rmatrix", rm.matched ? "equal_after" : "mismatch"}}},
             {"success", all_ok}};
    std::ostringstream text;
    text << name << "\n  closed:    " << a_closed.str() << "\n  from F_K:  " << a_fk.str()
         << "\n  tangle:    " << rm.computed.str() << "\n  closed vs from-F_K: "
         << (cmp_fk.kind == NormalizationMatch::Kind::equal ? "equal"
             : fk_ok                                        ? "equal up to normalization"
                                                            : "MISMATCH")
         << "\n  closed vs tangle:   "
         << (rm.matched ? "equal up to monomial and constant" : "MISMATCH");
    emit(doc, format, text.str());
    return all_ok ? 0 : 1;
}

int run_refined(std::int64_t s, const std::string& what, std::int64_t r, std::int64_t k1max,
                const std::string& format) {
    const std::string knot = "T(2," + std::to_string(2 * s + 1) + ")";
    if (what == "alexander") {
        const XTRational d = refined_alexander(s);
        const Json doc = json_xt_terms("refined Alexander[" + knot + "]", d,
                                       [](const Rational& c) { return json_rational(c); }, false);
        emit(doc, format, "refined Alexander[" + knot + "] = " + xt_rational_str(d));
        return 0;
    }
    if (what == "ado3") {
        const XTCyclotomic d = refined_ado3(s, k1max);
        const Json doc = json_xt_terms("refined ADO_3[" + knot + "]", d,
                                       [](const Cyclotomic& c) { return json_cyclotomic(c); },
                                       false);
        emit(doc, format, "refined ADO_3[" + knot + "] = " + xt_str(d));
        return 0;
    }
    // superpolynomial: a polynomial in q, a, t
    const MPoly sp = superpoly(s, r);
    Json terms = Json::array();
    for (const auto& [e, c] : sp.terms()) {
        if (e[0] != 0) throw std::logic_error("superpoly: unexpected x-dependence");
        terms.push_back(
            Json{{"e", Json::array({e[1], e[2], e[3]})}, {"c", json_rational(c)}});
    }
    const Json doc{{"schema", kSchema},
                   {"name", "superpolynomial[" + knot + "] r=" + std::to_string(r)},
                   {"vars", Json::array({"q", "a", "t"})},
                   {"half_exponents", false},
                   {"terms", std::move(terms)}};
    emit(doc, format, "superpolynomial[" + knot + "] r=" + std::to_string(r) + " = " + sp.str());
    return 0;
}

int run_rmatrix(std::int64_t s, std::int64_t r, const std::string& compare,
                const std::string& format) {
    const std::string knot = "T(2," + std::to_string(2 * s + 1) + ")";
    const NhatResult nh = normalized_nhat(r, s);
    const HalfLaurent num = num_from_nhat(nh.poly, r);
    const std::string nhat_name = "Nhat^" + std::to_string(r) + "[" + knot + "]";
    const std::string num_name = "num^" + std::to_string(r) + "[" + knot + "]";
    Json doc{{"schema", kSchema},
             {"name", nhat_name},
             {"z_degree_stripped", nh.z_degree},
             {"nhat", json_half_laurent(nhat_name, nh.poly)},
             {"num", json_half_laurent(num_name, num)}};
    std::ostringstream text;
    text << nhat_name << " = " << nh.poly.str() << "\n" << num_name << " = " << num.str()
         << "\n(z-degree stripped: " << nh.z_degree << ")";
    int status = 0;
    if (!compare.empty()) {
        const AdoCompareResult res = ado_compare(
            s, r, compare == "closed" ? AdoReference::closed : AdoReference::from_fk);
        doc["compare"] = Json{{"reference", compare},
                              {"matched", res.matched},
                              {"reference_poly", json_half_laurent("reference", res.reference)}};
        text << "\ncompare vs " << compare << ": "
             << (res.matched ? "equal up to monomial and constant" : "MISMATCH");
        if (!res.matched) status = 1;
    }
    emit(doc, format, text.str());
    return status;
}

int run_verify(const std::string& suite, unsigned jobs, const std::string& fixtures,
               const std::string& format) {
    const auto cases = verify::build_suite(suite, fixtures);
    const verify::VerificationReport report = verify::run_cases(cases, jobs);
    if (format == "json") {
        std::cout << dump_json(report.to_json());
    } else {
        std::cout << report.to_text();
    }
    return report.success() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact ADO / F_K / refined invariants of torus knots"};
    app.require_subcommand(1);

    std::string format = "text";
    std::int64_t s = 2, t = 3, p = 3, r = 3, mmax = -1, compose = 1, k1max = -1;
    std::string method = "all", what = "alexander", compare, suite = "all", fixtures;
    unsigned jobs = 0;

    auto add_format = [&format](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "text"}))
            ->capture_default_str();
    };

    CLI::App* fk = app.add_subcommand("fk", "two-variable series F_K of a torus knot");
    fk->add_option("--s", s, "torus parameter s")->required();
    fk->add_option("--t", t, "torus parameter t")->required();
    fk->add_option("--mmax", mmax, "truncation in m (default: module default for the root)");
    std::int64_t at_root = 0;
    fk->add_option("--at-root", at_root, "specialize q to zeta_p for this p");
    add_format(fk);

    CLI::App* alex = app.add_subcommand("alexander", "Alexander polynomial of T(s,t)");
    alex->add_option("--s", s, "torus parameter s")->required();
    alex->add_option("--t", t, "torus parameter t")->required();
    alex->add_option("--compose", compose, "substitute x -> x^p")->capture_default_str();
    add_format(alex);

    CLI::App* ado = app.add_subcommand("ado", "ADO_p polynomial of T(2,2s+1)");
    ado->add_option("--p", p, "root order p")->check(CLI::IsMember({3, 4}))->required();
    ado->add_option("--s", s, "knot parameter s in T(2,2s+1)")->required()
        ->check(CLI::PositiveNumber);
    ado->add_option("--method", method, "computation method")
        ->check(CLI::IsMember({"closed", "algorithm", "from-fk", "all"}))
        ->capture_default_str();
    ado->add_option("--mmax", mmax, "F_K truncation for from-fk (default: module default)");
    add_format(ado);

    CLI::App* refined = app.add_subcommand("refined", "t-deformed invariants of T(2,2s+1)");
    refined->add_option("--s", s, "knot parameter s in T(2,2s+1)")->required()
        ->check(CLI::PositiveNumber);
    refined->add_option("--what", what, "which invariant")
        ->check(CLI::IsMember({"alexander", "ado3", "superpoly"}))
        ->capture_default_str();
    refined->add_option("--r", r, "color for superpoly (x = q^r)")->check(CLI::PositiveNumber);
    refined->add_option("--k1max", k1max, "chain truncation for ado3 (default: module default)");
    add_format(refined);

    CLI::App* rmat = app.add_subcommand("rmatrix", "tangle evaluation Nhat^r of T(2,2s+1)");
    rmat->add_option("--s", s, "knot parameter s in T(2,2s+1)")->required()
        ->check(CLI::PositiveNumber);
    rmat->add_option("--r", r, "root order r (q = zeta_{2r})")->required()
        ->check(CLI::Range(std::int64_t{2}, std::int64_t{16}));
    rmat->add_option("--compare", compare, "compare num against a reference")
        ->check(CLI::IsMember({"closed", "from-fk"}));
    add_format(rmat);

    CLI::App* ver = app.add_subcommand("verify", "cross-verification suites");
    ver->add_option("--suite", suite, "suite name or 'all'")
        ->check(CLI::IsMember({"all", "ado3", "ado4", "appendix-a", "appendix-b", "refined",
                               "properties", "robustness"}))
        ->capture_default_str();
    ver->add_option("--jobs", jobs, "worker threads (0 = hardware)")->capture_default_str();
    ver->add_option("--fixtures", fixtures,
                    "fixture directory (overrides ADOFORGE_FIXTURES and ./fixtures)");
    add_format(ver);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (fk->parsed()) return run_fk(s, t, mmax, at_root, format);
        if (alex->parsed()) return run_alexander(s, t, compose, format);
        if (ado->parsed()) return run_ado(p, s, method, mmax, format);
        if (refined->parsed()) return run_refined(s, what, r, k1max, format);
        if (rmat->parsed()) return run_rmatrix(s, r, compare, format);
        if (ver->parsed()) return run_verify(suite, jobs, fixtures, format);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 3;
    }
    return 2;
}
