// Cross-verification driver: every named case compares two independent
// computations (or a computation against a recorded fixture) and reports
// equal / equal_after(normalization) / mismatch(witness) / inconclusive(reason).
//
// Cases run on a bounded worker pool; the report is assembled in case-key
// order, so the output is independent of scheduling.  A thrown exception
// inside a case is a mismatch with the exception text as witness: every
// invariant the library asserts internally is part of the contract.
#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "ado.hpp"
#include "alexander.hpp"
#include "json_io.hpp"
#include "refined.hpp"
#include "rmatrix.hpp"
#include "torus_fk.hpp"

namespace adoforge::verify {

enum class Outcome { equal, equal_after, mismatch, inconclusive };

inline const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::equal: return "equal";
        case Outcome::equal_after: return "equal_after";
        case Outcome::mismatch: return "mismatch";
        case Outcome::inconclusive: return "inconclusive";
    }
    return "?";
}

struct Case {
    std::string key;  // doubles as the sort key
    std::string method_a;
    std::string method_b;
    std::function<std::pair<Outcome, std::string>()> run;
};

struct CaseResult {
    std::string key;
    std::string method_a;
    std::string method_b;
    Outcome outcome = Outcome::mismatch;
    std::string detail;
    double seconds = 0.0;
};

struct VerificationReport {
    std::vector<CaseResult> cases;  // sorted by key

    std::map<std::string, std::size_t> counts() const {
        std::map<std::string, std::size_t> c;
        for (const auto& r : cases) ++c[outcome_name(r.outcome)];
        return c;
    }
    bool success() const {
        return std::none_of(cases.begin(), cases.end(),
                            [](const CaseResult& r) { return r.outcome == Outcome::mismatch; });
    }
    double total_seconds() const {
        double t = 0;
        for (const auto& r : cases) t += r.seconds;
        return t;
    }

    Json to_json() const {
        Json jcases = Json::array();
        for (const auto& r : cases)
            jcases.push_back(Json{{"case", r.key},
                                  {"method_a", r.method_a},
                                  {"method_b", r.method_b},
                                  {"outcome", outcome_name(r.outcome)},
                                  {"detail", r.detail},
                                  {"seconds", r.seconds}});
        Json jcounts = Json::object();
        for (const auto& [k, v] : counts()) jcounts[k] = v;
        return Json{{"schema", kSchema},
                    {"report", "verify"},
                    {"cases", std::move(jcases)},
                    {"counts", std::move(jcounts)},
                    {"success", success()}};
    }

    std::string to_text() const {
        std::ostringstream os;
        for (const auto& r : cases) {
            os << (r.outcome == Outcome::mismatch ? "FAIL " : "ok   ") << r.key << "  ["
               << outcome_name(r.outcome) << "]  " << r.method_a << " vs " << r.method_b;
            if (!r.detail.empty()) os << "  (" << r.detail << ")";
            char buf[32];
            std::snprintf(buf, sizeof buf, "  %.3fs", r.seconds);
            os << buf << "\n";
        }
        os << "cases: " << cases.size();
        for (const auto& [k, v] : counts()) os << ", " << k << ": " << v;
        os << (success() ? "  => success" : "  => FAILURE") << "\n";
        return os.str();
    }
};

inline VerificationReport run_cases(std::vector<Case> cases, unsigned jobs = 0) {
    std::sort(cases.begin(), cases.end(),
              [](const Case& a, const Case& b) { return a.key < b.key; });
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, cases.size() ? cases.size() : 1u);

    std::vector<CaseResult> results(cases.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i; (i = next.fetch_add(1)) < cases.size();) {
            const Case& c = cases[i];
            CaseResult r;
            r.key = c.key;
            r.method_a = c.method_a;
            r.method_b = c.method_b;
            const auto t0 = std::chrono::steady_clock::now();
            try {
                std::tie(r.outcome, r.detail) = c.run();
            } catch (const std::exception& ex) {
                r.outcome = Outcome::mismatch;
                r.detail = std::string("exception: ") + ex.what();
            }
            r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            results[i] = std::move(r);
        }
    };
    std::vector<std::thread> threads;
    for (unsigned t = 1; t < jobs; ++t) threads.emplace_back(worker);
    worker();
    for (auto& t : threads) t.join();
    return {std::move(results)};
}

// --- shared helpers ---------------------------------------------------------------

using Result = std::pair<Outcome, std::string>;

inline Result from_normalization(const NormalizationMatch& m, const std::string& note = "") {
    switch (m.kind) {
        case NormalizationMatch::Kind::equal:
            return {Outcome::equal, note};
        case NormalizationMatch::Kind::equal_after: {
            std::string d = "x -> zeta^" + std::to_string(m.k) + " rescale";
            if (!note.empty()) d += "; " + note;
            return {Outcome::equal_after, d};
        }
        case NormalizationMatch::Kind::different:
            return {Outcome::mismatch, m.witness};
    }
    return {Outcome::mismatch, "unreachable"};
}

inline Result exact_or_witness(const HalfLaurent& got, const HalfLaurent& want,
                               const std::string& note = "") {
    if (got == want) return {Outcome::equal, note};
    return {Outcome::mismatch, "got " + got.str() + " ; want " + want.str()};
}

// --- recorded display literals (criterion 5) ---------------------------------------

// Refined Alexander polynomials of T(2,5), T(2,7), T(2,9), keys (e_x, e_t).
inline XTRational refined_alexander_display(std::int64_t s) {
    const Rational one = 1;
    switch (s) {
        case 2:
            return {{{2, 2}, one},  {{-2, -2}, one}, {{-1, -2}, -one},
                    {{1, 0}, -one}, {{0, 0}, one}};
        case 3:
            return {{{3, 3}, -one}, {{-3, -3}, -one}, {{-2, -3}, one}, {{2, 1}, one},
                    {{1, 1}, -one}, {{-1, -1}, -one}, {{0, -1}, one}};
        case 4:
            return {{{4, 4}, one},   {{-4, -4}, one}, {{-3, -4}, -one},
                    {{3, 2}, -one},  {{2, 2}, one},   {{-2, -2}, one},
                    {{-1, -2}, -one}, {{1, 0}, -one}, {{0, 0}, one}};
        default:
            throw std::invalid_argument("no recorded display for this s");
    }
}

// Refined ADO_3 polynomials of the same knots.  The published grouping lists
// the coefficient of (tx)^k / t^j, i.e. our key (e_x, e_t) = (k, k - j).
inline XTCyclotomic refined_ado3_display(std::int64_t s) {
    const Cyclotomic z = Cyclotomic::zeta(3, 1);
    const Cyclotomic zi = z.pow(2);
    const Cyclotomic one = Cyclotomic::one(3);
    XTCyclotomic d;
    auto tx = [&d](std::int64_t k, std::int64_t j, const Cyclotomic& c) {
        d.emplace(XTKey{k, k - j}, c);
    };
    switch (s) {
        case 2:
            tx(4, 0, one); tx(3, 1, zi); tx(2, 2, z); tx(2, 0, zi.neg());
            tx(1, 1, z.neg()); tx(0, 2, one.neg()); tx(-1, 1, zi.neg());
            tx(-2, 2, one); tx(-2, 0, z.neg()); tx(-3, 1, zi); tx(-4, 0, z);
            break;
        case 3:
            tx(6, 0, one); tx(5, 1, zi); tx(4, 2, z); tx(4, 0, zi.neg());
            tx(3, 1, z.neg()); tx(2, 2, one.neg()); tx(0, 0, one);
            tx(-2, 2, zi.neg()); tx(-3, 1, z.neg()); tx(-4, 2, zi); tx(-4, 0, one.neg());
            tx(-5, 1, z); tx(-6, 0, one);
            break;
        case 4:
            tx(8, 0, one); tx(7, 1, zi); tx(6, 2, z); tx(6, 0, zi.neg());
            tx(5, 1, z.neg()); tx(4, 2, one.neg()); tx(2, 0, one);
            tx(1, 1, zi); tx(0, 2, z); tx(0, 0, zi.neg()); tx(-1, 1, one);
            tx(-2, 0, zi); tx(-4, 2, z.neg()); tx(-5, 1, one.neg());
            tx(-6, 2, z); tx(-6, 0, zi.neg()); tx(-7, 1, one); tx(-8, 0, zi);
            break;
        default:
            throw std::invalid_argument("no recorded display for this s");
    }
    return d;
}

namespace detail {

inline std::string xt_witness(const XTCyclotomic& got, const XTCyclotomic& want) {
    std::ostringstream os;
    os << "got " << xt_str(got) << " ; want " << xt_str(want);
    return os.str();
}

template <typename M>
bool xt_equal(const M& a, const M& b) {
    if (a.size() != b.size()) return false;
    auto ia = a.begin();
    for (auto ib = b.begin(); ib != b.end(); ++ia, ++ib) {
        if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    }
    return true;
}

}  // namespace detail

// --- suites (one per acceptance criterion) ------------------------------------------

// Criterion 1: ADO_3 of T(2,3)...T(2,17) by closed form, by F_K specialization,
// and by tangle contraction.
inline void suite_ado3(std::vector<Case>& cases) {
    for (std::int64_t s = 1; s <= 8; ++s) {
        const TorusKnot K(2, 2 * s + 1);
        const std::string tag = "ado3/" + K.name();
        cases.push_back({tag + "/closed-vs-fromfk", "ado3_closed", "ado_from_fk(3)", [s, K] {
            const auto m = compare_up_to_normalization(ado3_closed(s), ado_from_fk(3, K), 3);
            return from_normalization(m, "m_max=" + std::to_string(default_m_max(K, 3)));
        }});
        cases.push_back({tag + "/closed-vs-rmatrix", "ado3_closed", "rmatrix num", [s] {
            const auto r = ado_compare(s, 3, AdoReference::closed);
            if (r.matched) return Result{Outcome::equal_after, "up to monomial and constant"};
            return Result{Outcome::mismatch,
                          "got " + r.computed.str() + " ; want " + r.reference.str()};
        }});
    }
}

// Criterion 2: ADO_4 seeds against F_K and the tangle contraction, and the
// inductive algorithm against the recorded worked results T(2,15)...T(2,21).
inline void suite_ado4(std::vector<Case>& cases, const std::string& fixtures = "") {
    for (std::int64_t s = 1; s <= 6; ++s) {
        const TorusKnot K(2, 2 * s + 1);
        const std::string tag = "ado4/" + K.name();
        cases.push_back({tag + "/seed-vs-fromfk", "ado4_seed", "ado_from_fk(4)", [s, K] {
            const auto m =
                compare_up_to_normalization(ado4_seed(2 * s + 1), ado_from_fk(4, K), 4);
            return from_normalization(m, "m_max=" + std::to_string(default_m_max(K, 4)));
        }});
        cases.push_back({tag + "/seed-vs-rmatrix", "ado4_seed", "rmatrix num", [s] {
            const auto r = ado_compare(s, 4, AdoReference::closed);
            if (r.matched) return Result{Outcome::equal_after, "up to monomial and constant"};
            return Result{Outcome::mismatch,
                          "got " + r.computed.str() + " ; want " + r.reference.str()};
        }});
    }
    for (std::int64_t s = 7; s <= 10; ++s) {
        const std::string file = "T2_" + std::to_string(2 * s + 1) + ".json";
        cases.push_back({"ado4/T(2," + std::to_string(2 * s + 1) + ")/algorithm-vs-recorded",
                         "ado4_algorithm", "fixture ado4/" + file, [s, file, fixtures] {
            const auto doc = load_fixture(std::filesystem::path("ado4") / file, fixtures);
            return exact_or_witness(ado4_algorithm(s), doc.poly, "verbatim");
        }});
    }
}

// Criterion 3: the nine recorded ADO_4 polynomials T(2,23)...T(2,39).
inline void suite_appendix_a(std::vector<Case>& cases, const std::string& fixtures = "") {
    for (std::int64_t s = 11; s <= 19; ++s) {
        const std::string file = "T2_" + std::to_string(2 * s + 1) + ".json";
        cases.push_back({"appendix-a/T(2," + std::to_string(2 * s + 1) + ")",
                         "ado4_algorithm", "fixture ado4/" + file, [s, file, fixtures] {
            const auto doc = load_fixture(std::filesystem::path("ado4") / file, fixtures);
            return exact_or_witness(ado4_algorithm(s), doc.poly);
        }});
    }
}

// Criterion 4: recorded tangle evaluations.  The two N-hat polynomials for
// T(2,3) must match exactly; the num polynomials match up to an overall
// monomial and constant.
inline void suite_appendix_b(std::vector<Case>& cases, const std::string& fixtures = "") {
    for (const std::int64_t r : {3, 4}) {
        const std::string file = "nhat" + std::to_string(r) + "_T2_3.json";
        cases.push_back({"appendix-b/nhat" + std::to_string(r) + "/T(2,3)",
                         "normalized_nhat", "fixture rmatrix/" + file, [r, file, fixtures] {
            const auto doc = load_fixture(std::filesystem::path("rmatrix") / file, fixtures);
            return exact_or_witness(normalized_nhat(r, 1).poly, doc.poly);
        }});
    }
    auto num_case = [&cases, &fixtures](std::int64_t r, std::int64_t s) {
        const std::string file =
            "num" + std::to_string(r) + "_T2_" + std::to_string(2 * s + 1) + ".json";
        cases.push_back({"appendix-b/num" + std::to_string(r) + "/T(2," +
                             std::to_string(2 * s + 1) + ")",
                         "num_from_nhat", "fixture rmatrix/" + file, [r, s, file, fixtures] {
            const auto doc = load_fixture(std::filesystem::path("rmatrix") / file, fixtures);
            const HalfLaurent got = num_from_nhat(normalized_nhat(r, s).poly, r);
            if (compare_up_to_mono_const(got, doc.poly))
                return Result{Outcome::equal_after, "up to monomial and constant"};
            return Result{Outcome::mismatch, "got " + got.str() + " ; want " + doc.poly.str()};
        }});
    };
    for (std::int64_t s = 2; s <= 8; ++s) num_case(3, s);
    for (std::int64_t s = 3; s <= 6; ++s) num_case(4, s);
}

// Criterion 5: the refined invariants against their recorded displays, the
// t = -1 reductions, and the Weyl symmetries.
inline void suite_refined(std::vector<Case>& cases) {
    for (std::int64_t s = 2; s <= 4; ++s) {
        cases.push_back({"refined/alexander/displays/s=" + std::to_string(s),
                         "refined_alexander", "recorded display", [s] {
            const XTRational got = refined_alexander(s);
            const XTRational want = refined_alexander_display(s);
            if (detail::xt_equal(got, want)) return Result{Outcome::equal, ""};
            return Result{Outcome::mismatch, "refined Alexander differs at s=" + std::to_string(s)};
        }});
        cases.push_back({"refined/ado3/displays/s=" + std::to_string(s), "refined_ado3",
                         "recorded display", [s] {
            const XTCyclotomic got = refined_ado3(s);
            const XTCyclotomic want = refined_ado3_display(s);
            if (detail::xt_equal(got, want))
                return Result{Outcome::equal, "k1_max=" + std::to_string(default_k1_max(s))};
            return Result{Outcome::mismatch, detail::xt_witness(got, want)};
        }});
    }
    for (std::int64_t s = 1; s <= 6; ++s) {
        cases.push_back({"refined/ado3/t=-1/s=" + std::to_string(s),
                         "refined_ado3 at t=-1, x -> zeta_3^2 x", "ado3_closed", [s] {
            return exact_or_witness(refined_ado3_at_t_minus1(refined_ado3(s)), ado3_closed(s),
                                    "k1_max=" + std::to_string(default_k1_max(s)));
        }});
        cases.push_back({"refined/ado3/weyl/s=" + std::to_string(s), "refined_ado3(1/x)",
                         "refined_ado3(zeta_3^-2 t^-2 x)", [s] {
            if (refined_ado3_weyl_check(refined_ado3(s))) return Result{Outcome::equal, ""};
            return Result{Outcome::mismatch, "Weyl symmetry fails at s=" + std::to_string(s)};
        }});
    }
    for (std::int64_t s = 1; s <= 8; ++s) {
        cases.push_back({"refined/alexander/weyl/s=" + std::to_string(s), "Delta(1/x,t)",
                         "Delta(x/t^2,t)", [s] {
            if (refined_alexander_weyl_check(s)) return Result{Outcome::equal, ""};
            return Result{Outcome::mismatch, "Weyl symmetry fails at s=" + std::to_string(s)};
        }});
        cases.push_back({"refined/alexander/t=-1/s=" + std::to_string(s),
                         "refined_alexander at t=-1", "alexander", [s] {
            return exact_or_witness(refined_alexander_at_t_minus1(refined_alexander(s)),
                                    alexander(TorusKnot(2, 2 * s + 1)));
        }});
    }
}

// Criterion 6: structural properties with no recorded numbers.
inline void suite_properties(std::vector<Case>& cases) {
    cases.push_back({"properties/ado/weyl-symmetry", "ado poly", "x -> 1/x image", [] {
        for (std::int64_t s = 1; s <= 8; ++s) {
            const HalfLaurent a = ado3_closed(s);
            if (!(a.mirror_x() == a))
                return Result{Outcome::mismatch, "ado3_closed s=" + std::to_string(s)};
        }
        for (std::int64_t s = 1; s <= 10; ++s) {
            const HalfLaurent a = s <= 6 ? ado4_seed(2 * s + 1) : ado4_algorithm(s);
            if (!(a.mirror_x() == a))
                return Result{Outcome::mismatch, "ado4 s=" + std::to_string(s)};
        }
        for (std::int64_t p : {3, 4}) {
            const HalfLaurent a = ado_from_fk(p, TorusKnot(2, 5));
            if (!(a.mirror_x() == a))
                return Result{Outcome::mismatch, "ado_from_fk p=" + std::to_string(p)};
        }
        return Result{Outcome::equal, ""};
    }});
    cases.push_back({"properties/epsilon/residue-distinctness", "epsilon residues",
                     "pairwise distinct", [] {
        for (std::int64_t s = 2; s <= 15; ++s) {
            for (std::int64_t t = s + 1; t <= 15; ++t) {
                if (std::gcd(s, t) != 1) continue;
                const std::int64_t n = 2 * s * t;
                auto red = [n](std::int64_t v) { return ((v % n) + n) % n; };
                std::vector<std::int64_t> res = {red(s * t + s + t), red(s * t - s - t),
                                                 red(s * t + s - t), red(s * t - s + t)};
                std::sort(res.begin(), res.end());
                if (std::adjacent_find(res.begin(), res.end()) != res.end())
                    return Result{Outcome::mismatch,
                                  "residue collision at (" + std::to_string(s) + "," +
                                      std::to_string(t) + ")"};
            }
        }
        return Result{Outcome::equal, "all coprime 2 <= s < t <= 15"};
    }});
    cases.push_back({"properties/fk/q-exponent-integrality", "fk_series", "integral exponents", [] {
        // fk_series itself throws if any combined exponent is non-integral.
        for (const auto& [s, t] : std::vector<std::pair<int, int>>{
                 {2, 3}, {2, 5}, {2, 7}, {3, 4}, {3, 5}, {4, 5}, {3, 7}}) {
            const TorusKnot K(s, t);
            fk_series(K, default_m_max(K, 4));
        }
        return Result{Outcome::equal, ""};
    }});
    for (std::int64_t r = 2; r <= 5; ++r) {
        cases.push_back({"properties/rmatrix/RII/r=" + std::to_string(r), "R * R^-1 and R^-1 * R",
                         "identity", [r] {
            const std::int64_t n = rmatrix_field_order(r);
            const CrossingMatrix M = build_matrix(r, n);
            const CrossingMatrix Mi = build_inverse_matrix(r, n);
            const TangleElement one = TangleElement::one(r);
            for (const CrossingMatrix& prod : {mat_mul(M, Mi), mat_mul(Mi, M)}) {
                for (const auto& [key, p] : prod) {
                    const bool diag = key.first == key.second;
                    if (diag && !(p.to_y_laurent() == one.to_y_laurent()))
                        return Result{Outcome::mismatch, "diagonal entry " + p.str()};
                    if (!diag && !p.is_zero())
                        return Result{Outcome::mismatch, "off-diagonal entry " + p.str()};
                }
            }
            return Result{Outcome::equal, ""};
        }});
    }
    cases.push_back({"properties/rmatrix/uniform-z-degree", "tangle evaluation",
                     "z-degree = crossing count", [] {
        for (const auto& [r, smax] : std::vector<std::pair<std::int64_t, std::int64_t>>{
                 {2, 4}, {3, 4}, {4, 3}, {5, 2}}) {
            for (std::int64_t s = 1; s <= smax; ++s) {
                const auto z = evaluate_torus_tangle(r, s).num.uniform_z_degree();
                if (!z || *z != 2 * s + 1)
                    return Result{Outcome::mismatch, "r=" + std::to_string(r) +
                                                         " s=" + std::to_string(s)};
            }
        }
        return Result{Outcome::equal, ""};
    }});
    for (const std::int64_t t : {3, 5, 7}) {
        cases.push_back({"properties/mmr/T(2," + std::to_string(t) + ")", "block average",
                         "1/Delta expansion", [t] {
            const MmrResult res = mmr_order0_check(TorusKnot(2, t), 10);
            if (std::holds_alternative<bool>(res) && std::get<bool>(res))
                return Result{Outcome::equal, "M=10"};
            if (std::holds_alternative<std::string>(res))
                return Result{Outcome::inconclusive, std::get<std::string>(res)};
            const auto& m = std::get<MmrMismatch>(res);
            return Result{Outcome::mismatch, "order j=" + std::to_string(m.j)};
        }});
    }
    cases.push_back({"properties/rmatrix/modified-dim-forms", "product form", "closed form", [] {
        for (std::int64_t r = 2; r <= 6; ++r)
            if (!modified_dim_forms_agree(r))
                return Result{Outcome::mismatch, "r=" + std::to_string(r)};
        return Result{Outcome::equal, "r <= 6"};
    }});
}

// Criterion 7: doubling every truncation parameter changes nothing that
// criteria 1, 2 and 5 report.
inline void suite_robustness(std::vector<Case>& cases) {
    for (std::int64_t p : {3, 4}) {
        const std::int64_t smax = p == 3 ? 8 : 6;
        for (std::int64_t s = 1; s <= smax; ++s) {
            const TorusKnot K(2, 2 * s + 1);
            cases.push_back({"robustness/ado_from_fk/p=" + std::to_string(p) + "/" + K.name(),
                             "default m_max", "doubled m_max", [p, K] {
                const std::int64_t m0 = default_m_max(K, p);
                return exact_or_witness(ado_from_fk(p, K, m0), ado_from_fk(p, K, 2 * m0),
                                        "m_max " + std::to_string(m0) + " -> " +
                                            std::to_string(2 * m0));
            }});
        }
    }
    for (std::int64_t s = 1; s <= 6; ++s) {
        cases.push_back({"robustness/refined_ado3/s=" + std::to_string(s), "default k1_max",
                         "doubled k1_max", [s] {
            const std::int64_t k0 = default_k1_max(s);
            const XTCyclotomic a = refined_ado3(s, k0);
            const XTCyclotomic b = refined_ado3(s, 2 * k0);
            if (detail::xt_equal(a, b))
                return Result{Outcome::equal,
                              "k1_max " + std::to_string(k0) + " -> " + std::to_string(2 * k0)};
            return Result{Outcome::mismatch, detail::xt_witness(a, b)};
        }});
    }
}

// --- suite selection ------------------------------------------------------------------

inline std::vector<std::string> suite_names() {
    return {"ado3", "ado4", "appendix-a", "appendix-b", "refined", "properties", "robustness"};
}

inline std::vector<Case> build_suite(const std::string& name, const std::string& fixtures = "") {
    std::vector<Case> cases;
    if (name == "ado3" || name == "all") suite_ado3(cases);
    if (name == "ado4" || name == "all") suite_ado4(cases, fixtures);
    if (name == "appendix-a" || name == "all") suite_appendix_a(cases, fixtures);
    if (name == "appendix-b" || name == "all") suite_appendix_b(cases, fixtures);
    if (name == "refined" || name == "all") suite_refined(cases);
    if (name == "properties" || name == "all") suite_properties(cases);
    if (name == "robustness" || name == "all") suite_robustness(cases);
    if (cases.empty() && name != "all") throw std::invalid_argument("unknown suite: " + name);
    return cases;
}

}  // namespace adoforge::verify
