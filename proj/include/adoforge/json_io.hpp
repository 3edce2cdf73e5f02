// JSON serialization for the library types and the fixture loader.
//
// Document layout (schema tag "adoforge/1"):
//   rational    ["num", "den"]            decimal strings, den > 0
//   cyclotomic  {"order": n, "coeffs": [rational, ...]}   power basis mod Phi_n
//   polynomial  {"schema", "name", "vars", "half_exponents": true,
//                "terms": [{"e": [keys...], "c": cyclotomic}, ...]}
// Terms are emitted in ascending key order and zero terms are never written,
// so serializing the same value twice yields identical bytes.
#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cyclotomic.hpp"
#include "half_laurent.hpp"

namespace adoforge {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "adoforge/1";

inline Json json_rational(const Rational& r) {
    const auto [num, den] = rational_to_strings(r);
    return Json::array({num, den});
}

inline Rational rational_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
        throw std::runtime_error("rational: expected [\"num\", \"den\"]");
    return rational_from_strings(j[0].get<std::string>(), j[1].get<std::string>());
}

inline Json json_cyclotomic(const Cyclotomic& c) {
    Json coeffs = Json::array();
    for (const auto& v : c.coeffs()) coeffs.push_back(json_rational(v));
    return Json{{"order", c.order()}, {"coeffs", std::move(coeffs)}};
}

inline Cyclotomic cyclotomic_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
        throw std::runtime_error("cyclotomic: expected {order, coeffs}");
    const std::int64_t order = j.at("order").get<std::int64_t>();
    std::vector<Rational> coeffs;
    for (const auto& v : j.at("coeffs")) coeffs.push_back(rational_from_json(v));
    return Cyclotomic(order, std::move(coeffs));
}

inline Json json_half_laurent(const std::string& name, const HalfLaurent& p,
                              const std::string& var = "x") {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back(Json{{"e", Json::array({e})}, {"c", json_cyclotomic(c)}});
    return Json{{"schema", kSchema},
                {"name", name},
                {"vars", Json::array({var})},
                {"half_exponents", true},
                {"terms", std::move(terms)}};
}

// Two-variable terms (x, t): used by the refined invariants.  Keys are raw,
// i.e. already doubled where the variable is half-integral.
template <typename Coeff, typename ToJson>
Json json_xt_terms(const std::string& name, const std::map<std::array<std::int64_t, 2>, Coeff>& p,
                   ToJson&& coeff_to_json, bool half_exponents) {
    Json terms = Json::array();
    for (const auto& [e, c] : p)
        terms.push_back(Json{{"e", Json::array({e[0], e[1]})}, {"c", coeff_to_json(c)}});
    return Json{{"schema", kSchema},
                {"name", name},
                {"vars", Json::array({"x", "t"})},
                {"half_exponents", half_exponents},
                {"terms", std::move(terms)}};
}

struct PolyDocument {
    std::string name;
    std::vector<std::string> vars;
    HalfLaurent poly;
};

inline PolyDocument half_laurent_from_json(const Json& j) {
    if (!j.is_object()) throw std::runtime_error("polynomial: expected an object");
    if (!j.contains("schema") || j.at("schema").get<std::string>() != kSchema)
        throw std::runtime_error("polynomial: missing or unsupported schema tag");
    if (!j.contains("half_exponents") || !j.at("half_exponents").get<bool>())
        throw std::runtime_error("polynomial: half_exponents must be true");
    PolyDocument doc;
    doc.name = j.value("name", "");
    for (const auto& v : j.at("vars")) doc.vars.push_back(v.get<std::string>());
    if (doc.vars.size() != 1)
        throw std::runtime_error("polynomial: expected exactly one variable");
    for (const auto& term : j.at("terms")) {
        const auto& e = term.at("e");
        if (!e.is_array() || e.size() != 1)
            throw std::runtime_error("polynomial: term key arity mismatch");
        const Cyclotomic c = cyclotomic_from_json(term.at("c"));
        if (c.is_zero()) throw std::runtime_error("polynomial: explicit zero term");
        if (!doc.poly.coeff(e[0].get<std::int64_t>()).is_zero())
            throw std::runtime_error("polynomial: duplicate term key");
        doc.poly.add_term(e[0].get<std::int64_t>(), c);
    }
    return doc;
}

// Fixture directory resolution: explicit path beats the ADOFORGE_FIXTURES
// environment variable, which beats ./fixtures.
inline std::filesystem::path fixture_dir(const std::string& override_dir = "") {
    if (!override_dir.empty()) return override_dir;
    if (const char* env = std::getenv("ADOFORGE_FIXTURES"); env && *env) return env;
    return "fixtures";
}

inline PolyDocument load_fixture(const std::filesystem::path& relative,
                                 const std::string& override_dir = "") {
    const std::filesystem::path path = fixture_dir(override_dir) / relative;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("fixture not found: " + path.string());
    Json j;
    try {
        in >> j;
    } catch (const std::exception& ex) {
        throw std::runtime_error("fixture " + path.string() + ": " + ex.what());
    }
    try {
        return half_laurent_from_json(j);
    } catch (const std::exception& ex) {
        throw std::runtime_error("fixture " + path.string() + ": " + ex.what());
    }
}

inline std::string dump_json(const Json& j) { return j.dump(1) + "\n"; }

}  // namespace adoforge
