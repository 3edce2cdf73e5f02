// Serialization is part of the external contract: identical values must dump
// to identical bytes, and every malformed document must be rejected with a
// diagnostic that names the offending fixture.
#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "adoforge/ado.hpp"
#include "adoforge/json_io.hpp"

using namespace adoforge;

namespace {

// Unique scratch directory under the system temp root, removed on destruction.
struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("adoforge-test-" + std::to_string(std::rand()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("rational serialization") {
    for (const Rational r : {Rational(5, 3), Rational(-7, 2), Rational(0),
                             Rational(Integer("123456789012345678901234567890"), 7)}) {
        REQUIRE(rational_from_json(json_rational(r)) == r);
    }
    REQUIRE(json_rational(Rational(-7, 2)) == Json::array({"-7", "2"}));
    REQUIRE_THROWS_AS(rational_from_strings("1", "0"), std::invalid_argument);
    REQUIRE_THROWS_AS(rational_from_json(Json::array({"1"})), std::runtime_error);
    REQUIRE_THROWS_AS(rational_from_json(Json::array({1, 2})), std::runtime_error);
}

TEST_CASE("cyclotomic serialization") {
    const Cyclotomic c = Cyclotomic::zeta(12, 7).scale(Rational(3, 4)).sub(Cyclotomic::one(12));
    REQUIRE(cyclotomic_from_json(json_cyclotomic(c)) == c);
    REQUIRE_THROWS_AS(cyclotomic_from_json(Json{{"order", 3}}), std::runtime_error);

    SECTION("dumping twice yields identical bytes") {
        const std::string a = dump_json(json_cyclotomic(c));
        const std::string b = dump_json(json_cyclotomic(
            Cyclotomic::zeta(12, 7).scale(Rational(3, 4)).sub(Cyclotomic::one(12))));
        REQUIRE(a == b);
    }
}

TEST_CASE("polynomial documents round trip") {
    const HalfLaurent p = ado3_closed(3);
    const Json j = json_half_laurent("ADO_3[T(2,7)]", p);
    const PolyDocument doc = half_laurent_from_json(j);
    REQUIRE(doc.name == "ADO_3[T(2,7)]");
    REQUIRE(doc.vars == std::vector<std::string>{"x"});
    REQUIRE(doc.poly == p);

    SECTION("schema violations are rejected") {
        Json bad = j;
        bad["schema"] = "adoforge/0";
        REQUIRE_THROWS_AS(half_laurent_from_json(bad), std::runtime_error);

        bad = j;
        bad.erase("schema");
        REQUIRE_THROWS_AS(half_laurent_from_json(bad), std::runtime_error);

        bad = j;
        bad["half_exponents"] = false;
        REQUIRE_THROWS_AS(half_laurent_from_json(bad), std::runtime_error);

        bad = j;
        bad["vars"] = Json::array({"x", "t"});
        REQUIRE_THROWS_AS(half_laurent_from_json(bad), std::runtime_error);

        bad = j;
        bad["terms"][1]["e"] = Json::array({0, 0});
        REQUIRE_THROWS_AS(half_laurent_from_json(bad), std::runtime_error);

        bad = j;
        bad["terms"][1]["e"] = bad["terms"][0]["e"];
        REQUIRE_THROWS_AS(half_laurent_from_json(bad), std::runtime_error);

        bad = j;
        bad["terms"][1]["c"] = json_cyclotomic(Cyclotomic::zero(3));
        REQUIRE_THROWS_AS(half_laurent_from_json(bad), std::runtime_error);
    }
}

TEST_CASE("fixture loading") {
    SECTION("recorded polynomial parses and carries its name") {
        const PolyDocument doc = load_fixture("ado4/T2_15.json");
        REQUIRE(doc.poly == ado4_algorithm(7));
        REQUIRE_FALSE(doc.name.empty());
    }

    SECTION("missing fixture names the path") {
        try {
            load_fixture("no/such/file.json");
            FAIL("expected a throw");
        } catch (const std::runtime_error& ex) {
            REQUIRE(std::string(ex.what()).find("fixture not found") != std::string::npos);
            REQUIRE(std::string(ex.what()).find("no/such/file.json") != std::string::npos);
        }
    }

    SECTION("corrupt fixture names the path") {
        TempDir tmp;
        std::ofstream(tmp.path / "broken.json") << "{ not json";
        try {
            load_fixture("broken.json", tmp.path.string());
            FAIL("expected a throw");
        } catch (const std::runtime_error& ex) {
            REQUIRE(std::string(ex.what()).find("broken.json") != std::string::npos);
        }
    }

    SECTION("directory resolution precedence") {
        TempDir tmp;
        const HalfLaurent p = ado3_closed(1);
        std::ofstream(tmp.path / "probe.json") << dump_json(json_half_laurent("probe", p));

        REQUIRE(fixture_dir() == std::filesystem::path("fixtures"));
        REQUIRE(fixture_dir(tmp.path.string()) == tmp.path);

        setenv("ADOFORGE_FIXTURES", tmp.path.c_str(), 1);
        REQUIRE(fixture_dir() == tmp.path);
        REQUIRE(load_fixture("probe.json").poly == p);
        REQUIRE(fixture_dir("elsewhere") == std::filesystem::path("elsewhere"));
        unsetenv("ADOFORGE_FIXTURES");
        REQUIRE(fixture_dir() == std::filesystem::path("fixtures"));
    }
}
