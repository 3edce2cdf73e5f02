#include <catch2/catch_amalgamated.hpp>

#include "adoforge/ado.hpp"
#include "adoforge/json_io.hpp"

using namespace adoforge;

TEST_CASE("ado3 closed form structure") {
    for (std::int64_t s = 1; s <= 8; ++s) {
        const HalfLaurent a = ado3_closed(s);
        INFO("s = " << s);
        // top term x^{2s}, unit leading coefficient cycling with s, symmetric support
        REQUIRE(a.max_key() == 4 * s);
        REQUIRE(a.min_key() == -4 * s);
        REQUIRE(a.coeff(4 * s) == Cyclotomic::zeta(3, s % 3));
        REQUIRE(a.mirror_x() == a);
    }
}

TEST_CASE("ado4 seeds and inductive algorithm") {
    for (std::int64_t n = 3; n <= 13; n += 2) {
        const HalfLaurent a = ado4_seed(n);
        INFO("2s+1 = " << n);
        REQUIRE(a.max_key() == 6 * (n - 1) / 2);  // top exponent x^{3s}
        // leading coefficient is a Gaussian unit: |c|^2 = 1
        const Cyclotomic lead = a.coeff(a.max_key());
        REQUIRE(lead.mul(lead.galois(-1)) == Cyclotomic::one(4));
        REQUIRE(a.mirror_x() == a);
    }
    for (std::int64_t s = 7; s <= 9; ++s) {
        const HalfLaurent a = ado4_algorithm(s);
        INFO("s = " << s);
        REQUIRE(a.max_key() == 6 * s);
        REQUIRE(a.mirror_x() == a);
    }
    // the inductive step reproduces the recorded polynomial for T(2,15)
    REQUIRE(ado4_algorithm(7) == load_fixture("ado4/T2_15.json").poly);
    REQUIRE_THROWS_AS(ado4_algorithm(3), std::invalid_argument);  // below the seed range
}

TEST_CASE("ado extraction from the q = zeta_p specialization") {
    SECTION("agrees with the closed forms") {
        for (std::int64_t s = 1; s <= 4; ++s) {
            const TorusKnot K(2, 2 * s + 1);
            const auto m3 = compare_up_to_normalization(ado3_closed(s), ado_from_fk(3, K), 3);
            INFO("s = " << s);
            REQUIRE(m3.kind != NormalizationMatch::Kind::different);
            const auto m4 = compare_up_to_normalization(ado4_seed(2 * s + 1), ado_from_fk(4, K), 4);
            REQUIRE(m4.kind != NormalizationMatch::Kind::different);
        }
    }

    SECTION("extraction is mirror-symmetric") {
        const HalfLaurent a = ado_from_fk(3, TorusKnot(2, 7));
        REQUIRE(a.mirror_x() == a);
    }

    SECTION("works for a root order beyond the closed forms") {
        REQUIRE_NOTHROW(ado_from_fk(5, TorusKnot(2, 3)));
    }

    SECTION("insufficient truncation is rejected, not silently wrong") {
        REQUIRE_THROWS_AS(ado_from_fk(3, TorusKnot(2, 5), 21), std::invalid_argument);
        REQUIRE_THROWS_AS(ado_from_fk(3, TorusKnot(2, 5), 43), std::invalid_argument);
        REQUIRE(ado_from_fk(3, TorusKnot(2, 5), 51) == ado_from_fk(3, TorusKnot(2, 5)));
    }
}

TEST_CASE("comparison up to the allowed normalization") {
    const HalfLaurent a = ado3_closed(2);

    SECTION("identical polynomials are plain-equal") {
        const auto m = compare_up_to_normalization(a, a, 3);
        REQUIRE(m.kind == NormalizationMatch::Kind::equal);
    }

    SECTION("a zeta_{2p}-rescale of x is found and reported") {
        const HalfLaurent b = a.scale_x(Cyclotomic::zeta(6, 5)).cmul(Cyclotomic::zeta(3));
        const auto m = compare_up_to_normalization(a, b, 3);
        REQUIRE(m.kind == NormalizationMatch::Kind::equal_after);
        // applying the recorded normalization reproduces b exactly
        REQUIRE(m.u.has_value());
        REQUIRE(a.scale_x(Cyclotomic::zeta(6, m.k)).cmul(*m.u) == b);
    }

    SECTION("a genuinely different polynomial yields a witness") {
        HalfLaurent b = a;
        b.add_term(0, Cyclotomic::one(3));
        const auto m = compare_up_to_normalization(a, b, 3);
        REQUIRE(m.kind == NormalizationMatch::Kind::different);
        REQUIRE_FALSE(m.witness.empty());
    }

    SECTION("rescale can be disallowed") {
        const HalfLaurent b = a.scale_x(Cyclotomic::zeta(6, 5));
        const auto m = compare_up_to_normalization(a, b, 3, false);
        REQUIRE(m.kind == NormalizationMatch::Kind::different);
    }
}
