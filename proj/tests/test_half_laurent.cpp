#include <catch2/catch_amalgamated.hpp>

#include "adoforge/alexander.hpp"
#include "adoforge/half_laurent.hpp"
#include "adoforge/torus_fk.hpp"

using adoforge::Cyclotomic;
using adoforge::HalfLaurent;
using adoforge::Rational;
using adoforge::TorusKnot;

TEST_CASE("doubled-exponent semantics of u and basic arithmetic") {
    // u(1) = x^{1/2} - x^{-1/2}; u(1)^2 = x - 2 + 1/x
    const HalfLaurent u1 = HalfLaurent::u(1);
    const HalfLaurent sq = u1.mul(u1);
    REQUIRE(sq.coeff(2) == Cyclotomic::one(1));
    REQUIRE(sq.coeff(0) == Cyclotomic::integer(-2, 1));
    REQUIRE(sq.coeff(-2) == Cyclotomic::one(1));
    REQUIRE(sq.size() == 3);

    // u(m) is odd under x -> 1/x
    REQUIRE(HalfLaurent::u(5).mirror_x() == HalfLaurent::u(5).neg());

    // cancellation prunes to the canonical empty map
    REQUIRE(u1.sub(u1).is_zero());
    REQUIRE(u1.add(u1.neg()).terms().empty());
}

TEST_CASE("compose_power and scale_x") {
    const HalfLaurent d = adoforge::alexander(TorusKnot(2, 3));  // x - 1 + 1/x
    const HalfLaurent d3 = d.compose_power(3);
    REQUIRE(d3.coeff(6) == Cyclotomic::one(1));
    REQUIRE(d3.coeff(0) == Cyclotomic::integer(-1, 1));
    REQUIRE(d3.coeff(-6) == Cyclotomic::one(1));

    // x -> zeta_6 x multiplies the x^j coefficient by zeta_6^j
    const HalfLaurent scaled = d.scale_x(Cyclotomic::zeta(6));
    REQUIRE(scaled.coeff(2) == Cyclotomic::zeta(6));
    REQUIRE(scaled.coeff(-2) == Cyclotomic::zeta(6, 5));
    REQUIRE_THROWS_AS(HalfLaurent::u(1).scale_x(Cyclotomic::zeta(6)), std::domain_error);
}

TEST_CASE("exact division recovers factors and reports remainders") {
    const HalfLaurent a = HalfLaurent::u(6).mul(HalfLaurent::u(1));
    const HalfLaurent b = HalfLaurent::u(2).mul(HalfLaurent::u(3));

    // u(6)u(1)/(u(2)u(3)) is the Alexander polynomial of the trefoil
    const auto [quo, rem] = HalfLaurent::exact_divide(a, b);
    REQUIRE(rem.is_zero());
    REQUIRE(quo == adoforge::alexander(TorusKnot(2, 3)));

    // multiply-then-divide round trip on a half-integral polynomial
    const auto [q2, r2] = HalfLaurent::exact_divide(quo.mul(HalfLaurent::u(7)), HalfLaurent::u(7));
    REQUIRE(r2.is_zero());
    REQUIRE(q2 == quo);

    // divisor of larger span: quotient 0, remainder the dividend
    const auto [q3, r3] = HalfLaurent::exact_divide(HalfLaurent::u(2), HalfLaurent::u(3));
    REQUIRE(q3.is_zero());
    REQUIRE(r3 == HalfLaurent::u(2));

    REQUIRE_THROWS_AS(HalfLaurent::exact_divide(a, HalfLaurent()), std::domain_error);
}

TEST_CASE("series inversion") {
    // 1/(1 - x) = 1 + x + x^2 + ...
    HalfLaurent p;
    p.add_term(0, Cyclotomic::one(1));
    p.add_term(2, Cyclotomic::integer(-1, 1));
    const HalfLaurent inv = p.series_invert(5);
    for (std::int64_t j = 0; j < 5; ++j) REQUIRE(inv.coeff(2 * j) == Cyclotomic::one(1));

    // product truncates to 1: (1-x) * (sum x^j) has only the x^5 tail term
    const HalfLaurent prod = p.mul(inv);
    REQUIRE(prod.coeff(0) == Cyclotomic::one(1));
    for (std::int64_t j = 1; j < 5; ++j) REQUIRE(prod.coeff(2 * j).is_zero());

    // leading key of the inverse is minus the leading key
    HalfLaurent shifted;
    shifted.add_term(4, Cyclotomic::one(1));
    shifted.add_term(6, Cyclotomic::one(1));
    REQUIRE(shifted.series_invert(3).min_key() == -4);

    REQUIRE_THROWS_AS(HalfLaurent().series_invert(3), std::domain_error);
    REQUIRE_THROWS_AS(HalfLaurent::u(1).add(HalfLaurent::one()).series_invert(3),
                      std::domain_error);  // mixed half-integral support
}

TEST_CASE("alexander polynomials are symmetric and normalized") {
    for (const auto& [s, t] : std::vector<std::pair<int, int>>{{2, 3}, {2, 7}, {3, 4}, {3, 5}}) {
        const HalfLaurent d = adoforge::alexander(TorusKnot(s, t));
        REQUIRE(d.mirror_x() == d);
        // Delta(1) = 1: the coefficients sum to one
        Cyclotomic sum = Cyclotomic::zero();
        for (const auto& [e, c] : d.terms()) sum = sum.add(c);
        REQUIRE(sum == Cyclotomic::one(1));
        // degree span is (s-1)(t-1)
        REQUIRE(d.max_key() - d.min_key() == 2 * (s - 1) * (t - 1));
    }
}
