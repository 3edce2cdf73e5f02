// The t-deformed series has two independent evaluation paths: the fully
// symbolic MPoly pipeline (a substituted, exact q-division, then q = zeta_3)
// and the specialized chain DP that works in Q(zeta_3) throughout.  The tests
// pin the two paths to each other summand by summand, and pin both to the
// recorded displays and to the undeformed invariants at t = -1.
#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

#include "adoforge/ado.hpp"
#include "adoforge/alexander.hpp"
#include "adoforge/refined.hpp"
#include "adoforge/verify.hpp"

using namespace adoforge;

namespace {

// q = zeta_3 on an MPoly with no a-dependence, collapsing (e_x, e_q, e_t)
// onto (e_x, e_t) keys with coefficients in Q(zeta_3).
XTCyclotomic specialize_q_zeta3(const MPoly& p) {
    XTCyclotomic out;
    for (const auto& [e, c] : p.terms()) {
        REQUIRE(e[2] == 0);
        const Cyclotomic v = Cyclotomic::zeta(3, ((e[1] % 3) + 3) % 3).scale(c);
        detail::xt_add(out, XTKey{e[0], e[3]}, v);
    }
    return out;
}

}  // namespace

TEST_CASE("symbolic q-division utilities") {
    SECTION("exact quotient") {
        MPoly num = MPoly::one();
        num.add_in_place(MPoly::mono(0, 3, 0, 0).scale(Rational(-1)));  // 1 - q^3
        MPoly den = MPoly::one();
        den.add_in_place(MPoly::mono(0, 1, 0, 0).scale(Rational(-1)));  // 1 - q
        MPoly want;  // 1 + q + q^2
        for (std::int64_t e = 0; e <= 2; ++e) want.add_term({0, e, 0, 0}, Rational(1));
        REQUIRE(divide_q_exact(num, den) == want);
    }

    SECTION("a remainder is an error, not an approximation") {
        MPoly num = MPoly::mono(0, 2, 0, 0);  // q^2
        MPoly den = MPoly::one();
        den.add_in_place(MPoly::mono(0, 1, 0, 0));  // 1 + q
        REQUIRE_THROWS_AS(divide_q_exact(num, den), std::logic_error);
    }

    SECTION("q-binomial edge cases") {
        REQUIRE(q_binomial(4, 5).is_zero());
        REQUIRE(q_binomial(4, -1).is_zero());
        REQUIRE(q_binomial(4, 0) == MPoly::one());
        REQUIRE(q_binomial(4, 4) == MPoly::one());
    }
}

TEST_CASE("q-Lucas evaluation of the Gaussian binomial at zeta_3") {
    for (std::int64_t n = 0; n <= 10; ++n) {
        for (std::int64_t k = 0; k <= n; ++k) {
            XTCyclotomic direct;
            detail::xt_add(direct, XTKey{0, 0}, detail::q_binomial_zeta3(n, k));
            REQUIRE(specialize_q_zeta3(q_binomial(n, k)) == direct);
        }
    }
}

TEST_CASE("refined Alexander polynomial") {
    SECTION("matches the recorded displays") {
        for (std::int64_t s : {2, 3, 4})
            REQUIRE(refined_alexander(s) == verify::refined_alexander_display(s));
    }

    SECTION("t = -1 collapses onto the Alexander polynomial") {
        for (std::int64_t s = 1; s <= 5; ++s) {
            REQUIRE(refined_alexander_at_t_minus1(refined_alexander(s)) ==
                    alexander(TorusKnot(2, 2 * s + 1)));
        }
    }

    SECTION("Weyl symmetry Delta(1/x,t) == Delta(x/t^2,t)") {
        for (std::int64_t s = 1; s <= 6; ++s) REQUIRE(refined_alexander_weyl_check(s));
    }
}

TEST_CASE("specialized chain DP agrees with the symbolic path per summand") {
    const std::int64_t s = 2, k1_max = 6;
    const auto symbolic = fk_refined(s, k1_max);
    const auto fast = fk_refined_ado3_summands(s, k1_max);
    for (std::int64_t k1 = 0; k1 <= k1_max; ++k1) {
        const MPoly m = subst_a(symbolic.at(k1).mirror(), ASubst::ado);
        const MPoly reduced = divide_q_exact(m, qq_pochhammer(k1, -1));
        REQUIRE(specialize_q_zeta3(reduced) == fast.at(k1));
    }
}

TEST_CASE("t-deformation of ADO_3") {
    SECTION("matches the recorded displays") {
        for (std::int64_t s : {2, 3, 4})
            REQUIRE(refined_ado3(s) == verify::refined_ado3_display(s));
    }

    SECTION("t = -1 with x -> zeta_3^2 x recovers ADO_3") {
        for (std::int64_t s = 1; s <= 3; ++s)
            REQUIRE(refined_ado3_at_t_minus1(refined_ado3(s)) == ado3_closed(s));
    }

    SECTION("Weyl symmetry of the deformation") {
        for (std::int64_t s = 1; s <= 4; ++s) REQUIRE(refined_ado3_weyl_check(refined_ado3(s)));
    }

    SECTION("truncations below the exactness threshold are rejected") {
        REQUIRE_THROWS_AS(refined_ado3(2, 9), std::invalid_argument);
        REQUIRE(refined_ado3(2, 10) == refined_ado3(2));
    }
}

TEST_CASE("superpolynomial cross-check against the refined series") {
    // At x = q^r the (x; q^{-1})_{k_1} factor kills every k_1 > r summand and
    // the surviving sum reproduces the chain formula without its prefactor.
    for (const auto& [s, r] : std::vector<std::pair<std::int64_t, std::int64_t>>{
             {1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
        const auto series = fk_refined(s, r + 1);
        REQUIRE(subst_x_q_power(series.at(r + 1), r).is_zero());
        MPoly total;
        for (std::int64_t k1 = 0; k1 <= r; ++k1) {
            total.add_in_place(
                divide_q_exact(subst_x_q_power(series.at(k1), r), qq_pochhammer(k1, +1)));
        }
        REQUIRE(total == superpoly_core(s, r));
    }

    SECTION("prefactor and argument guards") {
        REQUIRE(superpoly(1, 0) == MPoly::one());
        REQUIRE_THROWS_AS(superpoly(0, 1), std::invalid_argument);
        REQUIRE_THROWS_AS(superpoly(1, -1), std::invalid_argument);
    }
}
