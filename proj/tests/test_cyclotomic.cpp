#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numeric>
#include <random>

#include "adoforge/cyclotomic.hpp"

using adoforge::Cyclotomic;
using adoforge::Rational;

namespace {

// Deterministic pseudo-random element of Q(zeta_n) with small coefficients.
Cyclotomic random_element(std::mt19937& rng, std::int64_t n) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    Cyclotomic out = Cyclotomic::zero(n);
    for (std::int64_t k = 0; k < n; ++k)
        out = out.add(Cyclotomic::zeta(n, k).scale(Rational(num(rng), den(rng))));
    return out;
}

}  // namespace

TEST_CASE("roots of unity satisfy their defining relations") {
    for (std::int64_t n = 1; n <= 24; ++n) {
        const Cyclotomic z = Cyclotomic::zeta(n);
        REQUIRE(z.pow(n) == Cyclotomic::one(n));
        // zeta^k agrees with repeated multiplication
        Cyclotomic acc = Cyclotomic::one(n);
        for (std::int64_t k = 0; k < n; ++k) {
            REQUIRE(Cyclotomic::zeta(n, k) == acc);
            acc = acc.mul_by_zeta();
        }
        // sum over all n-th roots vanishes for n > 1
        if (n > 1) {
            Cyclotomic sum = Cyclotomic::zero(n);
            for (std::int64_t k = 0; k < n; ++k) sum = sum.add(Cyclotomic::zeta(n, k));
            REQUIRE(sum.is_zero());
        }
    }
}

TEST_CASE("exact identities among small roots") {
    const Cyclotomic i = Cyclotomic::zeta(4);
    REQUIRE(i.mul(i) == Cyclotomic::integer(-1, 4));

    // zeta_6 = -zeta_3^2 and zeta_3 + zeta_3^2 = -1
    const Cyclotomic z3 = Cyclotomic::zeta(3);
    REQUIRE(Cyclotomic::zeta(6) == z3.pow(2).neg());
    REQUIRE(z3.add(z3.pow(2)) == Cyclotomic::integer(-1, 3));

    // w = 2 zeta_3 + 1 satisfies w^2 = -3 (w = i sqrt 3)
    const Cyclotomic w = z3.scale(2).add(Cyclotomic::one(3));
    REQUIRE(w.mul(w) == Cyclotomic::integer(-3, 3));

    // zeta_8^2 = i and zeta_12^4 = zeta_3 across orders
    REQUIRE(Cyclotomic::zeta(8).pow(2) == i);
    REQUIRE(Cyclotomic::zeta(12).pow(4) == z3);
    REQUIRE(Cyclotomic::zeta(12, 3).mul(Cyclotomic::zeta(12, 4)) == Cyclotomic::zeta(12, 7));
}

TEST_CASE("field axioms on random elements of Q(zeta_12)") {
    std::mt19937 rng(20260814);
    for (int trial = 0; trial < 20; ++trial) {
        const Cyclotomic a = random_element(rng, 12);
        const Cyclotomic b = random_element(rng, 12);
        const Cyclotomic c = random_element(rng, 12);
        REQUIRE(a.add(b) == b.add(a));
        REQUIRE(a.mul(b) == b.mul(a));
        REQUIRE(a.mul(b.add(c)) == a.mul(b).add(a.mul(c)));
        REQUIRE(a.mul(b).mul(c) == a.mul(b.mul(c)));
        if (!a.is_zero()) {
            REQUIRE(a.mul(a.inv()) == Cyclotomic::one(12));
            REQUIRE(a.pow(-3) == a.inv().pow(3));
        }
        REQUIRE(a.sub(a).is_zero());
    }
}

TEST_CASE("galois action is a field automorphism") {
    std::mt19937 rng(7);
    const Cyclotomic a = random_element(rng, 12);
    const Cyclotomic b = random_element(rng, 12);
    for (const std::int64_t k : {1, 5, 7, 11}) {
        REQUIRE(a.mul(b).galois(k) == a.galois(k).mul(b.galois(k)));
        REQUIRE(a.add(b).galois(k) == a.galois(k).add(b.galois(k)));
    }
    // zeta -> zeta^k on the generator
    REQUIRE(Cyclotomic::zeta(12).galois(7) == Cyclotomic::zeta(12, 7));
    // galois(-1) is complex conjugation: fixed points are real; on zeta it inverts
    REQUIRE(Cyclotomic::zeta(12).galois(-1) == Cyclotomic::zeta(12, 11));
    REQUIRE_THROWS_AS(a.galois(6), std::invalid_argument);  // gcd(6,12) != 1
}

TEST_CASE("mixed-order arithmetic lifts to the compositum") {
    const Cyclotomic z3 = Cyclotomic::zeta(3);
    const Cyclotomic i = Cyclotomic::zeta(4);
    const Cyclotomic prod = z3.mul(i);  // zeta_12^4 * zeta_12^3
    REQUIRE(prod == Cyclotomic::zeta(12, 7));
    REQUIRE(prod.order() == 12);
    REQUIRE(z3.add(z3.pow(2)).add(Cyclotomic::one(4)).is_zero());

    // lift preserves the value; lifting to a non-multiple is rejected
    REQUIRE(z3.lift(12) == Cyclotomic::zeta(12, 4));
    REQUIRE(z3.lift(12).order() == 12);
    REQUIRE_THROWS_AS(z3.lift(8), std::invalid_argument);
}

TEST_CASE("rationality predicates and error cases") {
    const Cyclotomic z5 = Cyclotomic::zeta(5);
    REQUIRE_FALSE(z5.is_rational());
    // zeta_5 + zeta_5^2 + zeta_5^3 + zeta_5^4 = -1 is rational in disguise
    Cyclotomic s = Cyclotomic::zero(5);
    for (std::int64_t k = 1; k < 5; ++k) s = s.add(Cyclotomic::zeta(5, k));
    REQUIRE(s.is_rational());
    REQUIRE(s.rational_part() == Rational(-1));

    REQUIRE_THROWS_AS(Cyclotomic::zero(7).inv(), std::domain_error);
    REQUIRE_THROWS_AS(Cyclotomic(3, {Rational(1)}), std::invalid_argument);  // wrong length
}

TEST_CASE("numeric embedding matches the principal root") {
    const auto z3 = Cyclotomic::zeta(3).to_complex_double();
    REQUIRE(std::abs(z3.real() + 0.5) < 1e-12);
    REQUIRE(std::abs(z3.imag() - std::sqrt(3.0) / 2) < 1e-12);

    // a high-precision digit string for zeta_8: both parts sqrt(2)/2
    const auto [re, im] = Cyclotomic::zeta(8).to_complex(30);
    REQUIRE(re.substr(0, 12) == "0.7071067811");
    REQUIRE(im.substr(0, 12) == "0.7071067811");

    // the embedding is a ring map on a sample product
    const Cyclotomic a = Cyclotomic::zeta(12, 5).add(Cyclotomic::one(12));
    const Cyclotomic b = Cyclotomic::zeta(12, 7).scale(Rational(1, 2));
    const std::complex<double> lhs = a.mul(b).to_complex_double();
    const std::complex<double> rhs = a.to_complex_double() * b.to_complex_double();
    REQUIRE(std::abs(lhs - rhs) < 1e-12);
}

TEST_CASE("canonical representation gives decidable equality") {
    // (zeta_12^2)^3 = -1 although no single coefficient says so directly
    REQUIRE(Cyclotomic::zeta(12, 2).pow(3) == Cyclotomic::integer(-1, 1));
    // power-basis coefficients have length phi(n)
    REQUIRE(Cyclotomic::zeta(12).coeffs().size() == 4);
    REQUIRE(Cyclotomic::zeta(9).coeffs().size() == 6);
    // zeta_9^6 reduces out of the power basis: Phi_9 = x^6 + x^3 + 1
    REQUIRE(Cyclotomic::zeta(9, 6) ==
            Cyclotomic::zeta(9, 3).neg().sub(Cyclotomic::one(9)));
}
