// The two-variable knot-complement series F_K for positive torus knots, its
// specialization at roots of unity, and the order-h^0 comparison against the
// inverse Alexander polynomial.
//
// For K = T(s,t) the series is supported on odd m with
//     F_K(x, q) = 1/2 q^{(s-1)(t-1)/2} sum_m eps(s,t)_m
//                 q^{(m^2 - h^2)/(4st)} (x^{m/2} - x^{-m/2}),   h = st - s - t,
// where eps is +-1 on four residue classes mod 2st and 0 elsewhere.  The
// combined q-exponent (prefactor plus per-term part) is always an integer;
// fk_terms checks this for every emitted term.
#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "alexander.hpp"
#include "half_laurent.hpp"
#include "rational.hpp"

namespace adoforge {

struct TorusKnot {
    std::int64_t s;
    std::int64_t t;

    TorusKnot(std::int64_t s_, std::int64_t t_) : s(s_), t(t_) {
        if (s < 2 || t < 2) throw std::invalid_argument("TorusKnot: need s,t > 1");
        if (std::gcd(s, t) != 1) throw std::invalid_argument("TorusKnot: need gcd(s,t) = 1");
    }

    std::string name() const {
        return "T(" + std::to_string(s) + "," + std::to_string(t) + ")";
    }
};

// Sign of the m-th term: -1 on the residues st+s+t and st-s-t (mod 2st),
// +1 on st+s-t and st-s+t, 0 otherwise.  The four residues are pairwise
// distinct for coprime s,t > 1, so the case split is well defined.
inline int epsilon(std::int64_t s, std::int64_t t, std::int64_t m) {
    const std::int64_t st = s * t;
    const std::int64_t period = 2 * st;
    auto residue = [&](std::int64_t v) { return ((v % period) + period) % period; };
    const std::int64_t r = residue(m);
    if (r == residue(st + s + t) || r == residue(st - s - t)) return -1;
    if (r == residue(st + s - t) || r == residue(st - s + t)) return 1;
    return 0;
}

struct FkTerm {
    std::int64_t m;           // x^{m/2} - x^{-m/2}
    int sign;                 // eps(s,t)_m
    std::int64_t q_exponent;  // (m^2 - h^2) / (4st), relative to the prefactor
};

struct QSeries {
    Rational prefactor_exponent;  // global q^{(s-1)(t-1)/2}
    std::vector<FkTerm> terms;    // ascending in m
    std::int64_t truncation_m;
};

inline std::int64_t default_m_max(const TorusKnot& K, std::int64_t p) {
    return 4 * K.s * K.t * p + (K.s * K.t - K.s - K.t);
}

inline QSeries fk_series(const TorusKnot& K, std::int64_t m_max) {
    QSeries out;
    out.prefactor_exponent = Rational((K.s - 1) * (K.t - 1), 2);
    out.truncation_m = m_max;
    const std::int64_t h = K.s * K.t - K.s - K.t;
    for (std::int64_t m = 1; m <= m_max; m += 2) {
        const int e = epsilon(K.s, K.t, m);
        if (!e) continue;
        const Rational qe = Rational(m * m - h * h, 4 * K.s * K.t);
        const Rational combined = out.prefactor_exponent + qe;
        if (denominator(combined) != 1 || denominator(qe) != 1)
            throw std::logic_error("fk_series: non-integral combined q-exponent");
        out.terms.push_back({m, e, static_cast<std::int64_t>(numerator(qe))});
    }
    return out;
}

// F_K at q = zeta_p.  Only the positive half of the x-support is stored; the
// full series is odd under x -> 1/x (each term is a multiple of
// x^{m/2} - x^{-m/2}), which odd_mirror records.  Coefficients include the
// global 1/2.  p = 1 is allowed and collapses every q-power to 1.
struct FkAtRoot {
    std::int64_t p;
    std::map<std::int64_t, Cyclotomic> coeffs;  // m (odd, positive) -> coefficient
    bool odd_mirror = true;
    std::int64_t truncation_m;
};

inline FkAtRoot fk_at_root(const TorusKnot& K, std::int64_t p, std::int64_t m_max) {
    if (p < 1) throw std::invalid_argument("fk_at_root: need p >= 1");
    const QSeries series = fk_series(K, m_max);
    const Rational pref = series.prefactor_exponent;
    FkAtRoot out;
    out.p = p;
    out.truncation_m = m_max;
    for (const FkTerm& term : series.terms) {
        const Rational k = pref + term.q_exponent;
        const std::int64_t ki = static_cast<std::int64_t>(numerator(k));  // integral by fk_series
        const Cyclotomic c =
            Cyclotomic::zeta(p, ((ki % p) + p) % p).scale(Rational(term.sign, 2));
        out.coeffs.emplace(term.m, c);
    }
    return out;
}

// --- order-h^0 comparison against 1/Delta ------------------------------------
//
// At q = e^h, h -> 0, the positive-half x-coefficients of F_K stabilize only
// in a Cesaro sense: the running sums over odd m oscillate with period 2st.
// Averaging the cutoff over one full period gives the block coefficient
//     A_j = mean over a period of  sum_{m odd, 2j < m <= cutoff} eps_m,
// which (with the global 1/2 cancelling against folding the two symmetric
// halves) must match the ascending expansion coefficient of 1/Delta_K at x^j.
// The check is inconclusive rather than failed when two consecutive period
// averages still differ at the requested truncation.

struct MmrMismatch {
    std::int64_t j;
    Rational average;
    std::string expected;
};

using MmrResult = std::variant<bool, std::string, MmrMismatch>;  // true / "inconclusive" / detail

inline MmrResult mmr_order0_check(const TorusKnot& K, std::int64_t M, std::int64_t m_max = -1) {
    const std::int64_t s = K.s, t = K.t;
    if (m_max < 0) m_max = 8 * s * t + 2 * M + 10;
    const std::int64_t period = 2 * s * t;

    auto average_over = [&](std::int64_t start) {
        std::vector<Rational> acc(static_cast<std::size_t>(M) + 1, Rational(0));
        for (std::int64_t w = 0; w < s * t; ++w) {
            const std::int64_t cutoff = start + 2 * w;
            for (std::int64_t j = 0; j <= M; ++j) {
                std::int64_t tot = 0;
                for (std::int64_t m = 2 * j + 1; m <= cutoff; m += 2) tot += epsilon(s, t, m);
                acc[static_cast<std::size_t>(j)] += tot;
            }
        }
        for (auto& v : acc) v /= (s * t);
        return acc;
    };

    std::int64_t start2 = m_max - 2 * period + 1;
    if (start2 % 2 == 0) start2 += 1;
    const std::int64_t start1 = start2 - period;
    if (start1 < 2 * M + 1) return MmrResult{std::string("inconclusive")};
    const auto a1 = average_over(start1);
    const auto a2 = average_over(start2);
    if (a1 != a2) return MmrResult{std::string("inconclusive")};

    const HalfLaurent inv_delta = alexander(K).series_invert(static_cast<std::size_t>(M) + 1);
    for (std::int64_t j = 0; j <= M; ++j) {
        const Cyclotomic rhs = inv_delta.coeff(2 * j);
        if (!(Cyclotomic::rational(a1[static_cast<std::size_t>(j)]) == rhs))
            return MmrResult{MmrMismatch{j, a1[static_cast<std::size_t>(j)], rhs.str()}};
    }
    return MmrResult{true};
}

}  // namespace adoforge
