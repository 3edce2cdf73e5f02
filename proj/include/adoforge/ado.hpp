// ADO_p polynomials of the torus knots T(2,2s+1) at p = 3 and p = 4,
// produced three independent ways:
//
//   * closed forms / seed tables read off the recorded polynomials
//     (ado3_closed, ado4_seed) and the inductive algorithm extending the
//     seeds upward (ado4_algorithm),
//   * extraction from the F_K series at q = zeta_p (ado_from_fk), using
//       F_K|_{q = zeta_p} = (x^{1/2} - x^{-1/2}) ADO_p(x) / Delta(x^p).
//
// All results use the symmetric normalization: Weyl-symmetric under
// x -> 1/x, top coefficient a root of unity, stored on even keys (integer
// x-exponents).
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "alexander.hpp"
#include "half_laurent.hpp"
#include "torus_fk.hpp"

namespace adoforge {

struct AdoPolynomial {
    std::int64_t p;
    TorusKnot knot;
    HalfLaurent poly;
    std::string normalization_tag = "symmetric";
};

namespace detail {

// Mirror a positive-exponent listing into the symmetric polynomial: each
// nonconstant term is duplicated at the negated exponent, the constant is
// taken once.
inline HalfLaurent mirror_listing(const std::vector<std::pair<std::int64_t, Cyclotomic>>& pos) {
    HalfLaurent out;
    for (const auto& [e, c] : pos) {
        out.add_term(2 * e, c);
        if (e != 0) out.add_term(-2 * e, c);
    }
    return out;
}

inline Cyclotomic gauss_int(std::int64_t a, std::int64_t b) {  // a + b*i
    return Cyclotomic::integer(a, 4).add(Cyclotomic::zeta(4, 1).scale(Rational(b)));
}

}  // namespace detail

// ADO_3[T(2,2s+1)]: the coefficients cycle with period 6 in the exponent
// offset j = 2s - e, with the starting value determined by s mod 3 and the
// sixth slot always vanishing.
inline HalfLaurent ado3_closed(std::int64_t s) {
    if (s < 1) throw std::invalid_argument("ado3_closed: need s >= 1");
    const Cyclotomic z = Cyclotomic::zeta(3);
    const Cyclotomic zi = z.pow(2);
    const Cyclotomic one = Cyclotomic::one(3);
    std::vector<Cyclotomic> cyc;
    switch (s % 3) {
        case 1: cyc = {z, z, z.sub(zi), zi.neg(), zi.neg(), Cyclotomic::zero(3)}; break;
        case 2: cyc = {zi, zi, zi.sub(one), one.neg(), one.neg(), Cyclotomic::zero(3)}; break;
        default: cyc = {one, one, one.sub(z), z.neg(), z.neg(), Cyclotomic::zero(3)}; break;
    }
    std::vector<std::pair<std::int64_t, Cyclotomic>> pos;
    for (std::int64_t j = 0; j <= 2 * s; ++j) {
        const Cyclotomic& c = cyc[static_cast<std::size_t>(j % 6)];
        if (!c.is_zero()) pos.emplace_back(2 * s - j, c);
    }
    return detail::mirror_listing(pos);
}

// Positive-exponent part of ADO_4[T(2,n)] for the recorded base cases
// n = 3, 5, ..., 13.
inline std::vector<std::pair<std::int64_t, Cyclotomic>> ado4_seed_positive(std::int64_t n) {
    using detail::gauss_int;
    auto C = gauss_int;
    switch (n) {
        case 3:
            return {{3, C(0, 1)}, {2, C(0, 1)}, {1, C(1, 1)}, {0, C(1, 2)}};
        case 5:
            return {{6, C(-1, 0)}, {5, C(-1, 0)}, {4, C(-1, 1)}, {3, C(-1, 1)},
                    {2, C(0, 1)},  {1, C(1, 1)},  {0, C(1, 0)}};
        case 7:
            return {{9, C(0, -1)}, {8, C(0, -1)}, {7, C(-1, -1)}, {6, C(-1, -1)},
                    {5, C(-1, 0)}, {4, C(-1, 0)}, {2, C(0, -1)},  {1, C(0, -2)},
                    {0, C(1, -2)}};
        case 9:
            return {{12, C(1, 0)}, {11, C(1, 0)}, {10, C(1, -1)}, {9, C(1, -1)},
                    {8, C(0, -1)}, {7, C(0, -1)}, {4, C(1, 0)},   {2, C(0, -1)},
                    {1, C(0, -2)}, {0, C(-1, -2)}};
        case 11:
            return {{15, C(0, 1)}, {14, C(0, 1)}, {13, C(1, 1)}, {12, C(1, 1)},
                    {11, C(1, 0)}, {10, C(1, 0)}, {7, C(0, 1)},  {6, C(0, 1)},
                    {5, C(1, 1)},  {4, C(1, 2)},  {3, C(1, 1)},  {2, C(0, 1)},
                    {1, C(-1, 1)}, {0, C(-1, 0)}};
        case 13:
            return {{18, C(-1, 0)}, {17, C(-1, 0)}, {16, C(-1, 1)}, {15, C(-1, 1)},
                    {14, C(0, 1)},  {13, C(0, 1)},  {10, C(-1, 0)}, {9, C(-1, 0)},
                    {8, C(-1, 1)},  {7, C(-1, 1)},  {6, C(0, 1)},   {5, C(1, 1)},
                    {4, C(1, 0)},   {3, C(1, 1)},   {2, C(0, 1)},   {1, C(-1, 1)},
                    {0, C(-1, 2)}};
        default:
            throw std::invalid_argument("ado4_seed_positive: n must be odd in [3,13]");
    }
}

inline HalfLaurent ado4_seed(std::int64_t n) {
    return detail::mirror_listing(ado4_seed_positive(n));
}

// Positive-exponent part of ADO_4[T(2,2s+1)] for any s >= 1.  Beyond the
// seeds this follows the inductive construction: a leading sextuple selected
// by s mod 4, the previous case s-4 shifted up by 4, and the shifted terms
// landing in (4,8] reflected about exponent 4.
inline std::vector<std::pair<std::int64_t, Cyclotomic>> ado4_positive(std::int64_t s) {
    if (s < 1) throw std::invalid_argument("ado4_positive: need s >= 1");
    if (s <= 6) return ado4_seed_positive(2 * s + 1);
    using detail::gauss_int;
    auto C = gauss_int;
    std::vector<Cyclotomic> sextuple;
    switch (s % 4) {
        case 1: sextuple = {C(0, 1), C(0, 1), C(1, 1), C(1, 1), C(1, 0), C(1, 0)}; break;
        case 2: sextuple = {C(-1, 0), C(-1, 0), C(-1, 1), C(-1, 1), C(0, 1), C(0, 1)}; break;
        case 3: sextuple = {C(0, -1), C(0, -1), C(-1, -1), C(-1, -1), C(-1, 0), C(-1, 0)}; break;
        default: sextuple = {C(1, 0), C(1, 0), C(1, -1), C(1, -1), C(0, -1), C(0, -1)}; break;
    }
    std::vector<std::pair<std::int64_t, Cyclotomic>> terms;
    for (std::int64_t j = 0; j < 6; ++j)
        terms.emplace_back(3 * s - j, sextuple[static_cast<std::size_t>(j)]);
    const auto seed = ado4_positive(s - 4);  // top exponent 3(s-4); shift lands at 3s-8
    std::vector<std::pair<std::int64_t, Cyclotomic>> shifted;
    for (const auto& [e, c] : seed) shifted.emplace_back(e + 4, c);
    terms.insert(terms.end(), shifted.begin(), shifted.end());
    std::map<std::int64_t, Cyclotomic, std::greater<std::int64_t>> reflected;
    for (const auto& [e, c] : shifted)
        if (4 < e && e <= 8) reflected.emplace(8 - e, c);
    for (const auto& [e, c] : reflected) terms.emplace_back(e, c);
    return terms;
}

inline HalfLaurent ado4_algorithm(std::int64_t s) {
    if (s < 7) throw std::invalid_argument("ado4_algorithm: seeds cover s < 7");
    return detail::mirror_listing(ado4_positive(s));
}

// --- extraction from F_K -----------------------------------------------------
//
// Multiplying F_K|_{q=zeta_p} by Delta(x^p) gives (x^{1/2} - x^{-1/2}) ADO_p.
// In the odd basis u(N) = x^{N/2} - x^{-N/2} the product has coefficients
//     E_N = sum_j d_j (c_{N-2pj} - c_{2pj-N}),
// where d_j are the x^j-coefficients of Delta(x^p) and c_m the stored
// positive-half coefficients of F_K.  E_N is exact for N <= m_max - 2pD
// (D = x-degree of Delta(x^p) = p * genus).  The x-degree of ADO_p is at most
// p * genus, so the whole possible support lies at N <= 2pg + 1; m_max must
// make that entire window exact, otherwise an interior zero E_N could mask a
// truncated tail and the result would be silently wrong.  Within the window
// the two slots above the bound are computed and asserted empty.
inline HalfLaurent ado_from_fk(std::int64_t p, const TorusKnot& K, std::int64_t m_max = -1) {
    const std::int64_t g = (K.s - 1) * (K.t - 1) / 2;
    const std::int64_t n_bound = 2 * p * g + 1;
    const std::int64_t required = 2 * p * (p * g) + n_bound + 2;  // deg Delta(x^p) = p*g
    if (m_max < 0) m_max = std::max(default_m_max(K, p), required);
    if (m_max < required)
        throw std::invalid_argument("ado_from_fk: m_max below the exact-extraction threshold " +
                                    std::to_string(required));
    const FkAtRoot fk = fk_at_root(K, p, m_max);
    const HalfLaurent delta = alexander(K).compose_power(p);
    const std::int64_t D = delta.max_key() / 2;
    if (D != p * g) throw std::logic_error("ado_from_fk: unexpected Alexander degree");

    std::map<std::int64_t, Cyclotomic> E;
    for (std::int64_t N = 1; N <= n_bound + 2; N += 2) {
        Cyclotomic acc = Cyclotomic::zero();
        for (const auto& [ehalf, dv] : delta.terms()) {
            const std::int64_t k = ehalf / 2;
            const std::int64_t m1 = N - 2 * k;
            const std::int64_t m2 = 2 * k - N;
            auto it1 = (m1 >= 1) ? fk.coeffs.find(m1) : fk.coeffs.end();
            if (it1 != fk.coeffs.end()) acc = acc.add(dv.mul(it1->second));
            auto it2 = (m2 >= 1) ? fk.coeffs.find(m2) : fk.coeffs.end();
            if (it2 != fk.coeffs.end()) acc = acc.sub(dv.mul(it2->second));
        }
        if (acc.is_zero()) continue;
        if (N > n_bound)
            throw std::logic_error("ado_from_fk: nonzero coefficient above the degree bound");
        E.emplace(N, acc);
    }
    HalfLaurent out;
    for (const auto& [N, c] : E)
        for (std::int64_t k = -(N - 1) / 2; k <= (N - 1) / 2; ++k) out.add_term(2 * k, c);
    return out;
}

// --- comparison up to the allowed normalization ------------------------------

struct NormalizationMatch {
    // A == B exactly, or A(zeta_{2p}^k x) * u == B for the recorded k, u.
    enum class Kind { equal, equal_after, different } kind;
    std::int64_t k = 0;
    std::optional<Cyclotomic> u;
    std::string witness;  // set when different
};

inline NormalizationMatch compare_up_to_normalization(const HalfLaurent& A,
                                                      const HalfLaurent& B,
                                                      std::int64_t p,
                                                      bool allow_rescale = true) {
    if (A == B) return {NormalizationMatch::Kind::equal, 0, std::nullopt, ""};
    if (allow_rescale && !A.is_zero()) {
        for (std::int64_t k = 0; k < 2 * p; ++k) {
            const HalfLaurent Ac = A.scale_x(Cyclotomic::zeta(2 * p, k));
            if (Ac.size() != B.size()) continue;
            bool same_support = true;
            for (const auto& [e, c] : Ac.terms())
                if (B.coeff(e).is_zero()) { same_support = false; break; }
            if (!same_support) continue;
            const std::int64_t e0 = Ac.max_key();
            const Cyclotomic u = B.coeff(e0).mul(Ac.coeff(e0).inv());
            bool ok = true;
            for (const auto& [e, c] : Ac.terms())
                if (!(c.mul(u) == B.coeff(e))) { ok = false; break; }
            if (ok) return {NormalizationMatch::Kind::equal_after, k, u, ""};
        }
    }
    return {NormalizationMatch::Kind::different, 0, std::nullopt,
            "lhs = " + A.str() + " ; rhs = " + B.str()};
}

}  // namespace adoforge
