// The t-deformed series for the mirror torus knots T(2,-(2s+1)) and the
// invariants extracted from it: the refined Alexander polynomial (a = -1/t)
// and the t-deformation of ADO_3 (a = -q^2/t, then q = zeta_3).
//
// The series is a sum over chains k_1 >= k_2 >= ... >= k_s >= 0:
//
//   sum  x^{2K - k_1} q^{K - sum_{i>=2} k_{i-1} k_i} t^{2K}
//        (x; q^{-1})_{k_1} (-a t / q; q)_{k_1} / (q; q)_{k_1}
//        [k_1 k_2]_q ... [k_{s-1} k_s]_q,          K = k_1 + ... + k_s,
//
// stored per k_1 as a numerator MPoly with the implied denominator
// (q; q)_{k_1}.  Mirroring (the passage to the positive knot) negates every
// exponent.  Both specializations cancel the denominator exactly:
// for a = -q^2/t the substituted mirror of (-a t / q; q)_{k_1} factor-by-
// factor equals the mirrored denominator (q^{-1}; q^{-1})_{k_1}, which is
// asserted symbolically before any root-of-unity arithmetic.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "cyclotomic.hpp"
#include "half_laurent.hpp"
#include "mpoly.hpp"

namespace adoforge {

using XTKey = std::array<std::int64_t, 2>;  // (e_x, e_t)
using XTRational = std::map<XTKey, Rational>;
using XTCyclotomic = std::map<XTKey, Cyclotomic>;

inline std::int64_t default_k1_max(std::int64_t s) { return 3 * (2 * s + 1) + 6; }

namespace detail {

inline void xt_add(XTCyclotomic& acc, const XTKey& k, const Cyclotomic& v) {
    if (v.is_zero()) return;
    auto it = acc.find(k);
    if (it == acc.end()) {
        acc.emplace(k, v);
    } else {
        it->second = it->second.add(v);
        if (it->second.is_zero()) acc.erase(it);
    }
}

}  // namespace detail

// --- general (fully symbolic) series -----------------------------------------

// Numerators of the mirrored-knot series, keyed by k_1; denominator
// (q; q)_{k_1} implied.
inline std::map<std::int64_t, MPoly> fk_refined(std::int64_t s, std::int64_t k1_max) {
    if (s < 1 || k1_max < 0) throw std::invalid_argument("fk_refined: bad arguments");
    std::vector<MPoly> g(static_cast<std::size_t>(k1_max) + 1, MPoly::one());
    for (std::int64_t level = s; level >= 2; --level) {
        std::vector<MPoly> ng(g.size());
        for (std::int64_t kprev = 0; kprev <= k1_max; ++kprev) {
            MPoly acc;
            for (std::int64_t k = 0; k <= kprev; ++k) {
                MPoly term = q_binomial(kprev, k).mul(MPoly::mono(2 * k, k - kprev * k, 0, 2 * k));
                acc.add_in_place(term.mul(g[static_cast<std::size_t>(k)]));
            }
            ng[static_cast<std::size_t>(kprev)] = std::move(acc);
        }
        g = std::move(ng);
    }
    std::map<std::int64_t, MPoly> out;
    for (std::int64_t k1 = 0; k1 <= k1_max; ++k1) {
        MPoly head = MPoly::mono(k1, k1, 0, 2 * k1);
        MPoly xpoch = MPoly::one();  // (x; q^{-1})_{k1}
        for (std::int64_t i = 1; i <= k1; ++i) {
            MPoly factor = MPoly::one();
            factor.add_in_place(MPoly::mono(1, -(i - 1), 0, 0).scale(Rational(-1)));
            xpoch = xpoch.mul(factor);
        }
        MPoly apoch = MPoly::one();  // (-a t / q; q)_{k1}
        for (std::int64_t i = 1; i <= k1; ++i) {
            MPoly factor = MPoly::one();
            factor.add_in_place(MPoly::mono(0, i - 2, 1, 1));
            apoch = apoch.mul(factor);
        }
        out.emplace(k1, head.mul(xpoch.mul(apoch)).mul(g[static_cast<std::size_t>(k1)]));
    }
    return out;
}

enum class ASubst { alexander, ado };  // a = -1/t or a = -q^2/t

inline MPoly subst_a(const MPoly& p, ASubst mode) {
    MPoly out;
    for (const auto& [e, c] : p.terms()) {
        const auto [ex, eq, ea, et] = e;
        const Rational cc = (ea % 2 == 0) ? c : -c;
        if (mode == ASubst::alexander) {
            out.add_term({ex, eq, 0, et - ea}, cc);
        } else {
            out.add_term({ex, eq + 2 * ea, 0, et - ea}, cc);
        }
    }
    return out;
}

// --- refined Alexander --------------------------------------------------------

// At a = -1/t every k_1 >= 2 summand of the mirrored series vanishes, the
// q-dependence cancels, and after normalizing by (-t x)^s the result is the
// polynomial displayed alongside the series.  Returns (e_x, e_t) -> coeff.
inline XTRational refined_alexander(std::int64_t s) {
    auto terms = fk_refined(s, 3);
    for (std::int64_t k1 : {2, 3}) {
        if (!subst_a(terms.at(k1).mirror(), ASubst::alexander).is_zero())
            throw std::logic_error("refined_alexander: k1 >= 2 summand survives");
    }
    MPoly total;
    for (std::int64_t k1 : {0, 1}) {
        const MPoly m = subst_a(terms.at(k1).mirror(), ASubst::alexander);
        if (m.is_zero()) continue;
        total.add_in_place(divide_q_exact(m, qq_pochhammer(k1, -1)));
    }
    for (const auto& [e, c] : total.terms())
        if (e[1] != 0) throw std::logic_error("refined_alexander: residual q-dependence");
    total = total.mul(MPoly::mono(s, 0, 0, s, Rational(s % 2 == 0 ? 1 : -1)));
    XTRational out;
    for (const auto& [e, c] : total.terms()) out.emplace(XTKey{e[0], e[3]}, c);
    return out;
}

inline XTRational xt_mirror_x(const XTRational& d) {
    XTRational out;
    for (const auto& [k, c] : d) out.emplace(XTKey{-k[0], k[1]}, c);
    return out;
}

// x -> x / t^2 on (e_x, e_t) keys.
inline XTRational xt_subst_x_over_t2(const XTRational& d) {
    XTRational out;
    for (const auto& [k, c] : d) out.emplace(XTKey{k[0], k[1] - 2 * k[0]}, c);
    return out;
}

// Weyl symmetry of the refined Alexander polynomial: Delta(1/x, t) ==
// Delta(x/t^2, t).
inline bool refined_alexander_weyl_check(std::int64_t s) {
    const XTRational d = refined_alexander(s);
    return xt_mirror_x(d) == xt_subst_x_over_t2(d);
}

// t = -1 collapses the refined Alexander polynomial onto Delta(x).
inline HalfLaurent refined_alexander_at_t_minus1(const XTRational& d) {
    HalfLaurent out;
    for (const auto& [k, c] : d)
        out.add_term(2 * k[0], Cyclotomic::rational(k[1] % 2 == 0 ? c : -c));
    return out;
}

// --- t-deformed ADO_3 ----------------------------------------------------------

namespace detail {

// Gaussian binomial at q = zeta_3 by the q-Lucas factorization
// [n k]_{zeta_3} = C(n div 3, k div 3) * [n mod 3, k mod 3]_{zeta_3}.
inline Cyclotomic q_binomial_zeta3(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return Cyclotomic::zero(3);
    Integer binom = 1;
    {
        const std::int64_t N = n / 3, K = k / 3;
        if (K < 0 || K > N) return Cyclotomic::zero(3);
        for (std::int64_t i = 1; i <= K; ++i) {
            binom *= (N - K + i);
            binom /= i;
        }
    }
    const std::int64_t nr = n % 3, kr = k % 3;
    if (kr > nr) return Cyclotomic::zero(3);
    Cyclotomic small = Cyclotomic::one(3);
    if (nr == 2 && kr == 1) small = Cyclotomic::one(3).add(Cyclotomic::zeta(3));  // [2 1]_q = 1+q
    return small.scale(Rational(binom));
}

}  // namespace detail

// Per-k_1 summands of the mirrored series with a = -q^2/t substituted and
// q = zeta_3, as (e_x, e_t) -> coefficient in Q(zeta_3).
//
// The a-Pochhammer and the denominator cancel factor by factor:
//     mirror(1 + a t q^{i-2}) |_{a = -q^2/t}  ==  1 - q^{-i},
// which is asserted symbolically below; afterwards every summand is the
// polynomial head * (x; q^{-1})_{k_1} * g[k_1], so q = zeta_3 may be applied
// term by term (a ring homomorphism on polynomials).  The mirror acts on the
// specialized coefficients as the Galois map zeta_3 -> zeta_3^{-1}.
inline std::map<std::int64_t, XTCyclotomic> fk_refined_ado3_summands(std::int64_t s,
                                                                     std::int64_t k1_max) {
    for (std::int64_t i = 1; i <= k1_max; ++i) {
        MPoly factor = MPoly::one();
        factor.add_in_place(MPoly::mono(0, i - 2, 1, 1));
        MPoly lhs = subst_a(factor.mirror(), ASubst::ado);
        MPoly rhs = MPoly::one();
        rhs.add_in_place(MPoly::mono(0, -i, 0, 0).scale(Rational(-1)));
        if (lhs != rhs)
            throw std::logic_error("fk_refined_ado3_summands: cancellation identity failed");
    }

    auto z3 = [](std::int64_t e) { return Cyclotomic::zeta(3, ((e % 3) + 3) % 3); };

    // chain DP with q specialized; supports stay on the diagonal e_x == e_t
    std::vector<XTCyclotomic> g(static_cast<std::size_t>(k1_max) + 1);
    for (auto& gi : g) gi.emplace(XTKey{0, 0}, Cyclotomic::one(3));
    for (std::int64_t level = s; level >= 2; --level) {
        std::vector<XTCyclotomic> ng(g.size());
        for (std::int64_t kprev = 0; kprev <= k1_max; ++kprev) {
            XTCyclotomic acc;
            for (std::int64_t k = 0; k <= kprev; ++k) {
                const Cyclotomic scale =
                    detail::q_binomial_zeta3(kprev, k).mul(z3(k - kprev * k));
                if (scale.is_zero()) continue;
                for (const auto& [key, v] : g[static_cast<std::size_t>(k)])
                    detail::xt_add(acc, XTKey{key[0] + 2 * k, key[1] + 2 * k}, v.mul(scale));
            }
            ng[static_cast<std::size_t>(kprev)] = std::move(acc);
        }
        g = std::move(ng);
    }

    std::map<std::int64_t, XTCyclotomic> out;
    XTCyclotomic xpoch;  // (x; q^{-1})_{k1} at q = zeta_3, grown incrementally
    xpoch.emplace(XTKey{0, 0}, Cyclotomic::one(3));
    for (std::int64_t k1 = 0; k1 <= k1_max; ++k1) {
        if (k1 > 0) {
            XTCyclotomic next;
            const Cyclotomic zk = z3(-(k1 - 1));
            for (const auto& [key, v] : xpoch) {
                detail::xt_add(next, key, v);
                detail::xt_add(next, XTKey{key[0] + 1, key[1]}, v.mul(zk).neg());
            }
            xpoch = std::move(next);
        }
        const Cyclotomic head_c = z3(k1);
        XTCyclotomic summand;
        for (const auto& [kx, vx] : xpoch) {
            for (const auto& [kg, vg] : g[static_cast<std::size_t>(k1)]) {
                detail::xt_add(summand, XTKey{kx[0] + kg[0] + k1, kx[1] + kg[1] + 2 * k1},
                               vx.mul(vg).mul(head_c));
            }
        }
        XTCyclotomic mirrored;
        for (const auto& [key, v] : summand)
            mirrored.emplace(XTKey{-key[0], -key[1]}, v.galois(-1));
        out.emplace(k1, std::move(mirrored));
    }
    return out;
}

// The t-deformation of ADO_3[T(2,2s+1)]: the specialized series times
// Delta(x^3, t^3), exact on x-exponents >= 3s - k1_max, normalized by the
// overall monomial (-1)^s (t x)^s.  Support lies in [-s, 3s] before the
// shift; the normalized top coefficient at (2s, 2s) must be 1.
inline XTCyclotomic refined_ado3(std::int64_t s, std::int64_t k1_max = -1) {
    if (s < 1) throw std::invalid_argument("refined_ado3: need s >= 1");
    if (k1_max < 0) k1_max = default_k1_max(s);
    if (k1_max < 4 * s + 2)
        throw std::invalid_argument("refined_ado3: k1_max below the exactness threshold");

    XTCyclotomic series;
    for (const auto& [k1, summand] : fk_refined_ado3_summands(s, k1_max))
        for (const auto& [key, v] : summand) detail::xt_add(series, key, v);

    const XTRational dref = refined_alexander(s);
    XTCyclotomic prod;
    for (const auto& [k1, c1] : series) {
        for (const auto& [k2, c2] : dref) {
            detail::xt_add(prod, XTKey{k1[0] + 3 * k2[0], k1[1] + 3 * k2[1]},
                           c1.scale(c2));
        }
    }

    XTCyclotomic out;
    const Rational sign(s % 2 == 0 ? 1 : -1);
    for (const auto& [key, c] : prod) {
        if (key[0] < 3 * s - k1_max) continue;  // below the exactness window
        if (key[0] < -s || key[0] > 3 * s)
            throw std::logic_error("refined_ado3: support outside [-s, 3s]");
        out.emplace(XTKey{key[0] - s, key[1] - s}, c.scale(sign));
    }
    auto top = out.find(XTKey{2 * s, 2 * s});
    if (top == out.end() || !(top->second == Cyclotomic::one(3)))
        throw std::logic_error("refined_ado3: top coefficient != 1");
    return out;
}

// Weyl symmetry of the deformation: ADO_3(1/x, t) == ADO_3(zeta_3^{-2} t^{-2} x, t).
inline bool refined_ado3_weyl_check(const XTCyclotomic& ado) {
    XTCyclotomic lhs, rhs;
    for (const auto& [key, c] : ado) lhs.emplace(XTKey{-key[0], key[1]}, c);
    for (const auto& [key, c] : ado) {
        detail::xt_add(rhs, XTKey{key[0], key[1] - 2 * key[0]},
                       c.mul(Cyclotomic::zeta(3, ((key[0] % 3) + 3) % 3)));
    }
    if (lhs.size() != rhs.size()) return false;
    for (const auto& [key, c] : lhs) {
        auto it = rhs.find(key);
        if (it == rhs.end() || !(it->second == c)) return false;
    }
    return true;
}

// t = -1 together with x -> zeta_3^2 x recovers the undeformed ADO_3.
inline HalfLaurent refined_ado3_at_t_minus1(const XTCyclotomic& ado) {
    HalfLaurent out;
    for (const auto& [key, c] : ado) {
        Cyclotomic v = c.mul(Cyclotomic::zeta(3, ((2 * key[0]) % 3 + 3) % 3));
        if (key[1] % 2 != 0) v = v.neg();
        out.add_term(2 * key[0], v);
    }
    return out;
}

// --- superpolynomial cross-check ----------------------------------------------

// The reduced superpolynomial of T(2,2s+1) as a sum over chains
// r >= k_1 >= ... >= k_s >= 0 (k_0 = r), without the overall prefactor
// (a/q)^{s r} that superpoly() reinstates.
inline MPoly superpoly_core(std::int64_t s, std::int64_t r) {
    MPoly total;
    std::vector<std::int64_t> ks(static_cast<std::size_t>(s), 0);
    auto rec = [&](auto&& self, std::int64_t i, std::int64_t bound) -> void {
        if (i == s) {
            std::int64_t sk = 0;
            for (auto k : ks) sk += k;
            std::int64_t eq = (2 * r + 1) * sk;
            std::int64_t prev = r;
            MPoly term = MPoly::one();
            for (auto k : ks) {
                eq -= prev * k;
                term = term.mul(q_binomial(prev, k));
                prev = k;
            }
            term = term.mul(MPoly::mono(0, eq, 0, 2 * sk));
            MPoly apoch = MPoly::one();
            for (std::int64_t j = 1; j <= ks[0]; ++j) {
                MPoly factor = MPoly::one();
                factor.add_in_place(MPoly::mono(0, j - 2, 1, 1));
                apoch = apoch.mul(factor);
            }
            total.add_in_place(term.mul(apoch));
            return;
        }
        for (std::int64_t k = 0; k <= bound; ++k) {
            ks[static_cast<std::size_t>(i)] = k;
            self(self, i + 1, k);
        }
    };
    rec(rec, 0, r);
    return total;
}

inline MPoly superpoly(std::int64_t s, std::int64_t r) {
    if (s < 1 || r < 0) throw std::invalid_argument("superpoly: bad arguments");
    return superpoly_core(s, r).mul(MPoly::mono(0, -s * r, s * r, 0));
}

// x = q^r inside an MPoly (folds e_x into e_q).
inline MPoly subst_x_q_power(const MPoly& p, std::int64_t r) {
    MPoly out;
    for (const auto& [e, c] : p.terms()) out.add_term({0, e[1] + r * e[0], e[2], e[3]}, c);
    return out;
}

inline std::string xt_str(const XTCyclotomic& d) {
    if (d.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = d.rbegin(); it != d.rend(); ++it) {
        if (!first) os << " + ";
        os << "(" << it->second.str() << ")*x^" << it->first[0] << "*t^" << it->first[1];
        first = false;
    }
    return os.str();
}

}  // namespace adoforge
