// Sparse Laurent polynomials in a single half-integer variable.
//
// A term c * x^{m/2} is stored under the integer key m (the "doubled
// exponent"), so x-integral polynomials occupy the even keys and genuinely
// half-integral objects such as x^{1/2} - x^{-1/2} fit without a fraction
// type in the exponent.  Coefficients are Cyclotomic; zero coefficients are
// never stored, which makes the std::map representation canonical.
#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "cyclotomic.hpp"

namespace adoforge {

class HalfLaurent {
public:
    using Map = std::map<std::int64_t, Cyclotomic>;

    HalfLaurent() = default;

    static HalfLaurent monomial(std::int64_t key, Cyclotomic c) {
        HalfLaurent p;
        p.add_term(key, std::move(c));
        return p;
    }

    static HalfLaurent one(std::int64_t order = 1) {
        return monomial(0, Cyclotomic::one(order));
    }

    // x^{m/2} - x^{-m/2}
    static HalfLaurent u(std::int64_t m, std::int64_t order = 1) {
        HalfLaurent p;
        p.add_term(m, Cyclotomic::one(order));
        p.add_term(-m, Cyclotomic::integer(-1, order));
        return p;
    }

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    std::int64_t min_key() const { return require_nonzero(), terms_.begin()->first; }
    std::int64_t max_key() const { return require_nonzero(), terms_.rbegin()->first; }

    Cyclotomic coeff(std::int64_t key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Cyclotomic::zero() : it->second;
    }

    void add_term(std::int64_t key, const Cyclotomic& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, c);
        } else {
            it->second = it->second.add(c);
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    void add_in_place(const HalfLaurent& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
    }

    HalfLaurent add(const HalfLaurent& o) const {
        HalfLaurent out(*this);
        out.add_in_place(o);
        return out;
    }

    HalfLaurent neg() const {
        HalfLaurent out;
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, c.neg());
        return out;
    }

    HalfLaurent sub(const HalfLaurent& o) const { return add(o.neg()); }

    HalfLaurent cmul(const Cyclotomic& c) const {
        HalfLaurent out;
        if (c.is_zero()) return out;
        for (const auto& [e, v] : terms_) out.add_term(e, v.mul(c));
        return out;
    }

    HalfLaurent scale(const Rational& r) const {
        HalfLaurent out;
        if (r == 0) return out;
        for (const auto& [e, v] : terms_) out.terms_.emplace(e, v.scale(r));
        return out;
    }

    HalfLaurent mul(const HalfLaurent& o) const {
        HalfLaurent out;
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) out.add_term(e1 + e2, c1.mul(c2));
        return out;
    }

    // x -> 1/x
    HalfLaurent mirror_x() const {
        HalfLaurent out;
        for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
        return out;
    }

    // x -> x^p (keys multiply; p may be negative)
    HalfLaurent compose_power(std::int64_t p) const {
        HalfLaurent out;
        for (const auto& [e, c] : terms_) out.add_term(e * p, c);
        return out;
    }

    // x -> c*x for a unit c; only defined on x-integral polynomials (even
    // keys), where the coefficient at x^j picks up c^j.
    HalfLaurent scale_x(const Cyclotomic& c) const {
        HalfLaurent out;
        for (const auto& [e, v] : terms_) {
            if (e % 2 != 0) throw std::domain_error("scale_x: half-integral exponent");
            out.add_term(e, v.mul(c.pow(e / 2)));
        }
        return out;
    }

    friend bool operator==(const HalfLaurent& a, const HalfLaurent& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        auto ita = a.terms_.begin();
        auto itb = b.terms_.begin();
        for (; ita != a.terms_.end(); ++ita, ++itb) {
            if (ita->first != itb->first || !(ita->second == itb->second)) return false;
        }
        return true;
    }
    friend bool operator!=(const HalfLaurent& a, const HalfLaurent& b) { return !(a == b); }

    // Long division by leading-term elimination.  Keys are Laurent, so both
    // operands are shifted to ordinary polynomials first; the loop terminates
    // because the top degree of the remainder strictly decreases.
    static std::pair<HalfLaurent, HalfLaurent> exact_divide(const HalfLaurent& p,
                                                            const HalfLaurent& d) {
        if (d.is_zero()) throw std::domain_error("exact_divide: division by zero");
        if (p.is_zero()) return {HalfLaurent(), HalfLaurent()};
        const std::int64_t pmin = p.min_key(), dmin = d.min_key();
        Map pp, dd;
        for (const auto& [e, c] : p.terms_) pp.emplace(e - pmin, c);
        for (const auto& [e, c] : d.terms_) dd.emplace(e - dmin, c);
        const std::int64_t dtop = dd.rbegin()->first;
        const Cyclotomic lead_inv = dd.rbegin()->second.inv();
        HalfLaurent q;
        while (!pp.empty() && pp.rbegin()->first >= dtop) {
            const std::int64_t top = pp.rbegin()->first;
            const Cyclotomic c = pp.rbegin()->second.mul(lead_inv);
            const std::int64_t e = top - dtop;
            q.terms_.emplace(e, c);
            for (const auto& [de, dv] : dd) {
                const std::int64_t ne = de + e;
                const Cyclotomic sub = dv.mul(c);
                auto it = pp.find(ne);
                if (it == pp.end()) {
                    pp.emplace(ne, sub.neg());
                } else {
                    it->second = it->second.sub(sub);
                    if (it->second.is_zero()) pp.erase(it);
                }
            }
        }
        const std::int64_t shift = pmin - dmin;
        HalfLaurent quo, rem;
        for (const auto& [e, c] : q.terms_) quo.terms_.emplace(e + shift, c);
        for (const auto& [e, c] : pp) rem.terms_.emplace(e + pmin, c);
        return {std::move(quo), std::move(rem)};
    }

    // First n_terms coefficients of the ascending expansion of 1/this.  The
    // support must advance in even steps (x-integral input); the result has
    // keys -min_key, -min_key + 2, ...
    HalfLaurent series_invert(std::size_t n_terms) const {
        if (is_zero()) throw std::domain_error("series_invert: zero series");
        const std::int64_t kmin = min_key();
        std::map<std::int64_t, Cyclotomic> shifted;  // x-exponent -> coeff
        for (const auto& [e, c] : terms_) {
            if ((e - kmin) % 2 != 0)
                throw std::domain_error("series_invert: mixed half-integral support");
            shifted.emplace((e - kmin) / 2, c);
        }
        const Cyclotomic c0i = shifted.at(0).inv();
        std::vector<Cyclotomic> inv(n_terms, Cyclotomic::zero());
        inv[0] = c0i;
        for (std::size_t n = 1; n < n_terms; ++n) {
            Cyclotomic acc = Cyclotomic::zero();
            for (const auto& [k, v] : shifted) {
                if (k >= 1 && static_cast<std::size_t>(k) <= n)
                    acc = acc.add(v.mul(inv[n - static_cast<std::size_t>(k)]));
            }
            inv[n] = acc.neg().mul(c0i);
        }
        HalfLaurent out;
        for (std::size_t n = 0; n < n_terms; ++n)
            out.add_term(-kmin + 2 * static_cast<std::int64_t>(n), inv[n]);
        return out;
    }

    std::string str(const std::string& var = "x") const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!first) os << " + ";
            os << "(" << it->second.str() << ")";
            if (it->first != 0) {
                os << "*" << var << "^";
                if (it->first % 2 == 0) {
                    os << it->first / 2;
                } else {
                    os << "(" << it->first << "/2)";
                }
            }
            first = false;
        }
        return os.str();
    }

private:
    void require_nonzero() const {
        if (terms_.empty()) throw std::domain_error("HalfLaurent: empty polynomial");
    }

    Map terms_;
};

}  // namespace adoforge
