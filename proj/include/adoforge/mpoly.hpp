// Sparse exact polynomials in (x, q, a, t) with 64-bit exponents, used by the
// refined (t-deformed) series.  Exponents may be negative; coefficients are
// rational and zero coefficients are never stored.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>

#include "rational.hpp"

namespace adoforge {

using Exponents = std::array<std::int64_t, 4>;  // (e_x, e_q, e_a, e_t)

static_assert(sizeof(std::int64_t) == 8, "MPoly exponents are 64-bit");

class MPoly {
public:
    using Map = std::map<Exponents, Rational>;

    MPoly() = default;

    static MPoly one() { return monomial({0, 0, 0, 0}, Rational(1)); }

    static MPoly monomial(const Exponents& e, const Rational& c) {
        MPoly p;
        if (c != 0) p.terms_.emplace(e, c);
        return p;
    }

    static MPoly mono(std::int64_t ex, std::int64_t eq, std::int64_t ea, std::int64_t et,
                      const Rational& c = Rational(1)) {
        return monomial({ex, eq, ea, et}, c);
    }

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Exponents& e, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    void add_in_place(const MPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
    }

    MPoly add(const MPoly& o) const {
        MPoly out(*this);
        out.add_in_place(o);
        return out;
    }

    MPoly scale(const Rational& r) const {
        MPoly out;
        if (r == 0) return out;
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * r);
        return out;
    }

    MPoly mul(const MPoly& o) const {
        MPoly out;
        for (const auto& [e1, c1] : terms_) {
            for (const auto& [e2, c2] : o.terms_) {
                out.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]},
                             c1 * c2);
            }
        }
        return out;
    }

    // All four exponents negated (the series mirror).
    MPoly mirror() const {
        MPoly out;
        for (const auto& [e, c] : terms_) out.terms_.emplace(Exponents{-e[0], -e[1], -e[2], -e[3]}, c);
        return out;
    }

    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            os << c;
            const char* names[4] = {"x", "q", "a", "t"};
            for (int v = 0; v < 4; ++v)
                if (e[static_cast<std::size_t>(v)] != 0)
                    os << "*" << names[v] << "^" << e[static_cast<std::size_t>(v)];
            first = false;
        }
        return os.str();
    }

private:
    Map terms_;
};

// (w; q)_m = prod_{i=1}^m (1 - w q^{i-1}) for a monomial w.
inline MPoly q_pochhammer(const MPoly& w, std::int64_t m) {
    if (w.size() > 1) throw std::invalid_argument("q_pochhammer: w must be a monomial");
    MPoly out = MPoly::one();
    for (std::int64_t i = 1; i <= m; ++i) {
        MPoly factor = MPoly::one();
        factor.add_in_place(w.mul(MPoly::mono(0, i - 1, 0, 0)).scale(Rational(-1)));
        out = out.mul(factor);
    }
    return out;
}

// (q; q)_m and its mirror (q^{-1}; q^{-1})_m.
inline MPoly qq_pochhammer(std::int64_t m, int sign = +1) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("qq_pochhammer: sign must be +-1");
    MPoly out = MPoly::one();
    for (std::int64_t i = 1; i <= m; ++i) {
        MPoly factor = MPoly::one();
        factor.add_in_place(MPoly::mono(0, sign * i, 0, 0).scale(Rational(-1)));
        out = out.mul(factor);
    }
    return out;
}

// Exact division by a polynomial in q alone.  Since the denominator carries
// no x, a, t, the division decomposes into independent one-variable Laurent
// divisions per (e_x, e_a, e_t) slice; any surviving remainder is an error.
inline MPoly divide_q_exact(const MPoly& num, const MPoly& den) {
    if (den.is_zero()) throw std::domain_error("divide_q_exact: division by zero");
    if (num.is_zero()) return {};
    std::map<std::int64_t, Rational> dq;
    for (const auto& [e, c] : den.terms()) {
        if (e[0] != 0 || e[2] != 0 || e[3] != 0)
            throw std::invalid_argument("divide_q_exact: denominator must involve only q");
        dq.emplace(e[1], c);
    }
    const std::int64_t dtop = dq.rbegin()->first;
    const std::int64_t dbot = dq.begin()->first;
    const Rational lead_inv = Rational(1) / dq.rbegin()->second;

    using Slice = std::array<std::int64_t, 3>;  // (e_x, e_a, e_t)
    std::map<Slice, std::map<std::int64_t, Rational>> slices;
    for (const auto& [e, c] : num.terms()) slices[{e[0], e[2], e[3]}].emplace(e[1], c);

    MPoly out;
    for (auto& [key, poly] : slices) {
        // Descending elimination; stops once the slice span drops below the
        // denominator span, at which point a nonzero slice is a remainder.
        while (!poly.empty() && poly.rbegin()->first - poly.begin()->first >= dtop - dbot) {
            const std::int64_t top = poly.rbegin()->first;
            const Rational qc = poly.rbegin()->second * lead_inv;
            out.add_term({key[0], top - dtop, key[1], key[2]}, qc);
            for (const auto& [de, dc] : dq) {
                const std::int64_t ne = top - dtop + de;
                auto it = poly.find(ne);
                if (it == poly.end()) {
                    poly.emplace(ne, -qc * dc);
                } else {
                    it->second -= qc * dc;
                    if (it->second == 0) poly.erase(it);
                }
            }
        }
        if (!poly.empty()) throw std::logic_error("divide_q_exact: nonzero remainder");
    }
    return out;
}

// Gaussian binomial [w over n]_q; out-of-range n gives the zero polynomial.
inline MPoly q_binomial(std::int64_t w, std::int64_t n) {
    if (n < 0 || n > w) return {};
    return divide_q_exact(qq_pochhammer(w), qq_pochhammer(n).mul(qq_pochhammer(w - n)));
}

}  // namespace adoforge
