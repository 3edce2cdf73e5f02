// Exact arithmetic in cyclotomic fields Q(zeta_n).
//
// Elements are stored in the power basis 1, zeta, ..., zeta^{deg-1} modulo the
// n-th cyclotomic polynomial Phi_n, with deg = deg Phi_n.  This representation
// is canonical: two elements of the same order are equal iff their coefficient
// vectors are equal, so equality of mixed orders is decided by lifting both to
// the lcm order.  Phi_n itself is obtained by exact division of x^n - 1 by the
// Phi_d of the proper divisors d | n, entirely over Q.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>

#include "rational.hpp"

namespace adoforge {

namespace detail {

// Dense rational polynomials, ascending coefficients, no trailing zeros.
using Poly = std::vector<Rational>;

inline void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Division with remainder; b must be nonzero.
inline std::pair<Poly, Poly> poly_divmod(Poly a, Poly b) {
    poly_trim(b);
    if (b.empty()) throw std::domain_error("poly_divmod: division by zero");
    const std::size_t db = b.size() - 1;
    Poly q(a.size() > db ? a.size() - db : 0, Rational(0));
    const Rational inv_lead = Rational(1) / b.back();
    for (std::size_t i = a.size(); i-- > db;) {
        Rational c = a[i] * inv_lead;
        if (c != 0) {
            q[i - db] = c;
            for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
        }
    }
    poly_trim(a);
    return {std::move(q), std::move(a)};
}

inline const Poly& cyclotomic_poly(std::int64_t n);

inline Poly compute_cyclotomic_poly(std::int64_t n) {
    Poly p(static_cast<std::size_t>(n) + 1, Rational(0));
    p.front() = -1;
    p.back() = 1;  // x^n - 1
    for (std::int64_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto [q, r] = poly_divmod(p, cyclotomic_poly(d));
        if (!r.empty()) throw std::logic_error("cyclotomic_poly: inexact division");
        p = std::move(q);
    }
    return p;
}

inline const Poly& cyclotomic_poly(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_poly: order must be positive");
    static std::map<std::int64_t, Poly> cache;
    static std::recursive_mutex mu;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_cyclotomic_poly(n)).first;
    return it->second;
}

// x^k mod Phi_n for k in [deg, 2*deg-2], the only powers produced by a product
// of two reduced elements.
struct ReductionTable {
    std::size_t deg;
    std::vector<Poly> rows;  // rows[k - deg]
};

inline const ReductionTable& reduction_table(std::int64_t n) {
    static std::map<std::int64_t, ReductionTable> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    const Poly& phi = cyclotomic_poly(n);
    ReductionTable t;
    t.deg = phi.size() - 1;
    if (t.deg >= 1) {
        Poly cur(t.deg, Rational(0));
        for (std::size_t j = 0; j < t.deg; ++j) cur[j] = -phi[j];  // x^deg
        t.rows.push_back(cur);
        for (std::size_t k = t.deg + 1; k + 1 < 2 * t.deg; ++k) {
            Poly nxt(t.deg, Rational(0));
            for (std::size_t i = 0; i < t.deg; ++i) {
                if (cur[i] == 0) continue;
                if (i + 1 < t.deg) {
                    nxt[i + 1] += cur[i];
                } else {
                    for (std::size_t j = 0; j < t.deg; ++j)
                        nxt[j] += cur[i] * t.rows[0][j];
                }
            }
            cur = std::move(nxt);
            t.rows.push_back(cur);
        }
    }
    return cache.emplace(n, std::move(t)).first->second;
}

}  // namespace detail

class Cyclotomic {
public:
    Cyclotomic() : n_(1), c_(1, Rational(0)) {}

    Cyclotomic(std::int64_t n, std::vector<Rational> coeffs) : n_(n), c_(std::move(coeffs)) {
        if (c_.size() != detail::reduction_table(n_).deg)
            throw std::invalid_argument("Cyclotomic: coefficient length != deg Phi_n");
    }

    static Cyclotomic rational(const Rational& x, std::int64_t n = 1) {
        std::vector<Rational> c(detail::reduction_table(n).deg, Rational(0));
        c[0] = x;
        return Cyclotomic(n, std::move(c), 0);
    }

    static Cyclotomic integer(std::int64_t x, std::int64_t n = 1) {
        return rational(Rational(x), n);
    }

    static Cyclotomic zero(std::int64_t n = 1) { return rational(Rational(0), n); }
    static Cyclotomic one(std::int64_t n = 1) { return rational(Rational(1), n); }

    // zeta_n^k, reduced into the power basis.
    static Cyclotomic zeta(std::int64_t n, std::int64_t k = 1) {
        if (n < 1) throw std::invalid_argument("zeta: order must be positive");
        k %= n;
        if (k < 0) k += n;
        const std::size_t deg = detail::reduction_table(n).deg;
        if (n == 1) return one(1);
        if (static_cast<std::size_t>(k) < deg) {
            std::vector<Rational> c(deg, Rational(0));
            c[static_cast<std::size_t>(k)] = 1;
            return Cyclotomic(n, std::move(c), 0);
        }
        Cyclotomic e = zeta(n, static_cast<std::int64_t>(deg) - 1);
        for (std::int64_t i = deg - 1; i < k; ++i) e = e.mul_by_zeta();
        return e;
    }

    std::int64_t order() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& v : c_)
            if (v != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    Rational rational_part() const { return c_[0]; }

    Cyclotomic mul_by_zeta() const {
        const auto& t = detail::reduction_table(n_);
        std::vector<Rational> out(t.deg, Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            if (i + 1 < t.deg) {
                out[i + 1] += c_[i];
            } else {
                for (std::size_t j = 0; j < t.deg; ++j) out[j] += c_[i] * t.rows[0][j];
            }
        }
        return Cyclotomic(n_, std::move(out), 0);
    }

    // Embed into Q(zeta_m); requires n | m.
    Cyclotomic lift(std::int64_t m) const {
        if (m == n_) return *this;
        if (m % n_ != 0) throw std::invalid_argument("lift: target order not a multiple");
        const std::int64_t step = m / n_;
        Cyclotomic out = zero(m);
        Cyclotomic zp = one(m);
        const Cyclotomic z = zeta(m, step);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] != 0) out = out.add(zp.scale(c_[i]));
            if (i + 1 < c_.size()) zp = zp.mul(z);
        }
        return out;
    }

    Cyclotomic scale(const Rational& r) const {
        std::vector<Rational> out(c_);
        for (auto& v : out) v *= r;
        return Cyclotomic(n_, std::move(out), 0);
    }

    Cyclotomic neg() const { return scale(Rational(-1)); }

    Cyclotomic add(const Cyclotomic& o) const {
        auto [a, b] = common(*this, o);
        for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
        return a;
    }

    Cyclotomic sub(const Cyclotomic& o) const {
        auto [a, b] = common(*this, o);
        for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
        return a;
    }

    Cyclotomic mul(const Cyclotomic& o) const {
        auto [a, b] = common(*this, o);
        const auto& t = detail::reduction_table(a.n_);
        const std::size_t deg = t.deg;
        std::vector<Rational> prod(2 * deg - 1, Rational(0));
        for (std::size_t i = 0; i < deg; ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < deg; ++j)
                if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
        }
        std::vector<Rational> out(prod.begin(), prod.begin() + deg);
        for (std::size_t k = deg; k < 2 * deg - 1; ++k) {
            if (prod[k] == 0) continue;
            const auto& row = t.rows[k - deg];
            for (std::size_t j = 0; j < deg; ++j) out[j] += prod[k] * row[j];
        }
        return Cyclotomic(a.n_, std::move(out), 0);
    }

    // Multiplicative inverse via the extended Euclidean algorithm against
    // Phi_n; gcd is a nonzero constant because Phi_n is irreducible over Q.
    Cyclotomic inv() const {
        if (is_zero()) throw std::domain_error("Cyclotomic::inv: zero element");
        detail::Poly phi = (n_ > 1) ? detail::cyclotomic_poly(n_)
                                    : detail::Poly{Rational(-1), Rational(1)};
        detail::Poly a(c_);
        detail::poly_trim(a);
        detail::Poly r0 = phi, r1 = a;
        detail::Poly s0{Rational(0)}, s1{Rational(1)};
        while (!r1.empty()) {
            auto [q, r] = detail::poly_divmod(r0, r1);
            r0 = std::move(r1);
            r1 = std::move(r);
            detail::Poly ns = s0;
            for (std::size_t i = 0; i < q.size(); ++i) {
                if (q[i] == 0) continue;
                for (std::size_t j = 0; j < s1.size(); ++j) {
                    if (ns.size() <= i + j) ns.resize(i + j + 1, Rational(0));
                    ns[i + j] -= q[i] * s1[j];
                }
            }
            detail::poly_trim(ns);
            s0 = std::move(s1);
            s1 = std::move(ns);
        }
        if (r0.size() != 1) throw std::logic_error("Cyclotomic::inv: non-constant gcd");
        const Rational c = Rational(1) / r0[0];
        std::vector<Rational> out(c_.size(), Rational(0));
        for (std::size_t i = 0; i < s0.size(); ++i) out[i] = s0[i] * c;
        return Cyclotomic(n_, std::move(out), 0);
    }

    // Galois action zeta_n -> zeta_n^k; k must be coprime to the order.
    Cyclotomic galois(std::int64_t k) const {
        k %= n_;
        if (k < 0) k += n_;
        if (std::gcd(k, n_) != 1) throw std::invalid_argument("galois: k not coprime to order");
        Cyclotomic out = zero(n_);
        for (std::size_t j = 0; j < c_.size(); ++j) {
            if (c_[j] == 0) continue;
            out = out.add(zeta(n_, static_cast<std::int64_t>(j) * k).scale(c_[j]));
        }
        return out;
    }

    Cyclotomic pow(std::int64_t k) const {
        if (k < 0) return inv().pow(-k);
        Cyclotomic r = one(n_);
        Cyclotomic b = *this;
        while (k) {
            if (k & 1) r = r.mul(b);
            b = b.mul(b);
            k >>= 1;
        }
        return r;
    }

    friend bool operator==(const Cyclotomic& x, const Cyclotomic& y) {
        auto [a, b] = common(x, y);
        return a.c_ == b.c_;
    }
    friend bool operator!=(const Cyclotomic& x, const Cyclotomic& y) { return !(x == y); }

    // Numerical embedding zeta_n -> exp(2 pi i / n) with |error| < 10^-digits.
    // Evaluated in 100-digit decimal floats; digits is capped accordingly.
    std::complex<double> to_complex_double() const {
        auto [re, im] = to_complex(15);
        return {std::stod(re), std::stod(im)};
    }

    std::pair<std::string, std::string> to_complex(int digits) const {
        using Big = boost::multiprecision::cpp_dec_float_100;
        if (digits < 1 || digits > 80)
            throw std::invalid_argument("to_complex: digits out of supported range");
        const Big two_pi = 2 * boost::math::constants::pi<Big>();
        Big re(0), im(0);
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k] == 0) continue;
            Big coeff = static_cast<Big>(numerator(c_[k]).str()) /
                        static_cast<Big>(denominator(c_[k]).str());
            Big angle = two_pi * static_cast<long long>(k % static_cast<std::size_t>(n_)) /
                        static_cast<long long>(n_);
            re += coeff * cos(angle);
            im += coeff * sin(angle);
        }
        auto fmt = [&](const Big& v) {
            std::ostringstream os;
            os.precision(digits + 5);
            os << std::fixed << v;
            return os.str();
        };
        return {fmt(re), fmt(im)};
    }

    // Pretty form: rationals plainly, Q(zeta_4) as a+bi, Q(zeta_3) as a+b*z3,
    // anything else in the power basis.
    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        auto emit = [&](const Rational& v, const std::string& unit) {
            if (v == 0) return;
            if (!first) os << (v > 0 ? "+" : "");
            std::ostringstream num;
            num << v;
            std::string vs = num.str();
            if (unit.empty()) {
                os << vs;
            } else if (vs == "1") {
                os << unit;
            } else if (vs == "-1") {
                os << "-" << unit;
            } else {
                os << vs << "*" << unit;
            }
            first = false;
        };
        if (n_ == 4) {
            emit(c_[0], "");
            emit(c_[1], "i");
        } else if (n_ == 3) {
            emit(c_[0], "");
            emit(c_[1], "z3");
        } else {
            for (std::size_t k = 0; k < c_.size(); ++k)
                emit(c_[k], k == 0 ? "" : "z" + std::to_string(n_) +
                                              (k == 1 ? "" : "^" + std::to_string(k)));
        }
        return os.str();
    }

private:
    Cyclotomic(std::int64_t n, std::vector<Rational> coeffs, int) : n_(n), c_(std::move(coeffs)) {}

    static std::pair<Cyclotomic, Cyclotomic> common(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.n_ == b.n_) return {a, b};
        const std::int64_t m = std::lcm(a.n_, b.n_);
        return {a.lift(m), b.lift(m)};
    }

    std::int64_t n_;
    std::vector<Rational> c_;
};

}  // namespace adoforge
