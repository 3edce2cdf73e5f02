// Exact rational scalars and their serialized form (decimal numerator /
// denominator strings, so JSON round trips are bit-exact at any magnitude).
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace adoforge {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rational_pow(const Rational& base, std::int64_t e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("rational_pow: 0^negative");
        return Rational(1) / rational_pow(base, -e);
    }
    Rational r(1), b(base);
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline std::pair<std::string, std::string> rational_to_strings(const Rational& r) {
    return {numerator(r).str(), denominator(r).str()};
}

inline Rational rational_from_strings(const std::string& num, const std::string& den) {
    Integer n(num), d(den);
    if (d == 0) throw std::invalid_argument("rational_from_strings: zero denominator");
    return Rational(n, d);
}

}  // namespace adoforge
