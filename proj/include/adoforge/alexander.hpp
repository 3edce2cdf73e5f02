// Alexander polynomials of torus knots in the symmetric normalization
// Delta(x) = Delta(1/x), Delta(1) = 1, computed by the exact division
//     Delta_{T(s,t)}(x) = u(st) u(1) / (u(s) u(t)),  u(k) = x^{k/2} - x^{-k/2}.
#pragma once

#include <cstdint>

#include "half_laurent.hpp"

namespace adoforge {

struct TorusKnot;

inline HalfLaurent alexander(std::int64_t s, std::int64_t t) {
    const HalfLaurent num = HalfLaurent::u(s * t).mul(HalfLaurent::u(1));
    const HalfLaurent den = HalfLaurent::u(s).mul(HalfLaurent::u(t));
    auto [quo, rem] = HalfLaurent::exact_divide(num, den);
    if (!rem.is_zero()) throw std::logic_error("alexander: inexact division");
    return quo;
}

template <class Knot>
HalfLaurent alexander(const Knot& K) {
    return alexander(K.s, K.t);
}

// Delta(x^p), the composition that appears when relating F_K at q = zeta_p to
// ADO_p.  p = 1 returns Delta itself.
inline HalfLaurent alexander_composed(std::int64_t s, std::int64_t t, std::int64_t p) {
    return alexander(s, t).compose_power(p);
}

}  // namespace adoforge
