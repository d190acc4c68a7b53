#pragma once

// Checked exact integer helpers. Everything is computed in 128-bit and narrowed
// back to 64-bit with an explicit range check.

#include <cstdint>
#include <limits>

#include "lattice/errors.hpp"

namespace lattice {

using Coord = std::int64_t;
using Wide = __int128;

inline Wide checked_mul(Wide a, Wide b) {
    Wide r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("128-bit multiplication overflow");
    return r;
}

inline Wide checked_add(Wide a, Wide b) {
    Wide r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("128-bit addition overflow");
    return r;
}

inline Wide checked_sub(Wide a, Wide b) {
    Wide r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("128-bit subtraction overflow");
    return r;
}

inline Coord narrow(Wide v) {
    if (v < static_cast<Wide>(std::numeric_limits<Coord>::min()) ||
        v > static_cast<Wide>(std::numeric_limits<Coord>::max())) {
        throw OverflowError("result does not fit in 64 bits");
    }
    return static_cast<Coord>(v);
}

constexpr Wide wide_abs(Wide v) { return v < 0 ? -v : v; }

/// Floor division; `den` must be nonzero.
constexpr Wide floor_div(Wide num, Wide den) {
    Wide q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

constexpr Wide ceil_div(Wide num, Wide den) { return -floor_div(-num, den); }

/// Remainder with the sign of `den`, so 0 <= r < den for den > 0.
constexpr Wide floor_mod(Wide num, Wide den) { return num - floor_div(num, den) * den; }

constexpr Wide wide_gcd(Wide a, Wide b) {
    a = wide_abs(a);
    b = wide_abs(b);
    while (b != 0) {
        Wide r = a % b;
        a = b;
        b = r;
    }
    return a;
}

}  // namespace lattice
