#pragma once

// Internal exact-arithmetic helpers: unsigned __int128 with loud overflow
// behavior. Not installed; the public interface exposes int64 values only.

#include <cstdint>
#include <limits>

#include "codebetti/errors.hpp"

namespace codebetti::detail {

using u128 = unsigned __int128;

inline constexpr u128 u128_max = ~u128{0};

inline u128 checked_mul(u128 a, u128 b) {
    if (a != 0 && b > u128_max / a) fail(ErrorKind::OutOfRange, "128-bit overflow in multiply");
    return a * b;
}

inline u128 checked_add(u128 a, u128 b) {
    if (b > u128_max - a) fail(ErrorKind::OutOfRange, "128-bit overflow in add");
    return a + b;
}

inline u128 checked_pow(u128 base, unsigned long long e) {
    u128 out = 1;
    while (e != 0) {
        if (e & 1) out = checked_mul(out, base);
        e >>= 1;
        if (e != 0) base = checked_mul(base, base);
    }
    return out;
}

inline long long to_int64(u128 v) {
    if (v > static_cast<u128>(std::numeric_limits<long long>::max()))
        fail(ErrorKind::OutOfRange, "value exceeds the int64 range");
    return static_cast<long long>(v);
}

// Saturating variants for counting enumerations against a cap: once a value
// passes `sat` it sticks there, so comparisons against caps stay exact.
inline u128 sat_add(u128 a, u128 b, u128 sat) {
    if (a >= sat || b >= sat || a + b >= sat) return sat;
    return a + b;
}

inline u128 sat_mul(u128 a, u128 b, u128 sat) {
    if (a == 0 || b == 0) return 0;
    if (a >= sat || b >= sat || a > (u128_max / b) || a * b >= sat) return sat;
    return a * b;
}

} // namespace codebetti::detail
