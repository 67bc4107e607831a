#pragma once

#include <cstdint>
#include <stdexcept>

namespace gdiv {

// All arithmetic near the 64-bit boundary traps instead of wrapping.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("int64 overflow in addition");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("int64 overflow in subtraction");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("int64 overflow in multiplication");
    return r;
}

inline std::uint64_t checked_umul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("uint64 overflow in multiplication");
    return r;
}

// Exact binomial coefficient C(n, k); every intermediate division is exact.
inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    __int128 r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > INT64_MAX) throw std::overflow_error("binomial exceeds int64");
    }
    return static_cast<std::int64_t>(r);
}

} // namespace gdiv
