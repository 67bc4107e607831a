#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "gdiv/checked.hpp"

namespace gdiv {

// Exact Gaussian integer a+bi with 64-bit components; arithmetic traps on
// overflow rather than wrapping.
struct GaussInt {
    std::int64_t re = 0;
    std::int64_t im = 0;

    constexpr GaussInt() = default;
    constexpr GaussInt(std::int64_t r, std::int64_t i) : re(r), im(i) {}

    bool operator==(const GaussInt&) const = default;
    bool is_zero() const { return re == 0 && im == 0; }
};

// The four units of Z[i], stored as the power t of i (value = i^t).
enum class Unit : int { One = 0, I = 1, MinusOne = 2, MinusI = 3 };

constexpr GaussInt unit_value(Unit u) {
    switch (u) {
    case Unit::One:      return {1, 0};
    case Unit::I:        return {0, 1};
    case Unit::MinusOne: return {-1, 0};
    default:             return {0, -1};
    }
}

constexpr Unit unit_pow_i(int t) { return static_cast<Unit>(((t % 4) + 4) % 4); }

constexpr Unit unit_mul(Unit a, Unit b) {
    return unit_pow_i(static_cast<int>(a) + static_cast<int>(b));
}

std::uint64_t norm(GaussInt z);

GaussInt add(GaussInt z, GaussInt w);
GaussInt sub(GaussInt z, GaussInt w);
GaussInt mul(GaussInt z, GaussInt w);
inline GaussInt neg(GaussInt z) { return {checked_sub(0, z.re), checked_sub(0, z.im)}; }
inline GaussInt conj(GaussInt z) { return {z.re, checked_sub(0, z.im)}; }
inline GaussInt mul_i(GaussInt z) { return {checked_sub(0, z.im), z.re}; }
GaussInt mul_unit(GaussInt z, Unit u);

bool is_unit(GaussInt z);
bool is_canonical(GaussInt z); // in the fundamental domain re >= 1, im >= 0

// Representative of the associate class of z in {re >= 1, im >= 0},
// together with the unit u such that z = u * c.
std::pair<GaussInt, Unit> canonical_associate(GaussInt z);

// Exact division; throws std::domain_error when w does not divide z.
GaussInt divide_exact(GaussInt z, GaussInt w);
bool divides(GaussInt w, GaussInt z);

// Textual form "a+bi" / "a-bi" (optional spaces accepted on input).
GaussInt parse_gauss(std::string_view s);
std::string format_gauss(GaussInt z);

// Ordering used for factor lists and prime streams: by norm, then by
// imaginary part (puts the a>b split representative before its partner).
bool norm_less(GaussInt a, GaussInt b);

} // namespace gdiv
