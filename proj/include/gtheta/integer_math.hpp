#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>

namespace gtheta {

/// floor(sqrt(n)), exact for all 64-bit n.
constexpr std::uint64_t isqrt(std::uint64_t n) noexcept {
    if (n < 2) return n;
    // Newton from a power-of-two overestimate; monotone decreasing to the floor.
    std::uint64_t x = std::uint64_t{1} << ((std::bit_width(n) + 1) / 2);
    for (;;) {
        const std::uint64_t y = (x + n / x) / 2;
        if (y >= x) return x;
        x = y;
    }
}

/// ceil(sqrt(n)).
constexpr std::uint64_t ceil_sqrt(std::uint64_t n) noexcept {
    const std::uint64_t r = isqrt(n);
    return r * r == n ? r : r + 1;
}

/// #{x in [a, b] : d | x}; zero for an empty range.
constexpr std::uint64_t multiples_in(std::uint64_t a, std::uint64_t b, std::uint64_t d) noexcept {
    if (a > b) return 0;
    return b / d - (a == 0 ? 0 : (a - 1) / d) + (a == 0 ? 1 : 0);
}

/// #{x in [a, b] : x = r (mod d)} for 0 <= r < d.
constexpr std::uint64_t class_members_in(std::uint64_t a, std::uint64_t b, std::uint64_t r,
                                         std::uint64_t d) noexcept {
    if (a > b) return 0;
    // Count of x <= t with x = r (mod d), x >= 0.
    auto upto = [r, d](std::uint64_t t) -> std::uint64_t { return t < r ? 0 : (t - r) / d + 1; };
    return upto(b) - (a == 0 ? 0 : upto(a - 1));
}

/// a * b, saturating at UINT64_MAX.
constexpr std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) noexcept {
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) return std::numeric_limits<std::uint64_t>::max();
    return out;
}

}  // namespace gtheta
