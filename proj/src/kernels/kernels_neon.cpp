#include <arm_neon.h>

#include "kernels_impl.hpp"

namespace gtheta::simd::neon {

ByteTally tally_bytes(const std::uint8_t* data, std::size_t len) {
    const uint8x16_t one = vdupq_n_u8(1);
    std::uint64_t zeros = 0;
    std::uint64_t ones = 0;
    std::size_t i = 0;
    for (; i + 16 <= len; i += 16) {
        const uint8x16_t v = vld1q_u8(data + i);
        // Comparison lanes are 0xff; shift down to 1 and add across.
        zeros += vaddvq_u8(vshrq_n_u8(vceqzq_u8(v), 7));
        ones += vaddvq_u8(vshrq_n_u8(vceqq_u8(v, one), 7));
    }
    ByteTally t = scalar::tally_bytes(data + i, len - i);
    t.zero += zeros;
    t.one += ones;
    t.other = len - t.zero - t.one;
    return t;
}

std::uint64_t and_popcount_shifted(const std::uint64_t* a, const std::uint64_t* b, std::size_t n, unsigned shift) {
    const int64x2_t right = vdupq_n_s64(-static_cast<std::int64_t>(shift));
    const int64x2_t left = vdupq_n_s64(static_cast<std::int64_t>(64 - shift));
    uint64x2_t acc = vdupq_n_u64(0);
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        const uint64x2_t va = vld1q_u64(a + k);
        const uint64x2_t lo = vld1q_u64(b + k);
        const uint64x2_t hi = vld1q_u64(b + k + 1);
        // vshlq with a count of 64 yields 0, matching the funnel at shift == 0.
        const uint64x2_t w = vorrq_u64(vshlq_u64(lo, right), vshlq_u64(hi, left));
        const uint8x16_t bytes = vcntq_u8(vreinterpretq_u8_u64(vandq_u64(va, w)));
        acc = vpadalq_u32(acc, vpaddlq_u16(vpaddlq_u8(bytes)));
    }
    return vaddvq_u64(acc) + scalar::and_popcount_shifted(a + k, b + k, n - k, shift);
}

}  // namespace gtheta::simd::neon
