#include <immintrin.h>

#include <bit>

#include "kernels_impl.hpp"

namespace gtheta::simd::avx512 {

ByteTally tally_bytes(const std::uint8_t* data, std::size_t len) {
    const __m512i one = _mm512_set1_epi8(1);
    std::uint64_t zeros = 0;
    std::uint64_t ones = 0;
    std::size_t i = 0;
    for (; i + 64 <= len; i += 64) {
        const __m512i v = _mm512_loadu_si512(data + i);
        zeros += std::popcount(static_cast<std::uint64_t>(_mm512_testn_epi8_mask(v, v)));
        ones += std::popcount(static_cast<std::uint64_t>(_mm512_cmpeq_epi8_mask(v, one)));
    }
    ByteTally t = scalar::tally_bytes(data + i, len - i);
    t.zero += zeros;
    t.one += ones;
    t.other = len - t.zero - t.one;
    return t;
}

std::uint64_t and_popcount_shifted(const std::uint64_t* a, const std::uint64_t* b, std::size_t n, unsigned shift) {
    const __m128i right = _mm_cvtsi32_si128(static_cast<int>(shift));
    const __m128i left = _mm_cvtsi32_si128(static_cast<int>(64 - shift));
    __m512i acc = _mm512_setzero_si512();
    std::size_t k = 0;
    for (; k + 8 <= n; k += 8) {
        const __m512i va = _mm512_loadu_si512(a + k);
        const __m512i lo = _mm512_loadu_si512(b + k);
        const __m512i hi = _mm512_loadu_si512(b + k + 1);
        const __m512i w = _mm512_or_si512(_mm512_srl_epi64(lo, right), _mm512_sll_epi64(hi, left));
        acc = _mm512_add_epi64(acc, _mm512_popcnt_epi64(_mm512_and_si512(va, w)));
    }
    return static_cast<std::uint64_t>(_mm512_reduce_add_epi64(acc)) +
           scalar::and_popcount_shifted(a + k, b + k, n - k, shift);
}

}  // namespace gtheta::simd::avx512
