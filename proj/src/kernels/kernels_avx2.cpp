#include <immintrin.h>

#include <bit>

#include "kernels_impl.hpp"

namespace gtheta::simd::avx2 {

namespace {

// Per-byte popcount through a nibble lookup, summed into four 64-bit lanes.
inline __m256i popcount_lanes(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    const __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    return _mm256_sad_epu8(bytes, _mm256_setzero_si256());
}

inline std::uint64_t horizontal_sum(__m256i v) {
    return static_cast<std::uint64_t>(_mm256_extract_epi64(v, 0)) +
           static_cast<std::uint64_t>(_mm256_extract_epi64(v, 1)) +
           static_cast<std::uint64_t>(_mm256_extract_epi64(v, 2)) +
           static_cast<std::uint64_t>(_mm256_extract_epi64(v, 3));
}

}  // namespace

ByteTally tally_bytes(const std::uint8_t* data, std::size_t len) {
    const __m256i zero = _mm256_setzero_si256();
    const __m256i one = _mm256_set1_epi8(1);
    std::uint64_t zeros = 0;
    std::uint64_t ones = 0;
    std::size_t i = 0;
    for (; i + 32 <= len; i += 32) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i));
        zeros += std::popcount(static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(v, zero))));
        ones += std::popcount(static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(v, one))));
    }
    ByteTally t = scalar::tally_bytes(data + i, len - i);
    t.zero += zeros;
    t.one += ones;
    t.other = len - t.zero - t.one;
    return t;
}

std::uint64_t and_popcount_shifted(const std::uint64_t* a, const std::uint64_t* b, std::size_t n, unsigned shift) {
    // Shift counts >= 64 clear a lane, so shift == 0 needs no special case.
    const __m128i right = _mm_cvtsi32_si128(static_cast<int>(shift));
    const __m128i left = _mm_cvtsi32_si128(static_cast<int>(64 - shift));
    __m256i acc = _mm256_setzero_si256();
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + k));
        const __m256i lo = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + k));
        const __m256i hi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + k + 1));
        const __m256i w = _mm256_or_si256(_mm256_srl_epi64(lo, right), _mm256_sll_epi64(hi, left));
        acc = _mm256_add_epi64(acc, popcount_lanes(_mm256_and_si256(va, w)));
    }
    return horizontal_sum(acc) + scalar::and_popcount_shifted(a + k, b + k, n - k, shift);
}

}  // namespace gtheta::simd::avx2
