#include <bit>

#include "gtheta/kernels.hpp"

namespace gtheta::simd::scalar {

ByteTally tally_bytes(const std::uint8_t* data, std::size_t len) {
    ByteTally t;
    for (std::size_t i = 0; i < len; ++i) {
        t.zero += data[i] == 0;
        t.one += data[i] == 1;
    }
    t.other = len - t.zero - t.one;
    return t;
}

std::uint64_t and_popcount_shifted(const std::uint64_t* a, const std::uint64_t* b, std::size_t n, unsigned shift) {
    std::uint64_t total = 0;
    if (shift == 0) {
        for (std::size_t k = 0; k < n; ++k) total += std::popcount(a[k] & b[k]);
        return total;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const std::uint64_t w = (b[k] >> shift) | (b[k + 1] << (64 - shift));
        total += std::popcount(a[k] & w);
    }
    return total;
}

}  // namespace gtheta::simd::scalar
