#pragma once

// Per-ISA kernel entry points. Each namespace is defined in a translation
// unit compiled with the matching target flags; call only after
// isa_available() says so.

#include "gtheta/kernels.hpp"

namespace gtheta::simd {

#if defined(GTHETA_X86_KERNELS)
namespace avx2 {
ByteTally tally_bytes(const std::uint8_t* data, std::size_t len);
std::uint64_t and_popcount_shifted(const std::uint64_t* a, const std::uint64_t* b, std::size_t n, unsigned shift);
}  // namespace avx2

namespace avx512 {
ByteTally tally_bytes(const std::uint8_t* data, std::size_t len);
std::uint64_t and_popcount_shifted(const std::uint64_t* a, const std::uint64_t* b, std::size_t n, unsigned shift);
}  // namespace avx512
#endif

#if defined(GTHETA_NEON_KERNELS)
namespace neon {
ByteTally tally_bytes(const std::uint8_t* data, std::size_t len);
std::uint64_t and_popcount_shifted(const std::uint64_t* a, const std::uint64_t* b, std::size_t n, unsigned shift);
}  // namespace neon
#endif

}  // namespace gtheta::simd
