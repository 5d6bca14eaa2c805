#pragma once

// Data-parallel inner loops used by the sieves.
//
// Every kernel has a scalar reference implementation; vector variants are
// compiled per ISA in their own translation units and picked at runtime
// from what the CPU reports. All variants must return identical results.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace gtheta::simd {

enum class Isa { Scalar, Avx2, Avx512, Neon };

/// Byte histogram of a sieve block: value 0, value 1, anything else.
struct ByteTally {
    std::uint64_t zero = 0;
    std::uint64_t one = 0;
    std::uint64_t other = 0;

    ByteTally& operator+=(const ByteTally& rhs) noexcept {
        zero += rhs.zero;
        one += rhs.one;
        other += rhs.other;
        return *this;
    }
    friend bool operator==(const ByteTally&, const ByteTally&) = default;
};

struct KernelTable {
    Isa isa;
    ByteTally (*tally_bytes)(const std::uint8_t* data, std::size_t len);
    // sum_k popcount(a[k] & funnel(b[k], b[k+1], shift)) for k < n, where
    // funnel(lo, hi, s) = (lo >> s) | (hi << (64 - s)) and s = 0 yields lo.
    // Reads n words of a and n + 1 words of b.
    std::uint64_t (*and_popcount_shifted)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n,
                                          unsigned shift);
};

namespace scalar {
ByteTally tally_bytes(const std::uint8_t* data, std::size_t len);
std::uint64_t and_popcount_shifted(const std::uint64_t* a, const std::uint64_t* b, std::size_t n, unsigned shift);
}  // namespace scalar

/// True when this build contains the variant and the running CPU supports it.
bool isa_available(Isa isa) noexcept;

/// ISAs usable on this machine, Scalar first.
std::vector<Isa> available_isas();

/// Kernel table for a specific ISA. Throws DomainError if unavailable.
const KernelTable& kernels_for(Isa isa);

/// The table used by tally_bytes()/and_popcount_shifted() below.
/// Defaults to the widest available ISA.
const KernelTable& active_kernels() noexcept;

/// Pins the active table; tests use this to run whole pipelines per ISA.
void force_isa(Isa isa);

std::string_view to_string(Isa isa) noexcept;

ByteTally tally_bytes(std::span<const std::uint8_t> bytes) noexcept;

/// Requires b.size() >= a.size() + 1 and shift < 64 (DomainError otherwise).
std::uint64_t and_popcount_shifted(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                                   unsigned shift);

}  // namespace gtheta::simd
