#include <atomic>

#include "gtheta/errors.hpp"
#include "kernels_impl.hpp"

namespace gtheta::simd {

namespace {

constexpr KernelTable kScalar{Isa::Scalar, &scalar::tally_bytes, &scalar::and_popcount_shifted};
#if defined(GTHETA_X86_KERNELS)
constexpr KernelTable kAvx2{Isa::Avx2, &avx2::tally_bytes, &avx2::and_popcount_shifted};
constexpr KernelTable kAvx512{Isa::Avx512, &avx512::tally_bytes, &avx512::and_popcount_shifted};
#endif
#if defined(GTHETA_NEON_KERNELS)
constexpr KernelTable kNeon{Isa::Neon, &neon::tally_bytes, &neon::and_popcount_shifted};
#endif

const KernelTable* widest_available() noexcept {
#if defined(GTHETA_X86_KERNELS)
    if (isa_available(Isa::Avx512)) return &kAvx512;
    if (isa_available(Isa::Avx2)) return &kAvx2;
#endif
#if defined(GTHETA_NEON_KERNELS)
    return &kNeon;
#endif
    return &kScalar;
}

std::atomic<const KernelTable*>& active_slot() noexcept {
    static std::atomic<const KernelTable*> slot{widest_available()};
    return slot;
}

}  // namespace

bool isa_available(Isa isa) noexcept {
    switch (isa) {
        case Isa::Scalar: return true;
#if defined(GTHETA_X86_KERNELS)
        case Isa::Avx2: return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
        case Isa::Avx512:
            return __builtin_cpu_supports("avx512f") && __builtin_cpu_supports("avx512bw") &&
                   __builtin_cpu_supports("avx512vpopcntdq");
#endif
#if defined(GTHETA_NEON_KERNELS)
        case Isa::Neon: return true;
#endif
        default: return false;
    }
}

std::vector<Isa> available_isas() {
    std::vector<Isa> out;
    for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Avx512, Isa::Neon})
        if (isa_available(isa)) out.push_back(isa);
    return out;
}

const KernelTable& kernels_for(Isa isa) {
    if (!isa_available(isa)) throw DomainError("kernels_for: ISA not available on this machine");
    switch (isa) {
#if defined(GTHETA_X86_KERNELS)
        case Isa::Avx2: return kAvx2;
        case Isa::Avx512: return kAvx512;
#endif
#if defined(GTHETA_NEON_KERNELS)
        case Isa::Neon: return kNeon;
#endif
        default: return kScalar;
    }
}

const KernelTable& active_kernels() noexcept { return *active_slot().load(std::memory_order_relaxed); }

void force_isa(Isa isa) { active_slot().store(&kernels_for(isa), std::memory_order_relaxed); }

std::string_view to_string(Isa isa) noexcept {
    switch (isa) {
        case Isa::Scalar: return "scalar";
        case Isa::Avx2: return "avx2";
        case Isa::Avx512: return "avx512";
        case Isa::Neon: return "neon";
    }
    return "?";
}

ByteTally tally_bytes(std::span<const std::uint8_t> bytes) noexcept {
    return active_kernels().tally_bytes(bytes.data(), bytes.size());
}

std::uint64_t and_popcount_shifted(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                                   unsigned shift) {
    if (shift >= 64) throw DomainError("and_popcount_shifted: shift must be < 64");
    if (b.size() < a.size() + 1) throw DomainError("and_popcount_shifted: b needs one word more than a");
    return active_kernels().and_popcount_shifted(a.data(), b.data(), a.size(), shift);
}

}  // namespace gtheta::simd
