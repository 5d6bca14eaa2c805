#include "gtheta/double_sieve.hpp"

#include <algorithm>
#include <bit>
#include <cstring>

#include "gtheta/errors.hpp"
#include "gtheta/kernels.hpp"
#include "gtheta/parallel.hpp"

namespace gtheta::xi {

namespace {

// Block byte flags. Zero bytes are survivors.
constexpr std::uint8_t kHitNonDividing = 1;
constexpr std::uint8_t kHitDividing = 2;

constexpr std::uint64_t kPatternPeriodLimit = 30030;  // 2*3*5*7*11*13

std::uint8_t flag_of(const ResidueEntry& e) noexcept { return e.divides_n ? kHitDividing : kHitNonDividing; }

// Leading entries folded into one periodic byte pattern, so each block
// starts pre-marked by those primes via memcpy instead of strided stores.
struct Presieve {
    std::uint64_t period = 1;
    std::size_t folded = 0;  // entries [0, folded) are in the pattern
    std::vector<std::uint8_t> pattern;

    explicit Presieve(const ResidueBasis& basis) {
        while (folded < basis.entries.size() && period * basis.entries[folded].p <= kPatternPeriodLimit)
            period *= basis.entries[folded++].p;
        pattern.assign(period, 0);
        for (std::size_t i = 0; i < folded; ++i) {
            const auto& e = basis.entries[i];
            const std::uint8_t f = flag_of(e);
            for (std::uint64_t r = 0; r < period; ++r) {
                const std::uint64_t res = r % e.p;
                if (res == 0 || res == e.m) pattern[r] |= f;
            }
        }
    }

    void fill(std::uint64_t lo, std::uint8_t* out, std::size_t len) const {
        std::size_t offset = lo % period;
        while (len > 0) {
            const std::size_t take = std::min<std::size_t>(len, period - offset);
            std::memcpy(out, pattern.data() + offset, take);
            out += take;
            len -= take;
            offset = 0;
        }
    }
};

void mark_class(std::uint64_t lo, std::uint64_t hi, std::uint64_t p, std::uint64_t r, std::uint8_t flag,
                std::uint8_t* buf) {
    std::uint64_t x = lo + (r + p - lo % p) % p;
    for (; x <= hi; x += p) buf[x - lo] |= flag;
}

// Marks [lo, hi] into buf (hi - lo + 1 bytes).
void sieve_block(const ResidueBasis& basis, const Presieve& presieve, std::uint64_t lo, std::uint64_t hi,
                 std::uint8_t* buf) {
    presieve.fill(lo, buf, hi - lo + 1);
    for (std::size_t i = presieve.folded; i < basis.entries.size(); ++i) {
        const auto& e = basis.entries[i];
        const std::uint8_t f = flag_of(e);
        mark_class(lo, hi, e.p, 0, f, buf);
        if (e.m != 0) mark_class(lo, hi, e.p, e.m, f, buf);
    }
}

// Splits the interval into per-worker ranges aligned to 64 positions, then
// walks each range in blocks. visit(lo, hi, bytes) sees every block once.
template <typename Visit>
void for_each_block(const ResidueBasis& basis, const SieveOptions& options, Visit&& visit) {
    if (options.block == 0) throw DomainError("double_sieve: block size must be >= 1");
    const Interval iv = basis.interval;
    const std::uint64_t length = iv.length();
    if (length == 0) return;
    const Presieve presieve(basis);

    const unsigned workers = std::max(1u, options.workers);
    const std::uint64_t words = (length + 63) / 64;
    const std::uint64_t words_per_range = (words + workers - 1) / workers;
    const std::uint64_t ranges = (words + words_per_range - 1) / words_per_range;

    parallel_for(ranges, workers, [&](std::size_t r) {
        const std::uint64_t first = iv.a + r * words_per_range * 64;
        const std::uint64_t last = std::min(iv.b, first + words_per_range * 64 - 1);
        std::vector<std::uint8_t> buf(std::min<std::uint64_t>(options.block, last - first + 1));
        for (std::uint64_t lo = first; lo <= last;) {
            const std::uint64_t hi = std::min(last, lo + options.block - 1);
            sieve_block(basis, presieve, lo, hi, buf.data());
            visit(r, lo, hi, std::span<const std::uint8_t>(buf.data(), hi - lo + 1));
            if (hi == last) break;
            lo = hi + 1;
        }
    });
}

}  // namespace

SurvivorBitmap::SurvivorBitmap(Interval interval) : interval_(interval), words_((interval.length() + 63) / 64, 0) {}

bool SurvivorBitmap::test(std::uint64_t x) const noexcept {
    if (!interval_.contains(x)) return false;
    const std::uint64_t i = x - interval_.a;
    return (words_[i / 64] >> (i % 64)) & 1u;
}

void SurvivorBitmap::set(std::uint64_t x) noexcept {
    const std::uint64_t i = x - interval_.a;
    words_[i / 64] |= std::uint64_t{1} << (i % 64);
}

std::uint64_t SurvivorBitmap::count() const noexcept {
    std::uint64_t total = 0;
    for (auto w : words_) total += std::popcount(w);
    return total;
}

std::vector<std::uint64_t> SurvivorBitmap::to_list() const {
    std::vector<std::uint64_t> out;
    for (std::size_t k = 0; k < words_.size(); ++k) {
        for (std::uint64_t w = words_[k]; w != 0; w &= w - 1)
            out.push_back(interval_.a + k * 64 + static_cast<std::uint64_t>(std::countr_zero(w)));
    }
    return out;
}

SurvivorBitmap double_sieve(const ResidueBasis& basis, const SieveOptions& options) {
    SurvivorBitmap out(basis.interval);
    for_each_block(basis, options, [&](std::size_t, std::uint64_t lo, std::uint64_t, std::span<const std::uint8_t> bytes) {
        for (std::size_t i = 0; i < bytes.size(); ++i)
            if (bytes[i] == 0) out.set(lo + i);
    });
    return out;
}

SieveTally double_sieve_tally(const ResidueBasis& basis, const SieveOptions& options) {
    std::vector<simd::ByteTally> per_range(std::max(1u, options.workers));
    for_each_block(basis, options, [&](std::size_t r, std::uint64_t, std::uint64_t, std::span<const std::uint8_t> bytes) {
        per_range[r] += simd::tally_bytes(bytes);
    });
    simd::ByteTally total;
    for (const auto& t : per_range) total += t;
    return {total.zero, total.other, total.one};
}

std::vector<std::uint64_t> theta_survivors(const ResidueBasis& basis, const theta::ThetaMode& mode) {
    std::vector<theta::SineFactor> forward;
    std::vector<theta::SineFactor> backward;
    for (const auto& e : basis.entries) {
        forward.push_back({e.p, 0});
        backward.push_back({e.p, e.m});
    }
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = basis.interval.a; x <= basis.interval.b; ++x) {
        const int a_zero = theta::theta_sin_product(x, forward, mode);
        const int b_zero = theta::theta_sin_product(x, backward, mode);
        const int survives = theta::theta(a_zero) * theta::theta(b_zero);
        if (survives) out.push_back(x);
    }
    return out;
}

}  // namespace gtheta::xi
