#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gtheta/residue_basis.hpp"
#include "gtheta/theta.hpp"

namespace gtheta::xi {

inline constexpr std::size_t kDefaultBlock = std::size_t{1} << 16;

struct SieveOptions {
    std::size_t block = kDefaultBlock;  // positions per segment, >= 1
    unsigned workers = 1;
};

/// Per-position outcome counts of one double-sieve pass over the interval.
/// A position hit by both a dividing and a non-dividing prime counts as hat.
struct SieveTally {
    std::uint64_t survivors = 0;  // prime pairs
    std::uint64_t hat = 0;        // hit by some p | n
    std::uint64_t tilde = 0;      // hit only by primes p not dividing n

    friend bool operator==(const SieveTally&, const SieveTally&) = default;
};

/// Bit-packed survivor set over an interval; bit i stands for interval.a + i.
class SurvivorBitmap {
public:
    SurvivorBitmap() = default;
    explicit SurvivorBitmap(Interval interval);

    const Interval& interval() const noexcept { return interval_; }
    bool test(std::uint64_t x) const noexcept;
    void set(std::uint64_t x) noexcept;
    std::uint64_t count() const noexcept;
    std::vector<std::uint64_t> to_list() const;

private:
    Interval interval_{};
    std::vector<std::uint64_t> words_;
};

/// Marks residue classes 0 and m of every entry over the interval, in
/// blocks of options.block positions. Working memory is one block per
/// worker plus a fixed-size pre-sieve pattern; the result is independent
/// of block size and worker count.
SurvivorBitmap double_sieve(const ResidueBasis& basis, const SieveOptions& options = {});

/// Same pass, counting only.
SieveTally double_sieve_tally(const ResidueBasis& basis, const SieveOptions& options = {});

/// Survivor list from the literal double-Theta product evaluated per x,
/// Theta(Theta(prod sin(x pi/p))) * Theta(Theta(prod sin((x-m) pi/p))),
/// with sines per `mode`. O(length * #entries); meant for small n.
std::vector<std::uint64_t> theta_survivors(const ResidueBasis& basis, const theta::ThetaMode& mode);

}  // namespace gtheta::xi
