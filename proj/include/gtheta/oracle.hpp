#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace gtheta::oracle {

/// Primality flags and the ordered prime list for [0, limit].
///
/// Plain Eratosthenes over the whole range, no segmentation and no wheel.
/// This is the ground truth everything else is compared against, so it is
/// kept as small as possible. Immutable once built.
class PrimeTable {
public:
    explicit PrimeTable(std::uint64_t limit);

    std::uint64_t limit() const noexcept { return limit_; }
    bool is_prime(std::uint64_t n) const;
    std::span<const std::uint64_t> primes() const noexcept { return primes_; }
    const std::vector<bool>& flags() const noexcept { return flags_; }

    /// Primes p with p <= bound, as a prefix view of primes().
    std::span<const std::uint64_t> primes_up_to(std::uint64_t bound) const;

private:
    std::uint64_t limit_;
    std::vector<bool> flags_;
    std::vector<std::uint64_t> primes_;
};

/// Throws DomainError for limit == 0.
PrimeTable build_prime_table(std::uint64_t limit);

/// #{p prime : p <= n}. Throws RangeError when n > table.limit().
std::uint64_t pi_oracle(const PrimeTable& table, std::uint64_t n);

/// Trial division by every d in [2, isqrt(n)].
bool is_prime_trial(std::uint64_t n);

/// Every x in [a, b] with x and n - x both prime, ascending.
/// Requires n even, n >= 4, 1 <= a <= b <= n - 1 and table.limit() >= n.
std::vector<std::uint64_t> goldbach_pairs_oracle(const PrimeTable& table, std::uint64_t n,
                                                 std::uint64_t a, std::uint64_t b);

}  // namespace gtheta::oracle
