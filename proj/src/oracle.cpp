#include "gtheta/oracle.hpp"

#include <algorithm>
#include <string>

#include "gtheta/errors.hpp"

namespace gtheta::oracle {

PrimeTable::PrimeTable(std::uint64_t limit) : limit_(limit), flags_(limit + 1, true) {
    if (limit == 0) throw DomainError("build_prime_table: limit must be >= 1");
    flags_[0] = false;
    flags_[1] = false;
    for (std::uint64_t i = 2; i * i <= limit; ++i) {
        if (!flags_[i]) continue;
        for (std::uint64_t j = i * i; j <= limit; j += i) flags_[j] = false;
    }
    for (std::uint64_t i = 2; i <= limit; ++i)
        if (flags_[i]) primes_.push_back(i);
}

bool PrimeTable::is_prime(std::uint64_t n) const {
    if (n > limit_) throw RangeError("PrimeTable::is_prime: " + std::to_string(n) + " beyond limit");
    return flags_[n];
}

std::span<const std::uint64_t> PrimeTable::primes_up_to(std::uint64_t bound) const {
    const auto end = std::upper_bound(primes_.begin(), primes_.end(), bound);
    return {primes_.data(), static_cast<std::size_t>(end - primes_.begin())};
}

PrimeTable build_prime_table(std::uint64_t limit) { return PrimeTable(limit); }

std::uint64_t pi_oracle(const PrimeTable& table, std::uint64_t n) {
    if (n > table.limit())
        throw RangeError("pi_oracle: n = " + std::to_string(n) + " exceeds table limit " +
                         std::to_string(table.limit()));
    return table.primes_up_to(n).size();
}

bool is_prime_trial(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d <= n / d; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> goldbach_pairs_oracle(const PrimeTable& table, std::uint64_t n, std::uint64_t a,
                                                 std::uint64_t b) {
    if (n < 4 || n % 2 != 0) throw DomainError("goldbach_pairs_oracle: n must be even and >= 4");
    if (a < 1 || a > b || b > n - 1) throw DomainError("goldbach_pairs_oracle: need 1 <= a <= b <= n - 1");
    if (table.limit() < n) throw RangeError("goldbach_pairs_oracle: table limit below n");
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = a; x <= b; ++x)
        if (table.is_prime(x) && table.is_prime(n - x)) out.push_back(x);
    return out;
}

}  // namespace gtheta::oracle
