#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string_view>
#include <vector>

#include "gtheta/oracle.hpp"
#include "gtheta/theta.hpp"

namespace gtheta::legendre {

/// Sieving primes for an even n >= 4: every prime <= floor(sqrt(n)).
struct SieveBasis {
    std::uint64_t n = 0;
    std::uint64_t sqrt_n = 0;
    std::vector<std::uint64_t> primes;

    std::uint64_t l() const noexcept { return primes.size(); }
};

SieveBasis make_basis(std::uint64_t n, const oracle::PrimeTable& table);

/// #{x in [a, b] : d | x} = floor(b/d) - floor((a-1)/d).
std::uint64_t count_multiples(std::uint64_t a, std::uint64_t b, std::uint64_t d);

/// sum_{x=1..n} Theta(sin(x*pi/d)).
std::uint64_t theta_sum_multiples(std::uint64_t n, std::uint64_t d, const theta::ThetaMode& mode);

/// Multiples of prime p in [1, n] other than p itself.
std::uint64_t varpi_p(std::uint64_t n, std::uint64_t p);

/// Numbers in [1, n] divisible by p or q, minus the two primes themselves.
std::uint64_t varpi_pq(std::uint64_t n, std::uint64_t p, std::uint64_t q);

struct SubsetProduct {
    std::uint64_t product;
    unsigned factors;

    friend bool operator==(const SubsetProduct&, const SubsetProduct&) = default;
};

inline constexpr std::uint64_t kUnbounded = std::numeric_limits<std::uint64_t>::max();

/// Visits every nonempty squarefree product of the (distinct, ascending)
/// primes that is <= bound, depth-first by ascending prime index. Once a
/// product exceeds the bound, larger primes at the same depth are skipped.
void for_each_subset_product(std::span<const std::uint64_t> primes, std::uint64_t bound,
                             const std::function<void(const SubsetProduct&)>& visit);

std::vector<SubsetProduct> subset_products(std::span<const std::uint64_t> primes, std::uint64_t bound);

enum class CompositeMethod { FloorIE, ThetaSum, DirectMark };
enum class PrimeMethod { FloorIE, ThetaSum, Survivor };

/// Composites c with 4 <= c <= n, for even n >= 4.
/// ThetaSum evaluates its sines per `mode`; the other methods ignore it.
std::uint64_t composite_count(std::uint64_t n, CompositeMethod method, const oracle::PrimeTable& table,
                              const theta::ThetaMode& mode = theta::ThetaMode::exact());

/// pi(n), for even n >= 4.
std::uint64_t prime_count(std::uint64_t n, PrimeMethod method, const oracle::PrimeTable& table,
                          const theta::ThetaMode& mode = theta::ThetaMode::exact());

std::string_view to_string(CompositeMethod m) noexcept;
std::string_view to_string(PrimeMethod m) noexcept;

}  // namespace gtheta::legendre
