#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gtheta/oracle.hpp"

namespace gtheta::xi {

/// Inclusive range [a, b].
struct Interval {
    std::uint64_t a = 0;
    std::uint64_t b = 0;

    std::uint64_t length() const noexcept { return b >= a ? b - a + 1 : 0; }
    bool contains(std::uint64_t x) const noexcept { return a <= x && x <= b; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// [ceil(sqrt(n)), n - ceil(sqrt(n))].
Interval default_interval(std::uint64_t n);

struct ResidueEntry {
    std::uint64_t p;
    std::uint64_t m;  // n mod p
    bool divides_n;

    friend bool operator==(const ResidueEntry&, const ResidueEntry&) = default;
};

/// Sieving primes p <= floor(sqrt(n)) with the residues n mod p.
/// x survives the double sieve iff x mod p is neither 0 nor m for every entry.
struct ResidueBasis {
    std::uint64_t n = 0;
    Interval interval;
    std::vector<ResidueEntry> entries;

    std::vector<std::uint64_t> dividing_primes() const;
    std::vector<ResidueEntry> non_dividing() const;
};

/// Requires n even, n >= 8, table.limit() >= floor(sqrt(n)); an explicit
/// interval must satisfy 1 <= a <= b <= n - 1.
ResidueBasis make_residue_basis(std::uint64_t n, const oracle::PrimeTable& table,
                                std::optional<Interval> interval = std::nullopt);

/// Gamma_fwd(z) + Gamma_bwd(z) = z + (n - z). Requires 1 <= z <= n - 1.
std::uint64_t xi_identity(std::uint64_t z, std::uint64_t n);

enum class PartKind { One, Prime, Composite };

struct PairClass {
    PartKind left;
    PartKind right;

    bool is_prime_pair() const noexcept { return left == PartKind::Prime && right == PartKind::Prime; }
    friend bool operator==(const PairClass&, const PairClass&) = default;
};

/// Classes of x and n - x by trial division. Throws RangeError unless 1 <= x <= n - 1.
PairClass classify_pair(std::uint64_t x, std::uint64_t n);

std::string_view to_string(PartKind k) noexcept;

/// #{x in [1, n-1] : x = r (mod p)}.
std::uint64_t residue_class_count(std::uint64_t n, std::uint64_t p, std::uint64_t r);

/// #{x in [1, n-1] : p | (n - x)}, counted by walking the backward part.
std::uint64_t backward_multiples(std::uint64_t n, std::uint64_t p);

/// Positions marked per full period of p: 1 when p | n, else 2.
std::uint64_t marks_per_period(const ResidueEntry& e) noexcept;

}  // namespace gtheta::xi
