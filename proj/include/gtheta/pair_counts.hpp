#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gtheta/double_sieve.hpp"
#include "gtheta/oracle.hpp"
#include "gtheta/residue_basis.hpp"

namespace gtheta::xi {

struct PairCounts {
    std::uint64_t n = 0;
    Interval interval;
    std::uint64_t length = 0;
    std::uint64_t hat = 0;
    std::uint64_t tilde = 0;
    std::uint64_t composite_pairs = 0;
    std::uint64_t prime_pairs = 0;

    friend bool operator==(const PairCounts&, const PairCounts&) = default;
};

/// hat by marking the dividing primes over the interval.
std::uint64_t hat_composite_pairs(const ResidueBasis& basis);

/// hat by signed subset products of the dividing primes.
std::uint64_t hat_composite_pairs_ie(const ResidueBasis& basis);

/// tilde by marking.
std::uint64_t tilde_composite_pairs(const ResidueBasis& basis);

/// tilde by inclusion-exclusion: a set S of non-dividing primes contributes
/// 2^|S| residue systems (each prime picks class 0 or class m), each system
/// counted exactly over the interval and restricted to x coprime to the
/// dividing primes. Systems with no member in the interval are pruned with
/// all their extensions.
std::uint64_t tilde_composite_pairs_ie(const ResidueBasis& basis);

PairCounts pair_counts(const ResidueBasis& basis, const SieveOptions& options = {});
PairCounts pair_counts(std::uint64_t n, const oracle::PrimeTable& table, const SieveOptions& options = {});

std::vector<std::uint64_t> prime_pair_list(const ResidueBasis& basis, const SieveOptions& options = {});
std::vector<std::uint64_t> prime_pair_list(std::uint64_t n, const oracle::PrimeTable& table,
                                           const SieveOptions& options = {});

}  // namespace gtheta::xi
