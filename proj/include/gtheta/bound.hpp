#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "gtheta/oracle.hpp"
#include "gtheta/pair_counts.hpp"

namespace gtheta::xi {

/// (n - 4 sqrt(n)) / ln^2(n - sqrt(n)), real square root. Requires n >= 26.
double bound_value(std::uint64_t n);

/// (n - 4 sqrt(n) + n / (n - 2 sqrt(n))) / ln^2(n - sqrt(n)); always above
/// bound_value(n). Requires n >= 26.
double refined_bound_value(std::uint64_t n);

struct BoundReport {
    std::uint64_t n = 0;
    std::uint64_t prime_pairs = 0;
    double bound = 0.0;
    double margin = 0.0;
    bool holds = false;
};

BoundReport make_report(std::uint64_t n, std::uint64_t prime_pairs);

/// Requires n even, n >= 26; counts through the segmented double sieve.
BoundReport check_bound(std::uint64_t n, const oracle::PrimeTable& table);

/// Prime-pair counting for many n against one shared odd-prime bitmap.
///
/// With bit i standing for 2i + 1, x and n - x are both prime iff bit
/// (x-1)/2 is set in the bitmap and bit (n-x-1)/2 is set too; walking x
/// upward walks the partner downward, so the count is the popcount of the
/// bitmap ANDed with its own reversal at an n-dependent bit offset.
class PairCorrelator {
public:
    /// Covers every n <= max_n.
    explicit PairCorrelator(std::uint64_t max_n);

    std::uint64_t max_n() const noexcept { return max_n_; }

    /// #{x in interval : x and n - x prime}. Requires n even, 8 <= n <= max_n
    /// and an interval with a >= 3.
    std::uint64_t prime_pairs(std::uint64_t n, const Interval& interval) const;

    /// PairCounts for the default interval, hat via inclusion-exclusion
    /// over the dividing primes and tilde as the remainder.
    PairCounts counts(std::uint64_t n) const;

private:
    std::uint64_t max_n_;
    std::uint64_t half_;                 // index of the reflection axis
    std::vector<std::uint64_t> odd_;     // bit i: 2i + 1 is prime
    std::vector<std::uint64_t> rev_;     // bit k: 2(half_ - k) + 1 is prime
    std::vector<std::uint64_t> small_primes_;
};

struct ScanRecord {
    PairCounts counts;
    BoundReport report;
};

struct ScanSummary {
    std::uint64_t records = 0;
    std::uint64_t violations = 0;
    std::uint64_t first_violation = 0;  // 0 when none
    double min_margin = 0.0;
    std::uint64_t min_margin_n = 0;
    // Smallest scanned n after which no violation was seen.
    std::uint64_t stable_from = 0;
};

struct ScanOptions {
    unsigned workers = 1;
    std::uint64_t batch = 4096;  // n values computed between ordered emissions
};

/// Visits one record per n in start, start + step, ..., <= end, in
/// ascending n whatever the worker count. Requires 26 <= start <= end,
/// start even and step even >= 2.
ScanSummary scan_bounds(std::uint64_t start, std::uint64_t end, std::uint64_t step, const ScanOptions& options,
                        const std::function<void(const ScanRecord&)>& sink);

}  // namespace gtheta::xi
