#include "gtheta/bound.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "gtheta/errors.hpp"
#include "gtheta/integer_math.hpp"
#include "gtheta/kernels.hpp"
#include "gtheta/legendre.hpp"
#include "gtheta/parallel.hpp"

namespace gtheta::xi {

namespace {

void require_bound_domain(std::uint64_t n, const char* who) {
    if (n < 26) throw DomainError(std::string(who) + ": n must be >= 26 so that n - 4 sqrt(n) > 0");
}

std::uint64_t low_mask(unsigned bits) noexcept { return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1; }

}  // namespace

double bound_value(std::uint64_t n) {
    require_bound_domain(n, "bound_value");
    const double x = static_cast<double>(n);
    const double root = std::sqrt(x);
    const double log = std::log(x - root);
    return (x - 4.0 * root) / (log * log);
}

double refined_bound_value(std::uint64_t n) {
    require_bound_domain(n, "refined_bound_value");
    const double x = static_cast<double>(n);
    const double root = std::sqrt(x);
    const double log = std::log(x - root);
    return (x - 4.0 * root + x / (x - 2.0 * root)) / (log * log);
}

BoundReport make_report(std::uint64_t n, std::uint64_t prime_pairs) {
    BoundReport r;
    r.n = n;
    r.prime_pairs = prime_pairs;
    r.bound = bound_value(n);
    r.margin = static_cast<double>(prime_pairs) - r.bound;
    r.holds = static_cast<double>(prime_pairs) > r.bound;
    return r;
}

BoundReport check_bound(std::uint64_t n, const oracle::PrimeTable& table) {
    if (n % 2 != 0) throw DomainError("check_bound: n must be even");
    require_bound_domain(n, "check_bound");
    return make_report(n, pair_counts(n, table).prime_pairs);
}

PairCorrelator::PairCorrelator(std::uint64_t max_n) : max_n_(max_n), half_(max_n / 2) {
    if (max_n < 8) throw DomainError("PairCorrelator: max_n must be >= 8");
    const oracle::PrimeTable table(max_n + 1);
    const std::uint64_t words = half_ / 64 + 2;
    odd_.assign(words, 0);
    rev_.assign(words, 0);
    for (std::uint64_t i = 0; i <= half_; ++i) {
        if (!table.is_prime(2 * i + 1)) continue;
        odd_[i / 64] |= std::uint64_t{1} << (i % 64);
        const std::uint64_t k = half_ - i;
        rev_[k / 64] |= std::uint64_t{1} << (k % 64);
    }
    const auto small = table.primes_up_to(isqrt(max_n));
    small_primes_.assign(small.begin(), small.end());
}

std::uint64_t PairCorrelator::prime_pairs(std::uint64_t n, const Interval& interval) const {
    if (n % 2 != 0 || n < 8) throw DomainError("PairCorrelator: n must be even and >= 8");
    if (n > max_n_) throw RangeError("PairCorrelator: n exceeds max_n");
    if (interval.a < 3 || interval.a > interval.b || interval.b > n - 1)
        throw DomainError("PairCorrelator: interval must satisfy 3 <= a <= b <= n - 1");
    const std::uint64_t i0 = interval.a / 2;
    const std::uint64_t i1 = (interval.b - 1) / 2;
    if (i1 < i0) return 0;

    // Partner of bit i sits at bit i + s of the reversed map.
    const std::uint64_t s = half_ - n / 2 + 1;
    const std::uint64_t q = s / 64;
    const auto shift = static_cast<unsigned>(s % 64);
    auto partner_word = [&](std::uint64_t w) {
        const std::uint64_t lo = rev_[w + q];
        return shift == 0 ? lo : (lo >> shift) | (rev_[w + q + 1] << (64 - shift));
    };

    const std::uint64_t w0 = i0 / 64;
    const std::uint64_t w1 = i1 / 64;
    const std::uint64_t head_mask = ~low_mask(static_cast<unsigned>(i0 % 64));
    const std::uint64_t tail_mask = low_mask(static_cast<unsigned>(i1 % 64) + 1);
    if (w0 == w1) return std::popcount(odd_[w0] & partner_word(w0) & head_mask & tail_mask);

    std::uint64_t total = std::popcount(odd_[w0] & partner_word(w0) & head_mask);
    total += std::popcount(odd_[w1] & partner_word(w1) & tail_mask);
    const std::uint64_t middle = w1 - w0 - 1;
    if (middle > 0) {
        total += simd::and_popcount_shifted(std::span<const std::uint64_t>(odd_.data() + w0 + 1, middle),
                                            std::span<const std::uint64_t>(rev_.data() + w0 + 1 + q, middle + 1),
                                            shift);
    }
    return total;
}

PairCounts PairCorrelator::counts(std::uint64_t n) const {
    PairCounts c;
    c.n = n;
    c.interval = default_interval(n);
    c.length = c.interval.length();
    c.prime_pairs = prime_pairs(n, c.interval);
    c.composite_pairs = c.length - c.prime_pairs;

    std::vector<std::uint64_t> dividing;
    const std::uint64_t root = isqrt(n);
    for (auto p : small_primes_) {
        if (p > root) break;
        if (n % p == 0) dividing.push_back(p);
    }
    std::int64_t hat = 0;
    legendre::for_each_subset_product(dividing, c.interval.b, [&](const legendre::SubsetProduct& sp) {
        const auto m = static_cast<std::int64_t>(multiples_in(c.interval.a, c.interval.b, sp.product));
        hat += (sp.factors % 2 == 1) ? m : -m;
    });
    c.hat = static_cast<std::uint64_t>(hat);
    c.tilde = c.composite_pairs - c.hat;
    return c;
}

ScanSummary scan_bounds(std::uint64_t start, std::uint64_t end, std::uint64_t step, const ScanOptions& options,
                        const std::function<void(const ScanRecord&)>& sink) {
    if (start < 26 || start > end) throw DomainError("scan_bounds: need 26 <= start <= end");
    if (start % 2 != 0) throw DomainError("scan_bounds: start must be even");
    if (step < 2 || step % 2 != 0) throw DomainError("scan_bounds: step must be even and >= 2");
    if (options.batch == 0) throw DomainError("scan_bounds: batch must be >= 1");

    const std::uint64_t total = (end - start) / step + 1;
    const std::uint64_t last_n = start + (total - 1) * step;
    const PairCorrelator correlator(last_n);

    ScanSummary summary;
    summary.min_margin = std::numeric_limits<double>::infinity();
    std::uint64_t last_violation = 0;
    std::vector<ScanRecord> batch;
    for (std::uint64_t first = 0; first < total; first += options.batch) {
        const std::uint64_t count = std::min(options.batch, total - first);
        batch.assign(count, ScanRecord{});
        parallel_for(count, options.workers, [&](std::size_t k) {
            const std::uint64_t n = start + (first + k) * step;
            batch[k].counts = correlator.counts(n);
            batch[k].report = make_report(n, batch[k].counts.prime_pairs);
        });
        for (const auto& rec : batch) {
            ++summary.records;
            if (rec.report.margin < summary.min_margin) {
                summary.min_margin = rec.report.margin;
                summary.min_margin_n = rec.report.n;
            }
            if (!rec.report.holds) {
                ++summary.violations;
                if (summary.first_violation == 0) summary.first_violation = rec.report.n;
                last_violation = rec.report.n;
            }
            sink(rec);
        }
    }
    summary.stable_from = last_violation == 0 ? start : last_violation + step;
    return summary;
}

}  // namespace gtheta::xi
