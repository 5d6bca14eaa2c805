#include <doctest.h>

#include <cmath>
#include <vector>

#include "gtheta/bound.hpp"
#include "gtheta/errors.hpp"
#include "gtheta/oracle.hpp"

using namespace gtheta;
using namespace gtheta::xi;

namespace {

const oracle::PrimeTable& table() {
    static const oracle::PrimeTable t(100000);
    return t;
}

double direct(double n) {
    const double l = std::log(n - std::sqrt(n));
    return (n - 4 * std::sqrt(n)) / (l * l);
}

}  // namespace

TEST_CASE("bound values") {
    CHECK(bound_value(100) == doctest::Approx(2.9633).epsilon(1e-4));
    CHECK(bound_value(100) == doctest::Approx(60.0 / std::pow(std::log(90.0), 2)));
    CHECK(bound_value(10000) == doctest::Approx(113.41).epsilon(1e-4));
    CHECK(bound_value(1000) == doctest::Approx(18.48).epsilon(1e-3));
    // n = 26: the numerator is 26 - 4 sqrt(26), about 5.6, so the bound is small but positive.
    CHECK(bound_value(26) == doctest::Approx(direct(26)));
    CHECK(bound_value(26) > 0);
    CHECK(bound_value(26) < 1);
    CHECK_THROWS_AS(bound_value(24), DomainError);
    CHECK_THROWS_AS(bound_value(0), DomainError);
    for (std::uint64_t n = 26; n < 100000; n += 998) CHECK(bound_value(n) == doctest::Approx(direct(double(n))));
}

TEST_CASE("refined bound is positive and finite") {
    for (std::uint64_t n = 26; n < 100000; n += 1000) {
        const double r = refined_bound_value(n);
        CHECK(std::isfinite(r));
        CHECK(r > 0);
        CHECK(r > bound_value(n));
    }
    CHECK_THROWS_AS(refined_bound_value(10), DomainError);
}

TEST_CASE("check_bound") {
    auto r = check_bound(100, table());
    CHECK(r.prime_pairs == 10);
    CHECK(r.bound == doctest::Approx(2.963).epsilon(1e-3));
    CHECK(r.holds);
    CHECK(r.margin == doctest::Approx(10 - r.bound));
    r = check_bound(1000, table());
    CHECK(r.prime_pairs == 48);
    CHECK(r.holds);
    CHECK(r.margin == doctest::Approx(29.52).epsilon(1e-3));
    r = check_bound(10000, table());
    CHECK(r.prime_pairs == 250);
    CHECK(r.holds);
    CHECK_THROWS_AS(check_bound(101, table()), DomainError);
    CHECK_THROWS_AS(check_bound(20, table()), DomainError);
}

TEST_CASE("make_report") {
    auto r = make_report(100, 2);
    CHECK_FALSE(r.holds);
    CHECK(r.margin < 0);
    r = make_report(100, 3);
    CHECK(r.holds);
}

TEST_CASE("pair correlator matches the sieve") {
    const PairCorrelator corr(6000);
    for (std::uint64_t n = 8; n <= 6000; n += 2) {
        const auto expect = pair_counts(n, table());
        if (corr.counts(n) != expect) FAIL("n=" << n);
    }
    CHECK_THROWS_AS(corr.counts(6002), RangeError);
    CHECK_THROWS_AS(corr.counts(101), DomainError);
}

TEST_CASE("pair correlator on explicit intervals") {
    const PairCorrelator corr(4000);
    for (std::uint64_t n = 8; n <= 4000; n += 34)
        for (std::uint64_t a = 3; a < n / 2; a += 1 + a / 3) {
            const auto b = n - a - (a % 5);
            if (b < a) continue;
            CHECK(corr.prime_pairs(n, {a, b}) == oracle::goldbach_pairs_oracle(table(), n, a, b).size());
        }
}

TEST_CASE("scan examples") {
    std::vector<ScanRecord> got;
    auto sink = [&](const ScanRecord& r) { got.push_back(r); };
    auto s = scan_bounds(100, 104, 2, {}, sink);
    REQUIRE(got.size() == 3);
    CHECK(s.records == 3);
    CHECK(s.violations == 0);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(got[i].counts.n == 100 + 2 * i);
        CHECK(got[i].report.holds);
        CHECK(got[i].report.prime_pairs == check_bound(got[i].counts.n, table()).prime_pairs);
    }

    got.clear();
    s = scan_bounds(1000, 1000, 2, {}, sink);
    REQUIRE(got.size() == 1);
    CHECK(got[0].report.margin == doctest::Approx(29.52).epsilon(1e-3));

    got.clear();
    s = scan_bounds(26, 26, 2, {}, sink);
    CHECK(got.size() == 1);

    CHECK_THROWS_AS(scan_bounds(10, 8, 2, {}, sink), DomainError);
    CHECK_THROWS_AS(scan_bounds(24, 30, 2, {}, sink), DomainError);
    CHECK_THROWS_AS(scan_bounds(100, 200, 3, {}, sink), DomainError);
    CHECK_THROWS_AS(scan_bounds(101, 200, 2, {}, sink), DomainError);
    CHECK_THROWS_AS(scan_bounds(100, 200, 0, {}, sink), DomainError);
}

TEST_CASE("scan order and determinism across workers") {
    std::vector<ScanRecord> one, many;
    const auto s1 = scan_bounds(26, 20000, 2, {.workers = 1, .batch = 4096}, [&](const ScanRecord& r) { one.push_back(r); });
    const auto s8 = scan_bounds(26, 20000, 2, {.workers = 8, .batch = 333}, [&](const ScanRecord& r) { many.push_back(r); });
    REQUIRE(one.size() == many.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        CHECK(one[i].counts == many[i].counts);
        CHECK(one[i].report.margin == many[i].report.margin);
        if (i) CHECK(one[i].counts.n > one[i - 1].counts.n);
    }
    CHECK(s1.min_margin == s8.min_margin);
    CHECK(s1.min_margin_n == s8.min_margin_n);
    // n = 68 has only the pairs 31 + 37 and 37 + 31 inside [9, 59], below the bound 2.09.
    CHECK(s1.violations == 1);
    CHECK(s1.first_violation == 68);
    CHECK(s1.stable_from == 70);
    CHECK(s8.first_violation == 68);
    CHECK(oracle::goldbach_pairs_oracle(table(), 68, 9, 59).size() == 2);
    CHECK(bound_value(68) > 2);
    for (std::size_t i = 0; i < one.size(); i += 97) CHECK(one[i].counts == pair_counts(one[i].counts.n, table()));
}

TEST_CASE("scan summary tracks minimum margin") {
    std::vector<ScanRecord> got;
    const auto s = scan_bounds(200, 400, 4, {}, [&](const ScanRecord& r) { got.push_back(r); });
    double m = got.front().report.margin;
    std::uint64_t at = got.front().counts.n;
    for (const auto& r : got)
        if (r.report.margin < m) {
            m = r.report.margin;
            at = r.counts.n;
        }
    CHECK(s.min_margin == m);
    CHECK(s.min_margin_n == at);
    CHECK(s.records == got.size());
    CHECK(s.first_violation == 0);
}
