#include <doctest.h>

#include <algorithm>
#include <vector>

#include "gtheta/errors.hpp"
#include "gtheta/oracle.hpp"

using namespace gtheta;
using namespace gtheta::oracle;

namespace {

std::vector<std::uint64_t> v(std::initializer_list<std::uint64_t> xs) { return xs; }

}  // namespace

TEST_CASE("prime table small limits") {
    CHECK(std::ranges::equal(build_prime_table(10).primes(), v({2, 3, 5, 7})));
    CHECK(build_prime_table(1).primes().empty());
    CHECK_THROWS_AS(build_prime_table(0), DomainError);
}

TEST_CASE("prime table to 100 agrees with trial division") {
    const auto table = build_prime_table(100);
    std::uint64_t by_trial = 0;
    for (std::uint64_t k = 0; k <= 100; ++k) {
        bool prime = k >= 2;
        for (std::uint64_t d = 2; d * d <= k; ++d)
            if (k % d == 0) prime = false;
        by_trial += prime;
        CHECK(table.is_prime(k) == prime);
    }
    CHECK(by_trial == 25);
    CHECK(table.primes().size() == 25);
}

TEST_CASE("prime table invariants") {
    const auto table = build_prime_table(5000);
    CHECK_FALSE(table.flags()[0]);
    CHECK_FALSE(table.flags()[1]);
    const auto primes = table.primes();
    CHECK(std::adjacent_find(primes.begin(), primes.end(), std::greater_equal<>{}) == primes.end());
    std::uint64_t flagged = 0;
    for (std::uint64_t k = 0; k <= table.limit(); ++k) flagged += table.flags()[k];
    CHECK(flagged == primes.size());
    for (std::size_t i = 0; i < primes.size(); i += 37) CHECK(is_prime_trial(primes[i]));
    CHECK_THROWS_AS((void)table.is_prime(5001), RangeError);
}

TEST_CASE("pi_oracle") {
    const auto table = build_prime_table(1000);
    CHECK(pi_oracle(table, 10) == 4);
    CHECK(pi_oracle(table, 1) == 0);
    CHECK(pi_oracle(table, 31) == 11);
    CHECK(pi_oracle(table, 100) == 25);
    CHECK_THROWS_AS(pi_oracle(table, 1001), RangeError);
}

TEST_CASE("is_prime_trial") {
    CHECK(is_prime_trial(97));
    CHECK_FALSE(is_prime_trial(1));
    CHECK_FALSE(is_prime_trial(91));
    CHECK_FALSE(is_prime_trial(0));
    CHECK(is_prime_trial(2));
    CHECK_FALSE(is_prime_trial(4294967297ULL));  // 641 * 6700417
}

TEST_CASE("the two oracles agree up to 20000") {
    const auto table = build_prime_table(20000);
    std::uint64_t count = 0;
    for (std::uint64_t n = 1; n <= 20000; ++n) {
        count += is_prime_trial(n);
        if (pi_oracle(table, n) != count) {
            FAIL("pi_oracle(" << n << ") = " << pi_oracle(table, n) << ", trial count " << count);
        }
    }
}

TEST_CASE("goldbach_pairs_oracle examples") {
    const auto table = build_prime_table(100);
    CHECK(goldbach_pairs_oracle(table, 100, 10, 90) == v({11, 17, 29, 41, 47, 53, 59, 71, 83, 89}));
    CHECK(goldbach_pairs_oracle(table, 8, 3, 5) == v({3, 5}));
    CHECK(goldbach_pairs_oracle(table, 4, 2, 2) == v({2}));
    CHECK(goldbach_pairs_oracle(table, 16, 3, 13) == v({3, 5, 11, 13}));
}

TEST_CASE("goldbach_pairs_oracle errors") {
    const auto table = build_prime_table(100);
    CHECK_THROWS_AS(goldbach_pairs_oracle(table, 99, 10, 80), DomainError);
    CHECK_THROWS_AS(goldbach_pairs_oracle(table, 2, 1, 1), DomainError);
    CHECK_THROWS_AS(goldbach_pairs_oracle(table, 100, 0, 50), DomainError);
    CHECK_THROWS_AS(goldbach_pairs_oracle(table, 100, 60, 50), DomainError);
    CHECK_THROWS_AS(goldbach_pairs_oracle(table, 100, 10, 100), DomainError);
    CHECK_THROWS_AS(goldbach_pairs_oracle(table, 102, 10, 90), RangeError);
}

TEST_CASE("goldbach_pairs_oracle is symmetric and sound") {
    const auto table = build_prime_table(4000);
    for (std::uint64_t n = 8; n <= 4000; n += 38) {
        const auto a = std::uint64_t{3};
        const auto pairs = goldbach_pairs_oracle(table, n, a, n - a);
        for (auto x : pairs) {
            CHECK(std::ranges::binary_search(pairs, n - x));
            CHECK(is_prime_trial(x));
            CHECK(is_prime_trial(n - x));
        }
    }
}
