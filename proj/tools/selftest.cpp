// selftest: the invariant suites of every module, run against the oracles.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "gtheta/double_sieve.hpp"
#include "gtheta/legendre.hpp"
#include "gtheta/oracle.hpp"
#include "gtheta/pair_counts.hpp"
#include "gtheta/residue_basis.hpp"
#include "gtheta/theta.hpp"

namespace gtheta::cli {

namespace {

constexpr std::uint64_t kSeed = 0x6774686574610001ULL;

struct Suite {
    explicit Suite(std::string suite_name) : name(std::move(suite_name)) {}

    std::string name;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    std::string counterexample;

    template <typename Describe>
    void expect(bool ok, Describe&& describe) {
        ++checks;
        if (ok) return;
        if (failures++ == 0) counterexample = describe();
    }
};

std::string str(std::initializer_list<std::pair<const char*, std::uint64_t>> fields) {
    std::ostringstream os;
    for (const auto& [k, v] : fields) os << k << '=' << v << ' ';
    return os.str();
}

Suite oracle_equivalence(std::uint64_t max_n, const theta::ThetaMode& mode) {
    using legendre::CompositeMethod;
    using legendre::PrimeMethod;
    Suite s{"oracle-equivalence"};
    const oracle::PrimeTable table(max_n);
    for (std::uint64_t n = 4; n <= max_n; n += 2) {
        const std::uint64_t pi = oracle::pi_oracle(table, n);
        for (auto m : {PrimeMethod::FloorIE, PrimeMethod::ThetaSum, PrimeMethod::Survivor}) {
            const auto got = legendre::prime_count(n, m, table, mode);
            s.expect(got == pi, [&] { return "prime_count " + std::string(legendre::to_string(m)) + " " +
                                             str({{"n", n}, {"got", got}, {"oracle", pi}}); });
        }
        for (auto m : {CompositeMethod::FloorIE, CompositeMethod::ThetaSum, CompositeMethod::DirectMark}) {
            const auto got = legendre::composite_count(n, m, table, mode);
            s.expect(got == n - pi - 1, [&] { return "composite_count " + std::string(legendre::to_string(m)) + " " +
                                                     str({{"n", n}, {"got", got}}); });
        }
        if (n < 8) continue;
        const auto basis = xi::make_residue_basis(n, table);
        const auto got = xi::prime_pair_list(basis);
        const auto want = oracle::goldbach_pairs_oracle(table, n, basis.interval.a, basis.interval.b);
        s.expect(got == want, [&] { return "prime_pair_list " + str({{"n", n}, {"got", got.size()}, {"oracle", want.size()}}); });
    }
    return s;
}

Suite partition(std::uint64_t max_n, const oracle::PrimeTable& table) {
    Suite s{"partition"};
    for (std::uint64_t n = 8; n <= max_n; n += 2) {
        const auto basis = xi::make_residue_basis(n, table);
        const auto c = xi::pair_counts(basis);
        s.expect(c.hat + c.tilde == c.composite_pairs, [&] { return "hat+tilde " + str({{"n", n}}); });
        s.expect(c.composite_pairs + c.prime_pairs == c.length, [&] { return "composite+prime " + str({{"n", n}}); });
        s.expect(xi::hat_composite_pairs_ie(basis) == c.hat, [&] { return "hat inclusion-exclusion " + str({{"n", n}}); });
        const auto composites = legendre::composite_count(n, legendre::CompositeMethod::DirectMark, table);
        const auto primes = legendre::prime_count(n, legendre::PrimeMethod::FloorIE, table);
        s.expect(composites + primes + 1 == n, [&] { return "composites+primes+1 " + str({{"n", n}}); });
    }
    return s;
}

Suite symmetry(std::uint64_t max_n, const oracle::PrimeTable& table) {
    Suite s{"symmetry"};
    for (std::uint64_t n = 8; n <= max_n; n += 2) {
        const auto basis = xi::make_residue_basis(n, table);
        const auto pairs = xi::prime_pair_list(basis);
        for (auto x : pairs)
            s.expect(std::binary_search(pairs.begin(), pairs.end(), n - x),
                     [&] { return "pair list not closed under x -> n - x " + str({{"n", n}, {"x", x}}); });
        if (n > 2000) continue;
        for (const auto& e : basis.entries) {
            const auto forward = xi::residue_class_count(n, e.p, 0);
            s.expect(forward == xi::backward_multiples(n, e.p),
                     [&] { return "forward/backward multiples " + str({{"n", n}, {"p", e.p}}); });
            s.expect(xi::residue_class_count(n, e.p, e.m) == forward,
                     [&] { return "residue shift " + str({{"n", n}, {"p", e.p}, {"m", e.m}}); });
            s.expect(xi::marks_per_period(e) == (e.divides_n ? 1u : 2u),
                     [&] { return "marks per period " + str({{"n", n}, {"p", e.p}}); });
        }
    }
    return s;
}

Suite identities() {
    Suite s{"identity"};
    std::mt19937_64 rng(kSeed);
    std::uniform_real_distribution<double> real(-100.0, 100.0);
    std::bernoulli_distribution zero(0.2);
    auto sample = [&] { return zero(rng) ? 0.0 : real(rng); };

    for (int i = 0; i < 1000; ++i) {
        const double x = sample();
        for (int m = -10; m <= 10; ++m) {
            if (m == 0) continue;
            for (int k = 1; k <= 5; ++k)
                s.expect(theta::theta(m * std::pow(x, k)) == theta::theta(x), [&] { return "power rule"; });
        }
    }
    for (int i = 0; i < 10000; ++i) {
        const double a = sample(), b = sample();
        s.expect(theta::double_theta(a * b) == theta::double_theta(a) * theta::double_theta(b),
                 [&] { return "double-theta product rule"; });
    }
    for (int done = 0; done < 10000;) {
        const double x = sample(), y = sample();
        if (!theta::sum_identity_guard(x, y)) continue;
        const auto [lhs, rhs] = theta::theta_sum_identity(x, y);
        s.expect(lhs == rhs, [&] { return "sum identity under guard"; });
        ++done;
    }
    const auto [lhs, rhs] = theta::theta_sum_identity(1.0, -1.0);
    s.expect(lhs != rhs, [&] { return "sum identity counterexample (1, -1) unexpectedly holds"; });
    return s;
}

Suite float_exact(std::uint64_t max_n, double epsilon) {
    Suite s{"float-exact"};
    const auto exact = theta::ThetaMode::exact();
    const auto approx = theta::ThetaMode::float_approx(epsilon);
    const std::uint64_t x_max = std::min<std::uint64_t>(max_n, 100000);
    for (std::uint64_t d = 1; d <= 100; ++d)
        for (std::uint64_t x = 0; x <= x_max; ++x)
            s.expect(theta::theta_sin(x, d, exact) == theta::theta_sin(x, d, approx),
                     [&] { return "theta_sin " + str({{"x", x}, {"d", d}}); });
    std::mt19937_64 rng(kSeed + 1);
    std::uniform_int_distribution<std::uint64_t> dx(0, 10'000'000), dd(1, 10'000);
    for (int i = 0; i < 100000; ++i) {
        const auto x = dx(rng), d = dd(rng);
        const auto m = x % d;  // shift onto the class of x half the time
        const auto shift = (i % 2 == 0) ? m : (m + 1) % d;
        s.expect(theta::theta_sin(x, d, exact) == theta::theta_sin(x, d, approx),
                 [&] { return "theta_sin " + str({{"x", x}, {"d", d}}); });
        s.expect(theta::theta_sin_shift(x, shift, d, exact) == theta::theta_sin_shift(x, shift, d, approx),
                 [&] { return "theta_sin_shift " + str({{"x", x}, {"m", shift}, {"d", d}}); });
    }
    return s;
}

Suite tilde_cross_check(std::uint64_t max_n, const oracle::PrimeTable& table) {
    Suite s{"tilde-ie"};
    for (std::uint64_t n = 8; n <= std::min<std::uint64_t>(max_n, 10000); n += 2) {
        const auto basis = xi::make_residue_basis(n, table);
        const auto marked = xi::tilde_composite_pairs(basis);
        const auto ie = xi::tilde_composite_pairs_ie(basis);
        s.expect(marked == ie, [&] { return "tilde " + str({{"n", n}, {"marking", marked}, {"ie", ie}}); });
    }
    return s;
}

}  // namespace

int cmd_selftest(std::uint64_t max_n, const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (max_n < 100) {
        err << "error: selftest needs --max-n >= 100\n";
        return exit_code::kUsage;
    }
    if (max_n > 10'000'000) {
        err << "error: selftest --max-n is capped at 10000000\n";
        return exit_code::kUsage;
    }
    try {
        const oracle::PrimeTable table(max_n);
        const double epsilon = config.mode.is_exact() ? config.epsilon : config.mode.epsilon();
        std::vector<std::function<Suite()>> suites{
            [&] { return oracle_equivalence(max_n, config.mode); },
            [&] { return partition(max_n, table); },
            [&] { return symmetry(max_n, table); },
            [&] { return identities(); },
            [&] { return float_exact(max_n, epsilon); },
            [&] { return tilde_cross_check(max_n, table); },
        };
        std::string first_failure;
        bool failed = false;
        for (const auto& run : suites) {
            const Suite s = run();
            char line[160];
            std::snprintf(line, sizeof line, "%-20s checks=%llu failures=%llu\n", s.name.c_str(),
                          static_cast<unsigned long long>(s.checks), static_cast<unsigned long long>(s.failures));
            out << line;
            if (s.failures > 0 && !failed) {
                failed = true;
                first_failure = s.name + ": " + s.counterexample;
            }
        }
        if (failed) {
            err << "first counterexample: " << first_failure << '\n';
            return exit_code::kVerificationFailed;
        }
        return exit_code::kOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::kUsage;
    }
}

}  // namespace gtheta::cli
