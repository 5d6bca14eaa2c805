#include "gtheta/legendre.hpp"

#include <string>

#include "gtheta/errors.hpp"
#include "gtheta/integer_math.hpp"

namespace gtheta::legendre {

namespace {

void require_even_composite(std::uint64_t n, const char* who) {
    if (n < 4 || n % 2 != 0)
        throw DomainError(std::string(who) + ": n must be an even integer >= 4, got " + std::to_string(n));
}

void require_sieving_prime(std::uint64_t n, std::uint64_t p, const char* who) {
    if (!oracle::is_prime_trial(p)) throw DomainError(std::string(who) + ": " + std::to_string(p) + " is not prime");
    if (p > isqrt(n))
        throw DomainError(std::string(who) + ": p = " + std::to_string(p) + " exceeds floor(sqrt(n))");
}

void subset_walk(std::span<const std::uint64_t> primes, std::size_t from, std::uint64_t product, unsigned depth,
                 std::uint64_t bound, const std::function<void(const SubsetProduct&)>& visit) {
    for (std::size_t i = from; i < primes.size(); ++i) {
        std::uint64_t next = 0;
        if (__builtin_mul_overflow(product, primes[i], &next)) {
            if (bound == kUnbounded) throw DomainError("subset_products: product exceeds 64 bits");
            break;
        }
        if (next > bound) break;
        visit(SubsetProduct{next, depth + 1});
        subset_walk(primes, i + 1, next, depth + 1, bound, visit);
    }
}

// sum over nonempty squarefree T of (-1)^(|T|+1) floor(n / prod T), i.e. the
// count of x in [1, n] divisible by at least one basis prime.
std::int64_t floor_inclusion_exclusion(const SieveBasis& basis) {
    std::int64_t total = 0;
    for_each_subset_product(basis.primes, basis.n, [&](const SubsetProduct& s) {
        const auto term = static_cast<std::int64_t>(basis.n / s.product);
        total += (s.factors % 2 == 1) ? term : -term;
    });
    return total;
}

std::vector<theta::SineFactor> sine_factors(const SieveBasis& basis) {
    std::vector<theta::SineFactor> out;
    out.reserve(basis.primes.size());
    for (auto p : basis.primes) out.push_back({p, 0});
    return out;
}

// sum_{x=1..n} Theta(prod_i sin(x pi / p_i)).
std::uint64_t theta_product_sum(const SieveBasis& basis, const theta::ThetaMode& mode) {
    const auto factors = sine_factors(basis);
    std::uint64_t total = 0;
    for (std::uint64_t x = 1; x <= basis.n; ++x) total += theta::theta_sin_product(x, factors, mode);
    return total;
}

}  // namespace

SieveBasis make_basis(std::uint64_t n, const oracle::PrimeTable& table) {
    require_even_composite(n, "make_basis");
    SieveBasis basis;
    basis.n = n;
    basis.sqrt_n = isqrt(n);
    if (table.limit() < basis.sqrt_n) throw RangeError("make_basis: prime table does not reach floor(sqrt(n))");
    const auto primes = table.primes_up_to(basis.sqrt_n);
    basis.primes.assign(primes.begin(), primes.end());
    return basis;
}

std::uint64_t count_multiples(std::uint64_t a, std::uint64_t b, std::uint64_t d) {
    if (d == 0) throw DomainError("count_multiples: d must be >= 1");
    if (a < 1 || b < a) throw DomainError("count_multiples: need 1 <= a <= b");
    return b / d - (a - 1) / d;
}

std::uint64_t theta_sum_multiples(std::uint64_t n, std::uint64_t d, const theta::ThetaMode& mode) {
    if (d == 0) throw DomainError("theta_sum_multiples: d must be >= 1");
    std::uint64_t total = 0;
    for (std::uint64_t x = 1; x <= n; ++x) total += theta::theta_sin(x, d, mode);
    return total;
}

std::uint64_t varpi_p(std::uint64_t n, std::uint64_t p) {
    require_even_composite(n, "varpi_p");
    require_sieving_prime(n, p, "varpi_p");
    return n / p - 1;
}

std::uint64_t varpi_pq(std::uint64_t n, std::uint64_t p, std::uint64_t q) {
    require_even_composite(n, "varpi_pq");
    if (p == q) throw DomainError("varpi_pq: p and q must differ");
    require_sieving_prime(n, p, "varpi_pq");
    require_sieving_prime(n, q, "varpi_pq");
    return n / p + n / q - n / (p * q) - 2;
}

void for_each_subset_product(std::span<const std::uint64_t> primes, std::uint64_t bound,
                             const std::function<void(const SubsetProduct&)>& visit) {
    subset_walk(primes, 0, 1, 0, bound, visit);
}

std::vector<SubsetProduct> subset_products(std::span<const std::uint64_t> primes, std::uint64_t bound) {
    std::vector<SubsetProduct> out;
    for_each_subset_product(primes, bound, [&](const SubsetProduct& s) { out.push_back(s); });
    return out;
}

std::uint64_t composite_count(std::uint64_t n, CompositeMethod method, const oracle::PrimeTable& table,
                              const theta::ThetaMode& mode) {
    const SieveBasis basis = make_basis(n, table);
    switch (method) {
        case CompositeMethod::FloorIE:
            // sum floor((n - p_i)/p_i) - sum floor(n/p_i p_j) + ...
            return static_cast<std::uint64_t>(floor_inclusion_exclusion(basis)) - basis.l();
        case CompositeMethod::ThetaSum:
            return theta_product_sum(basis, mode) - basis.l();
        case CompositeMethod::DirectMark: {
            std::vector<bool> composite(n + 1, false);
            for (auto p : basis.primes)
                for (std::uint64_t j = 2 * p; j <= n; j += p) composite[j] = true;
            std::uint64_t count = 0;
            for (std::uint64_t j = 4; j <= n; ++j) count += composite[j];
            return count;
        }
    }
    throw DomainError("composite_count: unknown method");
}

std::uint64_t prime_count(std::uint64_t n, PrimeMethod method, const oracle::PrimeTable& table,
                          const theta::ThetaMode& mode) {
    const SieveBasis basis = make_basis(n, table);
    switch (method) {
        case PrimeMethod::FloorIE: {
            // n - 1 - sum floor((n - p_i)/p_i) + sum floor(n/p_i p_j) - ...
            const auto n_signed = static_cast<std::int64_t>(n);
            return static_cast<std::uint64_t>(n_signed - 1 + static_cast<std::int64_t>(basis.l()) -
                                              floor_inclusion_exclusion(basis));
        }
        case PrimeMethod::ThetaSum:
            return n - 1 - theta_product_sum(basis, mode) + basis.l();
        case PrimeMethod::Survivor: {
            const auto factors = sine_factors(basis);
            std::uint64_t survivors = 0;
            for (std::uint64_t x = 1; x <= n; ++x)
                survivors += theta::theta(static_cast<double>(theta::theta_sin_product(x, factors, mode)));
            return survivors + basis.l() - 1;
        }
    }
    throw DomainError("prime_count: unknown method");
}

std::string_view to_string(CompositeMethod m) noexcept {
    switch (m) {
        case CompositeMethod::FloorIE: return "legendre";
        case CompositeMethod::ThetaSum: return "theta-sum";
        case CompositeMethod::DirectMark: return "direct-mark";
    }
    return "?";
}

std::string_view to_string(PrimeMethod m) noexcept {
    switch (m) {
        case PrimeMethod::FloorIE: return "legendre";
        case PrimeMethod::ThetaSum: return "theta-sum";
        case PrimeMethod::Survivor: return "survivor";
    }
    return "?";
}

}  // namespace gtheta::legendre
