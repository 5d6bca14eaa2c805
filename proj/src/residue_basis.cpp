#include "gtheta/residue_basis.hpp"

#include <string>

#include "gtheta/errors.hpp"
#include "gtheta/integer_math.hpp"

namespace gtheta::xi {

Interval default_interval(std::uint64_t n) {
    const std::uint64_t a = ceil_sqrt(n);
    return {a, n - a};
}

std::vector<std::uint64_t> ResidueBasis::dividing_primes() const {
    std::vector<std::uint64_t> out;
    for (const auto& e : entries)
        if (e.divides_n) out.push_back(e.p);
    return out;
}

std::vector<ResidueEntry> ResidueBasis::non_dividing() const {
    std::vector<ResidueEntry> out;
    for (const auto& e : entries)
        if (!e.divides_n) out.push_back(e);
    return out;
}

ResidueBasis make_residue_basis(std::uint64_t n, const oracle::PrimeTable& table, std::optional<Interval> interval) {
    if (n < 8 || n % 2 != 0)
        throw DomainError("make_residue_basis: n must be an even integer >= 8, got " + std::to_string(n));
    const std::uint64_t root = isqrt(n);
    if (table.limit() < root) throw RangeError("make_residue_basis: prime table does not reach floor(sqrt(n))");

    ResidueBasis basis;
    basis.n = n;
    basis.interval = interval.value_or(default_interval(n));
    if (basis.interval.a < 1 || basis.interval.a > basis.interval.b || basis.interval.b > n - 1)
        throw DomainError("make_residue_basis: interval must satisfy 1 <= a <= b <= n - 1");
    for (auto p : table.primes_up_to(root)) basis.entries.push_back({p, n % p, n % p == 0});
    return basis;
}

std::uint64_t xi_identity(std::uint64_t z, std::uint64_t n) {
    if (z < 1 || z + 1 > n) throw DomainError("xi_identity: need 1 <= z <= n - 1");
    const std::uint64_t forward = z;
    const std::uint64_t backward = n - z;
    return forward + backward;
}

namespace {

PartKind classify(std::uint64_t v) {
    if (v == 1) return PartKind::One;
    return oracle::is_prime_trial(v) ? PartKind::Prime : PartKind::Composite;
}

}  // namespace

PairClass classify_pair(std::uint64_t x, std::uint64_t n) {
    if (x < 1 || x + 1 > n) throw RangeError("classify_pair: need 1 <= x <= n - 1");
    return {classify(x), classify(n - x)};
}

std::string_view to_string(PartKind k) noexcept {
    switch (k) {
        case PartKind::One: return "one";
        case PartKind::Prime: return "prime";
        case PartKind::Composite: return "composite";
    }
    return "?";
}

std::uint64_t residue_class_count(std::uint64_t n, std::uint64_t p, std::uint64_t r) {
    if (p == 0 || r >= p) throw DomainError("residue_class_count: need 0 <= r < p");
    if (n < 2) return 0;
    return class_members_in(1, n - 1, r, p);
}

std::uint64_t backward_multiples(std::uint64_t n, std::uint64_t p) {
    if (p == 0) throw DomainError("backward_multiples: p must be >= 1");
    if (n < 2) return 0;
    std::uint64_t count = 0;
    for (std::uint64_t x = n - 1; x >= 1; --x) count += (n - x) % p == 0;
    return count;
}

std::uint64_t marks_per_period(const ResidueEntry& e) noexcept {
    std::uint64_t marked = 0;
    for (std::uint64_t r = 0; r < e.p; ++r) marked += (r == 0 || r == e.m);
    return marked;
}

}  // namespace gtheta::xi
