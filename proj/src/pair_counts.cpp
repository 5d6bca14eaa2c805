#include "gtheta/pair_counts.hpp"

#include <utility>

#include "gtheta/errors.hpp"
#include "gtheta/integer_math.hpp"
#include "gtheta/legendre.hpp"

namespace gtheta::xi {

namespace {

// Inverse of a modulo p for gcd(a, p) = 1.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    std::int64_t t = 0, new_t = 1;
    auto r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw DomainError("mod_inverse: arguments not coprime");
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(p) : t);
}

// A single residue class x = residue (mod modulus) restricted to the
// interval. Once the modulus exceeds the interval's upper end at most one
// member remains, and it is tracked directly.
struct ClassNode {
    std::uint64_t modulus = 1;
    std::uint64_t residue = 0;
    bool single = false;
    std::uint64_t member = 0;  // valid when single
};

class TildeInclusionExclusion {
public:
    explicit TildeInclusionExclusion(const ResidueBasis& basis) : basis_(basis), iv_(basis.interval) {}

    std::uint64_t run() {
        walk(0, ClassNode{}, 0, false);
        // The sum is -sum (-1)^(|T|+|S|) count, accumulated with that sign.
        if (total_ < 0) throw DomainError("tilde inclusion-exclusion produced a negative count");
        return static_cast<std::uint64_t>(total_);
    }

private:
    std::int64_t count(const ClassNode& node) const {
        if (node.single) return 1;
        return static_cast<std::int64_t>(class_members_in(iv_.a, iv_.b, node.residue, node.modulus));
    }

    // Intersects the node's class with x = c (mod p); false when nothing of
    // the interval survives.
    bool refine(const ClassNode& node, std::uint64_t p, std::uint64_t c, ClassNode& out) const {
        if (node.single) {
            if (node.member % p != c) return false;
            out = node;
            return true;
        }
        const std::uint64_t q = node.modulus;
        const std::uint64_t step = ((c + p - node.residue % p) % p) * mod_inverse(q % p, p) % p;
        std::uint64_t modulus = 0, residue = 0;
        if (__builtin_mul_overflow(q, p, &modulus) || __builtin_mul_overflow(q, step, &residue) ||
            __builtin_add_overflow(residue, node.residue, &residue))
            throw DomainError("tilde inclusion-exclusion: modulus exceeds 64 bits");
        if (modulus <= iv_.b) {
            out = {modulus, residue, false, 0};
            return class_members_in(iv_.a, iv_.b, out.residue, out.modulus) > 0;
        }
        // residue < modulus and modulus > b: at most one member, residue itself
        // or nothing (the next member residue + modulus already exceeds b).
        if (residue < iv_.a || residue > iv_.b) return false;
        out = {0, 0, true, residue};
        return true;
    }

    void walk(std::size_t from, const ClassNode& node, unsigned depth, bool has_non_dividing) {
        if (has_non_dividing) {
            const std::int64_t c = count(node);
            total_ += (depth % 2 == 0) ? -c : c;
        }
        for (std::size_t i = from; i < basis_.entries.size(); ++i) {
            const auto& e = basis_.entries[i];
            ClassNode child;
            if (refine(node, e.p, 0, child)) walk(i + 1, child, depth + 1, has_non_dividing || !e.divides_n);
            if (!e.divides_n && refine(node, e.p, e.m, child)) walk(i + 1, child, depth + 1, true);
        }
    }

    const ResidueBasis& basis_;
    Interval iv_;
    std::int64_t total_ = 0;
};

}  // namespace

std::uint64_t hat_composite_pairs(const ResidueBasis& basis) { return double_sieve_tally(basis).hat; }

std::uint64_t hat_composite_pairs_ie(const ResidueBasis& basis) {
    const auto dividing = basis.dividing_primes();
    const Interval iv = basis.interval;
    std::int64_t total = 0;
    legendre::for_each_subset_product(dividing, iv.b, [&](const legendre::SubsetProduct& s) {
        const auto c = static_cast<std::int64_t>(multiples_in(iv.a, iv.b, s.product));
        total += (s.factors % 2 == 1) ? c : -c;
    });
    return static_cast<std::uint64_t>(total);
}

std::uint64_t tilde_composite_pairs(const ResidueBasis& basis) { return double_sieve_tally(basis).tilde; }

std::uint64_t tilde_composite_pairs_ie(const ResidueBasis& basis) { return TildeInclusionExclusion(basis).run(); }

PairCounts pair_counts(const ResidueBasis& basis, const SieveOptions& options) {
    const SieveTally tally = double_sieve_tally(basis, options);
    PairCounts c;
    c.n = basis.n;
    c.interval = basis.interval;
    c.length = basis.interval.length();
    c.hat = tally.hat;
    c.tilde = tally.tilde;
    c.prime_pairs = tally.survivors;
    c.composite_pairs = c.length - c.prime_pairs;
    return c;
}

PairCounts pair_counts(std::uint64_t n, const oracle::PrimeTable& table, const SieveOptions& options) {
    return pair_counts(make_residue_basis(n, table), options);
}

std::vector<std::uint64_t> prime_pair_list(const ResidueBasis& basis, const SieveOptions& options) {
    return double_sieve(basis, options).to_list();
}

std::vector<std::uint64_t> prime_pair_list(std::uint64_t n, const oracle::PrimeTable& table,
                                           const SieveOptions& options) {
    return prime_pair_list(make_residue_basis(n, table), options);
}

}  // namespace gtheta::xi
