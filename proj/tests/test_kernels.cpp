#include <doctest.h>

#include <bit>
#include <random>
#include <vector>

#include "gtheta/bound.hpp"
#include "gtheta/double_sieve.hpp"
#include "gtheta/errors.hpp"
#include "gtheta/kernels.hpp"
#include "gtheta/oracle.hpp"
#include "gtheta/pair_counts.hpp"

using namespace gtheta;
using namespace gtheta::simd;

namespace {

ByteTally naive_tally(const std::vector<std::uint8_t>& v, std::size_t off, std::size_t len) {
    ByteTally t;
    for (std::size_t i = off; i < off + len; ++i) {
        if (v[i] == 0)
            ++t.zero;
        else if (v[i] == 1)
            ++t.one;
        else
            ++t.other;
    }
    return t;
}

// Bit-by-bit: bit k of the shifted stream is bit (k + shift) of b.
std::uint64_t naive_and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n, unsigned shift) {
    std::uint64_t c = 0;
    for (std::size_t k = 0; k < 64 * n; ++k) {
        const std::size_t j = k + shift;
        const bool bb = (b[j / 64] >> (j % 64)) & 1;
        const bool ab = (a[k / 64] >> (k % 64)) & 1;
        c += ab && bb;
    }
    return c;
}

struct IsaGuard {
    ~IsaGuard() {
        auto isas = available_isas();
        force_isa(isas.back());
    }
};

}  // namespace

TEST_CASE("scalar is always available and listed first") {
    auto isas = available_isas();
    REQUIRE(!isas.empty());
    CHECK(isas.front() == Isa::Scalar);
    CHECK(isa_available(Isa::Scalar));
    CHECK(kernels_for(Isa::Scalar).isa == Isa::Scalar);
    for (auto isa : {Isa::Scalar, Isa::Avx2, Isa::Avx512, Isa::Neon}) {
        CHECK(!to_string(isa).empty());
        if (!isa_available(isa)) CHECK_THROWS_AS(kernels_for(isa), DomainError);
    }
    MESSAGE("active kernel: " << to_string(active_kernels().isa));
}

TEST_CASE("tally_bytes equivalence") {
    std::mt19937_64 rng(11);
    std::vector<std::uint8_t> buf(2048 + 64);
    for (auto& b : buf) {
        const auto r = rng() % 8;
        b = r < 3 ? 0 : r < 6 ? 1 : static_cast<std::uint8_t>(2 + rng() % 254);
    }
    for (auto isa : available_isas()) {
        CAPTURE(to_string(isa));
        const auto& k = kernels_for(isa);
        for (std::size_t off = 0; off < 33; off += 1 + off / 4)
            for (std::size_t len = 0; len <= 2048; len += (len < 300 ? 1 : 61)) {
                const auto expect = naive_tally(buf, off, len);
                if (!(k.tally_bytes(buf.data() + off, len) == expect)) FAIL("off=" << off << " len=" << len);
                if (!(scalar::tally_bytes(buf.data() + off, len) == expect)) FAIL("scalar off=" << off);
            }
    }
}

TEST_CASE("tally_bytes extreme bytes") {
    std::vector<std::uint8_t> buf(1000, 255);
    for (auto isa : available_isas()) {
        CHECK(kernels_for(isa).tally_bytes(buf.data(), buf.size()) == ByteTally{0, 0, 1000});
        std::vector<std::uint8_t> ones(777, 1);
        CHECK(kernels_for(isa).tally_bytes(ones.data(), ones.size()) == ByteTally{0, 777, 0});
        std::vector<std::uint8_t> zeros(65, 0);
        CHECK(kernels_for(isa).tally_bytes(zeros.data(), zeros.size()) == ByteTally{65, 0, 0});
    }
}

TEST_CASE("and_popcount_shifted equivalence") {
    std::mt19937_64 rng(5);
    std::vector<std::uint64_t> a(320), b(330);
    for (auto& w : a) w = rng() & rng();
    for (auto& w : b) w = rng() | (rng() & rng());
    for (auto isa : available_isas()) {
        CAPTURE(to_string(isa));
        const auto& k = kernels_for(isa);
        for (std::size_t off = 0; off < 5; ++off)
            for (std::size_t n = 0; n <= 300; n += (n < 40 ? 1 : 13))
                for (unsigned shift = 0; shift < 64; ++shift) {
                    const auto expect = scalar::and_popcount_shifted(a.data() + off, b.data() + off, n, shift);
                    if (k.and_popcount_shifted(a.data() + off, b.data() + off, n, shift) != expect)
                        FAIL("off=" << off << " n=" << n << " shift=" << shift);
                }
    }
}

TEST_CASE("scalar and_popcount_shifted against a bitwise oracle") {
    std::mt19937_64 rng(9);
    std::vector<std::uint64_t> a(40), b(41);
    for (auto& w : a) w = rng();
    for (auto& w : b) w = rng();
    for (std::size_t n = 0; n <= 40; n += 3)
        for (unsigned shift = 0; shift < 64; shift += 5)
            CHECK(scalar::and_popcount_shifted(a.data(), b.data(), n, shift) ==
                  naive_and_popcount(a.data(), b.data(), n, shift));
}

TEST_CASE("checked wrappers") {
    std::vector<std::uint64_t> a(4, ~0ULL), b(5, ~0ULL);
    CHECK(and_popcount_shifted(a, b, 3) == 256);
    CHECK_THROWS_AS(and_popcount_shifted(a, std::span<const std::uint64_t>(b).first(4), 0), DomainError);
    CHECK_THROWS_AS(and_popcount_shifted(a, b, 64), DomainError);
    std::vector<std::uint8_t> bytes{0, 1, 2, 0};
    CHECK(tally_bytes(bytes) == ByteTally{2, 1, 1});
}

TEST_CASE("whole pipeline under every ISA") {
    IsaGuard restore;
    const oracle::PrimeTable table(3'000'000);
    std::vector<xi::PairCounts> reference;
    const std::vector<std::uint64_t> ns{8, 100, 1000, 10000, 123456, 2'000'000};
    force_isa(Isa::Scalar);
    for (auto n : ns) reference.push_back(xi::pair_counts(n, table));
    for (auto isa : available_isas()) {
        CAPTURE(to_string(isa));
        force_isa(isa);
        CHECK(active_kernels().isa == isa);
        const xi::PairCorrelator corr(2'000'000);
        for (std::size_t i = 0; i < ns.size(); ++i) {
            CHECK(xi::pair_counts(ns[i], table, {.block = 4099, .workers = 2}) == reference[i]);
            CHECK(corr.counts(ns[i]) == reference[i]);
        }
    }
}
