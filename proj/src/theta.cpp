#include "gtheta/theta.hpp"

#include <cfloat>
#include <cmath>
#include <numbers>
#include <string>

#include "gtheta/errors.hpp"

namespace gtheta::theta {

namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;
constexpr long double kUnitRoundoff = LDBL_EPSILON / 2;

void check_float_guard(std::uint64_t x, std::uint64_t d, const ThetaMode& mode, const GuardedDomain& domain) {
    if (!domain.contains(x, d))
        throw GuardError("theta_sin: (x = " + std::to_string(x) + ", d = " + std::to_string(d) +
                         ") outside the guarded float domain");
    if (!domain.admits(mode.epsilon()))
        throw GuardError("theta_sin: epsilon does not separate zeros from nonzeros on this domain");
}

// |sin((x - m) * pi / d)| < epsilon with the argument built as (x*pi - m*pi)/d.
int float_zero(std::uint64_t x, std::uint64_t m, std::uint64_t d, double epsilon) {
    const long double arg = (static_cast<long double>(x) * kPi - static_cast<long double>(m) * kPi) /
                            static_cast<long double>(d);
    return std::fabs(std::sin(arg)) < static_cast<long double>(epsilon) ? 1 : 0;
}

}  // namespace

ThetaMode ThetaMode::float_approx(double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1e-3))
        throw DomainError("ThetaMode: epsilon must lie in (0, 1e-3), got " + std::to_string(epsilon));
    return ThetaMode{Kind::FloatApprox, epsilon};
}

long double GuardedDomain::error_bound() const noexcept {
    // Two rounded products, a subtraction and a division on arguments of
    // magnitude <= max_x * pi, then the sine's own rounding.
    const long double magnitude = static_cast<long double>(max_x) * kPi;
    return 6 * kUnitRoundoff * magnitude + 2 * kUnitRoundoff;
}

long double GuardedDomain::min_nonzero() const noexcept {
    return std::sin(kPi / static_cast<long double>(max_d));
}

bool GuardedDomain::separated() const noexcept { return min_nonzero() >= 100 * error_bound(); }

bool GuardedDomain::admits(double epsilon) const noexcept {
    const long double e = epsilon;
    return separated() && e > error_bound() && e < min_nonzero();
}

int theta(double x) {
    if (!std::isfinite(x)) throw DomainError("theta: argument must be finite");
    return x == 0.0 ? 1 : 0;
}

int double_theta(double x) { return 1 - theta(x); }

int theta_sin(std::uint64_t x, std::uint64_t d, const ThetaMode& mode, const GuardedDomain& domain) {
    if (d == 0) throw DomainError("theta_sin: d must be >= 1");
    if (mode.is_exact()) return x % d == 0 ? 1 : 0;
    check_float_guard(x, d, mode, domain);
    return float_zero(x, 0, d, mode.epsilon());
}

int theta_sin_shift(std::uint64_t x, std::uint64_t m, std::uint64_t d, const ThetaMode& mode,
                    const GuardedDomain& domain) {
    if (d == 0) throw DomainError("theta_sin_shift: d must be >= 1");
    if (m >= d) throw DomainError("theta_sin_shift: need m < d");
    if (mode.is_exact()) return x % d == m ? 1 : 0;
    check_float_guard(x, d, mode, domain);
    return float_zero(x, m, d, mode.epsilon());
}

int theta_sin_product(std::uint64_t x, std::span<const SineFactor> factors, const ThetaMode& mode,
                      const GuardedDomain& domain) {
    if (mode.is_exact()) {
        for (const auto& f : factors) {
            if (f.modulus == 0 || f.shift >= f.modulus) throw DomainError("theta_sin_product: bad factor");
            if (x % f.modulus == f.shift) return 1;
        }
        return 0;
    }
    for (const auto& f : factors) {
        const int zero = f.shift == 0 ? theta_sin(x, f.modulus, mode, domain)
                                      : theta_sin_shift(x, f.shift, f.modulus, mode, domain);
        if (zero) return 1;
    }
    return 0;
}

std::pair<int, int> theta_sum_identity(double x, double y) {
    return {theta(x * y), theta(x) + theta(y) - theta(x + y)};
}

bool sum_identity_guard(double x, double y) noexcept { return !(x + y == 0.0 && x != 0.0); }

}  // namespace gtheta::theta
