#pragma once

#include <cstdint>
#include <span>
#include <utility>

namespace gtheta::theta {

/// How Theta(sin(x*pi/d)) is evaluated.
///
/// Exact reads the expression as the divisibility test it encodes.
/// FloatApprox evaluates the sine literally and thresholds |sin| < epsilon;
/// it is only trusted inside a GuardedDomain.
class ThetaMode {
public:
    enum class Kind { Exact, FloatApprox };

    static constexpr double kDefaultEpsilon = 1e-8;

    static ThetaMode exact() noexcept { return ThetaMode{Kind::Exact, kDefaultEpsilon}; }
    /// Throws DomainError unless epsilon is in (0, 1e-3).
    static ThetaMode float_approx(double epsilon = kDefaultEpsilon);

    Kind kind() const noexcept { return kind_; }
    double epsilon() const noexcept { return epsilon_; }
    bool is_exact() const noexcept { return kind_ == Kind::Exact; }

private:
    ThetaMode(Kind kind, double epsilon) noexcept : kind_(kind), epsilon_(epsilon) {}

    Kind kind_;
    double epsilon_;
};

/// Region of (x, d) where the floating sine separates true zeros from
/// nonzeros. The smallest nonzero |sin(k*pi/d)| is sin(pi/d); the largest
/// deviation of a true zero is error_bound().
struct GuardedDomain {
    std::uint64_t max_x = 10'000'000;
    std::uint64_t max_d = 10'000;

    /// Worst-case |computed sin - exact sin| for arguments up to max_x*pi.
    long double error_bound() const noexcept;
    /// sin(pi / max_d).
    long double min_nonzero() const noexcept;
    /// min_nonzero() >= 100 * error_bound().
    bool separated() const noexcept;
    /// error_bound() < epsilon < min_nonzero(), i.e. epsilon classifies both sides.
    bool admits(double epsilon) const noexcept;
    bool contains(std::uint64_t x, std::uint64_t d) const noexcept { return x <= max_x && d <= max_d; }
};

/// 1 iff x == 0 (negative zero included). Throws DomainError for non-finite x.
int theta(double x);

/// 1 - theta(x): the survivor indicator.
int double_theta(double x);

/// Theta(sin(x*pi/d)). Throws DomainError for d == 0, GuardError when
/// FloatApprox is asked for (x, d) outside `domain`.
int theta_sin(std::uint64_t x, std::uint64_t d, const ThetaMode& mode, const GuardedDomain& domain = {});

/// Theta(sin((x - m)*pi/d)), i.e. 1 iff x = m (mod d). Requires m < d.
int theta_sin_shift(std::uint64_t x, std::uint64_t m, std::uint64_t d, const ThetaMode& mode,
                    const GuardedDomain& domain = {});

/// One factor sin((x - shift)*pi/modulus) of a sine product.
struct SineFactor {
    std::uint64_t modulus;
    std::uint64_t shift = 0;
};

/// Theta of a product of sine factors, evaluated factorwise: the product is
/// zero iff some factor is. The literal float product underflows long
/// before any factor reaches zero, so it is never formed.
int theta_sin_product(std::uint64_t x, std::span<const SineFactor> factors, const ThetaMode& mode,
                      const GuardedDomain& domain = {});

/// (Theta(xy), Theta(x) + Theta(y) - Theta(x + y)). The two agree unless
/// x + y == 0 with x != 0.
std::pair<int, int> theta_sum_identity(double x, double y);

/// True when (x, y) lies where theta_sum_identity's sides must agree.
bool sum_identity_guard(double x, double y) noexcept;

}  // namespace gtheta::theta
