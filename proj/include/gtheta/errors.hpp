#pragma once

#include <stdexcept>
#include <string>

namespace gtheta {

// Input violates an operation's precondition (odd N, zero modulus, ...).
using DomainError = std::domain_error;

// Query outside the range a table was built for.
using RangeError = std::out_of_range;

// A FloatApprox evaluation was requested outside the region where the
// zero/nonzero separation of sin(x*pi/d) is proven.
class GuardError : public std::domain_error {
public:
    explicit GuardError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace gtheta
