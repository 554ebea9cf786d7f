#ifndef LIOUWAVE_ERROR_HPP
#define LIOUWAVE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace liouwave {

/// Argument outside the domain where an operation is defined
/// (non-finite input, point outside the light cone, t <= 0, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Evaluation at a point where a closed-form expression is singular
/// (Z = 0 in the kernel-argument partials, Y0 on the light cone).
class SingularityError : public DomainError {
public:
    explicit SingularityError(const std::string& what) : DomainError(what) {}
};

/// Inconsistent solver or run configuration (CFL violation, bad grid, ...).
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// Input of a kind the operation does not handle (e.g. non-separable profile
/// passed to the Fourier route).
class UnsupportedInput : public std::invalid_argument {
public:
    explicit UnsupportedInput(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace liouwave

#endif
