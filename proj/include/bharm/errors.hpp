#ifndef BHARM_ERRORS_HPP
#define BHARM_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace bharm {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid argument values: poles, negative abscissas, dimension mismatches,
// points outside the operator's domain.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Invalid run configuration: bad node counts, non-decreasing damping
// schedules, malformed grids.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// Requested operation exceeds what the implementation supports
// (dimension caps, finite-difference order limits, unsupported splits).
class CapabilityError : public Error {
public:
    explicit CapabilityError(const std::string& msg) : Error(msg) {}
};

// A symbolic constant with a Gamma-pole was evaluated numerically.
// pole_argument() names the offending Gamma argument.
class DegenerateConstantError : public Error {
public:
    DegenerateConstantError(const std::string& msg, double pole_arg)
        : Error(msg), pole_arg_(pole_arg) {}
    double pole_argument() const { return pole_arg_; }

private:
    double pole_arg_;
};

// The damped-integral extrapolant diverged. Carries the extrapolation
// tableau diagonal for diagnosis.
class NonConvergenceError : public Error {
public:
    NonConvergenceError(const std::string& msg, std::vector<double> diag)
        : Error(msg), diagonal_(std::move(diag)) {}
    const std::vector<double>& tableau_diagonal() const { return diagonal_; }

private:
    std::vector<double> diagonal_;
};

}  // namespace bharm

#endif
