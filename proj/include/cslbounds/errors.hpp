#pragma once

#include <stdexcept>
#include <string>

namespace cslbounds {

/// Base class for iterative schemes that failed to converge.
class ConvergenceError : public std::runtime_error {
  public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// Steady-state fixed point did not settle (optical bistability regime).
class BistabilityError : public ConvergenceError {
  public:
    BistabilityError(const std::string& what, double last, double previous)
        : ConvergenceError(what), last_detuning(last), previous_detuning(previous) {}

    double last_detuning;
    double previous_detuning;
};

/// Quadrature refinement stalled: successive node doublings still disagree.
class OracleConvergenceError : public ConvergenceError {
  public:
    explicit OracleConvergenceError(const std::string& what) : ConvergenceError(what) {}
};

/// A closed-form evaluation produced a non-finite intermediate.
class PrecisionError : public std::runtime_error {
  public:
    explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cslbounds
