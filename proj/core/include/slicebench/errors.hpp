#ifndef SLICEBENCH_ERRORS_HPP
#define SLICEBENCH_ERRORS_HPP

#include <stdexcept>
#include <string>

#include "slicebench/types.hpp"

namespace slicebench {

// Caller broke a documented precondition (dimension mismatch, parameter
// out of range, state with zero density, ...).
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Cholesky factorization hit a non-positive pivot.
class FactorizationError : public std::runtime_error {
 public:
  FactorizationError(std::string msg, int pivot)
      : std::runtime_error(std::move(msg)), pivot_(pivot) {}
  // Zero-based index of the first failing diagonal pivot.
  int pivot() const { return pivot_; }

 private:
  int pivot_;
};

// Series statistics requested on a constant (zero-variance) series.
class DegenerateSeriesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operation needs target structure (radial profile, closed-form constants)
// the given target does not carry.
class UnsupportedTargetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The shrinkage loop exceeded its hard cap. The loop terminates almost
// surely on valid inputs, so this signals a pathological target or state.
class RunawayShrinkageError : public std::runtime_error {
 public:
  RunawayShrinkageError(std::string msg, Vector x, Vector w, double log_threshold)
      : std::runtime_error(std::move(msg)),
        x_(std::move(x)),
        w_(std::move(w)),
        log_threshold_(log_threshold) {}

  const Vector& state() const { return x_; }
  const Vector& auxiliary() const { return w_; }
  double log_threshold() const { return log_threshold_; }

  // Filled in by the chain runner; -1 when the failure happened outside a chain.
  long step = -1;

 private:
  Vector x_;
  Vector w_;
  double log_threshold_;
};

}  // namespace slicebench

#endif
