#ifndef SLICEBENCH_DIAGNOSTICS_MOMENTS_HPP
#define SLICEBENCH_DIAGNOSTICS_MOMENTS_HPP

#include <vector>

#include "slicebench/diagnostics/autocorrelation.hpp"
#include "slicebench/types.hpp"

namespace slicebench {

struct MomentsSummary {
  Vector mean;
  Matrix covariance;  // divisor n - 1
  // Per-coordinate Monte Carlo standard error sqrt(var_i / ess_i), each
  // coordinate using its own effective sample size. Coordinates whose series
  // is degenerate (zero variance) get se_valid = false and a NaN entry.
  Vector mc_standard_error;
  std::vector<bool> se_valid;
};

// Sample mean, covariance and autocorrelation-adjusted standard errors of an
// n x d sample matrix (rows are samples). Requires n >= 2.
MomentsSummary summary_moments(const Matrix& samples, const EssOptions& ess_options = {});

}  // namespace slicebench

#endif
