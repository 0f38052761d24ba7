#ifndef SLICEBENCH_DIAGNOSTICS_DRIFT_HPP
#define SLICEBENCH_DIAGNOSTICS_DRIFT_HPP

#include <span>
#include <vector>

#include "slicebench/math/rng.hpp"
#include "slicebench/samplers/chain.hpp"
#include "slicebench/targets/target_model.hpp"

namespace slicebench {

// Empirical drift diagnostic for V(x) = ||x||: estimates m(r) = E ||Y_x|| at
// ||x|| = r and fits m(r) ~ delta * r + L. A fitted slope bounded away from 1
// is evidence of geometric drift back toward the center.
struct DriftReport {
  std::vector<double> radii;
  std::vector<double> m_hat;      // Monte Carlo mean of ||Y_x|| per radius
  std::vector<double> std_error;  // standard error of each m_hat
  double delta_hat = 0.0;         // fitted slope
  double intercept_hat = 0.0;     // fitted L
  double delta_std_error = 0.0;   // OLS slope standard error
};

struct DriftOptions {
  int reps = 1000;  // independent single transitions per radius, >= 100
  // Start each replicate from r * e_1 by default (exact for the rotationally
  // structured catalog targets); true draws a fresh random direction per
  // replicate for targets without that symmetry.
  bool average_directions = false;
};

DriftReport drift_estimate(const TargetModel& target, const KernelSpec& kernel,
                           std::span<const double> radii, const DriftOptions& options,
                           RngStream& rng);

}  // namespace slicebench

#endif
