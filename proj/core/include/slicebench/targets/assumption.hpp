#ifndef SLICEBENCH_TARGETS_ASSUMPTION_HPP
#define SLICEBENCH_TARGETS_ASSUMPTION_HPP

#include <cstdint>
#include <optional>

#include "slicebench/math/rng.hpp"
#include "slicebench/targets/logistic_data.hpp"
#include "slicebench/targets/target_model.hpp"
#include "slicebench/types.hpp"

namespace slicebench {

struct AssumptionCounterexample {
  Vector x;           // center with ||x|| > R
  Vector y;           // probe with ||y|| <= alpha ||x|| but rho(y) < rho(x)
  double log_rho_x = 0.0;
  double log_rho_y = 0.0;
};

struct AssumptionProbeReport {
  bool passed = true;
  std::uint64_t probes_run = 0;
  std::optional<AssumptionCounterexample> counterexample;
  double tested_R = 0.0;
  double tested_alpha = 0.0;
};

// Empirical audit of the level-set inclusion B_{alpha ||x||}(0) within
// { y : rho(y) >= rho(x) } for ||x|| > R. Draws n_centers centers with norm
// uniform on [R (1 + 1e-9), 10 R] and uniform direction; for each center,
// n_probes points uniform in the closed ball of radius alpha ||x|| (interior
// included: the level set need not be star-shaped). Reports the first pair
// with log rho(y) < log rho(x) - 1e-12, the tolerance absorbing roundoff.
// A failing report is a valid result, not an error.
AssumptionProbeReport check_assumption1(const TargetModel& target, double R, double alpha,
                                        int n_centers, int n_probes, RngStream& rng);

// Closed-form (R, alpha) pairs. Formulas yielding R = 0 are floored at 1e-6
// so that { ||x|| > R } stays a nonempty, samplable probe region.

// Gaussian likelihood with covariance Sigma centered at x0:
// R = 4 sqrt(lmax/lmin) ||x0||, alpha = sqrt(lmin/lmax) / 2.
AssumptionConstants gaussian_assumption_bounds(const Matrix& sigma, const Vector& x0);

// Density with arbitrary continuous center on B_{r_prime}(x0) and a
// decreasing radial tail in a norm |.| with c1 ||.|| <= |.| <= c2 ||.||:
// R = max(r_prime, 4 (c2/c1) ||x0||), alpha = c1 / (2 c2).
AssumptionConstants radial_tail_assumption_bounds(double r_prime, double c1, double c2,
                                                  double x0_norm);

// Tail-shifted logistic likelihood: alpha = eps / 2,
// R = 4 N min_i ||xi_i|| / eps.
AssumptionConstants shifted_logistic_assumption_bounds(double epsilon, const LogisticData& data);

// Radially decreasing exponential-family density exp(-phi(|x - x0|)):
// R = 4 (c2/c1) ||x0||, alpha = c1 / (2 c2).
AssumptionConstants exp_family_assumption_bounds(double c1, double c2, double x0_norm);

}  // namespace slicebench

#endif
