#ifndef SLICEBENCH_SAMPLERS_KERNEL_STATE_HPP
#define SLICEBENCH_SAMPLERS_KERNEL_STATE_HPP

#include <cstdint>
#include <optional>

#include "slicebench/targets/target_model.hpp"
#include "slicebench/types.hpp"

namespace slicebench {

// Current chain position with its cached log rho value. The cache is an
// invariant: log_rho == target.log_rho(x) at all times, and chain states
// always have positive density (log_rho > -inf).
struct KernelState {
  Vector x;
  double log_rho = 0.0;
  // -1/2 x^T C^{-1} x, maintained by the random walk kernel only (the
  // prior-reversible kernels never need the Lebesgue density).
  std::optional<double> log_prior_quad;

  std::uint64_t evals = 0;     // cumulative log rho evaluations at proposal points
  std::uint64_t accepted = 0;  // cumulative accepts (Metropolis kernels)
};

// Evaluates log rho once and checks positivity of the density.
KernelState make_state(const TargetModel& target, Vector x);

}  // namespace slicebench

#endif
