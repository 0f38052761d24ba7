#ifndef SLICEBENCH_SAMPLERS_TRANSITIONS_HPP
#define SLICEBENCH_SAMPLERS_TRANSITIONS_HPP

#include <cstdint>
#include <optional>
#include <utility>

#include "slicebench/math/rng.hpp"
#include "slicebench/samplers/kernel_state.hpp"
#include "slicebench/targets/target_model.hpp"

namespace slicebench {

enum class KernelKind {
  EllipticalSlice,
  Pcn,
  Rwm,
  SliceRadial,
  Identity,  // y = x; diagnostics self-test only
};

// Per-transition bookkeeping. For the elliptical slice kernel
// proposal_evals >= 1 and shrink_iterations == proposal_evals - 1.
struct TransitionRecord {
  std::uint32_t proposal_evals = 0;
  std::uint32_t shrink_iterations = 0;
  std::optional<bool> accepted;  // Metropolis kernels only
  // Slice kernels: the log threshold drawn this transition (log rho scale for
  // the elliptical kernel, radial log-density scale for the simple one).
  double log_threshold = 0.0;
};

// Angle-bracket shrinkage step: a rejected theta < 0 becomes the new lower
// endpoint, a rejected theta >= 0 the new upper one, so 0 (which recovers the
// current state) always stays inside the bracket.
std::pair<double, double> shrink_bracket(double theta, double theta_min, double theta_max);

// One elliptical slice transition, in log space: w ~ N(0, C); threshold
// log t = log rho(x) + log u with u ~ U(0, 1]; theta ~ U[0, 2pi] with initial
// bracket [theta - 2pi, theta]; shrink until cos(theta) x + sin(theta) w lands
// in the slice. Draw order (w, u, theta, redraws...) is fixed; tests replay it.
// Throws RunawayShrinkageError after shrink_cap rejected angles.
TransitionRecord ess_transition(KernelState& state, const TargetModel& target, RngStream& rng,
                                std::uint32_t shrink_cap = 10000);

// Preconditioned Crank-Nicolson: proposal sqrt(1 - s^2) x + s w with
// w ~ N(0, C), accepted with probability min(1, rho(y) / rho(x)). s in (0, 1].
TransitionRecord pcn_transition(KernelState& state, const TargetModel& target, double s,
                                RngStream& rng);

// Random walk Metropolis with isotropic proposal x + sigma xi. Accepts on the
// Lebesgue density of the posterior (likelihood times prior), caching the
// prior quadratic form alongside log rho.
TransitionRecord rwm_transition(KernelState& state, const TargetModel& target, double sigma,
                                RngStream& rng);

// Simple (ideal) slice sampler for rotationally invariant posteriors: draws
// the threshold on the radial log density h, solves the level set exactly,
// then samples radius with density proportional to r^{d-1} via an inverse CDF
// evaluated in log space (no r^d overflow at d = 1000), and a uniform
// direction. Requires target.radial_profile().
TransitionRecord simple_slice_transition_radial(KernelState& state, const TargetModel& target,
                                                RngStream& rng);

// y = x. Degenerate kernel for harness self-tests.
TransitionRecord identity_transition(KernelState& state);

}  // namespace slicebench

#endif
