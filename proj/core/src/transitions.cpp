#include "slicebench/samplers/transitions.hpp"

#include <cassert>
#include <cmath>
#include <limits>
#include <string>

#include "slicebench/errors.hpp"
#include "slicebench/math/ellipse.hpp"

namespace slicebench {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 6.283185307179586476925286766559;

}  // namespace

KernelState make_state(const TargetModel& target, Vector x) {
  if (x.size() != target.dim()) throw ContractError("make_state: dimension mismatch");
  if (!x.allFinite()) throw ContractError("make_state: state entries must be finite");
  KernelState state;
  state.log_rho = target.log_rho(x);
  if (state.log_rho == kNegInf)
    throw ContractError("make_state: initial state has zero density under " + target.name());
  state.x = std::move(x);
  return state;
}

std::pair<double, double> shrink_bracket(double theta, double theta_min, double theta_max) {
  if (!(theta_min <= theta && theta <= theta_max))
    throw ContractError("shrink_bracket: theta outside bracket");
  if (!(theta_min <= 0.0 && 0.0 <= theta_max))
    throw ContractError("shrink_bracket: bracket must contain 0");
  if (theta < 0.0) return {theta, theta_max};
  return {theta_min, theta};
}

TransitionRecord ess_transition(KernelState& state, const TargetModel& target, RngStream& rng,
                                std::uint32_t shrink_cap) {
  if (state.log_rho == kNegInf)
    throw ContractError("ess_transition: current state has zero density");

  const Vector w = target.prior().sample(rng);
  const double log_threshold = state.log_rho + std::log(rng.uniform_open01());
  double theta = rng.uniform(0.0, kTwoPi);
  double theta_min = theta - kTwoPi;
  double theta_max = theta;

  TransitionRecord rec;
  rec.log_threshold = log_threshold;
  while (true) {
    const Vector y = ellipse_point(state.x, w, theta);
    const double log_rho_y = target.log_rho(y);
    ++rec.proposal_evals;
    ++state.evals;
    if (log_rho_y >= log_threshold) {
      state.x = y;
      state.log_rho = log_rho_y;
      state.log_prior_quad.reset();
      return rec;
    }
    if (rec.shrink_iterations >= shrink_cap) {
      throw RunawayShrinkageError(
          "ess_transition: no acceptable angle after " + std::to_string(shrink_cap) +
              " shrink iterations (pathological target or state)",
          state.x, w, log_threshold);
    }
    std::tie(theta_min, theta_max) = shrink_bracket(theta, theta_min, theta_max);
    theta = rng.uniform(theta_min, theta_max);
    ++rec.shrink_iterations;
  }
}

TransitionRecord pcn_transition(KernelState& state, const TargetModel& target, double s,
                                RngStream& rng) {
  if (!(s > 0.0 && s <= 1.0)) throw ContractError("pcn_transition: s must lie in (0, 1]");

  const Vector w = target.prior().sample(rng);
  const Vector y = std::sqrt(1.0 - s * s) * state.x + s * w;
  const double log_rho_y = target.log_rho(y);
  ++state.evals;

  TransitionRecord rec;
  rec.proposal_evals = 1;
  const double log_ratio = log_rho_y - state.log_rho;
  const bool accept = log_ratio >= 0.0 || std::log(rng.uniform_open01()) <= log_ratio;
  rec.accepted = accept;
  if (accept) {
    state.x = y;
    state.log_rho = log_rho_y;
    state.log_prior_quad.reset();
    ++state.accepted;
  }
  return rec;
}

TransitionRecord rwm_transition(KernelState& state, const TargetModel& target, double sigma,
                                RngStream& rng) {
  if (!(sigma > 0.0)) throw ContractError("rwm_transition: sigma must be positive");

  if (!state.log_prior_quad) state.log_prior_quad = -0.5 * target.prior_quad(state.x);
  const Vector y = state.x + sigma * standard_normal_vector(target.dim(), rng);
  const double log_rho_y = target.log_rho(y);
  ++state.evals;

  TransitionRecord rec;
  rec.proposal_evals = 1;
  bool accept = false;
  if (log_rho_y > kNegInf) {
    const double log_prior_y = -0.5 * target.prior_quad(y);
    const double log_ratio = (log_rho_y + log_prior_y) - (state.log_rho + *state.log_prior_quad);
    accept = log_ratio >= 0.0 || std::log(rng.uniform_open01()) <= log_ratio;
    if (accept) {
      state.x = y;
      state.log_rho = log_rho_y;
      state.log_prior_quad = log_prior_y;
      ++state.accepted;
    }
  }
  rec.accepted = accept;
  return rec;
}

TransitionRecord simple_slice_transition_radial(KernelState& state, const TargetModel& target,
                                                RngStream& rng) {
  const auto& profile = target.radial_profile();
  if (!profile)
    throw UnsupportedTargetError("simple_slice_transition_radial: target '" + target.name() +
                                 "' has no radial profile");

  const double d = static_cast<double>(target.dim());
  const double threshold = profile->log_density(state.x.norm()) + std::log(rng.uniform_open01());
  const auto [r_lo, r_hi] = profile->level_set(threshold);

  // Radius with density ~ r^{d-1} on [r_lo, r_hi], inverse CDF in log space:
  // log r = log r_hi + (1/d) log(u + (1-u) (r_lo/r_hi)^d).
  double radius = 0.0;
  if (r_hi > 0.0) {
    const double u = rng.uniform01();
    const double log_ratio_d = d * (std::log(r_lo) - std::log(r_hi));
    const double log_r = std::log(r_hi) + std::log(u + (1.0 - u) * std::exp(log_ratio_d)) / d;
    radius = std::exp(log_r);
  }

  state.x = radius * unit_sphere_vector(target.dim(), rng);
  state.log_rho = target.log_rho(state.x);
  state.log_prior_quad.reset();
  ++state.evals;

  TransitionRecord rec;
  rec.proposal_evals = 1;
  rec.log_threshold = threshold;
  return rec;
}

TransitionRecord identity_transition(KernelState& state) {
  (void)state;
  return TransitionRecord{};
}

}  // namespace slicebench
