#include "slicebench/samplers/tuning.hpp"

#include <algorithm>
#include <cmath>

#include "slicebench/errors.hpp"

namespace slicebench {

namespace {

// Saturation bound for the pCN logit: sigmoid(40) rounds to 1.0 in double
// precision, so s = 1 (the independence sampler) is reachable exactly.
constexpr double kLogitClamp = 40.0;

}  // namespace

double tune_transform(double param, TuneScale scale) {
  if (scale == TuneScale::Log) {
    if (!(param > 0.0)) throw ContractError("tune_transform: parameter must be positive");
    return std::log(param);
  }
  if (!(param > 0.0 && param <= 1.0))
    throw ContractError("tune_transform: pCN parameter must lie in (0, 1]");
  return std::log(param) - std::log1p(-param);  // +inf at param = 1, clamped below
}

double tune_inverse(double t, TuneScale scale) {
  if (scale == TuneScale::Log) return std::exp(t);
  return 1.0 / (1.0 + std::exp(-std::min(t, kLogitClamp)));
}

double robbins_monro_step_transformed(double t, bool accepted, long k, double target_rate,
                                      TuneScale scale) {
  if (k < 1) throw ContractError("robbins_monro_step_transformed: k counts from 1");
  const double gain = std::pow(static_cast<double>(k), -0.6);
  t += gain * ((accepted ? 1.0 : 0.0) - target_rate);
  if (scale == TuneScale::Logit) t = std::clamp(t, -kLogitClamp, kLogitClamp);
  return t;
}

TuneOutcome tune_acceptance(KernelKind kind, const TargetModel& target, KernelState state,
                            double initial_param, double target_rate, long steps, RngStream& rng) {
  if (kind != KernelKind::Pcn && kind != KernelKind::Rwm)
    throw ContractError("tune_acceptance: only pCN and RWM are tunable");
  if (steps < 1000) throw ContractError("tune_acceptance: need at least 1000 tuning steps");
  if (!(target_rate > 0.0 && target_rate < 1.0))
    throw ContractError("tune_acceptance: target rate must lie in (0, 1)");

  const TuneScale scale = kind == KernelKind::Pcn ? TuneScale::Logit : TuneScale::Log;
  double t = tune_transform(initial_param, scale);
  double param = initial_param;
  long accepted = 0;
  for (long k = 1; k <= steps; ++k) {
    const TransitionRecord rec = kind == KernelKind::Pcn
                                     ? pcn_transition(state, target, param, rng)
                                     : rwm_transition(state, target, param, rng);
    const bool acc = rec.accepted.value_or(false);
    accepted += acc ? 1 : 0;
    t = robbins_monro_step_transformed(t, acc, k, target_rate, scale);
    param = tune_inverse(t, scale);
  }

  TuneOutcome out;
  out.param = param;
  out.state = std::move(state);
  out.acceptance_rate = static_cast<double>(accepted) / static_cast<double>(steps);
  return out;
}

}  // namespace slicebench
