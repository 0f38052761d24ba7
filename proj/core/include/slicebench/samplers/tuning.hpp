#ifndef SLICEBENCH_SAMPLERS_TUNING_HPP
#define SLICEBENCH_SAMPLERS_TUNING_HPP

#include "slicebench/math/rng.hpp"
#include "slicebench/samplers/transitions.hpp"
#include "slicebench/targets/target_model.hpp"

namespace slicebench {

enum class TuneScale {
  Log,    // random walk sigma
  Logit,  // pCN s, keeps s in (0, 1]; the logit saturates to s = 1 exactly
};

// One Robbins-Monro step with gain k^{-0.6} on the transformed coordinate
// (log sigma or logit s): t moves by gain * (accepted - target_rate). The
// tuner keeps t across steps; round-tripping through the parameter itself
// would stall at the sigmoid's representable-value gaps near 1.
double robbins_monro_step_transformed(double t, bool accepted, long k, double target_rate,
                                      TuneScale scale);
double tune_transform(double param, TuneScale scale);
double tune_inverse(double t, TuneScale scale);

struct TuneOutcome {
  double param = 0.0;            // frozen parameter for the measurement phase
  KernelState state;             // chain state after the tuning steps
  double acceptance_rate = 0.0;  // empirical rate over the tuning steps
};

// Adapts a Metropolis kernel parameter (pCN s or RWM sigma) toward
// target_rate over `steps` transitions, starting from `state`. Adaptation is
// confined to this call; the returned parameter is frozen afterwards so the
// measurement-phase kernel stays time-homogeneous. Requires steps >= 1000.
TuneOutcome tune_acceptance(KernelKind kind, const TargetModel& target, KernelState state,
                            double initial_param, double target_rate, long steps, RngStream& rng);

}  // namespace slicebench

#endif
