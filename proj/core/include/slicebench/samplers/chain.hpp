#ifndef SLICEBENCH_SAMPLERS_CHAIN_HPP
#define SLICEBENCH_SAMPLERS_CHAIN_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "slicebench/samplers/transitions.hpp"
#include "slicebench/samplers/tuning.hpp"
#include "slicebench/targets/target_model.hpp"

namespace slicebench {

struct KernelSpec {
  KernelKind kind = KernelKind::EllipticalSlice;
  // pCN s or RWM sigma; the initial value when tuning is enabled. Ignored by
  // the parameter-free kernels.
  double param = 0.5;
  bool tune = false;
  double target_rate = 0.25;
  std::uint32_t shrink_cap = 10000;
};

const char* kernel_name(KernelKind kind);
std::optional<KernelKind> kernel_from_name(const std::string& name);

// One transition of the kernel described by spec with the given (possibly
// tuned) parameter value.
TransitionRecord kernel_transition(const KernelSpec& spec, double param, KernelState& state,
                                   const TargetModel& target, RngStream& rng);

struct ChainOptions {
  std::uint64_t n0 = 10000;  // burn-in transitions (tuning happens here)
  std::uint64_t n = 100000;  // recorded values
  std::uint64_t thin = 1;    // transitions per recorded value
  // Raw samples are retained only when dim <= sample_retention_dim.
  int sample_retention_dim = 2;
  // Quantity of interest; log(1 + ||x||) when unset.
  std::function<double(const Vector&)> quantity;
};

struct ChainResult {
  std::vector<double> f_series;   // length n, f(X_{n0 + k thin})
  std::optional<Matrix> samples;  // n x d, present when retained
  std::uint64_t total_evals = 0;  // burn-in + measurement
  std::uint64_t measurement_evals = 0;
  std::optional<double> acceptance_rate;  // measurement phase, Metropolis only
  std::optional<double> tuned_param;      // frozen parameter used for measurement
  std::uint64_t root_seed = 0;
  std::uint64_t stream_id = 0;
  double wall_time_s = 0.0;
};

// Runs n0 burn-in transitions (adapting the parameter when spec.tune is set,
// frozen afterwards), then n * thin measurement transitions recording every
// thin-th state. Identical (spec, target, x_init, options, seed) reproduce
// the stochastic content of the result bit for bit; wall_time_s is measured.
ChainResult run_chain(const KernelSpec& spec, const TargetModel& target, const Vector& x_init,
                      const ChainOptions& options, std::uint64_t root_seed,
                      std::uint64_t stream_id);

}  // namespace slicebench

#endif
