#include "slicebench/samplers/chain.hpp"

#include <chrono>
#include <cmath>

#include "slicebench/errors.hpp"

namespace slicebench {

const char* kernel_name(KernelKind kind) {
  switch (kind) {
    case KernelKind::EllipticalSlice: return "ess";
    case KernelKind::Pcn: return "pcn";
    case KernelKind::Rwm: return "rwm";
    case KernelKind::SliceRadial: return "slice-radial";
    case KernelKind::Identity: return "identity";
  }
  return "?";
}

std::optional<KernelKind> kernel_from_name(const std::string& name) {
  if (name == "ess") return KernelKind::EllipticalSlice;
  if (name == "pcn") return KernelKind::Pcn;
  if (name == "rwm") return KernelKind::Rwm;
  if (name == "slice-radial") return KernelKind::SliceRadial;
  if (name == "identity") return KernelKind::Identity;
  return std::nullopt;
}

TransitionRecord kernel_transition(const KernelSpec& spec, double param, KernelState& state,
                                   const TargetModel& target, RngStream& rng) {
  switch (spec.kind) {
    case KernelKind::EllipticalSlice:
      return ess_transition(state, target, rng, spec.shrink_cap);
    case KernelKind::Pcn:
      return pcn_transition(state, target, param, rng);
    case KernelKind::Rwm:
      return rwm_transition(state, target, param, rng);
    case KernelKind::SliceRadial:
      return simple_slice_transition_radial(state, target, rng);
    case KernelKind::Identity:
      return identity_transition(state);
  }
  throw ContractError("kernel_transition: unknown kernel");
}

ChainResult run_chain(const KernelSpec& spec, const TargetModel& target, const Vector& x_init,
                      const ChainOptions& options, std::uint64_t root_seed,
                      std::uint64_t stream_id) {
  if (options.thin < 1) throw ContractError("run_chain: thin must be at least 1");
  const bool metropolis = spec.kind == KernelKind::Pcn || spec.kind == KernelKind::Rwm;
  if (spec.tune && !metropolis)
    throw ContractError("run_chain: only pCN and RWM support tuning");

  const auto started = std::chrono::steady_clock::now();
  RngStream rng(root_seed, stream_id);
  KernelState state = make_state(target, x_init);
  const auto quantity = options.quantity
                            ? options.quantity
                            : [](const Vector& x) { return std::log1p(x.norm()); };

  double param = spec.param;
  std::uint64_t step = 0;
  try {
    // Burn-in; tuning is confined to this phase.
    if (spec.tune) {
      if (options.n0 < 1000)
        throw ContractError("run_chain: tuning needs a burn-in of at least 1000 steps");
      TuneOutcome tuned = tune_acceptance(spec.kind, target, std::move(state), spec.param,
                                          spec.target_rate, static_cast<long>(options.n0), rng);
      param = tuned.param;
      state = std::move(tuned.state);
      step = options.n0;
    } else {
      for (; step < options.n0; ++step) kernel_transition(spec, param, state, target, rng);
    }

    ChainResult result;
    result.root_seed = root_seed;
    result.stream_id = stream_id;
    if (metropolis) result.tuned_param = param;

    const bool retain = target.dim() <= options.sample_retention_dim;
    result.f_series.reserve(options.n);
    if (retain && options.n > 0)
      result.samples = Matrix(static_cast<Eigen::Index>(options.n), target.dim());

    const std::uint64_t evals_before = state.evals;
    const std::uint64_t accepted_before = state.accepted;
    for (std::uint64_t k = 0; k < options.n; ++k) {
      for (std::uint64_t t = 0; t < options.thin; ++t, ++step)
        kernel_transition(spec, param, state, target, rng);
      const double f = quantity(state.x);
      if (!std::isfinite(f))
        throw ContractError("run_chain: quantity of interest is not finite at step " +
                            std::to_string(step));
      result.f_series.push_back(f);
      if (result.samples) result.samples->row(static_cast<Eigen::Index>(k)) = state.x;
    }

    result.total_evals = state.evals;
    result.measurement_evals = state.evals - evals_before;
    if (metropolis && options.n > 0) {
      result.acceptance_rate = static_cast<double>(state.accepted - accepted_before) /
                               static_cast<double>(options.n * options.thin);
    }
    result.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return result;
  } catch (RunawayShrinkageError& e) {
    e.step = static_cast<long>(step);
    throw;
  }
}

}  // namespace slicebench
