#ifndef SLICEBENCH_BENCH_CONFIG_HPP
#define SLICEBENCH_BENCH_CONFIG_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "slicebench/samplers/chain.hpp"
#include "slicebench/targets/target_model.hpp"

namespace slicebench::bench {

using json = nlohmann::json;

// Config rejected; diagnostics carry one entry per problem with a JSON-path
// prefix ("$.kernels[1].name: ...").
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<std::string> diagnostics);
  const std::vector<std::string>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<std::string> diagnostics_;
};

enum class ExperimentKind {
  EssSweep,
  DoubleBanana,
  GaussianValidate,
  AssumptionAudit,
  DriftAudit,
};

const char* experiment_name(ExperimentKind kind);

// Catalog entry resolved from the config: builds the target at a requested
// dimension (throwing if the target's intrinsic dimension disagrees).
struct TargetSpec {
  std::string name;
  std::optional<int> fixed_dim;
  std::function<TargetModel(int dim)> build;
  // Set for "gaussian" targets: likelihood center and covariance at a given
  // dimension, the inputs of the analytic conjugate posterior.
  std::function<std::pair<Vector, Matrix>(int dim)> gaussian_params;
};

struct KernelEntry {
  std::string name;
  KernelSpec spec;
};

struct AuditSettings {
  std::optional<double> R;      // unset: use the target's closed-form constants
  std::optional<double> alpha;
  int n_centers = 200;
  int n_probes = 500;
  std::optional<bool> expect_pass;  // builtin validation when set
};

struct DriftSettings {
  std::vector<double> radii{10, 20, 30, 40, 50, 60, 70, 80, 90, 100};
  int reps = 1000;
  bool require_delta_lt_1 = false;
  bool average_directions = false;
};

struct HistogramSettings {
  int bins_x = 128, bins_y = 128;
  double x_lo = -3.0, x_hi = 3.0;
  double y_lo = -3.0, y_hi = 3.0;
};

struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::EssSweep;
  TargetSpec target;
  std::vector<KernelEntry> kernels;
  std::vector<int> dims;
  std::uint64_t n0 = 10000;
  std::uint64_t n = 100000;
  std::uint64_t thin = 1;
  std::uint64_t seed = 0;
  int replicates = 1;
  std::string output_dir = "out";
  int truncation_lag = 10000;
  bool geyer_truncation = false;
  std::optional<Vector> x_init;  // default: 0, or (-1, 1) for the double banana

  AuditSettings audit;
  DriftSettings drift;
  HistogramSettings histogram;

  json echo;  // resolved config, defaults filled, for the manifest
};

struct ValidateOptions {
  // Paper-scale defaults: n0 = 1e5, n = 1e6 and dims up to 1000 when the
  // config leaves them unset. Desk defaults otherwise (n0 = 1e4, n = 1e5,
  // dims up to 300); explicit config values always win.
  bool paper_scale = false;
};

ExperimentConfig validate_config(const json& raw, const ValidateOptions& options = {});
ExperimentConfig load_config(const std::string& path, const ValidateOptions& options = {});

}  // namespace slicebench::bench

#endif
