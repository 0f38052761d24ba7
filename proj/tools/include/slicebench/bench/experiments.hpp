#ifndef SLICEBENCH_BENCH_EXPERIMENTS_HPP
#define SLICEBENCH_BENCH_EXPERIMENTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slicebench/bench/config.hpp"

namespace slicebench::bench {

struct RunOptions {
  int workers = 1;
  std::optional<std::string> output_dir;  // overrides config.output_dir
  std::optional<std::uint64_t> seed;      // overrides config.seed
};

// One (dim, kernel, replicate) cell of the experiment grid. The stream id is
// a pure function of the indices, so results are independent of scheduling.
struct WorkUnit {
  int dim_index = 0;
  int kernel_index = 0;
  int replicate = 0;
  int dim = 0;
  std::string kernel;
  std::uint64_t stream_id = 0;
};

std::uint64_t unit_stream_id(int dim_index, int kernel_index, int replicate);
std::vector<WorkUnit> experiment_units(const ExperimentConfig& config);

// Exit codes: 0 all units succeeded and built-in validations passed,
// 2 when a unit failed at runtime (config errors surface as ConfigError
// before this is called and map to exit code 1 in the CLI).
int run_experiment(const ExperimentConfig& config, const RunOptions& options = {});

}  // namespace slicebench::bench

#endif
