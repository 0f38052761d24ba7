#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "slicebench/bench/config.hpp"
#include "slicebench/bench/experiments.hpp"

using namespace slicebench::bench;
namespace fs = std::filesystem;

namespace {

json parse(const std::string& text) { return json::parse(text); }

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// results.csv with the measured wall_time_s column blanked; every other
// column is part of the determinism contract.
std::string results_without_walltime(const fs::path& path) {
  std::istringstream in(slurp(path));
  std::string line, out;
  while (std::getline(in, line)) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream row(line);
    while (std::getline(row, field, ',')) fields.push_back(field);
    if (fields.size() > 11) fields[11] = "";
    for (std::size_t i = 0; i < fields.size(); ++i) out += (i ? "," : "") + fields[i];
    out += "\n";
  }
  return out;
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::path("bench_test_out") / name;
  fs::remove_all(dir);
  return dir;
}

int count_lines(const std::string& text) {
  int n = 0;
  for (char c : text) n += c == '\n' ? 1 : 0;
  return n;
}

}  // namespace

TEST_CASE("minimal ess-sweep config gets the documented defaults") {
  const auto config = validate_config(parse(R"({"experiment": "ess-sweep"})"));
  CHECK(config.experiment == ExperimentKind::EssSweep);
  CHECK(config.target.name == "volcano");
  CHECK(config.dims == std::vector<int>{10, 30, 100, 300});
  CHECK(config.n0 == 10000);
  CHECK(config.n == 100000);
  CHECK(config.thin == 1);
  CHECK(config.replicates == 3);
  CHECK(config.truncation_lag == 10000);
  CHECK(!config.geyer_truncation);
  REQUIRE(config.kernels.size() == 4);
  CHECK(config.kernels[0].name == "ess");
  CHECK(config.kernels[1].name == "pcn");
  CHECK(config.kernels[1].spec.tune);
  CHECK(config.kernels[1].spec.target_rate == 0.25);
  CHECK(config.kernels[2].name == "rwm");
  CHECK(config.kernels[3].name == "slice-radial");

  ValidateOptions paper;
  paper.paper_scale = true;
  const auto scaled = validate_config(parse(R"({"experiment": "ess-sweep"})"), paper);
  CHECK(scaled.n0 == 100000);
  CHECK(scaled.n == 1000000);
  CHECK(scaled.dims == std::vector<int>{10, 30, 100, 300, 1000});

  // explicit values always win over --paper-scale defaults
  const auto pinned = validate_config(
      parse(R"({"experiment": "ess-sweep", "n": 500, "n0": 2000, "dims": [5]})"), paper);
  CHECK(pinned.n == 500);
  CHECK(pinned.n0 == 2000);
  CHECK(pinned.dims == std::vector<int>{5});
}

TEST_CASE("config diagnostics name the offending path") {
  auto expect_diag = [](const std::string& text, const std::string& needle) {
    try {
      validate_config(parse(text));
      FAIL("expected ConfigError for ", text);
    } catch (const ConfigError& e) {
      bool found = false;
      for (const auto& d : e.diagnostics())
        if (d.find(needle) != std::string::npos) found = true;
      INFO("diagnostics: ", e.what());
      CHECK(found);
    }
  };

  expect_diag(R"({"experiment": "ess-sweep", "kernels": [{"name": "hmc"}]})", "unknown kernel");
  expect_diag(R"({"experiment": "ess-sweep", "n0": -1})", "$.n0");
  expect_diag(R"({"experiment": "ess-sweep", "frobnicate": 1})", "$.frobnicate");
  expect_diag(R"({"experiment": "warp"})", "unknown experiment");
  expect_diag(R"({"experiment": "ess-sweep", "target": {"name": "nope"}})", "unknown target");
  expect_diag(R"({"experiment": "ess-sweep", "target": {"name": "volcano", "weird": 2}})",
              "$.target.weird");
  expect_diag(R"({"experiment": "ess-sweep", "kernels": [{"name": "pcn", "s": 2.0}]})",
              "$.kernels[0].s");
  expect_diag(R"({"experiment": "ess-sweep", "dims": [0]})", "$.dims");
  expect_diag(R"({"experiment": "ess-sweep", "dims": [4, 5], "x_init": [1, 2, 3, 4]})",
              "$.x_init");
  expect_diag(R"({"experiment": "ess-sweep", "n0": 10, "kernels": [{"name": "rwm"}]})",
              "n0 >= 1000");
  expect_diag(R"({"experiment": "assumption-audit"})", "$.target");
  expect_diag(R"({"experiment": "ess-sweep", "kernels": [{"name": "identity"}]})",
              "unknown kernel");
  expect_diag(
      R"({"experiment": "double-banana", "target": {"name": "double-banana"}, "dims": [3]})",
      "fixed to dimension");
  expect_diag(R"({"experiment": "gaussian-validate", "target": {"name": "volcano"}})",
              "gaussian-validate requires a gaussian target");
  expect_diag(
      R"({"experiment": "assumption-audit", "target": {"name": "volcano"},
          "audit": {"R": 2.0}})",
      "R and alpha");

  CHECK_THROWS_AS(load_config("does_not_exist.json"), ConfigError);
}

TEST_CASE("stream ids are a pure function of the unit indices") {
  CHECK(unit_stream_id(0, 0, 0) == 0);
  CHECK(unit_stream_id(0, 0, 7) == 7);
  CHECK(unit_stream_id(0, 3, 0) == (3ULL << 10));
  CHECK(unit_stream_id(2, 0, 0) == (2ULL << 20));
  CHECK(unit_stream_id(1, 2, 3) == ((1ULL << 20) | (2ULL << 10) | 3ULL));

  const auto config = validate_config(parse(
      R"({"experiment": "ess-sweep", "dims": [2, 3], "replicates": 2,
          "kernels": [{"name": "ess"}, {"name": "pcn", "tune": false}]})"));
  const auto units = experiment_units(config);
  REQUIRE(units.size() == 8);
  std::set<std::uint64_t> ids;
  for (const auto& u : units) ids.insert(u.stream_id);
  CHECK(ids.size() == units.size());
}

TEST_CASE("ess-sweep outputs are schedule independent") {
  const auto config = validate_config(parse(
      R"({"experiment": "ess-sweep", "dims": [2, 3], "replicates": 2, "seed": 31,
          "n0": 200, "n": 2000,
          "kernels": [{"name": "ess"}, {"name": "pcn", "tune": false, "s": 0.6}]})"));

  RunOptions serial;
  serial.workers = 1;
  serial.output_dir = fresh_dir("sweep_serial").string();
  RunOptions parallel;
  parallel.workers = 4;
  parallel.output_dir = fresh_dir("sweep_parallel").string();

  CHECK(run_experiment(config, serial) == 0);
  CHECK(run_experiment(config, parallel) == 0);

  const auto a = results_without_walltime(fs::path(*serial.output_dir) / "results.csv");
  const auto b = results_without_walltime(fs::path(*parallel.output_dir) / "results.csv");
  CHECK(a == b);
  CHECK(count_lines(a) == 1 + 8);

  // manifest completeness: every results row key appears exactly once
  const json manifest = parse(slurp(fs::path(*serial.output_dir) / "manifest.json"));
  REQUIRE(manifest.at("units").size() == 8);
  std::set<std::string> keys;
  for (const auto& u : manifest.at("units")) {
    keys.insert(u.at("kernel").get<std::string>() + "/" + std::to_string(u.at("dim").get<int>()) +
                "/" + std::to_string(u.at("replicate").get<int>()));
  }
  CHECK(keys.size() == 8);
  const json manifest_b = parse(slurp(fs::path(*parallel.output_dir) / "manifest.json"));
  CHECK(manifest.at("units") == manifest_b.at("units"));
  json config_a = manifest.at("config"), config_b = manifest_b.at("config");
  config_a.erase("output_dir");
  config_b.erase("output_dir");
  CHECK(config_a == config_b);

  // header contract
  const auto raw = slurp(fs::path(*serial.output_dir) / "results.csv");
  CHECK(raw.rfind("experiment,target,dim,kernel,replicate,n0,n,ess,iact,acceptance_rate,"
                  "mean_evals_per_step,wall_time_s,seed,stream_id\n",
                  0) == 0);

  // a seed override changes the stochastic content
  RunOptions reseeded;
  reseeded.workers = 1;
  reseeded.output_dir = fresh_dir("sweep_reseeded").string();
  reseeded.seed = 32;
  CHECK(run_experiment(config, reseeded) == 0);
  CHECK(results_without_walltime(fs::path(*reseeded.output_dir) / "results.csv") != a);
}

TEST_CASE("gaussian-validate passes its conjugate check at desk scale") {
  const auto config = validate_config(parse(
      R"({"experiment": "gaussian-validate", "seed": 7, "n0": 2000, "n": 40000})"));
  RunOptions options;
  options.workers = 2;
  options.output_dir = fresh_dir("gauss").string();
  CHECK(run_experiment(config, options) == 0);

  const json summary = parse(slurp(fs::path(*options.output_dir) / "summary.json"));
  CHECK(summary.at("all_units_succeeded") == true);
  CHECK(summary.at("all_validations_passed") == true);
  REQUIRE(summary.at("validations").size() == 6);  // mean + covariance per kernel
  const auto& detail = summary.at("units")[0].at("detail");
  CHECK(detail.at("analytic_mean")[0].get<double>() == doctest::Approx(0.5));
  CHECK(detail.at("analytic_covariance")[0][0].get<double>() == doctest::Approx(0.5));
}

TEST_CASE("assumption-audit reports and validates expectations") {
  // raw volcano must fail its audit; expecting failure makes the run green
  const auto expect_fail = validate_config(parse(
      R"({"experiment": "assumption-audit", "target": {"name": "volcano"}, "dims": [3],
          "seed": 5, "audit": {"R": 2.0, "alpha": 0.5, "n_centers": 50, "n_probes": 50,
          "expect": "fail"}})"));
  RunOptions options;
  options.output_dir = fresh_dir("audit_fail").string();
  CHECK(run_experiment(expect_fail, options) == 0);
  {
    const json summary = parse(slurp(fs::path(*options.output_dir) / "summary.json"));
    const auto& detail = summary.at("units")[0].at("detail");
    CHECK(detail.at("passed") == false);
    CHECK(detail.at("counterexample").contains("x"));
    CHECK(detail.at("tested_R") == 2.0);
  }

  // same audit but expecting a pass: exit code 1 (validation failed)
  const auto expect_pass = validate_config(parse(
      R"({"experiment": "assumption-audit", "target": {"name": "volcano"}, "dims": [3],
          "seed": 5, "audit": {"R": 2.0, "alpha": 0.5, "n_centers": 50, "n_probes": 50,
          "expect": "pass"}})"));
  options.output_dir = fresh_dir("audit_mismatch").string();
  CHECK(run_experiment(expect_pass, options) == 1);

  // catalog constants picked up automatically; full-shift volcano passes
  const auto auto_bounds = validate_config(parse(
      R"({"experiment": "assumption-audit",
          "target": {"name": "volcano-shifted", "epsilon": 1.0}, "dims": [3], "seed": 5,
          "audit": {"n_centers": 50, "n_probes": 50, "expect": "pass"}})"));
  options.output_dir = fresh_dir("audit_auto").string();
  CHECK(run_experiment(auto_bounds, options) == 0);

  // no constants anywhere: the unit fails at runtime -> exit 2
  const auto no_bounds = validate_config(parse(
      R"({"experiment": "assumption-audit", "target": {"name": "volcano"}, "dims": [3],
          "audit": {"n_centers": 10, "n_probes": 10}})"));
  options.output_dir = fresh_dir("audit_nobounds").string();
  CHECK(run_experiment(no_bounds, options) == 2);
}

TEST_CASE("drift-audit fits the identity kernel and applies the delta validation") {
  const auto config = validate_config(parse(
      R"({"experiment": "drift-audit", "target": {"name": "volcano"}, "dims": [3], "seed": 2,
          "kernels": [{"name": "identity"}],
          "drift": {"radii": [1, 2, 3], "reps": 100, "require_delta_lt_1": true}})"));
  RunOptions options;
  options.output_dir = fresh_dir("drift_identity").string();
  // identity kernel has delta = 1: the drift validation must fail
  CHECK(run_experiment(config, options) == 1);
  const json summary = parse(slurp(fs::path(*options.output_dir) / "summary.json"));
  CHECK(summary.at("units")[0].at("detail").at("delta_hat").get<double>() == 1.0);
  CHECK(summary.at("validations")[0].at("passed") == false);
  CHECK(slurp(fs::path(*options.output_dir) / "drift.csv").rfind(
            "kernel,replicate,radius,m_hat,std_error\n", 0) == 0);

  const auto shifted = validate_config(parse(
      R"({"experiment": "drift-audit", "dims": [5], "seed": 2,
          "kernels": [{"name": "ess"}],
          "drift": {"radii": [10, 20, 30, 40], "reps": 300, "require_delta_lt_1": true}})"));
  options.output_dir = fresh_dir("drift_shifted").string();
  CHECK(run_experiment(shifted, options) == 0);  // default target: tail-shifted volcano
}

TEST_CASE("double-banana produces a histogram with conserved counts") {
  const auto config = validate_config(parse(
      R"({"experiment": "double-banana", "seed": 3, "n0": 1000, "n": 5000,
          "histogram": {"bins": [32, 32], "range": [[-3, 3], [-3, 3]]}})"));
  RunOptions options;
  options.output_dir = fresh_dir("banana").string();
  CHECK(run_experiment(config, options) == 0);

  const auto hist = slurp(fs::path(*options.output_dir) / "histogram.csv");
  CHECK(hist.rfind("x_bin,y_bin,count\n", 0) == 0);
  CHECK(count_lines(hist) == 1 + 32 * 32);

  std::uint64_t total = 0;
  std::istringstream in(hist);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) total += std::stoull(line.substr(line.rfind(',') + 1));
  const json summary = parse(slurp(fs::path(*options.output_dir) / "summary.json"));
  CHECK(summary.at("all_validations_passed") == true);  // zero-region mass
  CHECK(summary.at("units")[0].at("detail").at("zero_region_mass").get<double>() < 1e-3);
  // counts + (overflow implied by the difference) must cover every sample
  CHECK(total <= 5000);
  CHECK(fs::exists(fs::path(*options.output_dir) / "samples_ess_r0.csv"));
  CHECK(count_lines(slurp(fs::path(*options.output_dir) / "samples_ess_r0.csv")) == 1 + 5000);

  // zero-density start point: the unit fails, exit code 2
  const auto bad = validate_config(parse(
      R"({"experiment": "double-banana", "seed": 3, "n0": 100, "n": 100,
          "x_init": [0, 0], "dims": [2]})"));
  options.output_dir = fresh_dir("banana_bad").string();
  CHECK(run_experiment(bad, options) == 2);
  const json bad_summary = parse(slurp(fs::path(*options.output_dir) / "summary.json"));
  CHECK(bad_summary.at("units")[0].at("status") == "failed");
}

TEST_CASE("resolved config echo documents the defaults") {
  const auto config = validate_config(parse(R"({"experiment": "ess-sweep"})"));
  CHECK(config.echo.at("truncation_lag") == 10000);
  CHECK(config.echo.at("n") == 100000);
  CHECK(config.echo.at("kernels").size() == 4);
  CHECK(config.echo.at("seed") == 42);
}
