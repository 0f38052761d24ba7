#include "slicebench/bench/experiments.hpp"

#include <Eigen/Dense>

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <limits>
#include <thread>

#include "slicebench/diagnostics/autocorrelation.hpp"
#include "slicebench/diagnostics/drift.hpp"
#include "slicebench/diagnostics/histogram.hpp"
#include "slicebench/diagnostics/moments.hpp"
#include "slicebench/errors.hpp"
#include "slicebench/targets/assumption.hpp"

namespace slicebench::bench {

namespace {

namespace fs = std::filesystem;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string fmt_opt(const std::optional<double>& v) { return v ? fmt(*v) : std::string(); }

std::string iso_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::vector<double> to_std(const Vector& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

struct Validation {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct UnitOutcome {
  bool ok = false;
  std::string error;
  // results.csv fields (chain experiments)
  std::optional<double> ess, iact, acceptance_rate, mean_evals, wall_time;
  std::vector<Validation> validations;
  json extra;                             // experiment-specific summary payload
  std::optional<Histogram2d> histogram;   // double banana
  std::optional<Matrix> samples;          // double banana raw samples
  std::vector<std::array<double, 3>> drift_rows;  // radius, m_hat, std_error
};

Vector default_init(const ExperimentConfig& config, int dim) {
  if (config.x_init) return *config.x_init;
  if (config.experiment == ExperimentKind::DoubleBanana) {
    Vector x(2);
    x << -1.0, 1.0;  // the origin has zero density under the double banana
    return x;
  }
  return Vector::Zero(dim);
}

// Monte Carlo standard error of a covariance entry via the product series.
double covariance_entry_se(const Matrix& samples, const Vector& mean, int i, int j,
                           const EssOptions& ess_options) {
  const auto n = samples.rows();
  std::vector<double> product(static_cast<std::size_t>(n));
  double prod_mean = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    product[static_cast<std::size_t>(k)] = (samples(k, i) - mean[i]) * (samples(k, j) - mean[j]);
    prod_mean += product[static_cast<std::size_t>(k)];
  }
  prod_mean /= static_cast<double>(n);
  double var = 0.0;
  for (double v : product) var += (v - prod_mean) * (v - prod_mean);
  var /= static_cast<double>(n - 1);
  const auto report = effective_sample_size(product, ess_options);
  return std::sqrt(var / report.ess);
}

UnitOutcome run_chain_unit(const ExperimentConfig& config, const WorkUnit& unit,
                           std::uint64_t seed) {
  UnitOutcome out;
  const TargetModel target = config.target.build(unit.dim);
  const KernelSpec& spec = config.kernels[static_cast<std::size_t>(unit.kernel_index)].spec;

  ChainOptions options;
  options.n0 = config.n0;
  options.n = config.n;
  options.thin = config.thin;
  options.sample_retention_dim = 2;
  const ChainResult result =
      run_chain(spec, target, default_init(config, unit.dim), options, seed, unit.stream_id);

  out.wall_time = result.wall_time_s;
  out.acceptance_rate = result.acceptance_rate;
  if (config.n > 0)
    out.mean_evals = static_cast<double>(result.measurement_evals) /
                     static_cast<double>(config.n * config.thin);
  EssOptions ess_options;
  ess_options.truncation_lag = config.truncation_lag;
  ess_options.geyer_truncation = config.geyer_truncation;
  if (result.f_series.size() >= 2) {
    const EssReport report = effective_sample_size(result.f_series, ess_options);
    out.ess = report.ess;
    out.iact = report.iact;
  }
  if (result.tuned_param) out.extra["tuned_param"] = *result.tuned_param;

  if (config.experiment == ExperimentKind::GaussianValidate) {
    if (!result.samples) throw ContractError("gaussian-validate needs retained samples");
    const auto [x0, sigma] = config.target.gaussian_params(unit.dim);
    // analytic conjugate posterior for prior N(0, I)
    const Matrix prior_cov = Matrix::Identity(unit.dim, unit.dim);
    const Matrix post_cov = (prior_cov.inverse() + sigma.inverse()).inverse();
    const Vector post_mean = post_cov * sigma.inverse() * x0;

    // Standard errors need a truncation adapted to the series: the fixed
    // chain-scale lag would drown the IACT estimate in noise here.
    EssOptions se_options = ess_options;
    se_options.geyer_truncation = true;
    const MomentsSummary summary = summary_moments(*result.samples, se_options);
    bool mean_ok = true, cov_ok = true;
    for (int i = 0; i < unit.dim; ++i) {
      if (!summary.se_valid[static_cast<std::size_t>(i)]) {
        mean_ok = false;
        continue;
      }
      if (std::abs(summary.mean[i] - post_mean[i]) > 3.0 * summary.mc_standard_error[i])
        mean_ok = false;
    }
    for (int i = 0; i < unit.dim; ++i) {
      for (int j = i; j < unit.dim; ++j) {
        const double se = covariance_entry_se(*result.samples, summary.mean, i, j, se_options);
        if (std::abs(summary.covariance(i, j) - post_cov(i, j)) > 3.0 * se) cov_ok = false;
      }
    }
    const std::string label = unit.kernel + "-r" + std::to_string(unit.replicate);
    out.validations.push_back({"mean-3se-" + label, mean_ok, ""});
    out.validations.push_back({"covariance-3se-" + label, cov_ok, ""});
    out.extra["analytic_mean"] = to_std(post_mean);
    out.extra["estimated_mean"] = to_std(summary.mean);
    out.extra["analytic_covariance"] = {{post_cov(0, 0), post_cov(0, 1)},
                                        {post_cov(1, 0), post_cov(1, 1)}};
    out.extra["estimated_covariance"] = {{summary.covariance(0, 0), summary.covariance(0, 1)},
                                         {summary.covariance(1, 0), summary.covariance(1, 1)}};
  }

  if (config.experiment == ExperimentKind::DoubleBanana) {
    if (!result.samples) throw ContractError("double-banana needs retained samples");
    const auto& h = config.histogram;
    out.histogram =
        histogram2d(*result.samples, h.bins_x, h.bins_y, h.x_lo, h.x_hi, h.y_lo, h.y_hi);
    out.samples = result.samples;

    // mass landing in cells whose center has zero density
    std::uint64_t zero_cells_mass = 0;
    for (int ix = 0; ix < h.bins_x; ++ix) {
      for (int iy = 0; iy < h.bins_y; ++iy) {
        Vector center(2);
        center << out.histogram->x_center(ix), out.histogram->y_center(iy);
        if (target.log_rho(center) == -std::numeric_limits<double>::infinity())
          zero_cells_mass += out.histogram->at(ix, iy);
      }
    }
    const double fraction =
        config.n > 0 ? static_cast<double>(zero_cells_mass) / static_cast<double>(config.n) : 0.0;
    out.extra["zero_region_mass"] = fraction;
    const std::string label = unit.kernel + "-r" + std::to_string(unit.replicate);
    out.validations.push_back(
        {"zero-region-mass-" + label, fraction < 1e-3, "fraction " + fmt(fraction)});
  }

  out.ok = true;
  return out;
}

UnitOutcome run_audit_unit(const ExperimentConfig& config, const WorkUnit& unit,
                           std::uint64_t seed) {
  UnitOutcome out;
  const TargetModel target = config.target.build(unit.dim);
  double R, alpha;
  if (config.audit.R) {
    R = *config.audit.R;
    alpha = *config.audit.alpha;
  } else if (target.assumption_constants()) {
    R = target.assumption_constants()->R;
    alpha = target.assumption_constants()->alpha;
  } else {
    throw UnsupportedTargetError("target '" + target.name() +
                                 "' has no closed-form constants; set audit.R and audit.alpha");
  }

  RngStream rng(seed, unit.stream_id);
  const auto report =
      check_assumption1(target, R, alpha, config.audit.n_centers, config.audit.n_probes, rng);

  out.extra = json{{"passed", report.passed},
                   {"probes_run", report.probes_run},
                   {"tested_R", report.tested_R},
                   {"tested_alpha", report.tested_alpha}};
  if (report.counterexample) {
    out.extra["counterexample"] = json{{"x", to_std(report.counterexample->x)},
                                       {"y", to_std(report.counterexample->y)},
                                       {"log_rho_x", report.counterexample->log_rho_x},
                                       {"log_rho_y", report.counterexample->log_rho_y}};
  }
  if (config.audit.expect_pass) {
    const bool matches = report.passed == *config.audit.expect_pass;
    out.validations.push_back({"audit-expect-r" + std::to_string(unit.replicate), matches,
                               std::string("expected ") +
                                   (*config.audit.expect_pass ? "pass" : "fail") + ", audit " +
                                   (report.passed ? "passed" : "failed")});
  }
  out.ok = true;
  return out;
}

UnitOutcome run_drift_unit(const ExperimentConfig& config, const WorkUnit& unit,
                           std::uint64_t seed) {
  UnitOutcome out;
  const TargetModel target = config.target.build(unit.dim);
  const KernelSpec& spec = config.kernels[static_cast<std::size_t>(unit.kernel_index)].spec;

  DriftOptions options;
  options.reps = config.drift.reps;
  options.average_directions = config.drift.average_directions;
  RngStream rng(seed, unit.stream_id);
  const DriftReport report = drift_estimate(target, spec, config.drift.radii, options, rng);

  for (std::size_t i = 0; i < report.radii.size(); ++i)
    out.drift_rows.push_back({report.radii[i], report.m_hat[i], report.std_error[i]});
  out.extra = json{{"delta_hat", report.delta_hat},
                   {"intercept_hat", report.intercept_hat},
                   {"delta_std_error", report.delta_std_error}};
  if (config.drift.require_delta_lt_1) {
    const bool ok = report.delta_hat + 3.0 * report.delta_std_error < 1.0;
    out.validations.push_back(
        {"drift-delta-" + unit.kernel + "-r" + std::to_string(unit.replicate), ok,
         "delta " + fmt(report.delta_hat) + " +- " + fmt(report.delta_std_error)});
  }
  out.ok = true;
  return out;
}

UnitOutcome run_unit(const ExperimentConfig& config, const WorkUnit& unit, std::uint64_t seed) {
  try {
    switch (config.experiment) {
      case ExperimentKind::AssumptionAudit: return run_audit_unit(config, unit, seed);
      case ExperimentKind::DriftAudit: return run_drift_unit(config, unit, seed);
      default: return run_chain_unit(config, unit, seed);
    }
  } catch (const std::exception& e) {
    UnitOutcome out;
    out.ok = false;
    out.error = e.what();
    return out;
  }
}

}  // namespace

std::uint64_t unit_stream_id(int dim_index, int kernel_index, int replicate) {
  return (static_cast<std::uint64_t>(dim_index) << 20) |
         (static_cast<std::uint64_t>(kernel_index) << 10) |
         static_cast<std::uint64_t>(replicate);
}

std::vector<WorkUnit> experiment_units(const ExperimentConfig& config) {
  std::vector<WorkUnit> units;
  const bool audit = config.experiment == ExperimentKind::AssumptionAudit;
  const int n_kernels = audit ? 1 : static_cast<int>(config.kernels.size());
  for (int di = 0; di < static_cast<int>(config.dims.size()); ++di) {
    for (int ki = 0; ki < n_kernels; ++ki) {
      for (int r = 0; r < config.replicates; ++r) {
        WorkUnit unit;
        unit.dim_index = di;
        unit.kernel_index = ki;
        unit.replicate = r;
        unit.dim = config.dims[static_cast<std::size_t>(di)];
        unit.kernel = audit ? "" : config.kernels[static_cast<std::size_t>(ki)].name;
        unit.stream_id = unit_stream_id(di, ki, r);
        units.push_back(std::move(unit));
      }
    }
  }
  return units;
}

int run_experiment(const ExperimentConfig& config_in, const RunOptions& options) {
  ExperimentConfig config = config_in;
  if (options.seed) {
    config.seed = *options.seed;
    config.echo["seed"] = *options.seed;
  }
  if (options.output_dir) {
    config.output_dir = *options.output_dir;
    config.echo["output_dir"] = *options.output_dir;
  }

  const std::string started = iso_now();
  const std::vector<WorkUnit> units = experiment_units(config);
  std::vector<UnitOutcome> outcomes(units.size());

  const int n_workers =
      std::max(1, std::min<int>(options.workers, static_cast<int>(units.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= units.size()) break;
      outcomes[i] = run_unit(config, units[i], config.seed);
    }
  };
  if (n_workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_workers));
    for (int i = 0; i < n_workers; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  // ---- output assembly, serialized ----
  fs::create_directories(config.output_dir);
  const auto path = [&](const std::string& name) {
    return (fs::path(config.output_dir) / name).string();
  };

  {
    json manifest;
    manifest["config"] = config.echo;
    manifest["version"] = "slicebench 0.1.0";
    manifest["started"] = started;
    manifest["finished"] = iso_now();
    json unit_list = json::array();
    for (const auto& u : units) {
      unit_list.push_back(json{{"dim", u.dim},
                               {"kernel", u.kernel},
                               {"replicate", u.replicate},
                               {"stream_id", u.stream_id}});
    }
    manifest["units"] = unit_list;
    std::ofstream out(path("manifest.json"));
    out << manifest.dump(2) << "\n";
  }

  {
    std::ofstream out(path("results.csv"));
    out << "experiment,target,dim,kernel,replicate,n0,n,ess,iact,acceptance_rate,"
           "mean_evals_per_step,wall_time_s,seed,stream_id\n";
    const bool chain = config.experiment == ExperimentKind::EssSweep ||
                       config.experiment == ExperimentKind::DoubleBanana ||
                       config.experiment == ExperimentKind::GaussianValidate;
    for (std::size_t i = 0; i < units.size(); ++i) {
      const auto& u = units[i];
      const auto& o = outcomes[i];
      out << experiment_name(config.experiment) << ',' << config.target.name << ',' << u.dim
          << ',' << u.kernel << ',' << u.replicate << ','
          << (chain ? std::to_string(config.n0) : std::string()) << ','
          << (chain ? std::to_string(config.n) : std::string()) << ',' << fmt_opt(o.ess) << ','
          << fmt_opt(o.iact) << ',' << fmt_opt(o.acceptance_rate) << ',' << fmt_opt(o.mean_evals)
          << ',' << fmt_opt(o.wall_time) << ',' << config.seed << ',' << u.stream_id << "\n";
    }
  }

  if (config.experiment == ExperimentKind::DoubleBanana) {
    for (std::size_t i = 0; i < units.size(); ++i) {
      if (!outcomes[i].histogram) continue;
      const auto& h = *outcomes[i].histogram;
      const std::string suffix =
          units[i].kernel + "_r" + std::to_string(units[i].replicate) + ".csv";
      std::ofstream out(path(i == 0 ? "histogram.csv" : "histogram_" + suffix));
      out << "x_bin,y_bin,count\n";
      for (int ix = 0; ix < h.bins_x; ++ix)
        for (int iy = 0; iy < h.bins_y; ++iy)
          out << ix << ',' << iy << ',' << h.at(ix, iy) << "\n";
      if (outcomes[i].samples) {
        std::ofstream sout(path("samples_" + suffix));
        sout << "x1,x2\n";
        const Matrix& s = *outcomes[i].samples;
        for (Eigen::Index k = 0; k < s.rows(); ++k)
          sout << fmt(s(k, 0)) << ',' << fmt(s(k, 1)) << "\n";
      }
    }
  }

  if (config.experiment == ExperimentKind::DriftAudit) {
    std::ofstream out(path("drift.csv"));
    out << "kernel,replicate,radius,m_hat,std_error\n";
    for (std::size_t i = 0; i < units.size(); ++i)
      for (const auto& row : outcomes[i].drift_rows)
        out << units[i].kernel << ',' << units[i].replicate << ',' << fmt(row[0]) << ','
            << fmt(row[1]) << ',' << fmt(row[2]) << "\n";
  }

  bool all_units_ok = true;
  bool all_validations_ok = true;
  {
    json summary;
    summary["experiment"] = experiment_name(config.experiment);
    json unit_list = json::array();
    json validations = json::array();
    for (std::size_t i = 0; i < units.size(); ++i) {
      const auto& u = units[i];
      const auto& o = outcomes[i];
      json entry{{"dim", u.dim},
                 {"kernel", u.kernel},
                 {"replicate", u.replicate},
                 {"status", o.ok ? "ok" : "failed"}};
      if (!o.ok) {
        entry["error"] = o.error;
        all_units_ok = false;
      }
      if (!o.extra.is_null()) entry["detail"] = o.extra;
      unit_list.push_back(std::move(entry));
      for (const auto& v : o.validations) {
        validations.push_back(json{{"name", v.name}, {"passed", v.passed}, {"detail", v.detail}});
        all_validations_ok &= v.passed;
      }
    }
    summary["units"] = unit_list;
    summary["validations"] = validations;
    summary["all_units_succeeded"] = all_units_ok;
    summary["all_validations_passed"] = all_validations_ok;
    std::ofstream out(path("summary.json"));
    out << summary.dump(2) << "\n";
  }

  if (!all_units_ok) return 2;
  return all_validations_ok ? 0 : 1;
}

}  // namespace slicebench::bench
