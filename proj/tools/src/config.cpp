#include "slicebench/bench/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>

#include "slicebench/errors.hpp"
#include "slicebench/targets/catalog.hpp"
#include "slicebench/targets/logistic_data.hpp"

namespace slicebench::bench {

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

// Collects diagnostics so one pass reports every problem in the file.
class Checker {
 public:
  void fail(const std::string& path, const std::string& message) {
    diagnostics_.push_back(path + ": " + message);
  }
  bool ok() const { return diagnostics_.empty(); }
  void raise_if_failed() const {
    if (!ok()) throw ConfigError(diagnostics_);
  }

  void reject_unknown_keys(const json& obj, const std::string& path,
                           const std::set<std::string>& allowed) {
    for (const auto& [key, _] : obj.items()) {
      if (!allowed.count(key))
        fail(path + "." + key, "unknown key (allowed: " +
                                   join({allowed.begin(), allowed.end()}, ", ") + ")");
    }
  }

  template <typename T>
  std::optional<T> integer(const json& obj, const std::string& path, const std::string& key,
                           T lo, T hi) {
    if (!obj.contains(key)) return std::nullopt;
    const auto& v = obj.at(key);
    if (!v.is_number_integer()) {
      fail(path + "." + key, "expected an integer");
      return std::nullopt;
    }
    const auto raw = v.get<std::int64_t>();
    if (raw < static_cast<std::int64_t>(lo) ||
        (static_cast<std::uint64_t>(raw) > static_cast<std::uint64_t>(hi) && raw > 0)) {
      fail(path + "." + key, "out of range [" + std::to_string(lo) + ", " + std::to_string(hi) +
                                 "], got " + std::to_string(raw));
      return std::nullopt;
    }
    return static_cast<T>(raw);
  }

  std::optional<double> number(const json& obj, const std::string& path, const std::string& key,
                               double lo, double hi) {
    if (!obj.contains(key)) return std::nullopt;
    const auto& v = obj.at(key);
    if (!v.is_number()) {
      fail(path + "." + key, "expected a number");
      return std::nullopt;
    }
    const double x = v.get<double>();
    if (!std::isfinite(x) || x < lo || x > hi) {
      fail(path + "." + key, "out of range");
      return std::nullopt;
    }
    return x;
  }

  std::optional<bool> boolean(const json& obj, const std::string& path, const std::string& key) {
    if (!obj.contains(key)) return std::nullopt;
    if (!obj.at(key).is_boolean()) {
      fail(path + "." + key, "expected a boolean");
      return std::nullopt;
    }
    return obj.at(key).get<bool>();
  }

  std::optional<std::string> text(const json& obj, const std::string& path,
                                  const std::string& key) {
    if (!obj.contains(key)) return std::nullopt;
    if (!obj.at(key).is_string()) {
      fail(path + "." + key, "expected a string");
      return std::nullopt;
    }
    return obj.at(key).get<std::string>();
  }

 private:
  std::vector<std::string> diagnostics_;
};

std::optional<Vector> parse_vector(Checker& check, const json& obj, const std::string& path,
                                   const std::string& key) {
  if (!obj.contains(key)) return std::nullopt;
  const auto& v = obj.at(key);
  if (!v.is_array() || v.empty()) {
    check.fail(path + "." + key, "expected a nonempty array of numbers");
    return std::nullopt;
  }
  Vector out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number() || !std::isfinite(v[i].get<double>())) {
      check.fail(path + "." + key + "[" + std::to_string(i) + "]", "expected a finite number");
      return std::nullopt;
    }
    out[static_cast<Eigen::Index>(i)] = v[i].get<double>();
  }
  return out;
}

// "sigma": scalar variance (sigma^2 I), array of variances (diagonal), or a
// full matrix as an array of rows.
struct SigmaSpec {
  enum class Kind { Scalar, Diagonal, Dense } kind = Kind::Scalar;
  double scalar = 1.0;
  Vector diagonal;
  Matrix dense;

  Matrix materialize(int dim) const {
    switch (kind) {
      case Kind::Scalar: return scalar * Matrix::Identity(dim, dim);
      case Kind::Diagonal: return Matrix(diagonal.asDiagonal());
      case Kind::Dense: return dense;
    }
    return Matrix::Identity(dim, dim);
  }
  std::optional<int> fixed_dim() const {
    if (kind == Kind::Diagonal) return static_cast<int>(diagonal.size());
    if (kind == Kind::Dense) return static_cast<int>(dense.rows());
    return std::nullopt;
  }
};

std::optional<SigmaSpec> parse_sigma(Checker& check, const json& obj, const std::string& path,
                                     const std::string& key) {
  if (!obj.contains(key)) return std::nullopt;
  const auto& v = obj.at(key);
  SigmaSpec spec;
  if (v.is_number()) {
    spec.kind = SigmaSpec::Kind::Scalar;
    spec.scalar = v.get<double>();
    if (!(spec.scalar > 0.0) || !std::isfinite(spec.scalar)) {
      check.fail(path + "." + key, "variance must be positive and finite");
      return std::nullopt;
    }
    return spec;
  }
  if (v.is_array() && !v.empty() && v[0].is_number()) {
    const auto diag = parse_vector(check, obj, path, key);
    if (!diag) return std::nullopt;
    for (Eigen::Index i = 0; i < diag->size(); ++i)
      if (!((*diag)[i] > 0.0)) {
        check.fail(path + "." + key, "diagonal variances must be positive");
        return std::nullopt;
      }
    spec.kind = SigmaSpec::Kind::Diagonal;
    spec.diagonal = *diag;
    return spec;
  }
  if (v.is_array() && !v.empty() && v[0].is_array()) {
    const std::size_t d = v.size();
    Matrix m(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (std::size_t i = 0; i < d; ++i) {
      if (!v[i].is_array() || v[i].size() != d) {
        check.fail(path + "." + key, "matrix rows must all have length " + std::to_string(d));
        return std::nullopt;
      }
      for (std::size_t j = 0; j < d; ++j) {
        if (!v[i][j].is_number()) {
          check.fail(path + "." + key, "matrix entries must be numbers");
          return std::nullopt;
        }
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v[i][j].get<double>();
      }
    }
    spec.kind = SigmaSpec::Kind::Dense;
    spec.dense = m;
    return spec;
  }
  check.fail(path + "." + key, "expected a number, an array, or a matrix");
  return std::nullopt;
}

TargetSpec parse_target(Checker& check, const json& t, const std::string& path) {
  TargetSpec spec;
  if (!t.is_object()) {
    check.fail(path, "expected an object with a \"name\"");
    return spec;
  }
  const auto name = check.text(t, path, "name");
  if (!name) {
    check.fail(path + ".name", "target name is required");
    return spec;
  }
  spec.name = *name;

  if (*name == "volcano") {
    check.reject_unknown_keys(t, path, {"name"});
    spec.build = [](int dim) { return make_volcano_target(dim); };
    return spec;
  }
  if (*name == "volcano-shifted") {
    check.reject_unknown_keys(t, path, {"name", "epsilon"});
    const double eps = check.number(t, path, "epsilon", 1e-12, 1.0).value_or(0.5);
    spec.name += "(eps=" + std::to_string(eps) + ")";
    spec.build = [eps](int dim) { return make_volcano_shifted_target(dim, eps); };
    return spec;
  }
  if (*name == "double-banana") {
    check.reject_unknown_keys(t, path, {"name", "alpha"});
    const double alpha = check.number(t, path, "alpha", -1e6, 1e6).value_or(5.0);
    spec.fixed_dim = 2;
    spec.build = [alpha](int dim) {
      if (dim != 2) throw ContractError("double-banana target is two-dimensional");
      return make_double_banana_target(alpha);
    };
    return spec;
  }
  if (*name == "gaussian") {
    check.reject_unknown_keys(t, path, {"name", "x0", "sigma"});
    const auto x0 = parse_vector(check, t, path, "x0");
    const auto x0_scalar = t.contains("x0") && t.at("x0").is_number()
                               ? std::optional<double>(t.at("x0").get<double>())
                               : std::nullopt;
    if (t.contains("x0") && !x0 && !x0_scalar) return spec;
    const auto sigma = parse_sigma(check, t, path, "sigma");
    if (!check.ok()) return spec;
    SigmaSpec sig = sigma.value_or(SigmaSpec{});
    if (x0) spec.fixed_dim = static_cast<int>(x0->size());
    if (sig.fixed_dim()) {
      if (spec.fixed_dim && *spec.fixed_dim != *sig.fixed_dim())
        check.fail(path, "x0 and sigma dimensions disagree");
      spec.fixed_dim = sig.fixed_dim();
    }
    const Vector x0_vec = x0.value_or(Vector());
    const double x0_fill = x0_scalar.value_or(0.0);
    auto params = [x0_vec, x0_fill, sig](int dim) {
      const Vector center = x0_vec.size() > 0 ? x0_vec : Vector::Constant(dim, x0_fill);
      if (center.size() != dim) throw ContractError("gaussian target dimension mismatch");
      return std::make_pair(center, sig.materialize(dim));
    };
    spec.gaussian_params = params;
    spec.build = [params](int dim) {
      const auto [center, sigma_mat] = params(dim);
      return make_gaussian_target(center, sigma_mat);
    };
    return spec;
  }
  if (*name == "student-t") {
    check.reject_unknown_keys(t, path, {"name", "nu", "x0", "sigma"});
    const double nu = check.number(t, path, "nu", 1.0 + 1e-9, 1e9).value_or(3.0);
    const auto x0 = parse_vector(check, t, path, "x0");
    const auto sigma = parse_sigma(check, t, path, "sigma");
    if (!check.ok()) return spec;
    SigmaSpec sig = sigma.value_or(SigmaSpec{});
    if (x0) spec.fixed_dim = static_cast<int>(x0->size());
    if (sig.fixed_dim()) {
      if (spec.fixed_dim && *spec.fixed_dim != *sig.fixed_dim())
        check.fail(path, "x0 and sigma dimensions disagree");
      spec.fixed_dim = sig.fixed_dim();
    }
    const Vector x0_vec = x0.value_or(Vector());
    spec.build = [nu, x0_vec, sig](int dim) {
      const Vector center = x0_vec.size() > 0 ? x0_vec : Vector::Zero(dim);
      if (center.size() != dim) throw ContractError("student-t target dimension mismatch");
      return make_student_t_target(nu, center, sig.materialize(dim));
    };
    return spec;
  }
  if (*name == "logistic" || *name == "logistic-shifted") {
    const bool shifted = *name == "logistic-shifted";
    check.reject_unknown_keys(
        t, path, shifted ? std::set<std::string>{"name", "data_csv", "epsilon"}
                         : std::set<std::string>{"name", "data_csv"});
    const auto csv = check.text(t, path, "data_csv");
    if (!csv) {
      check.fail(path + ".data_csv", "path to the data CSV is required");
      return spec;
    }
    const double eps = shifted ? check.number(t, path, "epsilon", 1e-12, 1.0 - 1e-12).value_or(0.5)
                               : 0.0;
    try {
      auto data = std::make_shared<const LogisticData>(LogisticData::load_csv(*csv));
      spec.fixed_dim = data->dim();
      spec.build = [data, shifted, eps](int dim) {
        if (dim != data->dim()) throw ContractError("logistic target dimension mismatch");
        return shifted ? make_logistic_shifted_target(*data, eps) : make_logistic_target(*data);
      };
    } catch (const std::exception& e) {
      check.fail(path + ".data_csv", e.what());
    }
    return spec;
  }

  check.fail(path + ".name",
             "unknown target '" + *name +
                 "' (known: gaussian, volcano, volcano-shifted, double-banana, logistic, "
                 "logistic-shifted, student-t)");
  return spec;
}

std::vector<KernelEntry> parse_kernels(Checker& check, const json& arr, const std::string& path,
                                       bool allow_identity) {
  std::vector<KernelEntry> kernels;
  if (!arr.is_array() || arr.empty()) {
    check.fail(path, "expected a nonempty array of kernel objects");
    return kernels;
  }
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string kpath = path + "[" + std::to_string(i) + "]";
    const auto& k = arr[i];
    if (!k.is_object()) {
      check.fail(kpath, "expected an object with a \"name\"");
      continue;
    }
    const auto name = check.text(k, kpath, "name");
    if (!name) {
      check.fail(kpath + ".name", "kernel name is required");
      continue;
    }
    const auto kind = kernel_from_name(*name);
    if (!kind || (*kind == KernelKind::Identity && !allow_identity)) {
      check.fail(kpath + ".name",
                 "unknown kernel '" + *name + "' (known: ess, pcn, rwm, slice-radial)");
      continue;
    }
    KernelEntry entry;
    entry.name = *name;
    entry.spec.kind = *kind;
    switch (*kind) {
      case KernelKind::EllipticalSlice: {
        check.reject_unknown_keys(k, kpath, {"name", "shrink_cap"});
        entry.spec.shrink_cap = static_cast<std::uint32_t>(
            check.integer<std::int64_t>(k, kpath, "shrink_cap", 1, 1000000000).value_or(10000));
        break;
      }
      case KernelKind::Pcn: {
        check.reject_unknown_keys(k, kpath, {"name", "s", "tune", "target_rate"});
        entry.spec.param = check.number(k, kpath, "s", 1e-12, 1.0).value_or(0.5);
        entry.spec.tune = check.boolean(k, kpath, "tune").value_or(true);
        entry.spec.target_rate =
            check.number(k, kpath, "target_rate", 1e-6, 1.0 - 1e-6).value_or(0.25);
        break;
      }
      case KernelKind::Rwm: {
        check.reject_unknown_keys(k, kpath, {"name", "sigma", "tune", "target_rate"});
        entry.spec.param = check.number(k, kpath, "sigma", 1e-300, 1e300).value_or(1.0);
        entry.spec.tune = check.boolean(k, kpath, "tune").value_or(true);
        entry.spec.target_rate =
            check.number(k, kpath, "target_rate", 1e-6, 1.0 - 1e-6).value_or(0.25);
        break;
      }
      case KernelKind::SliceRadial:
      case KernelKind::Identity: {
        check.reject_unknown_keys(k, kpath, {"name"});
        break;
      }
    }
    kernels.push_back(std::move(entry));
  }
  if (kernels.size() > 1024) check.fail(path, "at most 1024 kernels");
  return kernels;
}

json kernels_echo(const std::vector<KernelEntry>& kernels) {
  json arr = json::array();
  for (const auto& k : kernels) {
    json e{{"name", k.name}};
    if (k.spec.kind == KernelKind::Pcn) {
      e["s"] = k.spec.param;
      e["tune"] = k.spec.tune;
      e["target_rate"] = k.spec.target_rate;
    } else if (k.spec.kind == KernelKind::Rwm) {
      e["sigma"] = k.spec.param;
      e["tune"] = k.spec.tune;
      e["target_rate"] = k.spec.target_rate;
    } else if (k.spec.kind == KernelKind::EllipticalSlice) {
      e["shrink_cap"] = k.spec.shrink_cap;
    }
    arr.push_back(std::move(e));
  }
  return arr;
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> diagnostics)
    : std::runtime_error("invalid config:\n  " + join(diagnostics, "\n  ")),
      diagnostics_(std::move(diagnostics)) {}

const char* experiment_name(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::EssSweep: return "ess-sweep";
    case ExperimentKind::DoubleBanana: return "double-banana";
    case ExperimentKind::GaussianValidate: return "gaussian-validate";
    case ExperimentKind::AssumptionAudit: return "assumption-audit";
    case ExperimentKind::DriftAudit: return "drift-audit";
  }
  return "?";
}

ExperimentConfig validate_config(const json& raw, const ValidateOptions& options) {
  Checker check;
  ExperimentConfig config;
  if (!raw.is_object()) {
    check.fail("$", "config must be a JSON object");
    check.raise_if_failed();
  }

  const auto exp_name = check.text(raw, "$", "experiment");
  if (!exp_name) {
    check.fail("$.experiment", "experiment name is required");
    check.raise_if_failed();
  }
  if (*exp_name == "ess-sweep")
    config.experiment = ExperimentKind::EssSweep;
  else if (*exp_name == "double-banana")
    config.experiment = ExperimentKind::DoubleBanana;
  else if (*exp_name == "gaussian-validate")
    config.experiment = ExperimentKind::GaussianValidate;
  else if (*exp_name == "assumption-audit")
    config.experiment = ExperimentKind::AssumptionAudit;
  else if (*exp_name == "drift-audit")
    config.experiment = ExperimentKind::DriftAudit;
  else {
    check.fail("$.experiment", "unknown experiment '" + *exp_name +
                                   "' (known: ess-sweep, double-banana, gaussian-validate, "
                                   "assumption-audit, drift-audit)");
    check.raise_if_failed();
  }
  const ExperimentKind kind = config.experiment;

  // keys allowed per experiment
  std::set<std::string> allowed{"experiment", "target", "seed", "replicates", "output_dir"};
  const bool chain_experiment = kind == ExperimentKind::EssSweep ||
                                kind == ExperimentKind::DoubleBanana ||
                                kind == ExperimentKind::GaussianValidate;
  if (chain_experiment) {
    allowed.insert({"kernels", "dims", "n0", "n", "thin", "truncation_lag", "geyer_truncation",
                    "x_init"});
  }
  if (kind == ExperimentKind::DoubleBanana) allowed.insert("histogram");
  if (kind == ExperimentKind::AssumptionAudit) allowed.insert({"audit", "dims"});
  if (kind == ExperimentKind::DriftAudit) allowed.insert({"kernels", "dims", "drift"});
  check.reject_unknown_keys(raw, "$", allowed);

  // scalar settings and their defaults
  config.seed = static_cast<std::uint64_t>(
      check.integer<std::int64_t>(raw, "$", "seed", 0, std::numeric_limits<std::int64_t>::max())
          .value_or(42));
  config.replicates = check.integer<int>(raw, "$", "replicates", 1, 1024)
                          .value_or(kind == ExperimentKind::EssSweep ? 3 : 1);
  config.output_dir = check.text(raw, "$", "output_dir").value_or("out");

  const std::uint64_t default_n0 = kind == ExperimentKind::DoubleBanana ? 100000
                                   : options.paper_scale                ? 100000
                                                                        : 10000;
  const std::uint64_t default_n = kind == ExperimentKind::DoubleBanana ? 1000000
                                  : options.paper_scale                ? 1000000
                                                                       : 100000;
  config.n0 = static_cast<std::uint64_t>(
      check.integer<std::int64_t>(raw, "$", "n0", 0, 1000000000000LL)
          .value_or(static_cast<std::int64_t>(default_n0)));
  config.n = static_cast<std::uint64_t>(
      check.integer<std::int64_t>(raw, "$", "n", 0, 1000000000000LL)
          .value_or(static_cast<std::int64_t>(default_n)));
  config.thin =
      static_cast<std::uint64_t>(check.integer<std::int64_t>(raw, "$", "thin", 1, 1000000000LL)
                                     .value_or(1));
  config.truncation_lag =
      check.integer<int>(raw, "$", "truncation_lag", 1, 1000000000).value_or(10000);
  config.geyer_truncation = check.boolean(raw, "$", "geyer_truncation").value_or(false);

  // target
  if (raw.contains("target")) {
    config.target = parse_target(check, raw.at("target"), "$.target");
  } else {
    switch (kind) {
      case ExperimentKind::EssSweep:
        config.target = parse_target(check, json{{"name", "volcano"}}, "$.target");
        break;
      case ExperimentKind::DoubleBanana:
        config.target = parse_target(check, json{{"name", "double-banana"}}, "$.target");
        break;
      case ExperimentKind::GaussianValidate:
        config.target = parse_target(
            check, json{{"name", "gaussian"}, {"x0", json::array({1.0, 1.0})}, {"sigma", 1.0}},
            "$.target");
        break;
      case ExperimentKind::DriftAudit:
        config.target = parse_target(
            check, json{{"name", "volcano-shifted"}, {"epsilon", 0.5}}, "$.target");
        break;
      case ExperimentKind::AssumptionAudit:
        check.fail("$.target", "assumption-audit requires an explicit target");
        break;
    }
  }

  // kernels
  if (kind == ExperimentKind::AssumptionAudit) {
    // no kernels involved
  } else if (raw.contains("kernels")) {
    config.kernels = parse_kernels(check, raw.at("kernels"), "$.kernels",
                                   kind == ExperimentKind::DriftAudit);
  } else {
    json defaults;
    switch (kind) {
      case ExperimentKind::EssSweep:
        defaults = json::array({json{{"name", "ess"}}, json{{"name", "pcn"}},
                                json{{"name", "rwm"}}, json{{"name", "slice-radial"}}});
        break;
      case ExperimentKind::GaussianValidate:
        defaults = json::array(
            {json{{"name", "ess"}}, json{{"name", "pcn"}}, json{{"name", "rwm"}}});
        break;
      default:
        defaults = json::array({json{{"name", "ess"}}});
        break;
    }
    config.kernels = parse_kernels(check, defaults, "$.kernels",
                                   kind == ExperimentKind::DriftAudit);
  }

  // dims
  if (raw.contains("dims")) {
    const auto& dims = raw.at("dims");
    if (!dims.is_array() || dims.empty()) {
      check.fail("$.dims", "expected a nonempty array of positive integers");
    } else {
      for (std::size_t i = 0; i < dims.size(); ++i) {
        if (!dims[i].is_number_integer() || dims[i].get<std::int64_t>() < 1) {
          check.fail("$.dims[" + std::to_string(i) + "]", "expected a positive integer");
          continue;
        }
        config.dims.push_back(dims[i].get<int>());
      }
    }
  } else {
    switch (kind) {
      case ExperimentKind::EssSweep:
        config.dims = options.paper_scale ? std::vector<int>{10, 30, 100, 300, 1000}
                                          : std::vector<int>{10, 30, 100, 300};
        break;
      case ExperimentKind::DriftAudit: config.dims = {10}; break;
      case ExperimentKind::AssumptionAudit:
        config.dims = {config.target.fixed_dim.value_or(10)};
        break;
      default:
        config.dims = {config.target.fixed_dim.value_or(2)};
        break;
    }
  }
  if (kind == ExperimentKind::AssumptionAudit && config.dims.size() != 1)
    check.fail("$.dims", "assumption-audit takes a single dimension");
  if (kind == ExperimentKind::GaussianValidate && !config.target.gaussian_params)
    check.fail("$.target", "gaussian-validate requires a gaussian target");
  if (config.target.fixed_dim) {
    for (int d : config.dims)
      if (d != *config.target.fixed_dim)
        check.fail("$.dims", "target '" + config.target.name + "' is fixed to dimension " +
                                 std::to_string(*config.target.fixed_dim));
  }

  // x_init
  if (raw.contains("x_init")) {
    const auto x_init = parse_vector(check, raw, "$", "x_init");
    if (x_init) {
      if (config.dims.size() != 1 ||
          static_cast<int>(x_init->size()) != config.dims.front()) {
        check.fail("$.x_init", "requires a single entry in dims matching its length");
      } else {
        config.x_init = *x_init;
      }
    }
  }

  // tuning needs enough burn-in
  if (chain_experiment) {
    for (std::size_t i = 0; i < config.kernels.size(); ++i) {
      if (config.kernels[i].spec.tune && config.n0 < 1000)
        check.fail("$.kernels[" + std::to_string(i) + "]",
                   "tuned kernels need n0 >= 1000 burn-in steps");
    }
  }

  // experiment-specific blocks
  if (raw.contains("audit")) {
    const auto& a = raw.at("audit");
    check.reject_unknown_keys(a, "$.audit", {"R", "alpha", "n_centers", "n_probes", "expect"});
    config.audit.R = check.number(a, "$.audit", "R", 1e-300, 1e300);
    config.audit.alpha = check.number(a, "$.audit", "alpha", 1e-300, 1e300);
    if (config.audit.R.has_value() != config.audit.alpha.has_value())
      check.fail("$.audit", "R and alpha must be given together or both omitted");
    config.audit.n_centers = check.integer<int>(a, "$.audit", "n_centers", 1, 1000000).value_or(200);
    config.audit.n_probes = check.integer<int>(a, "$.audit", "n_probes", 1, 1000000).value_or(500);
    if (const auto expect = check.text(a, "$.audit", "expect")) {
      if (*expect == "pass")
        config.audit.expect_pass = true;
      else if (*expect == "fail")
        config.audit.expect_pass = false;
      else
        check.fail("$.audit.expect", "expected \"pass\" or \"fail\"");
    }
  }
  if (raw.contains("drift")) {
    const auto& d = raw.at("drift");
    check.reject_unknown_keys(d, "$.drift",
                              {"radii", "reps", "require_delta_lt_1", "average_directions"});
    if (d.contains("radii")) {
      config.drift.radii.clear();
      const auto& radii = d.at("radii");
      if (!radii.is_array() || radii.size() < 3) {
        check.fail("$.drift.radii", "expected an array of at least 3 increasing radii");
      } else {
        for (const auto& r : radii) {
          if (!r.is_number() || !(r.get<double>() > 0.0)) {
            check.fail("$.drift.radii", "radii must be positive numbers");
            break;
          }
          config.drift.radii.push_back(r.get<double>());
        }
        if (!std::is_sorted(config.drift.radii.begin(), config.drift.radii.end()))
          check.fail("$.drift.radii", "radii must be increasing");
      }
    }
    config.drift.reps = check.integer<int>(d, "$.drift", "reps", 100, 100000000).value_or(1000);
    config.drift.require_delta_lt_1 =
        check.boolean(d, "$.drift", "require_delta_lt_1").value_or(false);
    config.drift.average_directions =
        check.boolean(d, "$.drift", "average_directions").value_or(false);
  }
  if (raw.contains("histogram")) {
    const auto& h = raw.at("histogram");
    check.reject_unknown_keys(h, "$.histogram", {"bins", "range"});
    if (h.contains("bins")) {
      const auto& bins = h.at("bins");
      if (!bins.is_array() || bins.size() != 2 || !bins[0].is_number_integer() ||
          !bins[1].is_number_integer() || bins[0].get<int>() < 1 || bins[1].get<int>() < 1) {
        check.fail("$.histogram.bins", "expected [bins_x, bins_y] with positive integers");
      } else {
        config.histogram.bins_x = bins[0].get<int>();
        config.histogram.bins_y = bins[1].get<int>();
      }
    }
    if (h.contains("range")) {
      const auto& range = h.at("range");
      auto is_pair = [](const json& p) {
        return p.is_array() && p.size() == 2 && p[0].is_number() && p[1].is_number() &&
               p[0].get<double>() < p[1].get<double>();
      };
      if (!range.is_array() || range.size() != 2 || !is_pair(range[0]) || !is_pair(range[1])) {
        check.fail("$.histogram.range", "expected [[x_lo, x_hi], [y_lo, y_hi]]");
      } else {
        config.histogram.x_lo = range[0][0].get<double>();
        config.histogram.x_hi = range[0][1].get<double>();
        config.histogram.y_lo = range[1][0].get<double>();
        config.histogram.y_hi = range[1][1].get<double>();
      }
    }
  }

  check.raise_if_failed();

  // resolved echo for the manifest
  config.echo = json{{"experiment", experiment_name(kind)},
                     {"target", config.target.name},
                     {"seed", config.seed},
                     {"replicates", config.replicates},
                     {"output_dir", config.output_dir}};
  config.echo["dims"] = config.dims;
  if (kind != ExperimentKind::AssumptionAudit)
    config.echo["kernels"] = kernels_echo(config.kernels);
  if (chain_experiment) {
    config.echo["n0"] = config.n0;
    config.echo["n"] = config.n;
    config.echo["thin"] = config.thin;
    config.echo["truncation_lag"] = config.truncation_lag;
    config.echo["geyer_truncation"] = config.geyer_truncation;
    if (config.x_init) {
      config.echo["x_init"] =
          std::vector<double>(config.x_init->data(), config.x_init->data() + config.x_init->size());
    }
  }
  if (kind == ExperimentKind::AssumptionAudit) {
    config.echo["audit"] = json{{"n_centers", config.audit.n_centers},
                                {"n_probes", config.audit.n_probes}};
    if (config.audit.R) {
      config.echo["audit"]["R"] = *config.audit.R;
      config.echo["audit"]["alpha"] = *config.audit.alpha;
    }
    if (config.audit.expect_pass)
      config.echo["audit"]["expect"] = *config.audit.expect_pass ? "pass" : "fail";
  }
  if (kind == ExperimentKind::DriftAudit) {
    config.echo["drift"] = json{{"radii", config.drift.radii},
                                {"reps", config.drift.reps},
                                {"require_delta_lt_1", config.drift.require_delta_lt_1},
                                {"average_directions", config.drift.average_directions}};
  }
  if (kind == ExperimentKind::DoubleBanana) {
    config.echo["histogram"] =
        json{{"bins", {config.histogram.bins_x, config.histogram.bins_y}},
             {"range",
              {{config.histogram.x_lo, config.histogram.x_hi},
               {config.histogram.y_lo, config.histogram.y_hi}}}};
  }
  return config;
}

ExperimentConfig load_config(const std::string& path, const ValidateOptions& options) {
  std::ifstream in(path);
  if (!in) throw ConfigError({path + ": cannot open file"});
  json raw;
  try {
    raw = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError({path + ": " + e.what()});
  }
  return validate_config(raw, options);
}

}  // namespace slicebench::bench
