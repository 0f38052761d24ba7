#ifndef SLICEBENCH_TARGETS_TARGET_MODEL_HPP
#define SLICEBENCH_TARGETS_TARGET_MODEL_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "slicebench/math/cholesky.hpp"
#include "slicebench/types.hpp"

namespace slicebench {

// Constants (R, alpha) for the level-set inclusion condition
//   B_{alpha ||x||}(0) contained in { y : rho(y) >= rho(x) }   for ||x|| > R.
struct AssumptionConstants {
  double R = 0.0;
  double alpha = 0.0;
};

// Radial structure of a rotationally invariant posterior: h(r) is the log
// Lebesgue density of the posterior at radius r (up to an additive constant)
// and level_set(s) solves { r >= 0 : h(r) >= s } as a single interval.
// Only targets carrying this can run the radial simple slice kernel.
struct RadialProfile {
  std::function<double(double)> log_density;
  std::function<std::pair<double, double>(double)> level_set;
};

// A posterior specification: reference Gaussian measure N(0, C) plus the
// log density log rho of the posterior with respect to it. log_rho returns a
// finite value or -infinity (zero density), never NaN. Immutable after
// construction and safely shared across concurrent chains.
class TargetModel {
 public:
  using LogDensity = std::function<double(const Vector&)>;

  TargetModel(std::string name, int dim, CovarianceFactor prior, LogDensity log_rho,
              std::optional<RadialProfile> radial = std::nullopt,
              std::optional<AssumptionConstants> assumption = std::nullopt);

  int dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const CovarianceFactor& prior() const { return prior_; }
  const std::optional<RadialProfile>& radial_profile() const { return radial_; }
  const std::optional<AssumptionConstants>& assumption_constants() const { return assumption_; }

  // log rho(x): finite or -inf.
  double log_rho(const Vector& x) const;
  // x^T C^{-1} x for the prior covariance C.
  double prior_quad(const Vector& x) const { return prior_.quad_form_inv(x); }
  // Unnormalized log Lebesgue density of the posterior,
  // log rho(x) - x^T C^{-1} x / 2. This is what random walk Metropolis needs.
  double log_lebesgue(const Vector& x) const;

 private:
  std::string name_;
  int dim_;
  CovarianceFactor prior_;
  LogDensity log_rho_;
  std::optional<RadialProfile> radial_;
  std::optional<AssumptionConstants> assumption_;
};

// Reweighted representation of the same posterior: moves the Gaussian factor
// exp(-eps x^T C^{-1} x / 2) from the prior into the likelihood, giving
//   log rho~(x) = log rho(x) - eps/2 x^T C^{-1} x,  prior N(0, (1-eps)^{-1} C).
// Requires eps in (0, 1). The represented posterior (and hence any radial
// profile) is unchanged; closed-form assumption constants are dropped since
// they do not transfer.
TargetModel tail_shift(const TargetModel& target, double epsilon);

}  // namespace slicebench

#endif
