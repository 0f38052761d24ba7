#include "slicebench/targets/target_model.hpp"

#include <cassert>
#include <cmath>

#include "slicebench/errors.hpp"

namespace slicebench {

TargetModel::TargetModel(std::string name, int dim, CovarianceFactor prior, LogDensity log_rho,
                         std::optional<RadialProfile> radial,
                         std::optional<AssumptionConstants> assumption)
    : name_(std::move(name)),
      dim_(dim),
      prior_(std::move(prior)),
      log_rho_(std::move(log_rho)),
      radial_(std::move(radial)),
      assumption_(std::move(assumption)) {
  if (dim_ < 1) throw ContractError("TargetModel: dim must be positive");
  if (prior_.dim() != dim_) throw ContractError("TargetModel: prior dimension mismatch");
  if (!log_rho_) throw ContractError("TargetModel: log_rho must be callable");
}

double TargetModel::log_rho(const Vector& x) const {
  if (x.size() != dim_) throw ContractError("TargetModel::log_rho: dimension mismatch");
  const double v = log_rho_(x);
  assert(!std::isnan(v));
  return v;
}

double TargetModel::log_lebesgue(const Vector& x) const {
  const double lr = log_rho(x);
  if (lr == -std::numeric_limits<double>::infinity()) return lr;
  return lr - 0.5 * prior_quad(x);
}

TargetModel tail_shift(const TargetModel& target, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw ContractError("tail_shift: epsilon must lie in (0, 1)");

  // Capture by value: the shifted model must not dangle if the original dies.
  const CovarianceFactor prior = target.prior();
  auto base = [target](const Vector& x) { return target.log_rho(x); };
  auto shifted = [base, prior, epsilon](const Vector& x) {
    const double lr = base(x);
    if (lr == -std::numeric_limits<double>::infinity()) return lr;
    return lr - 0.5 * epsilon * prior.quad_form_inv(x);
  };

  return TargetModel(target.name() + "+tail-shift", target.dim(),
                     prior.scaled(1.0 / (1.0 - epsilon)), shifted, target.radial_profile(),
                     std::nullopt);
}

}  // namespace slicebench
