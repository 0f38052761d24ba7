#include "slicebench/targets/catalog.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <memory>

#include "slicebench/errors.hpp"
#include "slicebench/targets/assumption.hpp"

namespace slicebench {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double softplus(double t) {
  // log(1 + exp(t)) without overflow on either side.
  if (t > 0.0) return t + std::log1p(std::exp(-t));
  return std::log1p(std::exp(t));
}

}  // namespace

double log_rho_volcano(const Vector& x) { return x.norm(); }

double log_rho_double_banana(const Vector& x, double alpha) {
  if (x.size() != 2) throw ContractError("log_rho_double_banana: dim must be 2");
  const double r = (1.0 - x[0]) * (1.0 - x[0]) + 100.0 * (x[1] - x[0] * x[0]) * (x[1] - x[0] * x[0]);
  if (r <= 1.0) return kNegInf;  // F = log r <= 0: zero density
  const double f = std::log(r);
  return 0.5 * x.squaredNorm() - std::abs(alpha - std::log(f));
}

double log_rho_logistic(const Vector& x, const LogisticData& data) {
  if (x.size() != data.dim()) throw ContractError("log_rho_logistic: dimension mismatch");
  double acc = 0.0;
  for (int i = 0; i < data.count(); ++i) {
    const double margin = data.labels()[i] * data.features().row(i).dot(x);
    acc -= softplus(-margin);
  }
  return acc;
}

GaussianLogDensity::GaussianLogDensity(Vector x0, const Matrix& sigma)
    : x0_(std::move(x0)), sigma_factor_(CovarianceFactor::cholesky(sigma)) {
  if (x0_.size() != sigma_factor_.dim())
    throw ContractError("GaussianLogDensity: x0/Sigma dimension mismatch");
}

double GaussianLogDensity::operator()(const Vector& x) const {
  if (x.size() != x0_.size()) throw ContractError("GaussianLogDensity: dimension mismatch");
  return -0.5 * sigma_factor_.quad_form_inv(x - x0_);
}

StudentTLogDensity::StudentTLogDensity(double nu, Vector x0, const Matrix& sigma)
    : nu_(nu), x0_(std::move(x0)), sigma_factor_(CovarianceFactor::cholesky(sigma)) {
  if (!(nu > 1.0)) throw ContractError("StudentTLogDensity: nu must exceed 1");
  if (x0_.size() != sigma_factor_.dim())
    throw ContractError("StudentTLogDensity: x0/Sigma dimension mismatch");
}

double StudentTLogDensity::operator()(const Vector& x) const {
  if (x.size() != x0_.size()) throw ContractError("StudentTLogDensity: dimension mismatch");
  const double d = static_cast<double>(x0_.size());
  const double quad = sigma_factor_.quad_form_inv(x - x0_);
  return -0.5 * (nu_ + d) * std::log1p(quad / nu_);
}

RadialProfile volcano_radial_profile() {
  RadialProfile p;
  p.log_density = [](double r) { return r - 0.5 * r * r; };
  p.level_set = [](double s) -> std::pair<double, double> {
    // r - r^2/2 >= s  <=>  r in 1 -+ sqrt(1 - 2s); levels above the mode 1/2
    // can only come from roundoff and collapse onto the mode.
    const double disc = std::max(0.0, 1.0 - 2.0 * s);
    const double half_width = std::sqrt(disc);
    const double lo = s > 0.0 ? 1.0 - half_width : 0.0;
    return {lo, 1.0 + half_width};
  };
  return p;
}

TargetModel make_gaussian_target(const Vector& x0, const Matrix& sigma, CovarianceFactor prior) {
  GaussianLogDensity density(x0, sigma);
  auto constants = gaussian_assumption_bounds(sigma, x0);
  const int d = static_cast<int>(x0.size());
  return TargetModel("gaussian", d, std::move(prior),
                     [density](const Vector& x) { return density(x); }, std::nullopt, constants);
}

TargetModel make_gaussian_target(const Vector& x0, const Matrix& sigma) {
  return make_gaussian_target(x0, sigma, CovarianceFactor::identity(static_cast<int>(x0.size())));
}

TargetModel make_volcano_target(int dim) {
  return TargetModel("volcano", dim, CovarianceFactor::identity(dim), log_rho_volcano,
                     volcano_radial_profile(), std::nullopt);
}

TargetModel make_volcano_shifted_target(int dim, double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 1.0))
    throw ContractError("make_volcano_shifted_target: epsilon must lie in (0, 1]");
  auto log_rho = [epsilon](const Vector& x) {
    const double r = x.norm();
    return r - 0.5 * epsilon * r * r;
  };
  const auto constants = radial_tail_assumption_bounds(2.0 / epsilon, 1.0, 1.0, 0.0);
  if (epsilon == 1.0) {
    // Full shift: the reweighted prior would be degenerate. Audit-only member.
    return TargetModel("volcano-shifted", dim, CovarianceFactor::identity(dim), log_rho,
                       std::nullopt, constants);
  }
  return TargetModel("volcano-shifted", dim,
                     CovarianceFactor::identity(dim).scaled(1.0 / (1.0 - epsilon)), log_rho,
                     volcano_radial_profile(), constants);
}

TargetModel make_double_banana_target(double alpha) {
  return TargetModel("double-banana", 2, CovarianceFactor::identity(2),
                     [alpha](const Vector& x) { return log_rho_double_banana(x, alpha); });
}

TargetModel make_logistic_target(LogisticData data) {
  const int d = data.dim();
  auto shared = std::make_shared<const LogisticData>(std::move(data));
  return TargetModel("logistic", d, CovarianceFactor::identity(d),
                     [shared](const Vector& x) { return log_rho_logistic(x, *shared); });
}

TargetModel make_logistic_shifted_target(LogisticData data, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw ContractError("make_logistic_shifted_target: epsilon must lie in (0, 1)");
  const int d = data.dim();
  const auto constants = shifted_logistic_assumption_bounds(epsilon, data);
  auto shared = std::make_shared<const LogisticData>(std::move(data));
  auto log_rho = [shared, epsilon](const Vector& x) {
    return log_rho_logistic(x, *shared) - 0.5 * epsilon * x.squaredNorm();
  };
  return TargetModel("logistic-shifted", d,
                     CovarianceFactor::identity(d).scaled(1.0 / (1.0 - epsilon)), log_rho,
                     std::nullopt, constants);
}

TargetModel make_student_t_target(double nu, const Vector& x0, const Matrix& sigma) {
  StudentTLogDensity density(nu, x0, sigma);
  Eigen::SelfAdjointEigenSolver<Matrix> eig(sigma);
  const double lambda_min = eig.eigenvalues().minCoeff();
  const double lambda_max = eig.eigenvalues().maxCoeff();
  // Equivalence constants between ||.|| and the Sigma^{-1} norm.
  const auto constants = exp_family_assumption_bounds(
      1.0 / std::sqrt(lambda_max), 1.0 / std::sqrt(lambda_min), x0.norm());
  const int d = static_cast<int>(x0.size());
  return TargetModel("student-t", d, CovarianceFactor::identity(d),
                     [density](const Vector& x) { return density(x); }, std::nullopt, constants);
}

}  // namespace slicebench
