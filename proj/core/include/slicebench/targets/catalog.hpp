#ifndef SLICEBENCH_TARGETS_CATALOG_HPP
#define SLICEBENCH_TARGETS_CATALOG_HPP

#include "slicebench/targets/logistic_data.hpp"
#include "slicebench/targets/target_model.hpp"
#include "slicebench/types.hpp"

namespace slicebench {

// ---- log densities (relative to the Gaussian reference measure) ----

// log rho(x) = ||x||. The posterior against an N(0, I) prior is the volcano
// measure exp(||x|| - ||x||^2 / 2) dx, whose mode is a (d-1)-sphere.
double log_rho_volcano(const Vector& x);

// Two-dimensional double banana: with r(x) = (1 - x1)^2 + 100 (x2 - x1^2)^2
// and F = log r, returns ||x||^2 / 2 - |alpha - log F| when F > 0 and -inf
// otherwise. The zero-density region {r <= 1} is left at -inf on purpose:
// slice kernels reject it, clamping would change the target.
double log_rho_double_banana(const Vector& x, double alpha = 5.0);

// Logistic regression log likelihood -sum_i log(1 + exp(-y_i x^T xi_i)),
// evaluated in softplus form so large |x^T xi_i| cannot overflow.
double log_rho_logistic(const Vector& x, const LogisticData& data);

// Gaussian likelihood -1/2 (x - x0)^T Sigma^{-1} (x - x0). The quadratic form
// goes through triangular solves against the Cholesky factor of Sigma.
class GaussianLogDensity {
 public:
  GaussianLogDensity(Vector x0, const Matrix& sigma);
  double operator()(const Vector& x) const;

 private:
  Vector x0_;
  CovarianceFactor sigma_factor_;
};

// Multivariate t: -((nu + d)/2) log(1 + (x-x0)^T Sigma^{-1} (x-x0) / nu),
// nu > 1 required.
class StudentTLogDensity {
 public:
  StudentTLogDensity(double nu, Vector x0, const Matrix& sigma);
  double operator()(const Vector& x) const;

 private:
  double nu_;
  Vector x0_;
  CovarianceFactor sigma_factor_;
};

// ---- catalog targets ----

// Gaussian likelihood against an arbitrary Gaussian prior. Ships with its
// closed-form level-set constants.
TargetModel make_gaussian_target(const Vector& x0, const Matrix& sigma, CovarianceFactor prior);
TargetModel make_gaussian_target(const Vector& x0, const Matrix& sigma);  // prior N(0, I)

// rho = exp(||x||), prior N(0, I). Carries the radial profile
// h(r) = r - r^2/2 of the posterior; carries no level-set constants because
// none exist for this representation.
TargetModel make_volcano_target(int dim);

// Volcano with tails shifted by epsilon in (0, 1]:
// rho = exp(||x|| - eps ||x||^2 / 2), prior N(0, (1 - eps)^{-1} I).
// Same posterior as make_volcano_target for eps < 1. The eps = 1 member has
// no proper reweighted prior; it is constructed with an N(0, I) prior and is
// intended for level-set audits (which look at rho only), not for chains.
TargetModel make_volcano_shifted_target(int dim, double epsilon);

// Double banana (d = 2), prior N(0, I).
TargetModel make_double_banana_target(double alpha = 5.0);

// Logistic regression against N(0, I). The raw representation has
// non-vanishing tails and no valid level-set constants.
TargetModel make_logistic_target(LogisticData data);

// Tail-shifted logistic regression: rho~ = rho * exp(-eps ||x||^2 / 2),
// prior N(0, (1 - eps)^{-1} I), eps in (0, 1). Ships with its closed-form
// constants alpha = eps/2, R = 4 N min_i ||xi_i|| / eps.
TargetModel make_logistic_shifted_target(LogisticData data, double epsilon);

// Multivariate t likelihood against N(0, I), nu > 1.
TargetModel make_student_t_target(double nu, const Vector& x0, const Matrix& sigma);

// Radial profile of the volcano posterior, h(r) = r - r^2/2 with its exact
// interval solver.
RadialProfile volcano_radial_profile();

}  // namespace slicebench

#endif
