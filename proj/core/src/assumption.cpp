#include "slicebench/targets/assumption.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "slicebench/errors.hpp"

namespace slicebench {

namespace {

constexpr double kRadiusFloor = 1e-6;

double floored(double r) { return r > kRadiusFloor ? r : kRadiusFloor; }

}  // namespace

AssumptionProbeReport check_assumption1(const TargetModel& target, double R, double alpha,
                                        int n_centers, int n_probes, RngStream& rng) {
  if (!(R > 0.0)) throw ContractError("check_assumption1: R must be positive");
  if (!(alpha > 0.0)) throw ContractError("check_assumption1: alpha must be positive");
  if (n_centers < 1 || n_probes < 1)
    throw ContractError("check_assumption1: probe counts must be at least 1");

  const int d = target.dim();
  AssumptionProbeReport report;
  report.tested_R = R;
  report.tested_alpha = alpha;

  const double r_lo = R * (1.0 + 1e-9);
  const double r_hi = 10.0 * R;
  for (int c = 0; c < n_centers; ++c) {
    const double r_center = rng.uniform(r_lo, r_hi);
    const Vector x = r_center * unit_sphere_vector(d, rng);
    const double log_rho_x = target.log_rho(x);
    const double ball_radius = alpha * x.norm();
    for (int p = 0; p < n_probes; ++p) {
      // u^{1/d} scaling makes the probe uniform in the closed ball.
      const double u = rng.uniform01();
      const double r_probe = ball_radius * std::exp(std::log(u) / d);
      const Vector y = r_probe * unit_sphere_vector(d, rng);
      const double log_rho_y = target.log_rho(y);
      ++report.probes_run;
      if (log_rho_y < log_rho_x - 1e-12) {
        report.passed = false;
        report.counterexample = AssumptionCounterexample{x, y, log_rho_x, log_rho_y};
        return report;
      }
    }
  }
  return report;
}

AssumptionConstants gaussian_assumption_bounds(const Matrix& sigma, const Vector& x0) {
  if (sigma.rows() != sigma.cols() || sigma.rows() != x0.size())
    throw ContractError("gaussian_assumption_bounds: dimension mismatch");
  Eigen::SelfAdjointEigenSolver<Matrix> eig(sigma);
  const double lambda_min = eig.eigenvalues().minCoeff();
  const double lambda_max = eig.eigenvalues().maxCoeff();
  if (!(lambda_min > 0.0))
    throw FactorizationError("gaussian_assumption_bounds: Sigma not positive definite", 0);
  const double ratio = std::sqrt(lambda_max / lambda_min);
  return {floored(4.0 * ratio * x0.norm()), 0.5 / ratio};
}

AssumptionConstants radial_tail_assumption_bounds(double r_prime, double c1, double c2,
                                                  double x0_norm) {
  if (!(r_prime > 0.0)) throw ContractError("radial_tail_assumption_bounds: r_prime must be > 0");
  if (!(c1 > 0.0 && c2 >= c1))
    throw ContractError("radial_tail_assumption_bounds: need 0 < c1 <= c2");
  if (!(x0_norm >= 0.0)) throw ContractError("radial_tail_assumption_bounds: bad center norm");
  return {std::max(r_prime, 4.0 * (c2 / c1) * x0_norm), 0.5 * c1 / c2};
}

AssumptionConstants shifted_logistic_assumption_bounds(double epsilon, const LogisticData& data) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw ContractError("shifted_logistic_assumption_bounds: epsilon must lie in (0, 1)");
  const double n = static_cast<double>(data.count());
  return {floored(4.0 * n * data.min_feature_norm() / epsilon), 0.5 * epsilon};
}

AssumptionConstants exp_family_assumption_bounds(double c1, double c2, double x0_norm) {
  if (!(c1 > 0.0 && c2 >= c1)) throw ContractError("exp_family_assumption_bounds: need 0 < c1 <= c2");
  if (!(x0_norm >= 0.0)) throw ContractError("exp_family_assumption_bounds: bad center norm");
  return {floored(4.0 * (c2 / c1) * x0_norm), 0.5 * c1 / c2};
}

}  // namespace slicebench
