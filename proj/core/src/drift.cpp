#include "slicebench/diagnostics/drift.hpp"

#include <cmath>

#include "slicebench/errors.hpp"
#include "slicebench/samplers/kernel_state.hpp"

namespace slicebench {

DriftReport drift_estimate(const TargetModel& target, const KernelSpec& kernel,
                           std::span<const double> radii, const DriftOptions& options,
                           RngStream& rng) {
  if (radii.size() < 3) throw ContractError("drift_estimate: need at least 3 radii for the fit");
  if (options.reps < 100) throw ContractError("drift_estimate: need at least 100 replicates");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0)) throw ContractError("drift_estimate: radii must be positive");
    if (i > 0 && !(radii[i] > radii[i - 1]))
      throw ContractError("drift_estimate: radii must be increasing");
  }

  const int d = target.dim();
  DriftReport report;
  report.radii.assign(radii.begin(), radii.end());

  for (const double r : radii) {
    double sum = 0.0, sum_sq = 0.0;
    Vector x = Vector::Zero(d);
    x[0] = r;
    for (int rep = 0; rep < options.reps; ++rep) {
      if (options.average_directions) x = r * unit_sphere_vector(d, rng);
      KernelState state = make_state(target, x);
      kernel_transition(kernel, kernel.param, state, target, rng);
      const double norm = state.x.norm();
      sum += norm;
      sum_sq += norm * norm;
    }
    const double n_reps = static_cast<double>(options.reps);
    const double mean = sum / n_reps;
    const double var = std::max(0.0, (sum_sq - n_reps * mean * mean) / (n_reps - 1.0));
    report.m_hat.push_back(mean);
    report.std_error.push_back(std::sqrt(var / n_reps));
  }

  // Plain least squares of m_hat on r.
  const std::size_t m = report.radii.size();
  double r_bar = 0.0, y_bar = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    r_bar += report.radii[i];
    y_bar += report.m_hat[i];
  }
  r_bar /= static_cast<double>(m);
  y_bar /= static_cast<double>(m);

  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double dr = report.radii[i] - r_bar;
    sxx += dr * dr;
    sxy += dr * (report.m_hat[i] - y_bar);
  }
  report.delta_hat = sxy / sxx;
  report.intercept_hat = y_bar - report.delta_hat * r_bar;

  double rss = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double resid =
        report.m_hat[i] - (report.delta_hat * report.radii[i] + report.intercept_hat);
    rss += resid * resid;
  }
  report.delta_std_error = std::sqrt(rss / (static_cast<double>(m) - 2.0) / sxx);
  return report;
}

}  // namespace slicebench
