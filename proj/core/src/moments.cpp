#include "slicebench/diagnostics/moments.hpp"

#include <cmath>
#include <limits>

#include "slicebench/errors.hpp"

namespace slicebench {

MomentsSummary summary_moments(const Matrix& samples, const EssOptions& ess_options) {
  const auto n = samples.rows();
  const auto d = samples.cols();
  if (n < 2) throw ContractError("summary_moments: need at least 2 samples");

  MomentsSummary out;
  out.mean = samples.colwise().mean();
  const Matrix centered = samples.rowwise() - out.mean.transpose();
  out.covariance = centered.transpose() * centered / static_cast<double>(n - 1);

  out.mc_standard_error = Vector::Constant(d, std::numeric_limits<double>::quiet_NaN());
  out.se_valid.assign(static_cast<std::size_t>(d), false);
  for (Eigen::Index j = 0; j < d; ++j) {
    const Vector col = samples.col(j);
    try {
      const EssReport report =
          effective_sample_size(std::span<const double>(col.data(), col.size()), ess_options);
      out.mc_standard_error[j] = std::sqrt(out.covariance(j, j) / report.ess);
      out.se_valid[static_cast<std::size_t>(j)] = true;
    } catch (const DegenerateSeriesError&) {
      // surfaced through se_valid
    }
  }
  return out;
}

}  // namespace slicebench
