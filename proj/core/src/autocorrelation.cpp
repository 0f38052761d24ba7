#include "slicebench/diagnostics/autocorrelation.hpp"

#include <unsupported/Eigen/FFT>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

#include "slicebench/errors.hpp"

namespace slicebench {

std::vector<double> autocorrelation(std::span<const double> series, int max_lag) {
  const std::size_t n = series.size();
  if (n < 2) throw ContractError("autocorrelation: need at least 2 samples");
  if (max_lag < 1 || static_cast<std::size_t>(max_lag) >= n)
    throw ContractError("autocorrelation: max_lag must lie in [1, n-1]");

  const double mean = std::accumulate(series.begin(), series.end(), 0.0) / static_cast<double>(n);

  // Zero-padding past n + max_lag makes the circular convolution linear.
  std::size_t n_fft = 1;
  while (n_fft < n + static_cast<std::size_t>(max_lag) + 1) n_fft <<= 1;
  std::vector<std::complex<double>> buf(n_fft, 0.0);
  for (std::size_t i = 0; i < n; ++i) buf[i] = series[i] - mean;

  Eigen::FFT<double> fft;
  std::vector<std::complex<double>> spectrum(n_fft);
  fft.fwd(spectrum, buf);
  for (auto& v : spectrum) v = v * std::conj(v);
  fft.inv(buf, spectrum);

  const double lag0 = buf[0].real();
  if (!(lag0 > 0.0)) throw DegenerateSeriesError("autocorrelation: series has zero variance");

  std::vector<double> gamma(max_lag);
  for (int k = 1; k <= max_lag; ++k) gamma[k - 1] = buf[k].real() / lag0;
  return gamma;
}

EssReport effective_sample_size(std::span<const double> series, const EssOptions& options) {
  const std::size_t n = series.size();
  if (n < 2) throw ContractError("effective_sample_size: need at least 2 samples");
  if (options.truncation_lag < 1)
    throw ContractError("effective_sample_size: truncation lag must be positive");

  const int max_lag =
      static_cast<int>(std::min<std::size_t>(options.truncation_lag, n - 1));
  std::vector<double> gamma = autocorrelation(series, max_lag);

  int used = max_lag;
  if (options.geyer_truncation) {
    used = 0;
    for (int m = 0; 2 * m + 1 < max_lag; ++m) {
      if (gamma[2 * m] + gamma[2 * m + 1] <= 0.0) break;
      used = 2 * m + 2;
    }
    used = std::max(used, 1);
    gamma.resize(used);
  }

  double sum = 0.0;
  for (int k = 0; k < used; ++k) sum += gamma[k];

  EssReport report;
  report.n = n;
  report.truncation_lag = used;
  report.gamma = std::move(gamma);
  report.iact = std::max(1.0, 1.0 + 2.0 * sum);
  report.ess = static_cast<double>(n) / report.iact;
  return report;
}

double quantity_of_interest(const Vector& x) { return std::log1p(x.norm()); }

}  // namespace slicebench
