#ifndef SLICEBENCH_DIAGNOSTICS_AUTOCORRELATION_HPP
#define SLICEBENCH_DIAGNOSTICS_AUTOCORRELATION_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "slicebench/types.hpp"

namespace slicebench {

// Autocorrelation estimates gamma(1..max_lag) of a scalar series:
//   gamma(k) = sum_{i=1}^{n-k} (s_i - mean)(s_{i+k} - mean)
//              / sum_{i=1}^{n} (s_i - mean)^2.
// Computed by FFT convolution; equal to the direct sums to ~1e-8 absolute.
// Throws DegenerateSeriesError for constant series, ContractError when
// n < 2 or max_lag >= n.
std::vector<double> autocorrelation(std::span<const double> series, int max_lag);

struct EssOptions {
  int truncation_lag = 10000;  // capped at n - 1
  // Optional Geyer initial-positive-sequence truncation: stop the lag sum at
  // the first non-positive pair gamma(2m-1) + gamma(2m). Off by default; the
  // fixed-lag estimator above is the reference behavior.
  bool geyer_truncation = false;
};

struct EssReport {
  std::size_t n = 0;
  int truncation_lag = 0;     // lags actually summed
  std::vector<double> gamma;  // gamma(1..truncation_lag)
  double iact = 1.0;          // max(1, 1 + 2 sum gamma(k))
  double ess = 0.0;           // n / iact
};

EssReport effective_sample_size(std::span<const double> series, const EssOptions& options = {});

// f(x) = log(1 + ||x||), the scalar summary tracked by the chain benchmarks.
double quantity_of_interest(const Vector& x);

}  // namespace slicebench

#endif
