#include "slicebench/diagnostics/histogram.hpp"

#include <cmath>
#include <numeric>

#include "slicebench/errors.hpp"

namespace slicebench {

std::uint64_t Histogram2d::total() const {
  return std::accumulate(counts.begin(), counts.end(), overflow);
}

double Histogram2d::x_center(int ix) const {
  return x_lo + (x_hi - x_lo) * (static_cast<double>(ix) + 0.5) / static_cast<double>(bins_x);
}

double Histogram2d::y_center(int iy) const {
  return y_lo + (y_hi - y_lo) * (static_cast<double>(iy) + 0.5) / static_cast<double>(bins_y);
}

namespace {

// Bin index on one axis; -1 for out of range. The upper edge belongs to the
// last cell.
int bin_index(double v, double lo, double hi, int bins) {
  if (v < lo || v > hi) return -1;
  if (v == hi) return bins - 1;
  const int ix = static_cast<int>(std::floor((v - lo) / (hi - lo) * static_cast<double>(bins)));
  return ix >= bins ? bins - 1 : ix;  // roundoff can push v just onto hi
}

}  // namespace

Histogram2d histogram2d(const Matrix& samples, int bins_x, int bins_y, double x_lo, double x_hi,
                        double y_lo, double y_hi) {
  if (samples.cols() != 2) throw ContractError("histogram2d: samples must be n x 2");
  if (bins_x < 1 || bins_y < 1) throw ContractError("histogram2d: need at least one bin per axis");
  if (!(x_lo < x_hi) || !(y_lo < y_hi))
    throw ContractError("histogram2d: range must be non-degenerate");

  Histogram2d h;
  h.bins_x = bins_x;
  h.bins_y = bins_y;
  h.x_lo = x_lo;
  h.x_hi = x_hi;
  h.y_lo = y_lo;
  h.y_hi = y_hi;
  h.counts.assign(static_cast<std::size_t>(bins_x) * static_cast<std::size_t>(bins_y), 0);

  for (Eigen::Index i = 0; i < samples.rows(); ++i) {
    const int ix = bin_index(samples(i, 0), x_lo, x_hi, bins_x);
    const int iy = bin_index(samples(i, 1), y_lo, y_hi, bins_y);
    if (ix < 0 || iy < 0) {
      ++h.overflow;
      continue;
    }
    ++h.counts[static_cast<std::size_t>(ix) * static_cast<std::size_t>(bins_y) +
               static_cast<std::size_t>(iy)];
  }
  return h;
}

}  // namespace slicebench
