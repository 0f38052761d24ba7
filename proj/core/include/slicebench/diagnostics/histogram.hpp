#ifndef SLICEBENCH_DIAGNOSTICS_HISTOGRAM_HPP
#define SLICEBENCH_DIAGNOSTICS_HISTOGRAM_HPP

#include <cstdint>
#include <vector>

#include "slicebench/types.hpp"

namespace slicebench {

// 2-D count histogram with half-open cells [lo, hi) except the last cell in
// each axis, which is closed. Samples outside the range land in the overflow
// tally, so cells + overflow always sum to the sample count.
struct Histogram2d {
  int bins_x = 0;
  int bins_y = 0;
  double x_lo = 0.0, x_hi = 0.0;
  double y_lo = 0.0, y_hi = 0.0;
  std::vector<std::uint64_t> counts;  // row-major, index = ix * bins_y + iy
  std::uint64_t overflow = 0;

  std::uint64_t at(int ix, int iy) const {
    return counts[static_cast<std::size_t>(ix) * static_cast<std::size_t>(bins_y) +
                  static_cast<std::size_t>(iy)];
  }
  std::uint64_t total() const;
  // Cell center coordinates.
  double x_center(int ix) const;
  double y_center(int iy) const;
};

Histogram2d histogram2d(const Matrix& samples, int bins_x, int bins_y, double x_lo, double x_hi,
                        double y_lo, double y_hi);

}  // namespace slicebench

#endif
