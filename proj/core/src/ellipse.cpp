#include "slicebench/math/ellipse.hpp"

#include <cmath>

#include "slicebench/errors.hpp"

namespace slicebench {

Vector ellipse_point(const Vector& x, const Vector& w, double theta) {
  if (x.size() != w.size()) throw ContractError("ellipse_point: dimension mismatch");
  if (!std::isfinite(theta)) throw ContractError("ellipse_point: theta must be finite");
  return std::cos(theta) * x + std::sin(theta) * w;
}

}  // namespace slicebench
