#ifndef SLICEBENCH_MATH_ELLIPSE_HPP
#define SLICEBENCH_MATH_ELLIPSE_HPP

#include "slicebench/types.hpp"

namespace slicebench {

// Point on the ellipse with conjugate diameters x and w:
//   cos(theta) * x + sin(theta) * w.
// The result never leaves the ball of radius ||x|| + ||w||, which is what
// makes ||.|| a usable drift function for the elliptical slice kernel.
Vector ellipse_point(const Vector& x, const Vector& w, double theta);

}  // namespace slicebench

#endif
