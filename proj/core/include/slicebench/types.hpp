#ifndef SLICEBENCH_TYPES_HPP
#define SLICEBENCH_TYPES_HPP

#include <Eigen/Core>

namespace slicebench {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

}  // namespace slicebench

#endif
