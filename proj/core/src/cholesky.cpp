#include "slicebench/math/cholesky.hpp"

#include <cmath>
#include <string>

#include "slicebench/errors.hpp"

namespace slicebench {

CovarianceFactor CovarianceFactor::identity(int dim) {
  if (dim < 1) throw ContractError("CovarianceFactor: dim must be positive");
  CovarianceFactor f;
  f.dim_ = dim;
  f.diagonal_ = true;
  f.scale_ = Vector::Ones(dim);
  return f;
}

CovarianceFactor CovarianceFactor::diagonal(const Vector& variances) {
  CovarianceFactor f;
  f.dim_ = static_cast<int>(variances.size());
  if (f.dim_ < 1) throw ContractError("CovarianceFactor: dim must be positive");
  f.diagonal_ = true;
  f.scale_.resize(f.dim_);
  for (int i = 0; i < f.dim_; ++i) {
    if (!(variances[i] > 0.0))
      throw FactorizationError(
          "diagonal covariance has non-positive variance at index " + std::to_string(i), i);
    f.scale_[i] = std::sqrt(variances[i]);
  }
  return f;
}

CovarianceFactor CovarianceFactor::cholesky(const Matrix& c) {
  const int d = static_cast<int>(c.rows());
  if (d < 1 || c.cols() != d) throw ContractError("cholesky: matrix must be square");
  const double scale = std::max(1.0, c.cwiseAbs().maxCoeff());
  if ((c - c.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw ContractError("cholesky: matrix must be symmetric");

  // Standard left-looking Cholesky so a failed pivot can be reported by index.
  Matrix lower = Matrix::Zero(d, d);
  for (int j = 0; j < d; ++j) {
    double diag = c(j, j);
    for (int k = 0; k < j; ++k) diag -= lower(j, k) * lower(j, k);
    if (!(diag > 0.0))
      throw FactorizationError(
          "matrix is not positive definite: pivot " + std::to_string(j) +
              " is " + std::to_string(diag),
          j);
    lower(j, j) = std::sqrt(diag);
    for (int i = j + 1; i < d; ++i) {
      double v = c(i, j);
      for (int k = 0; k < j; ++k) v -= lower(i, k) * lower(j, k);
      lower(i, j) = v / lower(j, j);
    }
  }

  CovarianceFactor f;
  f.dim_ = d;
  f.diagonal_ = false;
  f.lower_ = std::move(lower);
  return f;
}

Vector CovarianceFactor::apply(const Vector& z) const {
  if (z.size() != dim_) throw ContractError("CovarianceFactor::apply: dimension mismatch");
  if (diagonal_) return scale_.cwiseProduct(z);
  return lower_.triangularView<Eigen::Lower>() * z;
}

Vector CovarianceFactor::solve_lower(const Vector& b) const {
  if (b.size() != dim_) throw ContractError("CovarianceFactor::solve_lower: dimension mismatch");
  if (diagonal_) return b.cwiseQuotient(scale_);
  return lower_.triangularView<Eigen::Lower>().solve(b);
}

double CovarianceFactor::quad_form_inv(const Vector& x) const {
  return solve_lower(x).squaredNorm();
}

CovarianceFactor CovarianceFactor::scaled(double s) const {
  if (!(s > 0.0)) throw ContractError("CovarianceFactor::scaled: factor must be positive");
  CovarianceFactor f(*this);
  const double r = std::sqrt(s);
  if (diagonal_)
    f.scale_ *= r;
  else
    f.lower_ *= r;
  return f;
}

Matrix CovarianceFactor::lower() const {
  if (diagonal_) return scale_.asDiagonal();
  return lower_;
}

}  // namespace slicebench
