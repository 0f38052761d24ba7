#ifndef SLICEBENCH_MATH_CHOLESKY_HPP
#define SLICEBENCH_MATH_CHOLESKY_HPP

#include "slicebench/math/rng.hpp"
#include "slicebench/types.hpp"

namespace slicebench {

// Lower-triangular factor L of a covariance matrix C = L L^T.
//
// Diagonal matrices keep only the scale vector so the d = 1000 identity-prior
// experiments avoid dense O(d^2) work per draw; dense factors store L.
class CovarianceFactor {
 public:
  // Identity covariance in dimension d.
  static CovarianceFactor identity(int dim);
  // Diagonal covariance from per-coordinate variances (all > 0).
  static CovarianceFactor diagonal(const Vector& variances);
  // Dense factorization; throws FactorizationError naming the first failing
  // pivot when C is not positive definite, ContractError when not symmetric.
  static CovarianceFactor cholesky(const Matrix& c);

  int dim() const { return dim_; }
  bool is_diagonal() const { return diagonal_; }

  // L z
  Vector apply(const Vector& z) const;
  // Solution of L r = b
  Vector solve_lower(const Vector& b) const;
  // x^T C^{-1} x = || L^{-1} x ||^2
  double quad_form_inv(const Vector& x) const;
  // L w = L * sqrt(s): factor of the covariance s * C.
  CovarianceFactor scaled(double s) const;
  // Materialized L (diagonal factors are expanded).
  Matrix lower() const;

  // L z with z standard normal from rng: a draw from N(0, C).
  Vector sample(RngStream& rng) const { return apply(standard_normal_vector(dim_, rng)); }

 private:
  CovarianceFactor() = default;

  int dim_ = 0;
  bool diagonal_ = false;
  Matrix lower_;   // used when dense
  Vector scale_;   // sqrt of variances, used when diagonal
};

// Draw from N(0, C) given its factor. Alias of factor.sample, kept as a free
// function to match the rest of the sampling vocabulary.
inline Vector sample_gaussian(const CovarianceFactor& factor, RngStream& rng) {
  return factor.sample(rng);
}

}  // namespace slicebench

#endif
