#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "slicebench/errors.hpp"
#include "slicebench/math/rng.hpp"
#include "slicebench/targets/assumption.hpp"
#include "slicebench/targets/catalog.hpp"
#include "slicebench/targets/logistic_data.hpp"
#include "slicebench/targets/target_model.hpp"

using namespace slicebench;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Vector vec2(double a, double b) {
  Vector v(2);
  v << a, b;
  return v;
}

Vector vec3(double a, double b, double c) {
  Vector v(3);
  v << a, b, c;
  return v;
}

// Random dataset with unit-norm feature rows (keeps the analytic envelope
// bound sound: sum ||xi_i|| = N <= 2 N min ||xi_i||).
LogisticData random_unit_logistic(int n, int d, RngStream& rng) {
  Matrix features(n, d);
  std::vector<int> labels;
  for (int i = 0; i < n; ++i) {
    Vector row = standard_normal_vector(d, rng);
    features.row(i) = row / row.norm();
    labels.push_back(rng.uniform01() < 0.5 ? -1 : 1);
  }
  return LogisticData(features, labels);
}

}  // namespace

TEST_CASE("gaussian log density basics") {
  const GaussianLogDensity iso(vec2(0, 0), Matrix::Identity(2, 2));
  CHECK(iso(vec2(0, 0)) == 0.0);
  CHECK(iso(vec2(1, 1)) == doctest::Approx(-1.0));

  Matrix sigma(2, 2);
  sigma << 4, 0, 0, 1;
  const GaussianLogDensity stretched(vec2(0, 0), sigma);
  CHECK(stretched(vec2(2, 0)) == doctest::Approx(-0.5));

  const GaussianLogDensity centered(vec2(3, -1), Matrix::Identity(2, 2));
  CHECK(centered(vec2(3, -1)) == 0.0);

  Matrix indefinite(2, 2);
  indefinite << 1, 2, 2, 1;
  CHECK_THROWS_AS(GaussianLogDensity(vec2(0, 0), indefinite), FactorizationError);
}

TEST_CASE("volcano log density is the Euclidean norm") {
  CHECK(log_rho_volcano(Vector::Zero(3)) == 0.0);
  CHECK(log_rho_volcano(vec2(3, 4)) == doctest::Approx(5.0));
  CHECK(log_rho_volcano(vec3(1, 2, 2)) == doctest::Approx(3.0));
}

TEST_CASE("double banana handles the zero-density region") {
  CHECK(log_rho_double_banana(vec2(0, 0)) == -kInf);  // r = 1, F = 0
  CHECK(log_rho_double_banana(vec2(1, 1)) == -kInf);  // r = 0
  const double v = log_rho_double_banana(vec2(-1, 1));
  CHECK(std::abs(v - (-3.67337)) < 1e-5);
  // direct substitution with the same formula
  const double f = std::log(4.0);
  CHECK(v == doctest::Approx(1.0 - std::abs(5.0 - std::log(f))));
  Vector bad(3);
  bad.setZero();
  CHECK_THROWS_AS(log_rho_double_banana(bad), ContractError);
}

TEST_CASE("logistic log density examples") {
  RngStream rng(101, 0);
  const auto data = random_unit_logistic(7, 3, rng);
  CHECK(log_rho_logistic(Vector::Zero(3), data) == doctest::Approx(-7.0 * std::log(2.0)));

  Matrix xi(1, 1);
  xi << 1.0;
  const LogisticData one(xi, {1});
  Vector x(1);
  x << 40.0;
  CHECK(std::abs(log_rho_logistic(x, one)) < 1e-15);  // saturated sigmoid
}

TEST_CASE("logistic log density stays inside its analytic envelope") {
  RngStream rng(102, 0);
  const auto data = random_unit_logistic(5, 3, rng);
  const double n = data.count();
  const double beta = 2.0 * n * data.min_feature_norm();
  for (int i = 0; i < 500; ++i) {
    const Vector x = 10.0 * standard_normal_vector(3, rng);
    const double v = log_rho_logistic(x, data);
    CHECK(v <= 0.0);
    CHECK(v >= -beta * x.norm() - n * std::log(2.0) - 1e-12);
  }
}

TEST_CASE("student t log density") {
  const StudentTLogDensity at_center(3.0, vec2(1, 2), Matrix::Identity(2, 2));
  CHECK(at_center(vec2(1, 2)) == 0.0);

  Matrix one(1, 1);
  one << 1.0;
  Vector zero1(1), x(1);
  zero1 << 0.0;
  x << std::sqrt(2.0);
  const StudentTLogDensity t2(2.0, zero1, one);
  CHECK(std::abs(t2(x) - (-1.03972)) < 1e-5);
  CHECK(t2(x) == doctest::Approx(-1.5 * std::log(2.0)));

  CHECK_THROWS_AS(StudentTLogDensity(1.0, zero1, one), ContractError);
  CHECK_THROWS_AS(StudentTLogDensity(0.5, zero1, one), ContractError);
}

TEST_CASE("tail_shift pointwise values and prior rescaling") {
  const auto volcano = make_volcano_target(2);
  const auto shifted = tail_shift(volcano, 0.5);

  const Vector x = vec2(2, 0);  // ||x|| = 2
  CHECK(shifted.log_rho(x) == doctest::Approx(1.0));  // 2 - 0.25 * 4

  // prior covariance becomes (1 - eps)^{-1} I = 2 I
  CHECK(shifted.prior().lower()(0, 0) == doctest::Approx(std::sqrt(2.0)));
  CHECK(shifted.prior().quad_form_inv(x) == doctest::Approx(2.0));

  // eps -> 0 limit approaches the original log rho
  const auto barely = tail_shift(volcano, 1e-12);
  RngStream rng(103, 0);
  for (int i = 0; i < 50; ++i) {
    const Vector z = 5.0 * standard_normal_vector(2, rng);
    CHECK(std::abs(barely.log_rho(z) - volcano.log_rho(z)) < 1e-9);
  }

  CHECK_THROWS_AS(tail_shift(volcano, 0.0), ContractError);
  CHECK_THROWS_AS(tail_shift(volcano, 1.0), ContractError);
  CHECK_THROWS_AS(tail_shift(volcano, -0.5), ContractError);
}

TEST_CASE("tail_shift leaves the represented posterior unchanged") {
  RngStream rng(104, 0);

  // dense prior and dense likelihood covariance for generality
  Matrix prior_cov(2, 2);
  prior_cov << 2.0, 0.6, 0.6, 1.0;
  Matrix sigma(2, 2);
  sigma << 1.5, -0.3, -0.3, 0.8;
  const TargetModel dense("dense-gaussian", 2, CovarianceFactor::cholesky(prior_cov),
                          [g = GaussianLogDensity(vec2(1, -1), sigma)](const Vector& x) {
                            return g(x);
                          });

  for (const double eps : {0.2, 0.5, 0.9}) {
    const auto shifted = tail_shift(dense, eps);
    const Vector ref = standard_normal_vector(2, rng);
    const double offset = dense.log_lebesgue(ref) - shifted.log_lebesgue(ref);
    for (int i = 0; i < 100; ++i) {
      const Vector x = 4.0 * standard_normal_vector(2, rng);
      const double diff = dense.log_lebesgue(x) - shifted.log_lebesgue(x);
      CHECK(std::abs(diff - offset) < 1e-9);
    }
  }

  const auto volcano = make_volcano_target(3);
  const auto shifted = tail_shift(volcano, 0.5);
  const double offset =
      volcano.log_lebesgue(Vector::Ones(3)) - shifted.log_lebesgue(Vector::Ones(3));
  for (int i = 0; i < 100; ++i) {
    const Vector x = 4.0 * standard_normal_vector(3, rng);
    CHECK(std::abs(volcano.log_lebesgue(x) - shifted.log_lebesgue(x) - offset) < 1e-9);
  }
}

TEST_CASE("catalog shifted targets match generic tail_shift") {
  RngStream rng(105, 0);
  const auto volcano = make_volcano_target(4);
  const auto generic = tail_shift(volcano, 0.3);
  const auto direct = make_volcano_shifted_target(4, 0.3);
  for (int i = 0; i < 200; ++i) {
    const Vector x = 6.0 * standard_normal_vector(4, rng);
    CHECK(generic.log_rho(x) == doctest::Approx(direct.log_rho(x)).epsilon(1e-12));
    CHECK(generic.prior_quad(x) == doctest::Approx(direct.prior_quad(x)).epsilon(1e-12));
  }

  const auto data = random_unit_logistic(6, 3, rng);
  const auto logistic = make_logistic_target(data);
  const auto generic_log = tail_shift(logistic, 0.4);
  const auto direct_log = make_logistic_shifted_target(data, 0.4);
  for (int i = 0; i < 200; ++i) {
    const Vector x = 6.0 * standard_normal_vector(3, rng);
    CHECK(generic_log.log_rho(x) == doctest::Approx(direct_log.log_rho(x)).epsilon(1e-12));
  }
}

TEST_CASE("shifted logistic respects the two-sided density envelope") {
  RngStream rng(106, 0);
  const auto data = random_unit_logistic(5, 3, rng);
  const double eps = 0.5;
  const auto shifted = make_logistic_shifted_target(data, eps);
  const double n = data.count();
  const double beta = 2.0 * n * data.min_feature_norm();
  for (int i = 0; i < 500; ++i) {
    const Vector x = 8.0 * standard_normal_vector(3, rng);
    const double r = x.norm();
    const double v = shifted.log_rho(x);
    const double upper = -0.5 * eps * r * r;
    const double lower = upper - beta * r - n * std::log(2.0);
    CHECK(v <= upper + 1e-12);
    CHECK(v >= lower - 1e-12);
  }
}

TEST_CASE("catalog log densities are consistent with their closed forms") {
  RngStream rng(107, 0);
  const auto data = random_unit_logistic(4, 3, rng);
  Matrix sigma(2, 2);
  sigma << 2.0, 0.5, 0.5, 1.0;

  const auto gaussian = make_gaussian_target(vec2(1, 1), sigma);
  const auto volcano = make_volcano_target(3);
  const auto banana = make_double_banana_target();
  const auto logistic = make_logistic_target(data);
  const auto student = make_student_t_target(3.0, vec2(0.5, -0.5), Matrix::Identity(2, 2));
  const CovarianceFactor sigma_factor = CovarianceFactor::cholesky(sigma);

  for (int i = 0; i < 1000; ++i) {
    const Vector x2 = 3.0 * standard_normal_vector(2, rng);
    const Vector x3 = 3.0 * standard_normal_vector(3, rng);

    CHECK(gaussian.log_rho(x2) ==
          doctest::Approx(-0.5 * sigma_factor.quad_form_inv(x2 - vec2(1, 1))).epsilon(1e-12));
    CHECK(volcano.log_rho(x3) == doctest::Approx(x3.norm()).epsilon(1e-12));

    const double r =
        (1 - x2[0]) * (1 - x2[0]) + 100.0 * (x2[1] - x2[0] * x2[0]) * (x2[1] - x2[0] * x2[0]);
    const double banana_direct =
        r <= 1.0 ? -kInf : 0.5 * x2.squaredNorm() - std::abs(5.0 - std::log(std::log(r)));
    if (std::isinf(banana_direct))
      CHECK(banana.log_rho(x2) == -kInf);
    else
      CHECK(banana.log_rho(x2) == doctest::Approx(banana_direct).epsilon(1e-12));

    double logit_direct = 0.0;
    for (int k = 0; k < data.count(); ++k) {
      const double m = data.labels()[k] * data.features().row(k).dot(x3);
      logit_direct -= std::log(1.0 + std::exp(-m));  // safe at this scale
    }
    CHECK(logistic.log_rho(x3) == doctest::Approx(logit_direct).epsilon(1e-9));

    const Vector c = x2 - vec2(0.5, -0.5);
    CHECK(student.log_rho(x2) ==
          doctest::Approx(-2.5 * std::log(1.0 + c.squaredNorm() / 3.0)).epsilon(1e-12));
  }
}

TEST_CASE("volcano radial profile matches the posterior and solves level sets") {
  const auto volcano = make_volcano_target(3);
  REQUIRE(volcano.radial_profile().has_value());
  const auto& profile = *volcano.radial_profile();

  RngStream rng(108, 0);
  const double offset =
      volcano.log_lebesgue(Vector::Ones(3)) - profile.log_density(Vector::Ones(3).norm());
  for (int i = 0; i < 100; ++i) {
    const Vector x = 3.0 * standard_normal_vector(3, rng);
    CHECK(std::abs(volcano.log_lebesgue(x) - profile.log_density(x.norm()) - offset) < 1e-12);
  }

  const auto [lo0, hi0] = profile.level_set(0.0);
  CHECK(lo0 == doctest::Approx(0.0));
  CHECK(hi0 == doctest::Approx(2.0));
  const auto [lo_mode, hi_mode] = profile.level_set(0.5);
  CHECK(lo_mode == doctest::Approx(1.0));
  CHECK(hi_mode == doctest::Approx(1.0));
  const auto [lo_neg, hi_neg] = profile.level_set(-1.5);
  CHECK(lo_neg == 0.0);
  CHECK(hi_neg == doctest::Approx(3.0));  // roots of r - r^2/2 = -1.5
}

TEST_CASE("closed-form level-set constants") {
  // Gaussian: Sigma = I, ||x0|| = 2
  const auto g = gaussian_assumption_bounds(Matrix::Identity(2, 2), vec2(2, 0));
  CHECK(g.R == doctest::Approx(8.0));
  CHECK(g.alpha == doctest::Approx(0.5));

  // decreasing radial tail, Euclidean norm, centered: R' = 2
  const auto v = radial_tail_assumption_bounds(2.0, 1.0, 1.0, 0.0);
  CHECK(v.R == doctest::Approx(2.0));
  CHECK(v.alpha == doctest::Approx(0.5));

  // tail-shifted logistic: eps = 0.5, N = 1, ||xi_1|| = 1
  Matrix xi(1, 2);
  xi << 0.6, 0.8;
  const LogisticData one(xi, {1});
  const auto l = shifted_logistic_assumption_bounds(0.5, one);
  CHECK(l.R == doctest::Approx(8.0));
  CHECK(l.alpha == doctest::Approx(0.25));

  // centered exponential-family formula floors R at 1e-6
  const auto e = exp_family_assumption_bounds(1.0, 2.0, 0.0);
  CHECK(e.R == doctest::Approx(1e-6));
  CHECK(e.alpha == doctest::Approx(0.25));

  // catalog targets carry their constants
  CHECK(make_gaussian_target(vec2(2, 0), Matrix::Identity(2, 2)).assumption_constants()->R ==
        doctest::Approx(8.0));
  CHECK(make_volcano_shifted_target(3, 1.0).assumption_constants()->R == doctest::Approx(2.0));
  CHECK(make_volcano_shifted_target(3, 0.5).assumption_constants()->R == doctest::Approx(4.0));
  CHECK(!make_volcano_target(3).assumption_constants().has_value());
}

TEST_CASE("level-set audit passes for centered gaussian and catalog constants") {
  RngStream rng(109, 0);
  const auto centered = make_gaussian_target(Vector::Zero(2), Matrix::Identity(2, 2));
  const auto report = check_assumption1(centered, 1.0, 0.5, 100, 100, rng);
  CHECK(report.passed);
  CHECK(report.probes_run == 100 * 100);
  CHECK(!report.counterexample.has_value());

  // anisotropic, off-center gaussian at its own closed-form constants
  Matrix sigma(2, 2);
  sigma << 2.0, 0.0, 0.0, 0.5;
  const auto gaussian = make_gaussian_target(vec2(1, 1), sigma);
  const auto& constants = *gaussian.assumption_constants();
  RngStream rng2(109, 1);
  const auto report2 = check_assumption1(gaussian, constants.R, constants.alpha, 200, 500, rng2);
  CHECK(report2.passed);
  CHECK(report2.probes_run == 200 * 500);
}

TEST_CASE("level-set audit fails for the raw volcano with a valid counterexample") {
  RngStream rng(110, 0);
  const auto volcano = make_volcano_target(3);
  const double R = 2.0, alpha = 0.5;
  const auto report = check_assumption1(volcano, R, alpha, 50, 50, rng);
  REQUIRE(!report.passed);
  REQUIRE(report.counterexample.has_value());
  const auto& ce = *report.counterexample;
  CHECK(ce.x.norm() > R);
  CHECK(ce.y.norm() <= alpha * ce.x.norm() + 1e-12);
  CHECK(ce.log_rho_y < ce.log_rho_x);
  CHECK(volcano.log_rho(ce.y) == ce.log_rho_y);
  CHECK(volcano.log_rho(ce.x) == ce.log_rho_x);
}

TEST_CASE("level-set audit accepts the shifted members") {
  RngStream rng(111, 0);
  // full-shift volcano at the closed-form constants (R = 2, alpha = 1/2)
  const auto full = make_volcano_shifted_target(3, 1.0);
  const auto& c_full = *full.assumption_constants();
  CHECK(check_assumption1(full, c_full.R, c_full.alpha, 100, 200, rng).passed);

  // tail-shifted logistic at its constants
  RngStream rng2(111, 1);
  const auto data = random_unit_logistic(4, 3, rng2);
  const auto shifted = make_logistic_shifted_target(data, 0.5);
  const auto& c_log = *shifted.assumption_constants();
  RngStream rng3(111, 2);
  CHECK(check_assumption1(shifted, c_log.R, c_log.alpha, 100, 200, rng3).passed);
}

TEST_CASE("audit argument contracts") {
  RngStream rng(112, 0);
  const auto volcano = make_volcano_target(2);
  CHECK_THROWS_AS(check_assumption1(volcano, 0.0, 0.5, 10, 10, rng), ContractError);
  CHECK_THROWS_AS(check_assumption1(volcano, 1.0, -0.1, 10, 10, rng), ContractError);
  CHECK_THROWS_AS(check_assumption1(volcano, 1.0, 0.5, 0, 10, rng), ContractError);
}

TEST_CASE("logistic CSV loading") {
  {
    std::istringstream in("x1,x2,label\n0.5,1.0,1\n-0.25,2.0,-1\n1.5,0,+1\n");
    const auto data = LogisticData::parse_csv(in, "mem");
    CHECK(data.count() == 3);
    CHECK(data.dim() == 2);
    CHECK(data.features()(1, 0) == doctest::Approx(-0.25));
    CHECK(data.labels()[0] == 1);
    CHECK(data.labels()[1] == -1);
    CHECK(data.labels()[2] == 1);
  }
  {  // label outside {-1, +1}
    std::istringstream in("x1,label\n1.0,0\n");
    CHECK_THROWS_WITH_AS(LogisticData::parse_csv(in, "mem"), doctest::Contains("mem:2"),
                         ContractError);
  }
  {  // ragged row
    std::istringstream in("x1,x2,label\n1.0,1\n");
    CHECK_THROWS_WITH_AS(LogisticData::parse_csv(in, "mem"), doctest::Contains("columns"),
                         ContractError);
  }
  {  // unparseable feature
    std::istringstream in("x1,label\nabc,1\n");
    CHECK_THROWS_AS(LogisticData::parse_csv(in, "mem"), ContractError);
  }
  {  // missing header / empty
    std::istringstream in("");
    CHECK_THROWS_AS(LogisticData::parse_csv(in, "mem"), ContractError);
  }
  {  // file round trip
    const std::string path = "test_logistic_data.csv";
    {
      std::ofstream out(path);
      out << "x1,x2,x3,label\n";
      out << "1,0,0,1\n0,1,0,-1\n";
    }
    const auto data = LogisticData::load_csv(path);
    CHECK(data.count() == 2);
    CHECK(data.dim() == 3);
    CHECK(data.min_feature_norm() == doctest::Approx(1.0));
    std::remove(path.c_str());
  }
}

TEST_CASE("target model contracts") {
  const auto volcano = make_volcano_target(2);
  Vector x3(3);
  x3.setZero();
  CHECK_THROWS_AS(volcano.log_rho(x3), ContractError);
  CHECK_THROWS_AS(make_volcano_shifted_target(2, 0.0), ContractError);
  CHECK_THROWS_AS(make_volcano_shifted_target(2, 1.5), ContractError);
  CHECK_THROWS_AS(
      make_logistic_shifted_target(LogisticData(Matrix::Identity(2, 2), {1, -1}), 1.0),
      ContractError);
}
