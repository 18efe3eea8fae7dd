#include <doctest.h>

#include "grunsky/errors.hpp"
#include "grunsky/rng.hpp"
#include "grunsky/symmetric_norm.hpp"

using namespace grunsky;

namespace {

Eigen::MatrixXcd random_symmetric(Rng& rng, int n, double scale) {
  Eigen::MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const Complex v = scale * rng.complex_normal();
      m(i, j) = v;
      m(j, i) = v;
    }
  return m;
}

}  // namespace

TEST_CASE("antidiagonal 2x2: clustered singular values") {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
  m(0, 1) = m(1, 0) = Complex(0.56569);
  const auto res = symmetric_bilinear_norm(m);
  CHECK(res.sigma == doctest::Approx(0.56569).epsilon(1e-13));
  CHECK(res.residual < 1e-12);
  CHECK(std::abs(res.argmax_x.norm() - 1.0) < 1e-12);
}

TEST_CASE("zero matrix") {
  const auto res = symmetric_bilinear_norm(Eigen::MatrixXcd::Zero(4, 4));
  CHECK(res.sigma == 0.0);
  CHECK(res.degenerate);
}

TEST_CASE("diagonal |t|^m matrix") {
  const Complex t(0.35, -0.357);  // |t| = 0.5 up to rounding
  const double mag = std::abs(t);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
  for (int k = 0; k < 4; ++k) m(k, k) = std::pow(t, k + 1);
  const auto res = symmetric_bilinear_norm(m);
  CHECK(res.sigma == doctest::Approx(mag).epsilon(1e-12));
  CHECK(res.residual < 1e-10);
}

TEST_CASE("non-symmetric input is rejected") {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
  m(0, 1) = Complex(0.3);
  m(1, 0) = Complex(0.3 + 1e-6);
  CHECK_THROWS_AS(symmetric_bilinear_norm(m), ValidationError);
}

TEST_CASE("attainment and no-exceedance on random matrices") {
  Rng rng(101);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 3 + static_cast<int>(rng.uniform01() * 10);
    const auto m = random_symmetric(rng, n, 0.5);
    const auto res = symmetric_bilinear_norm(m);

    // SVD cross-check.
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    CHECK(res.sigma == doctest::Approx(svd.singularValues()(0)).epsilon(1e-11));

    // |x^T M x| attains sigma; random unit vectors never exceed it.
    CHECK(std::abs(bilinear_form(m, res.argmax_x)) > res.sigma - 1e-10);
    for (int probe = 0; probe < 50; ++probe) {
      const auto x = rng.unit_vector(n);
      CHECK(std::abs(bilinear_form(m, x)) < res.sigma + 1e-10);
    }
  }
}

TEST_CASE("repeated singular value with phases") {
  // diag blocks with equal top singular values force the oscillating case the
  // fixed-point symmetrization must resolve.
  Rng rng(55);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(3, 3);
  m(0, 1) = m(1, 0) = std::polar(0.8, 1.1);
  m(2, 2) = std::polar(0.8, -2.0);
  const auto res = symmetric_bilinear_norm(m);
  CHECK(res.sigma == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(res.residual < 1e-10);
}
