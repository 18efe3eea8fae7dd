#include <doctest.h>

#include <numbers>

#include "grunsky/abelian.hpp"
#include "grunsky/errors.hpp"
#include "grunsky/rng.hpp"

using namespace grunsky;

namespace {

constexpr double kPi = std::numbers::pi;
const double kAlpha3 = 2.0 * std::sqrt(2.0) / 3.0;

BeltramiSpec rotation_term(Complex c) {
  return BeltramiSpec::polar({{c, 0.0, -1}}, std::abs(c));
}

}  // namespace

TEST_CASE("closed-form moments") {
  const double t = 0.7;
  const auto m1 = beltrami_moments(rotation_term(Complex(t)), 1);
  CHECK(std::abs(m1.M(0)) == 0.0);
  CHECK(std::abs(m1.M(1) - Complex(2.0 * kPi * t / 3.0)) < 1e-15);

  const auto constant = BeltramiSpec::polar({{Complex(t), 0.0, 0}}, t);
  const auto m2 = beltrami_moments(constant, 2);
  CHECK(std::abs(m2.M(0) - Complex(kPi * t)) < 1e-15);
  CHECK(std::abs(m2.M(1)) == 0.0);
  CHECK(std::abs(m2.M(2)) == 0.0);

  const auto zero = beltrami_moments(BeltramiSpec::zero(), 4);
  for (int p = 0; p <= 4; ++p) CHECK(std::abs(zero.M(p)) == 0.0);
}

TEST_CASE("sup_norm declaration is validated on the grid") {
  const auto lying = BeltramiSpec::polar({{Complex(0.9), 0.0, -1}}, 0.1);
  CHECK_THROWS_AS(beltrami_moments(lying, 2), ValidationError);
  CHECK_THROWS_AS(beltrami_moments(BeltramiSpec::polar({{Complex(1.5), 0.0, 0}}, 1.5), 1),
                  ValidationError);
}

TEST_CASE("sampled moments need enough angular resolution") {
  SampledBeltrami samples;
  samples.mu = [](double, double theta) { return std::polar(0.5, -theta); };
  samples.angular_nodes = 16;
  const auto spec = BeltramiSpec::sampled(samples, 0.5);
  CHECK_THROWS_AS(beltrami_moments(spec, 8), ValidationError);
}

TEST_CASE("abelian matrix at N = 2 reproduces 2 sqrt(2)/3") {
  const auto moments = beltrami_moments(rotation_term(Complex(1.0)), 2);
  const auto matrix = abelian_matrix(moments, 2);
  CHECK(std::abs(matrix.B(0, 1).real() - kAlpha3) < 1e-15);
  CHECK(std::abs(matrix.B(0, 0)) == 0.0);
  CHECK(std::abs(matrix.B(1, 1)) == 0.0);

  CHECK_THROWS_AS(abelian_matrix(moments, 4), ValidationError);
}

TEST_CASE("alpha_norm examples") {
  CHECK(alpha_norm(rotation_term(Complex(1.0)), 2).sigma ==
        doctest::Approx(kAlpha3).epsilon(1e-14));

  const auto constant = BeltramiSpec::polar({{Complex(0.7), 0.0, 0}}, 0.7);
  CHECK(alpha_norm(constant, 4).sigma == doctest::Approx(0.7).epsilon(1e-13));

  const auto zero = alpha_norm(BeltramiSpec::zero(), 4);
  CHECK(zero.sigma == 0.0);
  CHECK(zero.degenerate);
}

TEST_CASE("Teichmueller-form criterion: constant direction gives alpha = k") {
  // mu = k |psi0|/psi0 with psi0 = 1/pi is the constant k.
  const double k = 0.37;
  const auto spec = BeltramiSpec::polar({{Complex(k), 0.0, 0}}, k);
  CHECK(alpha_norm(spec, 6).sigma == doctest::Approx(k).epsilon(1e-13));
}

TEST_CASE("homogeneity of alpha_norm") {
  Rng rng(5);
  const auto base = rotation_term(Complex(0.4, 0.2));
  const double sigma = alpha_norm(base, 3).sigma;
  for (int trial = 0; trial < 4; ++trial) {
    const Complex c = std::polar(rng.uniform01(), 6.0 * rng.uniform01());
    const double scaled = alpha_norm(base.scaled(c), 3).sigma;
    CHECK(scaled == doctest::Approx(std::abs(c) * sigma).epsilon(1e-12));
  }
}

TEST_CASE("rotation covariance of alpha_norm") {
  const auto spec = BeltramiSpec::polar({{Complex(0.5, 0.3), 0.0, -1},
                                         {Complex(0.1), 1.0, -3}},
                                        0.75);
  const double base = alpha_norm(spec, 4).sigma;
  for (const double phi : {0.3, 1.7, 4.0}) {
    CHECK(std::abs(alpha_norm(spec.rotated(phi), 4).sigma - base) < 1e-12);
  }
}

TEST_CASE("quadrature moments agree with the closed form") {
  const auto specs = {
      rotation_term(Complex(0.6)),
      BeltramiSpec::polar({{Complex(0.5), 0.0, 0}}, 0.5),
      BeltramiSpec::polar({{Complex(0.3, 0.2), 0.0, -3}}, std::abs(Complex(0.3, 0.2))),
  };
  for (const auto& spec : specs) {
    const auto closed = beltrami_moments(spec, 6);
    const auto quad = beltrami_moments_quadrature(spec, 6);
    for (int p = 0; p <= 6; ++p) {
      CHECK(std::abs(closed.M(p) - quad.M(p)) < 1e-12);
    }
  }
}

TEST_CASE("extremal omega and psi for the rotation direction") {
  const int N = 2;
  const auto res = alpha_norm(rotation_term(Complex(1.0)), N);
  const auto ext = extremal_omega(res, N);
  REQUIRE_FALSE(ext.degenerate);

  // Maximizer splits evenly between the two modes.
  CHECK(std::abs(res.argmax_x(0)) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-8));
  CHECK(std::abs(res.argmax_x(1)) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-8));

  // psi is the square of a nonconstant linear polynomial.
  REQUIRE(ext.psi.size() == 3);
  CHECK(std::abs(ext.psi[0]) > 1e-3);
  CHECK(std::abs(ext.psi[2]) > 1e-3);
  CHECK(std::abs(ext.psi[1] * ext.psi[1] - 4.0 * ext.psi[0] * ext.psi[2]) < 1e-10);
  CHECK(ext.psi_a1_norm == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("extremal omega for the constant direction") {
  const int N = 4;
  const auto spec = BeltramiSpec::polar({{Complex(0.7), 0.0, 0}}, 0.7);
  const auto ext = extremal_omega(alpha_norm(spec, N), N);
  REQUIRE_FALSE(ext.degenerate);
  CHECK(std::abs(ext.omega[0]) == doctest::Approx(1.0 / std::sqrt(kPi)).epsilon(1e-10));
  for (size_t j = 1; j < ext.omega.size(); ++j) CHECK(std::abs(ext.omega[j]) < 1e-10);
  CHECK(std::abs(ext.psi[0]) == doctest::Approx(1.0 / kPi).epsilon(1e-10));
}

TEST_CASE("degenerate maximizer is flagged, never fabricated") {
  const auto ext = extremal_omega(alpha_norm(BeltramiSpec::zero(), 3), 3);
  CHECK(ext.degenerate);
  CHECK(ext.omega.empty());
}

TEST_CASE("pairing cross-checks alpha_norm") {
  const auto spec = rotation_term(Complex(1.0));
  const int N = 2;
  const auto res = alpha_norm(spec, N);
  const auto ext = extremal_omega(res, N);
  CHECK(std::abs(pairing(spec, ext.psi)) == doctest::Approx(res.sigma).epsilon(1e-8));

  CHECK(std::abs(pairing(spec, {})) == 0.0);
  const auto constant = BeltramiSpec::polar({{Complex(0.4), 0.0, 0}}, 0.4);
  CHECK(std::abs(pairing(constant, {Complex(1.0 / kPi)}) - Complex(0.4)) < 1e-12);
}
