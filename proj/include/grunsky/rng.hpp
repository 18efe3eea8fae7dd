#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace grunsky {

// Deterministic generator for reproducible reports. Normal deviates are
// produced by hand (Box-Muller on bit-exact uniforms) because
// std::normal_distribution's stream is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform01();  // (0, 1]
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  std::complex<double> complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re, im};
  }

  Eigen::VectorXcd unit_vector(int n) {
    Eigen::VectorXcd x(n);
    for (int i = 0; i < n; ++i) x(i) = complex_normal();
    const double norm = x.norm();
    return norm > 0 ? Eigen::VectorXcd(x / norm) : unit_vector(n);
  }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace grunsky
