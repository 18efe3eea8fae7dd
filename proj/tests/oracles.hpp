#pragma once

// Test-only oracles, kept independent of the implementation paths they check.

#include <cmath>

#include "grunsky/grunsky.hpp"
#include "grunsky/series.hpp"

namespace grunsky::testing {

// Series exponential sum_k w^k / k! for w with zero constant term; terminates
// inside the box like the log does. Used for the exp(log a) = a round trip.
inline BivariateSeries bivar_exp(const BivariateSeries& w) {
  const int D = w.degree_bound();
  BivariateSeries result = BivariateSeries::one(D);
  BivariateSeries power = w;
  double factorial = 1.0;
  for (int k = 1; k <= 2 * D; ++k) {
    factorial *= static_cast<double>(k);
    if (power.is_identically_zero()) break;
    for (int m = 0; m <= D; ++m)
      for (int n = 0; n <= D; ++n) result.at(m, n) += power.at(m, n) / factorial;
    if (k < 2 * D) power = bivar_mul(power, w);
  }
  return result;
}

// Derivatives of an analytic function from four axis points z +- h, z +- ih
// (plus the center for f''), each O(h^4) with small constants:
//   f'   = (A + B) / (2h),        A = (f(z+h) - f(z-h))/2, B = (f(z+ih) - f(z-ih))/(2i)
//   f''  = (S - T) / (2h^2),      S = f(z+h) + f(z-h),     T = f(z+ih) + f(z-ih)
//   f''' = 3 (A - B) / h^3
// A Richardson step (16 D(h/2) - D(h))/15 removes the h^4 terms.
struct Derivatives {
  Complex f1, f2, f3;
};

template <class F>
Derivatives complex_fd_derivatives_at(F&& f, Complex z, double h) {
  const Complex i(0.0, 1.0);
  const Complex fp = f(z + h), fm = f(z - h);
  const Complex gp = f(z + i * h), gm = f(z - i * h);
  const Complex A = (fp - fm) / 2.0;
  const Complex B = (gp - gm) / (2.0 * i);
  Derivatives d;
  d.f1 = (A + B) / (2.0 * h);
  d.f2 = ((fp + fm) - (gp + gm)) / (2.0 * h * h);
  d.f3 = 3.0 * (A - B) / (h * h * h);
  return d;
}

template <class F>
Derivatives complex_fd_derivatives(F&& f, Complex z, double h) {
  const Derivatives coarse = complex_fd_derivatives_at(f, z, h);
  const Derivatives fine = complex_fd_derivatives_at(f, z, h / 2.0);
  Derivatives d;
  d.f1 = (16.0 * fine.f1 - coarse.f1) / 15.0;
  d.f2 = (16.0 * fine.f2 - coarse.f2) / 15.0;
  d.f3 = (16.0 * fine.f3 - coarse.f3) / 15.0;
  return d;
}

// Finite-difference Schwarzian of a Laurent map, fully independent of the
// term-wise derivative path.
inline Complex schwarzian_fd_oracle(const LaurentMap& map, Complex z) {
  const double h = std::min(0.05, 0.05 * (std::abs(z) - 1.0));
  const auto d = complex_fd_derivatives(
      [&map](Complex w) { return map.evaluate(w); }, z, h);
  const Complex q = d.f2 / d.f1;
  return d.f3 / d.f1 - 1.5 * q * q;
}

// Exact envelope metric of the Golusin majorant j_a(r) = r (r+a)/(1+ar):
// lambda_a(r) = j_a'(r) / (1 - j_a(r)^2).
inline double golusin_metric(double a, double r) {
  const double denom = 1.0 + a * r;
  const double j = r * (r + a) / denom;
  const double jp = ((2.0 * r + a) * denom - a * r * (r + a)) / (denom * denom);
  return jp / (1.0 - j * j);
}

}  // namespace grunsky::testing
