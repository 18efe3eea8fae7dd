#pragma once

#include <complex>
#include <vector>

#include "grunsky/errors.hpp"

namespace grunsky {

using Complex = std::complex<double>;

/// Complex power series in one variable, truncated at a fixed degree bound D.
/// coeffs[j] holds the coefficient of u^j, 0 <= j <= D. Every operation is
/// exact modulo u^{D+1}.
class UnivariateSeries {
 public:
  explicit UnivariateSeries(int degree_bound);
  static UnivariateSeries one(int degree_bound);

  int degree_bound() const { return static_cast<int>(coeffs_.size()) - 1; }
  Complex operator[](int j) const { return coeffs_[static_cast<size_t>(j)]; }
  Complex& operator[](int j) { return coeffs_[static_cast<size_t>(j)]; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }

  UnivariateSeries operator+(const UnivariateSeries& rhs) const;
  UnivariateSeries operator-(const UnivariateSeries& rhs) const;
  UnivariateSeries operator*(const UnivariateSeries& rhs) const;

  /// Multiplicative inverse modulo u^{D+1}; the constant term must be nonzero.
  UnivariateSeries reciprocal() const;

 private:
  std::vector<Complex> coeffs_;
};

/// Binomial series (1+u)^gamma on the principal branch, first coeff_count
/// coefficients. The constant term is exactly 1 for every gamma.
UnivariateSeries series_binomial(double gamma, int coeff_count);

/// Complex power series in two variables with box truncation: coefficients
/// c[m][n] of u^m v^n for 0 <= m, n <= D. Arithmetic is exact modulo the box
/// (not total degree), so a product keeps every monomial with both exponents
/// inside the box.
class BivariateSeries {
 public:
  explicit BivariateSeries(int degree_bound);
  static BivariateSeries one(int degree_bound);

  int degree_bound() const { return degree_bound_; }
  Complex at(int m, int n) const { return data_[index(m, n)]; }
  Complex& at(int m, int n) { return data_[index(m, n)]; }

  bool is_identically_zero() const;
  /// Largest |c[m][n]| over the box.
  double max_abs() const;

  BivariateSeries operator+(const BivariateSeries& rhs) const;
  BivariateSeries operator-(const BivariateSeries& rhs) const;

 private:
  size_t index(int m, int n) const {
    return static_cast<size_t>(m) * static_cast<size_t>(degree_bound_ + 1) +
           static_cast<size_t>(n);
  }
  int degree_bound_;
  std::vector<Complex> data_;
};

/// Box-truncated product c[m][n] = sum_{p+q=m, r+s=n} a[p][r] b[q][s].
/// The degree bounds must match.
BivariateSeries bivar_mul(const BivariateSeries& a, const BivariateSeries& b);

/// log a via the Mercator series sum_k (-1)^{k+1} (a-1)^k / k. Requires the
/// constant term of a to be exactly 1; since a-1 then has no constant term,
/// the series terminates inside the box (k <= 2D) and the result is exact
/// modulo the box.
BivariateSeries bivar_log(const BivariateSeries& a);

}  // namespace grunsky
