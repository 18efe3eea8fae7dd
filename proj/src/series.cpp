#include "grunsky/series.hpp"

#include <algorithm>
#include <cmath>

namespace grunsky {

namespace {

void require_same_bound(int a, int b, const char* op) {
  if (a != b) {
    throw ValidationError(
        detail::str(op, ": degree bounds differ (", a, " vs ", b, ")"));
  }
}

}  // namespace

UnivariateSeries::UnivariateSeries(int degree_bound)
    : coeffs_(static_cast<size_t>(degree_bound) + 1, Complex(0.0)) {
  if (degree_bound < 0) throw ValidationError("UnivariateSeries: negative degree bound");
}

UnivariateSeries UnivariateSeries::one(int degree_bound) {
  UnivariateSeries s(degree_bound);
  s[0] = Complex(1.0);
  return s;
}

UnivariateSeries UnivariateSeries::operator+(const UnivariateSeries& rhs) const {
  require_same_bound(degree_bound(), rhs.degree_bound(), "univariate add");
  UnivariateSeries out(degree_bound());
  for (int j = 0; j <= degree_bound(); ++j) out[j] = (*this)[j] + rhs[j];
  return out;
}

UnivariateSeries UnivariateSeries::operator-(const UnivariateSeries& rhs) const {
  require_same_bound(degree_bound(), rhs.degree_bound(), "univariate sub");
  UnivariateSeries out(degree_bound());
  for (int j = 0; j <= degree_bound(); ++j) out[j] = (*this)[j] - rhs[j];
  return out;
}

UnivariateSeries UnivariateSeries::operator*(const UnivariateSeries& rhs) const {
  require_same_bound(degree_bound(), rhs.degree_bound(), "univariate mul");
  const int D = degree_bound();
  UnivariateSeries out(D);
  for (int j = 0; j <= D; ++j) {
    Complex acc(0.0);
    for (int i = 0; i <= j; ++i) acc += (*this)[i] * rhs[j - i];
    out[j] = acc;
  }
  return out;
}

UnivariateSeries UnivariateSeries::reciprocal() const {
  const int D = degree_bound();
  const Complex lead = (*this)[0];
  if (std::abs(lead) == 0.0) {
    throw ValidationError("univariate reciprocal: vanishing leading coefficient");
  }
  UnivariateSeries out(D);
  out[0] = Complex(1.0) / lead;
  for (int j = 1; j <= D; ++j) {
    Complex acc(0.0);
    for (int i = 1; i <= j; ++i) acc += (*this)[i] * out[j - i];
    out[j] = -acc / lead;
  }
  return out;
}

UnivariateSeries series_binomial(double gamma, int coeff_count) {
  if (coeff_count < 1) throw ValidationError("series_binomial: coeff_count must be >= 1");
  UnivariateSeries s(coeff_count - 1);
  s[0] = Complex(1.0);
  Complex c(1.0);
  for (int j = 1; j < coeff_count; ++j) {
    c *= (gamma - static_cast<double>(j - 1)) / static_cast<double>(j);
    s[j] = c;
  }
  return s;
}

BivariateSeries::BivariateSeries(int degree_bound)
    : degree_bound_(degree_bound),
      data_(static_cast<size_t>(degree_bound + 1) * static_cast<size_t>(degree_bound + 1),
            Complex(0.0)) {
  if (degree_bound < 0) throw ValidationError("BivariateSeries: negative degree bound");
}

BivariateSeries BivariateSeries::one(int degree_bound) {
  BivariateSeries s(degree_bound);
  s.at(0, 0) = Complex(1.0);
  return s;
}

bool BivariateSeries::is_identically_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Complex& c) { return c == Complex(0.0); });
}

double BivariateSeries::max_abs() const {
  double m = 0.0;
  for (const Complex& c : data_) m = std::max(m, std::abs(c));
  return m;
}

BivariateSeries BivariateSeries::operator+(const BivariateSeries& rhs) const {
  require_same_bound(degree_bound_, rhs.degree_bound_, "bivariate add");
  BivariateSeries out(degree_bound_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + rhs.data_[i];
  return out;
}

BivariateSeries BivariateSeries::operator-(const BivariateSeries& rhs) const {
  require_same_bound(degree_bound_, rhs.degree_bound_, "bivariate sub");
  BivariateSeries out(degree_bound_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - rhs.data_[i];
  return out;
}

BivariateSeries bivar_mul(const BivariateSeries& a, const BivariateSeries& b) {
  require_same_bound(a.degree_bound(), b.degree_bound(), "bivar_mul");
  const int D = a.degree_bound();
  BivariateSeries out(D);
  for (int m = 0; m <= D; ++m) {
    for (int p = 0; p <= m; ++p) {
      for (int n = 0; n <= D; ++n) {
        Complex acc(0.0);
        for (int r = 0; r <= n; ++r) acc += a.at(p, r) * b.at(m - p, n - r);
        out.at(m, n) += acc;
      }
    }
  }
  return out;
}

BivariateSeries bivar_log(const BivariateSeries& a) {
  if (a.at(0, 0) != Complex(1.0)) {
    throw ValidationError("bivar_log: constant term must be exactly 1 (principal branch)");
  }
  const int D = a.degree_bound();
  BivariateSeries w = a;
  w.at(0, 0) = Complex(0.0);

  BivariateSeries result(D);
  BivariateSeries power = w;
  // w has no constant term, so w^k dies inside the box once k > 2D.
  for (int k = 1; k <= 2 * D; ++k) {
    if (power.is_identically_zero()) break;
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;
    const double inv_k = sign / static_cast<double>(k);
    for (int m = 0; m <= D; ++m)
      for (int n = 0; n <= D; ++n) result.at(m, n) += inv_k * power.at(m, n);
    if (k < 2 * D) power = bivar_mul(power, w);
  }
  return result;
}

}  // namespace grunsky
