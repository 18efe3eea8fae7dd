#include "grunsky/grunsky.hpp"

#include <algorithm>
#include <cmath>

#include "grunsky/errors.hpp"

namespace grunsky {

LaurentMap LaurentMap::padded(int min_tail) const {
  LaurentMap out = *this;
  if (min_tail > K()) out.tail.resize(static_cast<size_t>(min_tail), Complex(0.0));
  return out;
}

Complex LaurentMap::evaluate(Complex z) const {
  const Complex u = Complex(1.0) / z;
  Complex acc(0.0);
  for (int k = K(); k >= 1; --k) acc = (acc + b(k)) * u;
  return z + b0 + acc;
}

GrunskyTable grunsky_coefficients(const LaurentMap& map, int N) {
  if (N < 1) throw ValidationError("grunsky_coefficients: N must be >= 1");
  const int required = 2 * N - 1;
  if (map.K() < required) {
    throw ValidationError(detail::str(
        "grunsky_coefficients: tail has K = ", map.K(), " coefficients but N = ", N,
        " requires K >= ", required));
  }

  // (f(z)-f(zeta))/(z-zeta) in u = 1/z, v = 1/zeta:
  //   F(u,v) = 1 - sum_{k>=1} b_k sum_{j=0}^{k-1} u^{k-j} v^{j+1},
  // an exact rewriting in which b0 cancels. alpha_{mn} = -[u^m v^n] log F.
  BivariateSeries F = BivariateSeries::one(N);
  for (int k = 1; k <= std::min(map.K(), required); ++k) {
    const Complex bk = map.b(k);
    if (bk == Complex(0.0)) continue;
    for (int j = 0; j < k; ++j) {
      const int mp = k - j;
      const int np = j + 1;
      if (mp <= N && np <= N) F.at(mp, np) -= bk;
    }
  }
  const BivariateSeries L = bivar_log(F);

  GrunskyTable table;
  table.alpha = Eigen::MatrixXcd::Zero(N, N);
  for (int m = 1; m <= N; ++m)
    for (int n = 1; n <= N; ++n) table.alpha(m - 1, n - 1) = -L.at(m, n);
  // The construction is symmetric up to summation order; make it exact.
  table.alpha = ((table.alpha + table.alpha.transpose()) / 2.0).eval();
  return table;
}

GrunskyTable grunsky_coefficients(const TaylorMap& map, int N) {
  if (N < 1) throw ValidationError("grunsky_coefficients: N must be >= 1");
  const int required = 2 * N + 1;
  if (map.K() < required) {
    throw ValidationError(detail::str(
        "grunsky_coefficients: Taylor map has K = ", map.K(),
        " coefficients but N = ", N, " requires K >= ", required));
  }
  if (map.coeffs[0] != Complex(1.0)) {
    throw ValidationError("grunsky_coefficients: Taylor map must be normalized (a_1 = 1)");
  }

  // (F(z)-F(zeta))/(z-zeta) = sum_{j>=1} a_j sum_{i=0}^{j-1} z^i zeta^{j-1-i}.
  BivariateSeries C(N);
  for (int j = 1; j <= required; ++j) {
    const Complex aj = map.coeffs[static_cast<size_t>(j - 1)];
    if (aj == Complex(0.0)) continue;
    for (int i = 0; i < j; ++i) {
      const int mp = i;
      const int np = j - 1 - i;
      if (mp <= N && np <= N) C.at(mp, np) += aj;
    }
  }
  const BivariateSeries L = bivar_log(C);

  GrunskyTable table;
  table.alpha = Eigen::MatrixXcd::Zero(N, N);
  for (int m = 1; m <= N; ++m)
    for (int n = 1; n <= N; ++n) table.alpha(m - 1, n - 1) = -L.at(m, n);
  table.alpha = ((table.alpha + table.alpha.transpose()) / 2.0).eval();
  return table;
}

GrunskyMatrix grunsky_matrix(const GrunskyTable& table) {
  const int N = table.N();
  GrunskyMatrix matrix;
  matrix.entries = Eigen::MatrixXcd::Zero(N, N);
  for (int m = 1; m <= N; ++m)
    for (int n = 1; n <= N; ++n)
      matrix.entries(m - 1, n - 1) =
          std::sqrt(static_cast<double>(m) * static_cast<double>(n)) *
          table.alpha(m - 1, n - 1);
  return matrix;
}

double ConvergenceReport::max_kappa() const {
  double m = 0.0;
  for (const auto& row : rows) m = std::max(m, row.kappa);
  return m;
}

ConvergenceReport grunsky_norm(const LaurentMap& map, std::vector<int> n_list,
                               const NormOptions& options) {
  if (n_list.empty()) throw ValidationError("grunsky_norm: empty N list");
  std::sort(n_list.begin(), n_list.end());
  n_list.erase(std::unique(n_list.begin(), n_list.end()), n_list.end());
  if (n_list.front() < 1) throw ValidationError("grunsky_norm: N values must be >= 1");
  const int n_max = n_list.back();
  if (map.K() < 2 * n_max - 1) {
    throw ValidationError(detail::str(
        "grunsky_norm: tail has K = ", map.K(), " coefficients but N = ", n_max,
        " requires K >= ", 2 * n_max - 1));
  }

  ConvergenceReport report;
  for (const int N : n_list) {
    const auto norm =
        symmetric_bilinear_norm(grunsky_matrix(grunsky_coefficients(map, N)).entries,
                                options);
    report.rows.push_back({N, norm.sigma, norm.residual, norm.converged});
    if (norm.sigma > 1.0 + 1e-12) report.univalence_violated = true;
  }
  for (size_t i = 1; i < report.rows.size(); ++i) {
    if (report.rows[i].kappa < report.rows[i - 1].kappa - 1e-10) {
      throw InvariantViolation(detail::str(
          "grunsky_norm: kappa_N decreased along the ladder (kappa_",
          report.rows[i - 1].N, " = ", report.rows[i - 1].kappa, " > kappa_",
          report.rows[i].N, " = ", report.rows[i].kappa, ")"));
    }
  }
  return report;
}

bool qc_bound_check(const ConvergenceReport& report, double k) {
  if (!(k >= 0.0 && k < 1.0)) {
    throw ValidationError(detail::str("qc_bound_check: k must lie in [0,1), got ", k));
  }
  return report.max_kappa() <= k + 1e-9;
}

TaylorMap inversion_map(const LaurentMap& map, int K) {
  if (K < 1) throw ValidationError("inversion_map: K must be >= 1");
  // 1/f(1/z) = z / (1 + b0 z + sum_k b_k z^{k+1}); the denominator has
  // constant term 1, so the series reciprocal exists.
  UnivariateSeries g(K - 1);
  g[0] = Complex(1.0);
  if (K - 1 >= 1) g[1] = map.b0;
  for (int k = 1; k <= map.K() && k + 1 <= K - 1; ++k) g[k + 1] = map.b(k);

  const UnivariateSeries inv = g.reciprocal();
  TaylorMap out;
  out.coeffs.assign(inv.coeffs().begin(), inv.coeffs().end());
  return out;
}

}  // namespace grunsky
