#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <vector>

#include "grunsky/series.hpp"
#include "grunsky/symmetric_norm.hpp"

namespace grunsky {

/// A map f(z) = z + b0 + sum_{k=1}^{K} b_k z^{-k} of the exterior disk,
/// stored by its Laurent tail. tail[k-1] holds b_k.
struct LaurentMap {
  Complex b0{0.0};
  std::vector<Complex> tail;

  int K() const { return static_cast<int>(tail.size()); }
  Complex b(int k) const { return tail[static_cast<size_t>(k - 1)]; }

  /// Same map with the tail zero-padded to at least min_tail coefficients.
  /// Exact when the map genuinely has finitely many nonzero coefficients.
  LaurentMap padded(int min_tail) const;

  Complex evaluate(Complex z) const;
};

/// A map F(z) = a_1 z + a_2 z^2 + ... of the unit disk; coeffs[j-1] holds a_j.
/// Produced by inversion_map, where a_1 = 1.
struct TaylorMap {
  std::vector<Complex> coeffs;
  int K() const { return static_cast<int>(coeffs.size()); }
};

/// Coefficients alpha_{mn}, 1 <= m, n <= N, of the double log expansion of
/// (f(z)-f(zeta))/(z-zeta). alpha(m-1, n-1) stores alpha_{mn}; exactly
/// symmetric by construction.
struct GrunskyTable {
  Eigen::MatrixXcd alpha;
  int N() const { return static_cast<int>(alpha.rows()); }
};

/// Weighted matrix G_{mn} = sqrt(mn) alpha_{mn}; complex symmetric.
struct GrunskyMatrix {
  Eigen::MatrixXcd entries;
  int N() const { return static_cast<int>(entries.rows()); }
};

struct ConvergenceRow {
  int N = 0;
  double kappa = 0.0;
  double residual = 0.0;
  bool converged = true;
};

/// Truncated Grunsky norms along a ladder of N values. kappa is nondecreasing
/// in N (nested suprema); univalence_violated is set when any kappa exceeds
/// 1 + 1e-12, which certifies that f has no univalent extension.
struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  bool univalence_violated = false;
  std::optional<double> k_bound;  // reference dilatation for the qc check

  double max_kappa() const;
};

inline std::vector<int> default_n_ladder() { return {2, 4, 8, 16, 32, 48}; }

/// Grunsky coefficients of a Laurent-tail map. Requires K >= 2N-1: the box
/// m, n <= N receives contributions from b_k up to k = 2N-1. The result does
/// not depend on b0.
GrunskyTable grunsky_coefficients(const LaurentMap& map, int N);

/// Grunsky coefficients of a disk map F(z) = z + a_2 z^2 + ... (a_1 must be
/// exactly 1). Requires K >= 2N+1 Taylor coefficients.
GrunskyTable grunsky_coefficients(const TaylorMap& map, int N);

GrunskyMatrix grunsky_matrix(const GrunskyTable& table);

/// Truncated Grunsky norm kappa_N for each requested N (deduplicated,
/// ascending). Throws InvariantViolation if the ladder fails to be
/// nondecreasing beyond 1e-10.
ConvergenceReport grunsky_norm(const LaurentMap& map, std::vector<int> n_list,
                               const NormOptions& options = {});

/// True iff max kappa_N <= k + 1e-9: the truncated necessary condition for a
/// k-quasiconformal extension. k must lie in [0, 1).
bool qc_bound_check(const ConvergenceReport& report, double k);

/// Taylor coefficients a_1..a_K of the inversion F_f(z) = 1/f(1/z), which is
/// holomorphic and univalent on the unit disk when f is zero-free; f and F_f
/// share their Grunsky coefficients.
TaylorMap inversion_map(const LaurentMap& map, int K);

}  // namespace grunsky
