#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <vector>

#include "grunsky/families.hpp"

namespace grunsky {

/// One row of the Teichmueller-disk comparison at disk parameter r:
///   lower = alpha * r            (the abelian lower bound at the parameter)
///   upper = r (r + alpha) / (1 + alpha r)   (the Golusin-side envelope)
/// residual_theorem1 = kappa_N - alpha * r is reported, never asserted: the
/// truncated norm is published against both candidate endpoints and the data
/// decides which one it approaches.
struct VerificationRow {
  double r = 0.0;
  double kappa = 0.0;
  double alpha = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double residual_theorem1 = 0.0;
  double residual_upper = 0.0;
  bool sandwich_ok = false;
};

struct VerificationReport {
  std::vector<VerificationRow> rows;
  int N = 0;
  FamilySpec family;
  bool all_sandwich_ok() const;
};

/// Lower-bound sample of the envelope metric lambda_kappa(r) =
/// sup_x |h_x'(r)| / (1 - |h_x(r)|^2) over unit vectors x; produced by an
/// optimizer, so lambda_est never exceeds the true supremum by construction.
struct MetricSample {
  double r = 0.0;
  double lambda_est = 0.0;
  Eigen::VectorXcd achieving_x;
  int optimizer_budget = 0;
};

struct GolusinResult {
  bool ok = false;
  double worst_margin = 0.0;  // max over the grid of |g(t)| - bound(t)
  int order = 0;              // estimated vanishing order m
  Complex leading{0.0};       // estimated leading coefficient c_m
  bool degenerate = false;    // g identically ~0; bound holds vacuously
};

struct Lemma4Result {
  double r_max = 0.0;
  int grid_size = 0;
  int N = 0;
  double lhs = 0.0;  // atanh(kappa_N at r_max)
  double rhs = 0.0;  // Simpson integral of lambda_kappa over [0, r_max]
  double residual = 0.0;
  std::vector<std::pair<double, double>> nodes;  // (t, lambda_est)
};

struct FredholmResult {
  bool circle = false;     // kappa ~ 0; rho = infinity (only for the circle)
  double rho = 0.0;        // 1/kappa_N; an upper bound for rho_L since the
                           // truncations approach kappa from below
  double kappa = 0.0;
  std::optional<double> rho_abelian;  // 1/alpha for catalog families
};

/// Weighted bilinear form x^T G(f_t) x at the family member; x must be a unit
/// vector within 1e-10.
Complex h_eval(const FamilySpec& family, const Eigen::VectorXcd& x, int N,
               const NormOptions& options = {});

/// Golusin bound |g(t)| <= |t|^m (|t| + |c_m|)/(1 + |c_m| |t|) for a
/// holomorphic g: D -> D vanishing at 0. The order m comes from the log-log
/// slope over t in {1e-3, 2e-3} and c_m from Richardson extrapolation; the
/// bound is then checked on the grid within 1e-8.
GolusinResult golusin_check_function(const std::function<Complex(double)>& g,
                                     const std::vector<double>& t_grid);

/// Same check for g(t) = h_x(f_t) along the family (the t stored in `family`
/// is ignored; the grid supplies the parameters).
GolusinResult golusin_bound_check(const FamilySpec& family, const Eigen::VectorXcd& x,
                                  const std::vector<double>& t_grid, int N);

inline std::vector<double> default_t_grid() {
  return {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8};
}

/// Confronts kappa_N with the abelian bound along the Teichmueller disk of
/// the family at real positive parameters (phase invariance is a separate
/// property). Magnitudes must lie in (0, 0.95].
VerificationReport verify_theorem1(const FamilySpec& family,
                                   const std::vector<double>& t_magnitudes, int N,
                                   const NormOptions& options = {});

/// Envelope metric at r: maximizes |h_x'(r)|/(1 - |h_x(r)|^2) over the top
/// Takagi vectors at r and r +- step, `budget` random unit vectors, and 32
/// steps of sphere-projected gradient ascent from the best candidate. The
/// derivative is a central difference with step 1e-4 (1 - r). r = 0 is
/// admitted (used by the integrated check).
MetricSample metric_lambda_kappa(const FamilySpec& family, double r, int N, int budget,
                                 std::uint64_t seed = 0);

/// Integrated form: atanh(kappa_N(r_max)) against the composite-Simpson
/// integral of lambda_kappa over [0, r_max]. r_max <= 0.8, grid_size >= 16
/// (rounded up to even).
Lemma4Result lemma4_check(const FamilySpec& family, double r_max, int grid_size, int N,
                          int budget = 256, std::uint64_t seed = 0);

/// First Fredholm eigenvalue via Kuehnau-Schiffer reciprocity rho = 1/kappa.
FredholmResult fredholm_eigenvalue(const LaurentMap& map, int N,
                                   const NormOptions& options = {});

/// Family overload also reports the abelian-side estimate 1/(alpha at the
/// extremal coefficient of the member).
FredholmResult fredholm_eigenvalue(const FamilySpec& family, int N,
                                   const NormOptions& options = {});

}  // namespace grunsky
