#include "grunsky/verify.hpp"

#include <cmath>

#include "grunsky/errors.hpp"
#include "grunsky/rng.hpp"

namespace grunsky {

namespace {

Eigen::MatrixXcd family_grunsky(const FamilySpec& family, Complex t, int N) {
  const LaurentMap map = family_map(family.with_t(t), 2 * N - 1);
  return grunsky_matrix(grunsky_coefficients(map, N)).entries;
}

double alpha_at_unit_direction(const FamilySpec& family, double r, int N,
                               const NormOptions& options) {
  const BeltramiSpec mu = family_beltrami(family.with_t(Complex(r)));
  return alpha_norm(mu.normalized(), N, options).sigma;
}

}  // namespace

bool VerificationReport::all_sandwich_ok() const {
  for (const auto& row : rows)
    if (!row.sandwich_ok) return false;
  return true;
}

Complex h_eval(const FamilySpec& family, const Eigen::VectorXcd& x, int N,
               const NormOptions&) {
  if (std::abs(x.norm() - 1.0) > 1e-10) {
    throw ValidationError(detail::str(
        "h_eval: x must be a unit vector (||x|| = ", x.norm(), ")"));
  }
  if (x.size() != N) {
    throw ValidationError(detail::str(
        "h_eval: x has dimension ", x.size(), ", expected N = ", N));
  }
  return bilinear_form(family_grunsky(family, family.t, N), x);
}

GolusinResult golusin_check_function(const std::function<Complex(double)>& g,
                                     const std::vector<double>& t_grid) {
  GolusinResult result;
  if (std::abs(g(1e-3)) < 1e-13 && std::abs(g(2e-3)) < 1e-13) {
    // Identically-vanishing h_x (to probe precision); the bound holds vacuously.
    result.ok = true;
    result.degenerate = true;
    return result;
  }

  // Vanishing order from the log-log slope over {t1, 2 t1}. When two leading
  // terms are comparable at the probe scale the slope is ambiguous; shrinking
  // the probes separates them.
  double t1 = 1e-3;
  double slope = 0.0;
  int m = 0;
  for (;;) {
    const double a1 = std::abs(g(t1)), a2 = std::abs(g(2.0 * t1));
    if (a1 < 1e-300 || a2 < 1e-300) {
      throw ConvergenceError(
          "golusin_check_function: probe value underflowed while separating orders");
    }
    slope = std::log(a2 / a1) / std::log(2.0);
    m = static_cast<int>(std::lround(slope));
    if (m >= 1 && std::abs(slope - m) <= 0.05) break;
    t1 /= 8.0;
    if (t1 < 1e-6) {
      throw ConvergenceError(detail::str(
          "golusin_check_function: ambiguous vanishing order (log-log slope ", slope,
          ")"));
    }
  }
  result.order = m;

  // g(t)/t^m = c_m + b t + d t^2 + ...; the three-point Richardson combination
  // (8 q(h) - 6 q(2h) + q(4h))/3 cancels both correction terms.
  const auto q = [&](double t) { return g(t) / std::pow(t, m); };
  result.leading = (8.0 * q(t1 / 2.0) - 6.0 * q(t1) + q(2.0 * t1)) / 3.0;

  const double cm = std::abs(result.leading);
  double worst = -1e300;
  for (const double t : t_grid) {
    const double bound = std::pow(t, m) * (t + cm) / (1.0 + cm * t);
    worst = std::max(worst, std::abs(g(t)) - bound);
  }
  result.worst_margin = worst;
  result.ok = worst <= 1e-8;
  return result;
}

GolusinResult golusin_bound_check(const FamilySpec& family, const Eigen::VectorXcd& x,
                                  const std::vector<double>& t_grid, int N) {
  if (std::abs(x.norm() - 1.0) > 1e-10) {
    throw ValidationError("golusin_bound_check: x must be a unit vector");
  }
  const auto g = [&](double t) {
    return bilinear_form(family_grunsky(family, Complex(t), N), x);
  };
  return golusin_check_function(g, t_grid);
}

VerificationReport verify_theorem1(const FamilySpec& family,
                                   const std::vector<double>& t_magnitudes, int N,
                                   const NormOptions& options) {
  for (const double r : t_magnitudes) {
    if (!(r > 0.0 && r <= 0.95)) {
      throw ValidationError(detail::str(
          "verify_theorem1: magnitudes must lie in (0, 0.95], got ", r));
    }
  }
  VerificationReport report;
  report.N = N;
  report.family = family;

  for (const double r : t_magnitudes) {
    VerificationRow row;
    row.r = r;
    const LaurentMap map = family_map(family.with_t(Complex(r)), 2 * N - 1);
    row.kappa = grunsky_norm(map, {N}, options).rows.back().kappa;
    row.alpha = alpha_at_unit_direction(family, r, N, options);
    row.lower = row.alpha * r;
    row.upper = r * (r + row.alpha) / (1.0 + row.alpha * r);
    row.residual_theorem1 = row.kappa - row.lower;
    row.residual_upper = row.upper - row.kappa;
    row.sandwich_ok =
        row.lower - 1e-9 <= row.kappa && row.kappa <= row.upper + 1e-9;
    report.rows.push_back(row);
  }
  return report;
}

MetricSample metric_lambda_kappa(const FamilySpec& family, double r, int N, int budget,
                                 std::uint64_t seed) {
  if (!(r >= 0.0 && r < 0.95)) {
    throw ValidationError(detail::str(
        "metric_lambda_kappa: r must lie in [0, 0.95), got ", r));
  }
  const double step = 1e-4 * (1.0 - r);
  const Eigen::MatrixXcd g_minus = family_grunsky(family, Complex(r - step), N);
  const Eigen::MatrixXcd g_center = family_grunsky(family, Complex(r), N);
  const Eigen::MatrixXcd g_plus = family_grunsky(family, Complex(r + step), N);
  const Eigen::MatrixXcd deriv = (g_plus - g_minus) / (2.0 * step);

  const auto lambda_of = [&](const Eigen::VectorXcd& x) -> double {
    const double h_abs = std::abs(bilinear_form(g_center, x));
    if (h_abs >= 1.0) {
      throw InvariantViolation(detail::str(
          "metric_lambda_kappa: |h_x(r)| = ", h_abs, " >= 1 at r = ", r));
    }
    return std::abs(bilinear_form(deriv, x)) / (1.0 - h_abs * h_abs);
  };

  NormOptions norm_options;
  norm_options.seed = seed;
  std::vector<Eigen::VectorXcd> candidates;
  for (const auto* G : {&g_center, &g_minus, &g_plus}) {
    const auto res = symmetric_bilinear_norm(*G, norm_options);
    if (!res.degenerate) candidates.push_back(res.argmax_x);
  }
  Rng rng(seed);
  for (int i = 0; i < budget; ++i) candidates.push_back(rng.unit_vector(N));
  if (candidates.empty()) candidates.push_back(Eigen::VectorXcd::Unit(N, 0));

  Eigen::VectorXcd best = candidates.front();
  double best_val = lambda_of(best);
  for (const auto& x : candidates) {
    const double v = lambda_of(x);
    if (v > best_val) {
      best_val = v;
      best = x;
    }
  }

  // Sphere-projected gradient ascent from the best candidate (numeric
  // gradient over the 2N real coordinates, renormalizing each probe).
  const double fd = 1e-6;
  double step_size = 0.05;
  for (int iter = 0; iter < 32; ++iter) {
    Eigen::VectorXcd grad = Eigen::VectorXcd::Zero(N);
    for (int i = 0; i < N; ++i) {
      for (const Complex dir : {Complex(1.0, 0.0), Complex(0.0, 1.0)}) {
        Eigen::VectorXcd xp = best, xm = best;
        xp(i) += fd * dir;
        xm(i) -= fd * dir;
        xp.normalize();
        xm.normalize();
        const double df = (lambda_of(xp) - lambda_of(xm)) / (2.0 * fd);
        grad(i) += df * dir;
      }
    }
    // Remove the radial component; steps stay on the sphere after renorm.
    grad -= best * best.dot(grad).real();
    const double gn = grad.norm();
    if (gn < 1e-14) break;
    Eigen::VectorXcd trial = best + step_size * grad / gn;
    trial.normalize();
    const double tv = lambda_of(trial);
    if (tv > best_val) {
      best_val = tv;
      best = trial;
      step_size *= 1.25;
    } else {
      step_size *= 0.5;
    }
  }

  MetricSample sample;
  sample.r = r;
  sample.lambda_est = best_val;
  sample.achieving_x = best;
  sample.optimizer_budget = budget;
  return sample;
}

Lemma4Result lemma4_check(const FamilySpec& family, double r_max, int grid_size, int N,
                          int budget, std::uint64_t seed) {
  if (!(r_max > 0.0 && r_max <= 0.8)) {
    throw ValidationError(detail::str("lemma4_check: r_max must lie in (0, 0.8], got ",
                                      r_max));
  }
  if (grid_size < 16) throw ValidationError("lemma4_check: grid_size must be >= 16");
  if (grid_size % 2 == 1) ++grid_size;  // Simpson needs an even interval count

  Lemma4Result result;
  result.r_max = r_max;
  result.grid_size = grid_size;
  result.N = N;

  const LaurentMap map = family_map(family.with_t(Complex(r_max)), 2 * N - 1);
  const double kappa = grunsky_norm(map, {N}).rows.back().kappa;
  result.lhs = std::atanh(kappa);

  const double h = r_max / grid_size;
  double integral = 0.0;
  for (int i = 0; i <= grid_size; ++i) {
    const double t = h * i;
    const double lambda = metric_lambda_kappa(family, t, N, budget, seed).lambda_est;
    result.nodes.emplace_back(t, lambda);
    const double w = (i == 0 || i == grid_size) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    integral += w * lambda;
  }
  result.rhs = integral * h / 3.0;
  result.residual = std::abs(result.lhs - result.rhs);
  return result;
}

FredholmResult fredholm_eigenvalue(const LaurentMap& map, int N,
                                   const NormOptions& options) {
  FredholmResult result;
  result.kappa = grunsky_norm(map, {N}, options).rows.back().kappa;
  if (result.kappa <= 1e-12) {
    // rho_L = infinity only for the circle.
    result.circle = true;
    result.rho = std::numeric_limits<double>::infinity();
    return result;
  }
  result.rho = 1.0 / result.kappa;
  return result;
}

FredholmResult fredholm_eigenvalue(const FamilySpec& family, int N,
                                   const NormOptions& options) {
  FredholmResult result =
      fredholm_eigenvalue(family_map(family, 2 * N - 1), N, options);
  // Independent estimate from the abelian supremum at the extremal
  // coefficient (norm |t|, not normalized).
  const BeltramiSpec mu = family_beltrami(family);
  const double alpha = alpha_norm(mu, N, options).sigma;
  if (alpha > 1e-12) result.rho_abelian = 1.0 / alpha;
  return result;
}

}  // namespace grunsky
