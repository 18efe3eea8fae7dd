#include "grunsky/abelian.hpp"

#include <cmath>
#include <numbers>

#include "grunsky/errors.hpp"

namespace grunsky {

namespace {

constexpr double kPi = std::numbers::pi;

Complex eval_polar_terms(const std::vector<PolarTerm>& terms, double r, double theta) {
  Complex acc(0.0);
  for (const auto& term : terms) {
    const double radial = (term.a == 0.0) ? 1.0 : std::pow(r, term.a);
    acc += term.c * radial * std::polar(1.0, term.k * theta);
  }
  return acc;
}

Complex eval_polynomial(const std::vector<Complex>& coeffs, Complex z) {
  Complex acc(0.0);
  for (size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
  return acc;
}

}  // namespace

BeltramiSpec BeltramiSpec::polar(std::vector<PolarTerm> terms, double sup_norm) {
  for (const auto& term : terms) {
    if (term.a < 0.0) throw ValidationError("BeltramiSpec: radial exponent must be >= 0");
  }
  BeltramiSpec spec;
  spec.data_ = std::move(terms);
  spec.sup_norm_ = sup_norm;
  return spec;
}

BeltramiSpec BeltramiSpec::sampled(SampledBeltrami samples, double sup_norm) {
  if (!samples.mu) throw ValidationError("BeltramiSpec: sampled variant needs a callable");
  BeltramiSpec spec;
  spec.data_ = std::move(samples);
  spec.sup_norm_ = sup_norm;
  return spec;
}

BeltramiSpec BeltramiSpec::zero() { return polar({}, 0.0); }

const std::vector<PolarTerm>& BeltramiSpec::terms() const {
  if (!is_polar()) throw ValidationError("BeltramiSpec: not a polar-separable spec");
  return std::get<std::vector<PolarTerm>>(data_);
}

const SampledBeltrami& BeltramiSpec::samples() const {
  if (is_polar()) throw ValidationError("BeltramiSpec: not a sampled spec");
  return std::get<SampledBeltrami>(data_);
}

Complex BeltramiSpec::eval(double r, double theta) const {
  if (is_polar()) return eval_polar_terms(std::get<std::vector<PolarTerm>>(data_), r, theta);
  return std::get<SampledBeltrami>(data_).mu(r, theta);
}

void BeltramiSpec::validate() const {
  if (!(sup_norm_ >= 0.0) || sup_norm_ > 1.0 + 1e-12) {
    throw ValidationError(detail::str(
        "BeltramiSpec: sup_norm must lie in [0, 1], got ", sup_norm_));
  }
  // 64x256 polar validation grid, radii strictly inside the disk.
  const int nr = 64, nt = 256;
  for (int i = 0; i < nr; ++i) {
    const double r = (i + 0.5) / nr;
    for (int j = 0; j < nt; ++j) {
      const double theta = 2.0 * kPi * j / nt;
      const double v = std::abs(eval(r, theta));
      if (v > sup_norm_ + 1e-12) {
        throw ValidationError(detail::str(
            "BeltramiSpec: |mu(", r, " e^{i ", theta, "})| = ", v,
            " exceeds the declared sup_norm ", sup_norm_));
      }
    }
  }
}

BeltramiSpec BeltramiSpec::scaled(Complex factor) const {
  BeltramiSpec out = *this;
  out.sup_norm_ = sup_norm_ * std::abs(factor);
  if (is_polar()) {
    auto terms = std::get<std::vector<PolarTerm>>(data_);
    for (auto& term : terms) term.c *= factor;
    out.data_ = std::move(terms);
  } else {
    auto samples = std::get<SampledBeltrami>(data_);
    auto inner = samples.mu;
    samples.mu = [inner, factor](double r, double theta) { return factor * inner(r, theta); };
    out.data_ = std::move(samples);
  }
  return out;
}

BeltramiSpec BeltramiSpec::normalized() const {
  if (sup_norm_ <= 0.0) return *this;
  return scaled(Complex(1.0 / sup_norm_));
}

BeltramiSpec BeltramiSpec::rotated(double phi) const {
  BeltramiSpec out = *this;
  if (is_polar()) {
    auto terms = std::get<std::vector<PolarTerm>>(data_);
    // mu(e^{i phi} z): each term picks up the phase e^{i k phi}.
    for (auto& term : terms) term.c *= std::polar(1.0, term.k * phi);
    out.data_ = std::move(terms);
  } else {
    auto samples = std::get<SampledBeltrami>(data_);
    auto inner = samples.mu;
    samples.mu = [inner, phi](double r, double theta) { return inner(r, theta + phi); };
    out.data_ = std::move(samples);
  }
  return out;
}

MomentVector beltrami_moments(const BeltramiSpec& spec, int P) {
  if (P < 0) throw ValidationError("beltrami_moments: P must be >= 0");
  spec.validate();

  MomentVector moments;
  moments.values.assign(static_cast<size_t>(P) + 1, Complex(0.0));

  if (spec.is_polar()) {
    for (const auto& term : spec.terms()) {
      const int p = -term.k;
      if (p >= 0 && p <= P) {
        moments.values[static_cast<size_t>(p)] +=
            2.0 * kPi * term.c / (term.a + static_cast<double>(p) + 2.0);
      }
    }
  } else {
    const auto& samples = spec.samples();
    if (samples.angular_nodes < 4 * std::max(1, P)) {
      throw ValidationError(detail::str(
          "beltrami_moments: sampled grid too coarse for P = ", P, " (",
          samples.angular_nodes, " angular nodes, need >= ", 4 * P, ")"));
    }
    const DiskRule rule(samples.radial_order, samples.angular_nodes);
    for (int p = 0; p <= P; ++p) {
      moments.values[static_cast<size_t>(p)] = rule.integrate(
          [&](double r, double theta) {
            return samples.mu(r, theta) * std::pow(r, p) * std::polar(1.0, p * theta);
          });
    }
  }

  // Coarse a-priori bound: |M_p| <= pi * sup_norm (area pi, |z| <= 1).
  for (int p = 0; p <= P; ++p) {
    if (std::abs(moments.M(p)) > kPi * spec.sup_norm() + 1e-9) {
      throw InvariantViolation(detail::str(
          "beltrami_moments: |M_", p, "| = ", std::abs(moments.M(p)),
          " exceeds pi * sup_norm = ", kPi * spec.sup_norm()));
    }
  }
  return moments;
}

MomentVector beltrami_moments_quadrature(const BeltramiSpec& spec, int P,
                                         int radial_order, int angular_nodes) {
  if (P < 0) throw ValidationError("beltrami_moments_quadrature: P must be >= 0");
  if (angular_nodes < 4 * std::max(1, P)) {
    throw ValidationError(detail::str(
        "beltrami_moments_quadrature: grid too coarse for P = ", P, " (", angular_nodes,
        " angular nodes, need >= ", 4 * P, ")"));
  }
  const DiskRule rule(radial_order, angular_nodes);
  MomentVector moments;
  moments.values.reserve(static_cast<size_t>(P) + 1);
  for (int p = 0; p <= P; ++p) {
    moments.values.push_back(rule.integrate([&](double r, double theta) {
      return spec.eval(r, theta) * std::pow(r, p) * std::polar(1.0, p * theta);
    }));
  }
  return moments;
}

AbelianMatrix abelian_matrix(const MomentVector& moments, int N) {
  if (N < 1) throw ValidationError("abelian_matrix: N must be >= 1");
  if (moments.P() < 2 * N - 2) {
    throw ValidationError(detail::str(
        "abelian_matrix: moments cover p <= ", moments.P(), " but N = ", N,
        " requires p up to ", 2 * N - 2));
  }
  AbelianMatrix out;
  out.B = Eigen::MatrixXcd::Zero(N, N);
  for (int m = 1; m <= N; ++m)
    for (int n = 1; n <= N; ++n)
      out.B(m - 1, n - 1) = std::sqrt(static_cast<double>(m) * static_cast<double>(n)) /
                            kPi * moments.M(m + n - 2);
  return out;
}

SymmetricNormResult alpha_norm(const BeltramiSpec& spec, int N,
                               const NormOptions& options) {
  return symmetric_bilinear_norm(abelian_matrix(beltrami_moments(spec, 2 * N - 2), N).B,
                                 options);
}

ExtremalDifferential extremal_omega(const SymmetricNormResult& result, int N) {
  ExtremalDifferential out;
  if (result.degenerate || result.sigma < 1e-12 ||
      result.argmax_x.size() < static_cast<Eigen::Index>(N)) {
    out.degenerate = true;
    return out;
  }

  out.omega.resize(static_cast<size_t>(N));
  for (int n = 1; n <= N; ++n) {
    out.omega[static_cast<size_t>(n - 1)] =
        result.argmax_x(n - 1) * std::sqrt(static_cast<double>(n) / kPi);
  }
  out.psi.assign(static_cast<size_t>(2 * N - 1), Complex(0.0));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      out.psi[static_cast<size_t>(i + j)] +=
          out.omega[static_cast<size_t>(i)] * out.omega[static_cast<size_t>(j)];

  // ||psi||_{A_1} = ||omega||_{L_2}^2 = ||x||^2 = 1 up to quadrature error;
  // rescale anyway so the reported psi is exactly unit-normalized.
  const auto& rule = default_disk_rule();
  const double norm = rule.integrate([&](double r, double theta) {
                            const Complex z = std::polar(r, theta);
                            return Complex(std::abs(eval_polynomial(out.psi, z)));
                          })
                          .real();
  out.psi_a1_norm = norm;
  if (norm > 0.0) {
    const double omega_scale = 1.0 / std::sqrt(norm);
    for (auto& c : out.omega) c *= omega_scale;
    for (auto& c : out.psi) c /= norm;
  }
  return out;
}

Complex pairing(const BeltramiSpec& spec, const std::vector<Complex>& psi_coeffs,
                int radial_order, int angular_nodes) {
  const DiskRule rule(radial_order, angular_nodes);
  return rule.integrate([&](double r, double theta) {
    const Complex z = std::polar(r, theta);
    return spec.eval(r, theta) * eval_polynomial(psi_coeffs, z);
  });
}

}  // namespace grunsky
