#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <variant>
#include <vector>

#include "grunsky/quadrature.hpp"
#include "grunsky/symmetric_norm.hpp"

namespace grunsky {

/// One separable term c * r^a * e^{i k theta} of a Beltrami coefficient in
/// polar coordinates on the unit disk.
struct PolarTerm {
  Complex c{0.0};
  double a = 0.0;  // radial exponent, >= 0
  int k = 0;       // angular frequency
};

/// Beltrami coefficient sampled through a callable; moments fall back to
/// Gauss-Legendre x trapezoid quadrature with the stored resolutions.
struct SampledBeltrami {
  std::function<Complex(double r, double theta)> mu;
  int radial_order = 64;
  int angular_nodes = 512;
};

/// A Beltrami coefficient mu on the unit disk (zero outside), either a sum of
/// polar-separable terms or a sampled callable. sup_norm is the declared
/// essential sup of |mu|; it must dominate |mu| pointwise and may equal 1
/// exactly for unit-normalized directions mu* = mu/||mu||.
class BeltramiSpec {
 public:
  static BeltramiSpec polar(std::vector<PolarTerm> terms, double sup_norm);
  static BeltramiSpec sampled(SampledBeltrami samples, double sup_norm);
  static BeltramiSpec zero();

  bool is_polar() const { return std::holds_alternative<std::vector<PolarTerm>>(data_); }
  const std::vector<PolarTerm>& terms() const;
  const SampledBeltrami& samples() const;
  double sup_norm() const { return sup_norm_; }

  Complex eval(double r, double theta) const;

  /// Checks sup_norm <= 1 and sup_norm >= |mu| on a 64x256 polar grid.
  void validate() const;

  BeltramiSpec scaled(Complex factor) const;
  /// mu / ||mu||_inf; the zero coefficient stays zero.
  BeltramiSpec normalized() const;
  /// z -> mu(e^{i phi} z).
  BeltramiSpec rotated(double phi) const;

 private:
  BeltramiSpec() = default;
  std::variant<std::vector<PolarTerm>, SampledBeltrami> data_;
  double sup_norm_ = 0.0;
};

/// Disk moments M_p = integral of mu(z) z^p over the unit disk, p = 0..P.
struct MomentVector {
  std::vector<Complex> values;
  int P() const { return static_cast<int>(values.size()) - 1; }
  Complex M(int p) const { return values[static_cast<size_t>(p)]; }
};

/// B_{mn} = (sqrt(mn)/pi) M_{m+n-2}; complex symmetric, constant along
/// anti-diagonals up to the sqrt(mn) weight. Positive sign convention; the
/// supremum takes absolute values so the overall sign is immaterial.
struct AbelianMatrix {
  Eigen::MatrixXcd B;
  int N() const { return static_cast<int>(B.rows()); }
};

/// Extremal abelian differential recovered from the maximizing vector:
/// omega(z) = sum_n x_n sqrt(n/pi) z^{n-1} and psi = omega^2, rescaled so the
/// A_1 norm of psi (quadrature) is 1. degenerate marks the zero-matrix case,
/// where no maximizer exists.
struct ExtremalDifferential {
  std::vector<Complex> omega;  // coefficient of z^{n-1}
  std::vector<Complex> psi;    // coefficient of z^{q}
  double psi_a1_norm = 0.0;    // quadrature norm before rescaling
  bool degenerate = false;
};

/// Closed-form moments for polar terms (angular orthogonality: a term
/// contributes 2 pi c / (a + p + 2) exactly when k + p = 0); quadrature for
/// sampled specs. Checks the coarse bound |M_p| <= pi * sup_norm.
MomentVector beltrami_moments(const BeltramiSpec& spec, int P);

/// Always-quadrature moments; the independent route used to cross-check the
/// closed form.
MomentVector beltrami_moments_quadrature(const BeltramiSpec& spec, int P,
                                         int radial_order = 64, int angular_nodes = 512);

AbelianMatrix abelian_matrix(const MomentVector& moments, int N);

/// Supremum of |<mu, omega^2>| over unit-norm omega of polynomial degree < N:
/// the largest singular value of the abelian matrix. Approaches the full
/// supremum from below as N grows.
SymmetricNormResult alpha_norm(const BeltramiSpec& spec, int N,
                               const NormOptions& options = {});

ExtremalDifferential extremal_omega(const SymmetricNormResult& result, int N);

/// <mu, psi> = integral of mu * psi over the disk, by quadrature; psi given by
/// polynomial coefficients (psi[q] multiplies z^q).
Complex pairing(const BeltramiSpec& spec, const std::vector<Complex>& psi_coeffs,
                int radial_order = 64, int angular_nodes = 512);

}  // namespace grunsky
