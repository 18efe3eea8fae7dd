#pragma once

#include <complex>
#include <string>
#include <vector>

#include "grunsky/abelian.hpp"
#include "grunsky/grunsky.hpp"

namespace grunsky {

enum class FamilyKind { joukowski, power };

/// Catalog of univalent maps with known quasiconformal extensions:
///   joukowski  f_t(z)   = z + t/z,           extension z + t conj(z) on the disk;
///   power(m)   f_m,t(z) = z (1 + t/z^m)^{2/m}, odd m >= 3, extension
///              z (1 + t (|z|/z)^m)^{2/m}.
/// |t| < 1 keeps the extension quasiconformal; |t| = 1 is admitted only for
/// Beltrami-direction work (unit-normalized coefficients).
struct FamilySpec {
  FamilyKind kind = FamilyKind::joukowski;
  int m = 3;  // power exponent; ignored for joukowski
  Complex t{0.0};

  FamilySpec with_t(Complex new_t) const {
    FamilySpec out = *this;
    out.t = new_t;
    return out;
  }
  std::string label() const;
  void validate() const;
};

/// Parses "joukowski", "power:3", "power:5", ...
FamilySpec parse_family(const std::string& name, Complex t);

/// Pointwise Schwarzian sample with its B-norm weight (|z|^2-1)^2 |S_f(z)|.
struct SchwarzianSample {
  Complex z;
  Complex value;
  double weight = 0.0;
};

/// Grid lower bound for the B-norm sup_{|z|>1} (|z|^2-1)^2 |S_f(z)| together
/// with the grid metadata and the maximizing node.
struct BNormEstimate {
  double value = 0.0;
  double r_at_max = 0.0;
  double theta_at_max = 0.0;
  int radial_samples = 0;
  int angular_samples = 0;
};

/// Evaluation grid in polar coordinates, strictly inside the unit disk.
struct PolarGrid {
  std::vector<double> radii;
  std::vector<double> angles;
  static PolarGrid regular(int radial, int angular, double r_min = 0.05,
                           double r_max = 0.95);
};

/// Laurent tail of the family member, zero-padded to K coefficients. The
/// power-family tail comes from the binomial series: b_{jm-1} = C(2/m, j) t^j.
LaurentMap family_map(const FamilySpec& spec, int K);

/// Closed-form quasiconformal extension w-hat on the unit disk.
Complex family_extension(const FamilySpec& spec, Complex z);

/// Beltrami coefficient of the closed-form extension at one point, computed
/// by central finite differences (relative step 1e-5) of the Wirtinger
/// derivatives. Fails at nodes where |d_z w| < 1e-8.
Complex beltrami_oracle_at(const FamilySpec& spec, double r, double theta);

/// Sampled-variant BeltramiSpec backed by the finite-difference evaluator;
/// the grid (which must avoid r = 0) sizes the sup-norm estimate.
BeltramiSpec beltrami_oracle(const FamilySpec& spec, const PolarGrid& grid);

/// Beltrami coefficient of the extremal extension. Closed form for joukowski
/// (constant t) and power:3 (t e^{-i theta}); for m > 3 the coefficient is
/// sampled from the oracle and fitted to a single polar term, falling back to
/// the sampled spec when the fit residual exceeds 1e-8 (never silently).
/// fit_residual, when non-null, receives the max-abs fit error (0 for the
/// closed forms).
BeltramiSpec family_beltrami(const FamilySpec& spec, double* fit_residual = nullptr);

/// Schwarzian derivative S_f = f'''/f' - (3/2)(f''/f')^2 from the exact
/// term-wise derivatives of the Laurent tail; |z| must exceed 1.
Complex schwarzian(const LaurentMap& map, Complex z);

/// Grid lower bound for the B-norm of S_f over a log-spaced radial grid in
/// (1, 10] times a uniform angular grid, refined by golden-section along the
/// best radial line and the best circle.
BNormEstimate bnorm(const LaurentMap& map, int radial_samples, int angular_samples);

}  // namespace grunsky
