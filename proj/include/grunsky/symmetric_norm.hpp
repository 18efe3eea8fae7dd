#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

namespace grunsky {

using Complex = std::complex<double>;

/// Largest singular value of a complex symmetric matrix together with a unit
/// vector attaining it in the bilinear sense: |x^T M x| = sigma. For complex
/// symmetric M the two coincide (Takagi factorization), which is what makes
/// the bilinear supremum over the unit sphere computable as a singular value.
struct SymmetricNormResult {
  double sigma = 0.0;
  Eigen::VectorXcd argmax_x;
  int iterations = 0;
  double residual = 0.0;  // sigma - |x^T M x|, clamped at 0
  bool converged = true;
  bool degenerate = false;  // matrix numerically zero; argmax is arbitrary
};

struct NormOptions {
  double tolerance = 1e-12;
  int max_iterations = 10000;
  int restarts = 3;
  std::uint64_t seed = 0;
  // Dense SVD is used instead when the iteration leaves a residual above this
  // and the matrix is small enough.
  double svd_fallback_residual = 1e-10;
  int svd_max_size = 64;
};

/// Antilinear power iteration x <- conj(M x)/||M x||, restarted from random
/// unit starts, followed by a fixed-point symmetrization that turns the top
/// singular pair into a Takagi vector. Falls back to a dense SVD when the
/// residual stays above options.svd_fallback_residual.
SymmetricNormResult symmetric_bilinear_norm(const Eigen::MatrixXcd& matrix,
                                            const NormOptions& options = {});

/// Unconjugated bilinear form x^T M x.
Complex bilinear_form(const Eigen::MatrixXcd& matrix, const Eigen::VectorXcd& x);

}  // namespace grunsky
