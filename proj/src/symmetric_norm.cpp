#include "grunsky/symmetric_norm.hpp"

#include <cmath>

#include "grunsky/errors.hpp"
#include "grunsky/rng.hpp"

namespace grunsky {

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

// Given an approximate top right-singular vector v, build the unit vector x
// with M x ~= sigma * conj(x); such x attains |x^T M x| = sigma. With
// u = Mv/||Mv||, the antilinear map T(y) = conj(M y)/sigma swaps v and
// conj(u), so v + conj(u) (or i(v - conj(u)) when that cancels) is a fixed
// point of T.
VectorXcd takagi_from_pair(const MatrixXcd& M, const VectorXcd& v) {
  const VectorXcd Mv = M * v;
  const double s = Mv.norm();
  if (s == 0.0) return v;
  const VectorXcd u_conj = Mv.conjugate() / s;
  VectorXcd c1 = v + u_conj;
  VectorXcd c2 = Complex(0.0, 1.0) * (v - u_conj);
  VectorXcd& best = (c1.norm() >= c2.norm()) ? c1 : c2;
  const double n = best.norm();
  if (n == 0.0) return v;
  return best / n;
}

struct Candidate {
  double sigma = -1.0;
  VectorXcd x;
  double residual = 0.0;
  int iterations = 0;
};

Candidate evaluate(const MatrixXcd& M, const VectorXcd& v, int iterations) {
  Candidate c;
  c.x = takagi_from_pair(M, v);
  c.sigma = (M * c.x).norm();
  c.residual = std::max(0.0, c.sigma - std::abs(bilinear_form(M, c.x)));
  c.iterations = iterations;
  return c;
}

}  // namespace

Complex bilinear_form(const MatrixXcd& matrix, const VectorXcd& x) {
  return (x.transpose() * (matrix * x)).value();
}

SymmetricNormResult symmetric_bilinear_norm(const MatrixXcd& matrix,
                                            const NormOptions& options) {
  const auto n = matrix.rows();
  if (n == 0 || matrix.cols() != n) {
    throw ValidationError("symmetric_bilinear_norm: matrix must be square and nonempty");
  }
  const double asym = (matrix - matrix.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12) {
    throw ValidationError(detail::str(
        "symmetric_bilinear_norm: input is not symmetric (max |M - M^T| = ", asym, ")"));
  }

  SymmetricNormResult result;
  const double scale = matrix.cwiseAbs().maxCoeff();
  if (scale < 1e-300) {
    result.sigma = 0.0;
    result.argmax_x = VectorXcd::Zero(n);
    result.argmax_x(0) = Complex(1.0);
    result.degenerate = true;
    return result;
  }

  Rng rng(options.seed);
  Candidate best;
  int total_iterations = 0;
  bool any_converged = false;

  for (int restart = 0; restart < std::max(1, options.restarts); ++restart) {
    VectorXcd x = rng.unit_vector(static_cast<int>(n));
    double sigma_prev = -1.0;
    int stable = 0;
    int it = 0;
    bool converged = false;
    for (; it < options.max_iterations; ++it) {
      const VectorXcd y = matrix * x;
      const double ny = y.norm();
      if (ny < 1e-300) break;  // start landed in the kernel; restart
      x = y.conjugate() / ny;
      if (sigma_prev >= 0.0 &&
          std::abs(ny - sigma_prev) <= options.tolerance * std::max(1.0, ny)) {
        if (++stable >= 2) {
          converged = true;
          ++it;
          break;
        }
      } else {
        stable = 0;
      }
      sigma_prev = ny;
    }
    total_iterations += it;
    any_converged = any_converged || converged;

    Candidate cand = evaluate(matrix, x, it);
    if (cand.sigma > best.sigma) best = cand;
  }

  // Clustered top singular values make the iteration stall; take the dense
  // route for small matrices.
  if ((best.residual > options.svd_fallback_residual || !any_converged) &&
      n <= options.svd_max_size) {
    Eigen::JacobiSVD<MatrixXcd> svd(matrix, Eigen::ComputeThinU | Eigen::ComputeThinV);
    Candidate cand = evaluate(matrix, svd.matrixV().col(0), total_iterations);
    if (cand.sigma >= best.sigma || cand.residual < best.residual) best = cand;
    any_converged = true;
  }

  result.sigma = best.sigma;
  result.argmax_x = best.x;
  result.iterations = total_iterations;
  result.residual = best.residual;
  result.converged = any_converged;
  return result;
}

}  // namespace grunsky
