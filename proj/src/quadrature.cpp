#include "grunsky/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "grunsky/errors.hpp"

namespace grunsky {

GaussLegendre gauss_legendre_01(int order) {
  if (order < 1) throw ValidationError("gauss_legendre_01: order must be >= 1");
  GaussLegendre q;
  q.nodes.resize(static_cast<size_t>(order));
  q.weights.resize(static_cast<size_t>(order));

  // Newton iteration on Legendre polynomials over [-1, 1], then map to [0, 1].
  const double eps = 1e-15;
  const int m = (order + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= order; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = order * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= eps) break;
    }
    const double w = 2.0 / ((1.0 - z * z) * pp * pp);
    q.nodes[static_cast<size_t>(i)] = 0.5 * (1.0 - z);
    q.nodes[static_cast<size_t>(order - 1 - i)] = 0.5 * (1.0 + z);
    q.weights[static_cast<size_t>(i)] = 0.5 * w;
    q.weights[static_cast<size_t>(order - 1 - i)] = 0.5 * w;
  }
  return q;
}

DiskRule::DiskRule(int radial_order, int angular_nodes)
    : radial_(gauss_legendre_01(radial_order)), angular_count_(angular_nodes) {
  if (angular_nodes < 4) throw ValidationError("DiskRule: need at least 4 angular nodes");
  angles_.resize(static_cast<size_t>(angular_nodes));
  for (int j = 0; j < angular_nodes; ++j) {
    angles_[static_cast<size_t>(j)] = 2.0 * std::numbers::pi * j / angular_nodes;
  }
  angular_weight_ = 2.0 * std::numbers::pi / angular_nodes;
}

Complex DiskRule::integrate(const std::function<Complex(double, double)>& f) const {
  Complex total(0.0);
  for (size_t i = 0; i < radial_.nodes.size(); ++i) {
    const double r = radial_.nodes[i];
    Complex ring(0.0);
    for (const double theta : angles_) ring += f(r, theta);
    total += radial_.weights[i] * r * angular_weight_ * ring;
  }
  return total;
}

const DiskRule& default_disk_rule() {
  static const DiskRule rule(64, 512);
  return rule;
}

}  // namespace grunsky
