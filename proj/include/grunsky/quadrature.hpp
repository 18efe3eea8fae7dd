#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace grunsky {

using Complex = std::complex<double>;

/// Gauss-Legendre nodes and weights on [0, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendre gauss_legendre_01(int order);

/// Product rule on the unit disk in polar coordinates: Gauss-Legendre in the
/// radius times the uniform trapezoid rule in the angle (spectrally accurate
/// for periodic integrands). integrate(f) returns the area integral of
/// f(r, theta), the r Jacobian included by the rule.
class DiskRule {
 public:
  DiskRule(int radial_order, int angular_nodes);

  int radial_order() const { return static_cast<int>(radial_.nodes.size()); }
  int angular_nodes() const { return angular_count_; }
  const std::vector<double>& radii() const { return radial_.nodes; }
  const std::vector<double>& angles() const { return angles_; }

  Complex integrate(const std::function<Complex(double, double)>& f) const;

 private:
  GaussLegendre radial_;
  int angular_count_;
  std::vector<double> angles_;
  double angular_weight_;
};

/// Default rule used throughout: radial order 64, 512 angular nodes.
const DiskRule& default_disk_rule();

}  // namespace grunsky
