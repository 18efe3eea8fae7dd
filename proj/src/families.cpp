#include "grunsky/families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "grunsky/errors.hpp"

namespace grunsky {

namespace {

constexpr double kPi = std::numbers::pi;

Complex ipow(Complex base, int exponent) {
  Complex acc(1.0);
  for (int i = 0; i < exponent; ++i) acc *= base;
  return acc;
}

// Golden-section maximization on [lo, hi]; returns (argmax, max).
template <class F>
std::pair<double, double> golden_max(F&& f, double lo, double hi, int iters = 80) {
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < iters && (b - a) > 1e-13 * std::max(1.0, std::abs(b)); ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = f(x1);
    }
  }
  return f1 >= f2 ? std::make_pair(x1, f1) : std::make_pair(x2, f2);
}

}  // namespace

std::string FamilySpec::label() const {
  if (kind == FamilyKind::joukowski) return "joukowski";
  return detail::str("power:", m);
}

void FamilySpec::validate() const {
  if (kind == FamilyKind::power) {
    if (m < 3 || m % 2 == 0) {
      throw ValidationError(detail::str(
          "FamilySpec: power family needs an odd exponent m >= 3, got ", m));
    }
  }
  if (std::abs(t) > 1.0 + 1e-12) {
    throw ValidationError(detail::str("FamilySpec: |t| = ", std::abs(t),
                                      " exceeds 1"));
  }
}

FamilySpec parse_family(const std::string& name, Complex t) {
  FamilySpec spec;
  spec.t = t;
  if (name == "joukowski") {
    spec.kind = FamilyKind::joukowski;
  } else if (name.rfind("power:", 0) == 0) {
    spec.kind = FamilyKind::power;
    try {
      spec.m = std::stoi(name.substr(6));
    } catch (const std::exception&) {
      throw ValidationError(detail::str("parse_family: bad power exponent in '", name, "'"));
    }
  } else {
    throw ValidationError(detail::str(
        "parse_family: unknown family '", name, "' (expected joukowski or power:M)"));
  }
  spec.validate();
  return spec;
}

PolarGrid PolarGrid::regular(int radial, int angular, double r_min, double r_max) {
  if (radial < 2 || angular < 4) throw ValidationError("PolarGrid: grid too small");
  if (!(r_min > 0.0 && r_max < 1.0 && r_min < r_max)) {
    throw ValidationError("PolarGrid: radii must satisfy 0 < r_min < r_max < 1");
  }
  PolarGrid grid;
  grid.radii.resize(static_cast<size_t>(radial));
  for (int i = 0; i < radial; ++i) {
    grid.radii[static_cast<size_t>(i)] = r_min + (r_max - r_min) * i / (radial - 1);
  }
  grid.angles.resize(static_cast<size_t>(angular));
  for (int j = 0; j < angular; ++j) {
    grid.angles[static_cast<size_t>(j)] = 2.0 * kPi * j / angular;
  }
  return grid;
}

LaurentMap family_map(const FamilySpec& spec, int K) {
  spec.validate();
  if (K < 1) throw ValidationError("family_map: K must be >= 1");
  if (std::abs(spec.t) >= 1.0) {
    throw ValidationError(
        "family_map: |t| must be < 1 for a quasiconformally extendable member");
  }

  LaurentMap map;
  map.tail.assign(static_cast<size_t>(K), Complex(0.0));
  if (spec.kind == FamilyKind::joukowski) {
    map.tail[0] = spec.t;
    return map;
  }

  // z (1 + t z^{-m})^{2/m} = z + sum_{j>=1} C(2/m, j) t^j z^{-(jm-1)}.
  const int j_max = (K + 1) / spec.m;
  const UnivariateSeries binom = series_binomial(2.0 / spec.m, j_max + 1);
  Complex t_pow = spec.t;
  for (int j = 1; j <= j_max; ++j) {
    const int k = j * spec.m - 1;
    if (k >= 1 && k <= K) map.tail[static_cast<size_t>(k - 1)] = binom[j] * t_pow;
    t_pow *= spec.t;
  }
  return map;
}

Complex family_extension(const FamilySpec& spec, Complex z) {
  spec.validate();
  if (spec.kind == FamilyKind::joukowski) return z + spec.t * std::conj(z);
  if (z == Complex(0.0)) return z;
  const Complex sigma = ipow(std::abs(z) / z, spec.m);
  return z * std::pow(Complex(1.0) + spec.t * sigma, 2.0 / spec.m);
}

Complex beltrami_oracle_at(const FamilySpec& spec, double r, double theta) {
  if (!(r > 0.0)) throw ValidationError("beltrami_oracle_at: grid must avoid r = 0");
  const Complex z = std::polar(r, theta);
  const double h = 1e-5 * r;
  const Complex i(0.0, 1.0);
  const Complex fx =
      (family_extension(spec, z + h) - family_extension(spec, z - h)) / (2.0 * h);
  const Complex fy =
      (family_extension(spec, z + i * h) - family_extension(spec, z - i * h)) / (2.0 * h);
  const Complex dz = 0.5 * (fx - i * fy);
  const Complex dzbar = 0.5 * (fx + i * fy);
  if (std::abs(dz) < 1e-8) {
    throw ValidationError(detail::str(
        "beltrami_oracle_at: |d_z w| < 1e-8 at r = ", r, ", theta = ", theta,
        " (singular point)"));
  }
  return dzbar / dz;
}

BeltramiSpec beltrami_oracle(const FamilySpec& spec, const PolarGrid& grid) {
  spec.validate();
  for (const double r : grid.radii) {
    if (!(r > 0.0 && r < 1.0)) {
      throw ValidationError("beltrami_oracle: grid radii must lie in (0, 1)");
    }
  }
  double sup = 0.0;
  for (const double r : grid.radii)
    for (const double theta : grid.angles)
      sup = std::max(sup, std::abs(beltrami_oracle_at(spec, r, theta)));

  SampledBeltrami samples;
  samples.mu = [spec](double r, double theta) {
    return beltrami_oracle_at(spec, r, theta);
  };
  return BeltramiSpec::sampled(std::move(samples), std::min(1.0, sup + 1e-9));
}

BeltramiSpec family_beltrami(const FamilySpec& spec, double* fit_residual) {
  spec.validate();
  if (fit_residual) *fit_residual = 0.0;
  const double mag = std::abs(spec.t);

  if (spec.kind == FamilyKind::joukowski) {
    return BeltramiSpec::polar({{spec.t, 0.0, 0}}, mag);
  }
  if (spec.m == 3) {
    // mu(r e^{i theta}) = t e^{-i theta}.
    return BeltramiSpec::polar({{spec.t, 0.0, -1}}, mag);
  }

  // No closed form is asserted for m > 3; sample the oracle and fit one
  // polar term, reporting the residual.
  if (mag >= 1.0) {
    throw ValidationError("family_beltrami: |t| must be < 1 for the oracle path");
  }
  if (mag == 0.0) return BeltramiSpec::zero();

  const PolarGrid grid = PolarGrid::regular(24, 96, 0.1, 0.9);
  const int nr = static_cast<int>(grid.radii.size());
  const int nt = static_cast<int>(grid.angles.size());
  std::vector<std::vector<Complex>> vals(static_cast<size_t>(nr),
                                         std::vector<Complex>(static_cast<size_t>(nt)));
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nt; ++j)
      vals[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          beltrami_oracle_at(spec, grid.radii[static_cast<size_t>(i)],
                             grid.angles[static_cast<size_t>(j)]);

  // Dominant angular frequency by projection.
  int k_best = 0;
  double k_power = -1.0;
  const int k_span = 2 * spec.m;
  for (int k = -k_span; k <= k_span; ++k) {
    double power = 0.0;
    for (int i = 0; i < nr; ++i) {
      Complex proj(0.0);
      for (int j = 0; j < nt; ++j) {
        proj += vals[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                std::polar(1.0, -k * grid.angles[static_cast<size_t>(j)]);
      }
      power += std::norm(proj / static_cast<double>(nt));
    }
    if (power > k_power) {
      k_power = power;
      k_best = k;
    }
  }

  // Radial profile at the dominant frequency, then a log-log slope fit.
  std::vector<Complex> profile(static_cast<size_t>(nr));
  for (int i = 0; i < nr; ++i) {
    Complex proj(0.0);
    for (int j = 0; j < nt; ++j) {
      proj += vals[static_cast<size_t>(i)][static_cast<size_t>(j)] *
              std::polar(1.0, -k_best * grid.angles[static_cast<size_t>(j)]);
    }
    profile[static_cast<size_t>(i)] = proj / static_cast<double>(nt);
  }
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (int i = 0; i < nr; ++i) {
    const double x = std::log(grid.radii[static_cast<size_t>(i)]);
    const double y = std::log(std::max(1e-300, std::abs(profile[static_cast<size_t>(i)])));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double a_fit = (nr * sxy - sx * sy) / (nr * sxx - sx * sx);
  if (std::abs(a_fit) < 1e-6) a_fit = 0.0;
  a_fit = std::max(0.0, a_fit);

  Complex num(0.0);
  double den = 0.0;
  for (int i = 0; i < nr; ++i) {
    const double ra = std::pow(grid.radii[static_cast<size_t>(i)], a_fit);
    num += profile[static_cast<size_t>(i)] * ra;
    den += ra * ra;
  }
  const Complex c_fit = num / den;

  double residual = 0.0;
  for (int i = 0; i < nr; ++i) {
    const double ra = std::pow(grid.radii[static_cast<size_t>(i)], a_fit);
    for (int j = 0; j < nt; ++j) {
      const Complex model =
          c_fit * ra * std::polar(1.0, k_best * grid.angles[static_cast<size_t>(j)]);
      residual = std::max(
          residual,
          std::abs(vals[static_cast<size_t>(i)][static_cast<size_t>(j)] - model));
    }
  }
  if (fit_residual) *fit_residual = residual;

  if (residual > 1e-8) return beltrami_oracle(spec, grid);
  const double sup = std::abs(c_fit);  // a_fit >= 0, so the max sits at r = 1
  return BeltramiSpec::polar({{c_fit, a_fit, k_best}}, std::min(1.0, sup));
}

Complex schwarzian(const LaurentMap& map, Complex z) {
  if (std::abs(z) <= 1.0) {
    throw ValidationError(detail::str(
        "schwarzian: |z| = ", std::abs(z), " must exceed 1"));
  }
  const Complex u = Complex(1.0) / z;
  Complex d1(0.0), d2(0.0), d3(0.0);  // Horner in u for the tail sums
  for (int k = map.K(); k >= 1; --k) {
    const double dk = static_cast<double>(k);
    d1 = (d1 + dk * map.b(k)) * u;
    d2 = (d2 + dk * (dk + 1.0) * map.b(k)) * u;
    d3 = (d3 + dk * (dk + 1.0) * (dk + 2.0) * map.b(k)) * u;
  }
  const Complex fp = Complex(1.0) - d1 * u;      // f'  = 1 - sum k b_k u^{k+1}
  const Complex fpp = d2 * u * u;                // f'' = sum k(k+1) b_k u^{k+2}
  const Complex fppp = -d3 * u * u * u;          // f'''= -sum k(k+1)(k+2) b_k u^{k+3}
  if (std::abs(fp) < 1e-12) {
    throw ValidationError(detail::str("schwarzian: f'(z) vanishes near z = ", z));
  }
  const Complex q = fpp / fp;
  return fppp / fp - 1.5 * q * q;
}

BNormEstimate bnorm(const LaurentMap& map, int radial_samples, int angular_samples) {
  if (radial_samples < 16 || angular_samples < 16) {
    throw ValidationError("bnorm: need at least 16 samples per direction");
  }

  const auto weight_at = [&](double r, double theta) -> double {
    const Complex z = std::polar(r, theta);
    try {
      const double w = (r * r - 1.0) * (r * r - 1.0) * std::abs(schwarzian(map, z));
      return std::isfinite(w) ? w : 0.0;
    } catch (const ValidationError&) {
      return 0.0;  // skip singular nodes; the estimate stays a lower bound
    }
  };

  BNormEstimate best;
  best.radial_samples = radial_samples;
  best.angular_samples = angular_samples;

  // Log-spaced radii: r - 1 geometric from 1e-3 to 9.
  const double lo = std::log(1e-3), hi = std::log(9.0);
  std::vector<double> radii(static_cast<size_t>(radial_samples));
  for (int i = 0; i < radial_samples; ++i) {
    radii[static_cast<size_t>(i)] =
        1.0 + std::exp(lo + (hi - lo) * i / (radial_samples - 1));
  }
  int best_i = 0;
  for (int i = 0; i < radial_samples; ++i) {
    for (int j = 0; j < angular_samples; ++j) {
      const double theta = 2.0 * kPi * j / angular_samples;
      const double w = weight_at(radii[static_cast<size_t>(i)], theta);
      if (w > best.value) {
        best.value = w;
        best.r_at_max = radii[static_cast<size_t>(i)];
        best.theta_at_max = theta;
        best_i = i;
      }
    }
  }
  if (best.value == 0.0) return best;  // e.g. the identity map

  // Local refinement: golden section along the best radial line, then along
  // the circle through the refined radius, then the radius once more.
  const double r_lo = radii[static_cast<size_t>(std::max(0, best_i - 1))];
  const double r_hi = radii[static_cast<size_t>(std::min(radial_samples - 1, best_i + 1))];
  auto [r1, w1] = golden_max(
      [&](double r) { return weight_at(r, best.theta_at_max); }, r_lo, r_hi);
  if (w1 > best.value) {
    best.value = w1;
    best.r_at_max = r1;
  }
  const double dtheta = 2.0 * kPi / angular_samples;
  auto [th2, w2] = golden_max(
      [&](double theta) { return weight_at(best.r_at_max, theta); },
      best.theta_at_max - dtheta, best.theta_at_max + dtheta);
  if (w2 > best.value) {
    best.value = w2;
    best.theta_at_max = th2;
  }
  auto [r3, w3] = golden_max(
      [&](double r) { return weight_at(r, best.theta_at_max); }, r_lo, r_hi);
  if (w3 > best.value) {
    best.value = w3;
    best.r_at_max = r3;
  }
  return best;
}

}  // namespace grunsky
