#include <doctest.h>

#include <numbers>

#include "grunsky/families.hpp"
#include "grunsky/rng.hpp"
#include "oracles.hpp"

using namespace grunsky;

TEST_CASE("family parsing") {
  CHECK(parse_family("joukowski", Complex(0.5)).kind == FamilyKind::joukowski);
  const auto p5 = parse_family("power:5", Complex(0.2));
  CHECK(p5.kind == FamilyKind::power);
  CHECK(p5.m == 5);
  CHECK_THROWS_AS(parse_family("power:4", Complex(0.2)), ValidationError);
  CHECK_THROWS_AS(parse_family("elliptic", Complex(0.2)), ValidationError);
  CHECK_THROWS_AS(parse_family("joukowski", Complex(1.5)), ValidationError);
}

TEST_CASE("family_map tails") {
  const auto jk = family_map(parse_family("joukowski", Complex(0.5)), 4);
  CHECK(jk.tail[0] == Complex(0.5));
  for (int k = 2; k <= 4; ++k) CHECK(jk.b(k) == Complex(0.0));

  const auto p3 = family_map(parse_family("power:3", Complex(0.6)), 8);
  CHECK(p3.b(2).real() == doctest::Approx(0.4).epsilon(1e-15));
  CHECK(p3.b(5).real() == doctest::Approx(-0.04).epsilon(1e-13));
  CHECK(p3.b(8).real() == doctest::Approx(4.0 / 81.0 * 0.216).epsilon(1e-13));
  CHECK(p3.b(1) == Complex(0.0));
  CHECK(p3.b(3) == Complex(0.0));

  const auto id = family_map(parse_family("power:3", Complex(0.0)), 8);
  for (int k = 1; k <= 8; ++k) CHECK(id.b(k) == Complex(0.0));
}

TEST_CASE("threefold symmetry: only k = 2 mod 3 coefficients survive") {
  const auto p3 = family_map(parse_family("power:3", Complex(0.7, 0.1)), 32);
  for (int k = 1; k <= 32; ++k) {
    if (k % 3 != 2) CHECK(p3.b(k) == Complex(0.0));
  }
}

TEST_CASE("grunsky table of power:3 is sparse off m+n = 0 mod 3") {
  const auto map = family_map(parse_family("power:3", Complex(0.6)), 19);
  const auto table = grunsky_coefficients(map, 10);
  for (int m = 1; m <= 10; ++m)
    for (int n = 1; n <= 10; ++n)
      if ((m + n) % 3 != 0) CHECK(std::abs(table.alpha(m - 1, n - 1)) < 1e-13);
}

TEST_CASE("family_beltrami closed forms") {
  double residual = -1.0;
  const auto b3 = family_beltrami(parse_family("power:3", Complex(0.6)), &residual);
  CHECK(residual == 0.0);
  REQUIRE(b3.is_polar());
  REQUIRE(b3.terms().size() == 1);
  CHECK(b3.terms()[0].c == Complex(0.6));
  CHECK(b3.terms()[0].a == 0.0);
  CHECK(b3.terms()[0].k == -1);
  CHECK(b3.sup_norm() == 0.6);

  const auto bj = family_beltrami(parse_family("joukowski", Complex(0.5)));
  REQUIRE(bj.is_polar());
  CHECK(bj.terms()[0].c == Complex(0.5));
  CHECK(bj.terms()[0].k == 0);
  CHECK(bj.sup_norm() == 0.5);

  const auto b0 = family_beltrami(parse_family("power:3", Complex(0.0)));
  CHECK(b0.sup_norm() == 0.0);
}

TEST_CASE("beltrami oracle validates the closed forms") {
  const auto p3 = parse_family("power:3", Complex(0.6));
  const Complex at = beltrami_oracle_at(p3, 0.5, std::numbers::pi / 3.0);
  CHECK(std::abs(at - 0.6 * std::polar(1.0, -std::numbers::pi / 3.0)) < 1e-6);

  const auto jk = parse_family("joukowski", Complex(0.5));
  CHECK(std::abs(beltrami_oracle_at(jk, 0.3, 1.1) - Complex(0.5)) < 1e-6);

  const auto zero = parse_family("power:3", Complex(0.0));
  CHECK(std::abs(beltrami_oracle_at(zero, 0.5, 0.4)) < 1e-10);
}

TEST_CASE("oracle agreement on a 16x64 grid for m = 3 and joukowski") {
  const auto grid = PolarGrid::regular(16, 64, 0.05, 0.95);
  for (const char* name : {"power:3", "joukowski"}) {
    const auto spec = parse_family(name, Complex(0.55, 0.2));
    const auto closed = family_beltrami(spec);
    for (const double r : grid.radii)
      for (const double theta : grid.angles)
        CHECK(std::abs(closed.eval(r, theta) - beltrami_oracle_at(spec, r, theta)) < 1e-6);
  }
}

TEST_CASE("m = 5 coefficient is discovered by the fit, not asserted") {
  double residual = -1.0;
  const auto spec = parse_family("power:5", Complex(0.5));
  const auto fitted = family_beltrami(spec, &residual);
  REQUIRE(fitted.is_polar());
  CHECK(residual < 1e-8);

  // The fit must agree with the oracle everywhere, whatever it found.
  const auto grid = PolarGrid::regular(12, 48, 0.1, 0.9);
  for (const double r : grid.radii)
    for (const double theta : grid.angles)
      CHECK(std::abs(fitted.eval(r, theta) - beltrami_oracle_at(spec, r, theta)) < 1e-6);
  CHECK(fitted.sup_norm() == doctest::Approx(0.5).epsilon(1e-7));
}

TEST_CASE("sampled oracle spec feeds the moment pipeline") {
  // beltrami_oracle returns a sampled-variant spec; its quadrature moments
  // must match the closed form of the same family member.
  const auto spec = parse_family("joukowski", Complex(0.5));
  const auto sampled = beltrami_oracle(spec, PolarGrid::regular(12, 32, 0.1, 0.9));
  CHECK_FALSE(sampled.is_polar());
  const auto closed = beltrami_moments(family_beltrami(spec), 3);
  const auto from_oracle = beltrami_moments(sampled, 3);
  for (int p = 0; p <= 3; ++p) {
    CHECK(std::abs(closed.M(p) - from_oracle.M(p)) < 1e-9);
  }
}

TEST_CASE("schwarzian of the identity vanishes") {
  LaurentMap identity;
  identity.tail.assign(4, Complex(0.0));
  CHECK(std::abs(schwarzian(identity, Complex(2.0, 1.0))) == 0.0);
}

TEST_CASE("schwarzian matches the finite-difference oracle") {
  const auto jk = family_map(parse_family("joukowski", Complex(0.5)), 4);
  const Complex at2 = schwarzian(jk, Complex(2.0));
  CHECK(std::abs(at2 - testing::schwarzian_fd_oracle(jk, Complex(2.0))) < 1e-10);

  const auto p3 = family_map(parse_family("power:3", Complex(0.6)), 64);
  const Complex at15 = schwarzian(p3, Complex(1.5));
  CHECK(std::abs(at15 - testing::schwarzian_fd_oracle(p3, Complex(1.5))) < 1e-8);

  Rng rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    const double radius = 1.1 + 3.9 * rng.uniform01();
    const Complex z = std::polar(radius, 2.0 * std::numbers::pi * rng.uniform01());
    const Complex lhs = schwarzian(p3, z);
    CHECK(std::abs(lhs - testing::schwarzian_fd_oracle(p3, z)) < 1e-8);
  }
}

TEST_CASE("schwarzian domain errors") {
  const auto jk = family_map(parse_family("joukowski", Complex(0.5)), 4);
  CHECK_THROWS_AS(schwarzian(jk, Complex(0.9)), ValidationError);
  CHECK_THROWS_AS(schwarzian(jk, Complex(0.0, 0.5)), ValidationError);
}

TEST_CASE("bnorm of the identity is zero") {
  LaurentMap identity;
  identity.tail.assign(4, Complex(0.0));
  CHECK(bnorm(identity, 32, 32).value == 0.0);
}

TEST_CASE("bnorm decreases along t -> 0 and is grid-stable") {
  double previous = 1e300;
  for (const double t : {0.5, 0.25, 0.125}) {
    const auto map = family_map(parse_family("joukowski", Complex(t)), 4);
    const double value = bnorm(map, 48, 48).value;
    CHECK(value > 0.0);
    CHECK(value < previous);
    previous = value;
  }

  const auto p3 = family_map(parse_family("power:3", Complex(0.6)), 64);
  const double coarse = bnorm(p3, 48, 48).value;
  const double fine = bnorm(p3, 96, 96).value;
  CHECK(std::abs(coarse - fine) < 1e-3);
}
