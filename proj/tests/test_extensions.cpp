#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "quadsq/errors.hpp"
#include "quadsq/extensions.hpp"

using namespace quadsq;

namespace {

Triangle random_triangle(std::mt19937_64& rng, double min_angle) {
  std::uniform_real_distribution<double> c(-10, 10);
  for (;;) {
    try {
      const Triangle t = Triangle::make({{{c(rng), c(rng)}, {c(rng), c(rng)}, {c(rng), c(rng)}}});
      if (*std::min_element(t.angles().begin(), t.angles().end()) >= min_angle) return t;
    } catch (const Error&) {
    }
  }
}

Hexagon random_hexagon(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> c(-10, 10);
  for (;;) {
    try {
      std::array<Point, 6> v;
      for (auto& p : v) p = {c(rng), c(rng)};
      return Hexagon::make(v);
    } catch (const Error&) {
    }
  }
}

Hexagon regular_hexagon() {
  std::array<Point, 6> v;
  for (int k = 0; k < 6; ++k) v[k] = {std::cos(k * kPi / 3), std::sin(k * kPi / 3)};
  return Hexagon::make(v);
}

}  // namespace

TEST_CASE("cube root of unity") {
  const Complex j = cube_root_of_unity();
  CHECK(std::abs(j * j * j - 1.0) <= 1e-15);
  CHECK(std::abs(1.0 + j + j * j) <= 1e-15);
}

TEST_CASE("Morley points of an equilateral triangle") {
  const Triangle t = Triangle::make({{{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}}});
  const MorleyResult m = morley_points(t);
  CHECK(m.side_spread <= 1e-14);
  CHECK(m.identity_residual <= 1e-14);
  const Point centroid{0.5, std::sqrt(3.0) / 6};
  const Point morley_centroid = (1.0 / 3) * (m.points[0] + m.points[1] + m.points[2]);
  CHECK(distance(centroid, morley_centroid) <= 1e-14);
}

TEST_CASE("Morley points match the affine oracle and form an equilateral triangle") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const Triangle t = random_triangle(rng, 0.05);
    const MorleyResult m = morley_points(t);
    CHECK(m.side_spread <= 1e-9 * t.scale());
    CHECK(m.identity_residual <= 1e-9 * t.scale());

    const auto& v = t.vertices();
    const long double sign = t.clockwise() ? -1 : 1;
    auto g = [&](int k) { return sign * 2 * static_cast<long double>(t.angles()[k]) / 3; };
    const Point f12 = oracle::chain_fixed_point({v[0], v[1]}, {g(0), g(1)});
    CHECK(distance(f12, m.points[0]) <= 1e-9 * t.scale());
  }
}

TEST_CASE("clockwise triangles") {
  const Triangle ccw = Triangle::make({{{0, 0}, {4, 0}, {1, 3}}});
  const Triangle cw = Triangle::make({{{0, 0}, {1, 3}, {4, 0}}});
  CHECK(cw.clockwise());
  const MorleyResult a = morley_points(ccw);
  const MorleyResult b = morley_points(cw);
  CHECK(a.side_spread <= 1e-12);
  CHECK(b.side_spread <= 1e-12);
  CHECK(b.identity_residual <= 1e-12);
  // Same Morley triangle, so the same side length.
  CHECK(distance(a.points[0], a.points[1]) == doctest::Approx(distance(b.points[0], b.points[1])).epsilon(1e-12));
}

TEST_CASE("degenerate triangles") {
  try {
    Triangle::make({{{0, 0}, {1, 1}, {2, 2}}});
    FAIL("expected DegenerateTriangle");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateTriangle);
  }
}

TEST_CASE("hexagon relation on the regular hexagon") {
  const Hexagon h = regular_hexagon();
  CHECK(hexagon_relation_residual(h, 0) <= 1e-9 * h.scale());
  const auto inv = hexagon_involution_residual(h, 0);
  CHECK(inv[0] <= 1e-12);
  CHECK(inv[1] <= 1e-12);
}

TEST_CASE("hexagon relation on random hexagons") {
  std::mt19937_64 rng(7);
  int big_controls = 0, samples = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Hexagon h = random_hexagon(rng);
    double sum = 0;
    for (double a : h.angles()) sum += a;
    CHECK(sum == doctest::Approx(4 * kPi).epsilon(1e-14));
    for (int n = -2; n <= 2; ++n) {
      CHECK(hexagon_relation_residual(h, n) <= 1e-9 * h.scale());
      const auto inv = hexagon_involution_residual(h, n);
      CHECK(inv[0] <= 1e-9 * h.scale());
      CHECK(inv[1] <= 1e-9);
      ++samples;
      if (hexagon_negative_control_residual(h, n) > 1e-3 * h.scale()) ++big_controls;
    }
  }
  CHECK(big_controls >= 0.95 * samples);
}

TEST_CASE("hexagon b-point matches the affine oracle") {
  std::mt19937_64 rng(70);
  const Hexagon h = random_hexagon(rng);
  const HexOrder order{2, 3, 1, 5, 6, 4};
  std::vector<Point> centers;
  std::vector<long double> angles;
  for (int label : order) {
    centers.push_back(h.vertices()[label - 1]);
    angles.push_back(static_cast<long double>(3) / 4 * h.angles()[label - 1]);
  }
  CHECK(distance(hexagon_b_point(h, order, 1), oracle::chain_fixed_point(centers, angles)) <= 1e-9 * h.scale());
}

TEST_CASE("non-simple hexagons are rejected") {
  CHECK_THROWS_AS(Hexagon::make({{{0, 0}, {3, 0}, {0, 2}, {3, 2}, {2, 4}, {1, 4}}}), Error);
}
