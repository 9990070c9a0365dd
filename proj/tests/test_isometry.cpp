#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "oracles.hpp"
#include "quadsq/errors.hpp"
#include "quadsq/isometry.hpp"
#include "quadsq/rotation_chain.hpp"

using namespace quadsq;

namespace {

bool near(Point a, Point b, double tol) { return distance(a, b) <= tol; }

}  // namespace

TEST_CASE("two quarter turns about adjacent points give a half turn") {
  const DirectIsometry f = compose(rotation_about({0, 0}, kPi / 2), rotation_about({1, 0}, kPi / 2));
  const IsometryClass c = classify(f);
  REQUIRE(std::holds_alternative<Rotation>(c));
  const Rotation r = std::get<Rotation>(c);
  CHECK(near(r.center, {0.5, 0.5}, 1e-12));
  CHECK(r.angle == doctest::Approx(kPi).epsilon(1e-12));
}

TEST_CASE("compose applies the inner map first") {
  const DirectIsometry shift = translation({1, 0});
  const DirectIsometry quarter = rotation_about({0, 0}, kPi / 2);
  // quarter(shift(0)) = quarter(1) = i
  CHECK(near(compose(quarter, shift)({0, 0}), {0, 1}, 1e-15));
  // shift(quarter(0)) = 1
  CHECK(near(compose(shift, quarter)({0, 0}), {1, 0}, 1e-15));
  const DirectIsometry chain = compose_chain({quarter, shift});
  CHECK(near(chain({0, 0}), {0, 1}, 1e-15));
}

TEST_CASE("classification of translations and the identity") {
  CHECK(std::holds_alternative<Identity>(classify(DirectIsometry{})));
  const IsometryClass t = classify(translation({3, -4}));
  REQUIRE(std::holds_alternative<Translation>(t));
  CHECK(near(std::get<Translation>(t).vector, {3, -4}, 0.0));

  // Opposite rotations about different centers compose to a translation.
  const DirectIsometry f = compose(rotation_about({1, 0}, 0.7), rotation_about({0, 0}, -0.7));
  CHECK(std::holds_alternative<Translation>(classify(f)));

  // The tolerance is relative to the given scale.
  CHECK(std::holds_alternative<Identity>(classify(translation({1e-7, 0}), 1e-9, 1e3)));
  CHECK(std::holds_alternative<Translation>(classify(translation({1e-7, 0}), 1e-9, 1.0)));
}

TEST_CASE("fixed_point reports the degenerate cases") {
  try {
    fixed_point(translation({1, 2}));
    FAIL("expected NoUniqueFixedPoint");
  } catch (const NoUniqueFixedPoint& e) {
    CHECK(e.which() == Degeneracy::Translation);
    CHECK(e.kind() == ErrorKind::NoUniqueFixedPoint);
  }
  try {
    fixed_point(DirectIsometry{});
    FAIL("expected NoUniqueFixedPoint");
  } catch (const NoUniqueFixedPoint& e) {
    CHECK(e.which() == Degeneracy::Identity);
  }
  const FixedPoint tiny = fixed_point(rotation_about({2, 3}, 1e-10));
  CHECK(tiny.ill_conditioned);
  const FixedPoint fine = fixed_point(rotation_about({2, 3}, 0.4));
  CHECK_FALSE(fine.ill_conditioned);
  CHECK(near(fine.point, {2, 3}, 1e-14));
}

TEST_CASE("inverse undoes the map") {
  const DirectIsometry f = compose(rotation_about({1, 2}, 1.1), translation({-3, 0.5}));
  const DirectIsometry g = compose(inverse(f), f);
  CHECK(std::holds_alternative<Identity>(classify(g, 1e-12)));
  CHECK(near(compose(f, inverse(f))({7, -2}), {7, -2}, 1e-13));
}

TEST_CASE("rotor stays on the unit circle under long products") {
  DirectIsometry f;
  const DirectIsometry step = rotation_about({0.3, -0.2}, 0.123456789);
  for (int k = 0; k < 100000; ++k) f = compose(step, f);
  CHECK(std::abs(std::abs(f.rotor().value()) - 1.0) <= 1e-15);
  CHECK_THROWS_AS(UnitRotor::from_complex({0, 0}), std::invalid_argument);
  CHECK(UnitRotor::from_complex({3, 4}).re() == doctest::Approx(0.6));
}

TEST_CASE("composition is associative and matches the affine oracle") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> coord(-10, 10), angle(-7, 7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Point> centers;
    std::vector<double> angles;
    std::vector<long double> wide;
    std::vector<DirectIsometry> maps;
    for (int k = 0; k < 5; ++k) {
      centers.push_back({coord(rng), coord(rng)});
      angles.push_back(angle(rng));
      wide.push_back(angles.back());
      maps.push_back(rotation_about(centers.back(), angles.back()));
    }
    const DirectIsometry left = compose(compose(maps[0], maps[1]), maps[2]);
    const DirectIsometry right = compose(maps[0], compose(maps[1], maps[2]));
    CHECK(std::abs(left.offset() - right.offset()) <= 1e-12 * 10);

    const Point expected = oracle::chain_fixed_point(centers, wide);
    const Point by_map = fixed_point(rotation_chain(centers, angles)).point;
    const Point closed = chain_fixed_point(centers, angles);
    // Tolerance grows with the conditioning 1 / |1 - e^{i sum}|.
    double total = 0;
    for (double a : angles) total += a;
    const double cond = 1.0 / std::abs(1.0 - std::polar(1.0, total));
    CHECK(distance(by_map, expected) <= 1e-12 * 20 * cond);
    CHECK(distance(closed, expected) <= 1e-12 * 20 * cond);
  }
}

TEST_CASE("closed-form chain fixed point rejects a full turn") {
  const std::vector<Point> centers{{0, 0}, {1, 0}};
  const std::vector<double> angles{kPi, kPi};
  CHECK_THROWS_AS(chain_fixed_point(centers, angles), NoUniqueFixedPoint);
  const std::vector<double> odd{kPi / 2, kPi / 2};
  CHECK(near(chain_fixed_point(centers, odd), {0.5, 0.5}, 1e-15));
}
