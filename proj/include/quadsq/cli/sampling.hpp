#pragma once

#include <cstdint>
#include <random>

#include "quadsq/extensions.hpp"
#include "quadsq/quad_constructions.hpp"
#include "quadsq/square_constructions.hpp"

namespace quadsq::cli {

/// Seeded random polygons with vertices uniform in [-10, 10]^2. Invalid draws
/// are rejected and redrawn, at most 1000 times per polygon before
/// Error(SamplingExhausted).
class PolygonSampler {
 public:
  explicit PolygonSampler(std::uint64_t seed) : rng_(seed) {}

  Point point();
  Quadrilateral quadrilateral();
  /// a_1, a_2, a_3 random and a_4 = a_1 - a_2 + a_3.
  ParallelogramQuad parallelogram();
  /// Triangles whose smallest interior angle is at least `min_angle`.
  Triangle triangle(double min_angle = 0.05);
  Hexagon hexagon();

  static constexpr int kRetryCap = 1000;

 private:
  std::mt19937_64 rng_;
  std::uniform_real_distribution<double> coordinate_{-10.0, 10.0};
};

}  // namespace quadsq::cli
