#pragma once

// Two related fixed-point identities: Morley's equilateral triangle obtained
// from products of rotations about triangle vertices, and the alternating-sum
// relation between six-rotation fixed points of a hexagon.

#include <array>

#include "quadsq/isometry.hpp"

namespace quadsq {

class Triangle {
 public:
  /// Throws Error(DegenerateTriangle) when the area is below 1e-9 * scale^2.
  static Triangle make(const std::array<Point, 3>& vertices);

  const std::array<Point, 3>& vertices() const { return vertices_; }
  const std::array<double, 3>& angles() const { return angles_; }
  bool clockwise() const { return clockwise_; }
  double scale() const { return scale_; }

 private:
  Triangle() = default;
  std::array<Point, 3> vertices_{};
  std::array<double, 3> angles_{};
  bool clockwise_ = false;
  double scale_ = 0.0;
};

/// e^{2 pi i / 3}, stored as an exact-as-possible unit pair.
Complex cube_root_of_unity();

struct MorleyResult {
  // fix(g1 g2), fix(g2 g3), fix(g3 g1) where g_v rotates about a_v through
  // 2/3 of the interior angle (negated for clockwise input).
  std::array<Point, 3> points{};
  // |fix(g1g2) + w fix(g2g3) + w^2 fix(g3g1)| with w = j for counter-clockwise
  // input and w = conj(j) for clockwise input.
  double identity_residual = 0.0;
  double side_spread = 0.0;
};

MorleyResult morley_points(const Triangle& triangle);

class Hexagon {
 public:
  /// Throws Error(DegenerateHexagon) unless simple with angle sum 4 pi.
  static Hexagon make(const std::array<Point, 6>& vertices);

  const std::array<Point, 6>& vertices() const { return vertices_; }
  const std::array<double, 6>& angles() const { return angles_; }
  double scale() const { return scale_; }

 private:
  Hexagon() = default;
  std::array<Point, 6> vertices_{};
  std::array<double, 6> angles_{};
  double scale_ = 0.0;
};

using HexOrder = std::array<int, 6>;  // 1-based labels

/// Rotation about a_v through (2n + 1) / 4 times its interior angle.
DirectIsometry hexagon_vertex_rotation(const Hexagon& hexagon, int label, int n);

/// Fixed point of r_{o1} r_{o2} ... r_{o6} (closed form).
Point hexagon_b_point(const Hexagon& hexagon, const HexOrder& order, int n);

/// The six orders whose fixed points alternate to zero:
/// 123456, 123564, 231564, 231645, 312645, 312456.
const std::array<HexOrder, 6>& hexagon_relation_orders();

/// |b_1 - b_2 + b_3 - b_4 + b_5 - b_6| over `orders`.
double alternating_sum_residual(const Hexagon& hexagon, const std::array<HexOrder, 6>& orders,
                                int n);

/// alternating_sum_residual over hexagon_relation_orders().
double hexagon_relation_residual(const Hexagon& hexagon, int n);

/// The same sum with its second term b_123564 replaced by b_123465; not an
/// identity, used as a negative control.
double hexagon_negative_control_residual(const Hexagon& hexagon, int n);

/// |offset| of the six-rotation product 123456 composed with itself (the
/// product is a half turn, so this should vanish), and |rotor - 1|.
std::array<double, 2> hexagon_involution_residual(const Hexagon& hexagon, int n);

}  // namespace quadsq
