#include "quadsq/extensions.hpp"

#include <algorithm>
#include <cmath>

#include "quadsq/errors.hpp"
#include "quadsq/polygon.hpp"
#include "quadsq/rotation_chain.hpp"

namespace quadsq {
namespace {

std::size_t slot(int label) { return static_cast<std::size_t>(label - 1); }

Point hexagon_chain_point(const Hexagon& hexagon, const HexOrder& order, int n) {
  std::array<Point, 6> centers{};
  std::array<double, 6> angles{};
  for (std::size_t m = 0; m < 6; ++m) {
    centers[m] = hexagon.vertices()[slot(order[m])];
    angles[m] = (2.0 * n + 1.0) / 4.0 * hexagon.angles()[slot(order[m])];
  }
  return chain_fixed_point(centers, angles);
}

}  // namespace

Triangle Triangle::make(const std::array<Point, 3>& vertices) {
  const double scale = polygon_scale(vertices);
  const double area = signed_area(vertices);
  if (!std::isfinite(area) || !(std::abs(area) >= 1e-9 * scale * scale) || scale == 0.0) {
    throw Error(ErrorKind::DegenerateTriangle, "triangle area is zero within tolerance");
  }
  const PolygonAnalysis analysis = analyze_simple_polygon(vertices);
  if (!analysis.ok()) throw Error(ErrorKind::DegenerateTriangle, analysis.defect);
  Triangle t;
  t.vertices_ = vertices;
  std::copy(analysis.angles.angles.begin(), analysis.angles.angles.end(), t.angles_.begin());
  t.clockwise_ = analysis.angles.clockwise;
  t.scale_ = scale;
  return t;
}

Complex cube_root_of_unity() { return {-0.5, std::sqrt(3.0) / 2.0}; }

MorleyResult morley_points(const Triangle& triangle) {
  const double sign = triangle.clockwise() ? -1.0 : 1.0;
  std::array<DirectIsometry, 3> g;
  for (std::size_t v = 0; v < 3; ++v) {
    g[v] = rotation_about(triangle.vertices()[v], sign * 2.0 * triangle.angles()[v] / 3.0);
  }

  MorleyResult result;
  for (std::size_t v = 0; v < 3; ++v) {
    result.points[v] = fixed_point(compose(g[v], g[(v + 1) % 3])).point;
  }

  const Complex j = triangle.clockwise() ? std::conj(cube_root_of_unity()) : cube_root_of_unity();
  result.identity_residual =
      std::abs(result.points[0].z() + j * result.points[1].z() + j * j * result.points[2].z());

  const std::array<double, 3> sides{distance(result.points[0], result.points[1]),
                                    distance(result.points[1], result.points[2]),
                                    distance(result.points[2], result.points[0])};
  result.side_spread = *std::max_element(sides.begin(), sides.end()) -
                       *std::min_element(sides.begin(), sides.end());
  return result;
}

Hexagon Hexagon::make(const std::array<Point, 6>& vertices) {
  const PolygonAnalysis analysis = analyze_simple_polygon(vertices);
  if (!analysis.ok()) throw Error(ErrorKind::DegenerateHexagon, analysis.defect);
  Hexagon h;
  h.vertices_ = vertices;
  std::copy(analysis.angles.angles.begin(), analysis.angles.angles.end(), h.angles_.begin());
  h.scale_ = polygon_scale(vertices);
  return h;
}

DirectIsometry hexagon_vertex_rotation(const Hexagon& hexagon, int label, int n) {
  return rotation_about(hexagon.vertices()[slot(label)],
                        (2.0 * n + 1.0) / 4.0 * hexagon.angles()[slot(label)]);
}

Point hexagon_b_point(const Hexagon& hexagon, const HexOrder& order, int n) {
  return hexagon_chain_point(hexagon, order, n);
}

const std::array<HexOrder, 6>& hexagon_relation_orders() {
  static const std::array<HexOrder, 6> orders{
      HexOrder{1, 2, 3, 4, 5, 6}, HexOrder{1, 2, 3, 5, 6, 4}, HexOrder{2, 3, 1, 5, 6, 4},
      HexOrder{2, 3, 1, 6, 4, 5}, HexOrder{3, 1, 2, 6, 4, 5}, HexOrder{3, 1, 2, 4, 5, 6}};
  return orders;
}

double alternating_sum_residual(const Hexagon& hexagon, const std::array<HexOrder, 6>& orders,
                                int n) {
  Complex sum{0.0, 0.0};
  double sign = 1.0;
  for (const auto& order : orders) {
    sum += sign * hexagon_chain_point(hexagon, order, n).z();
    sign = -sign;
  }
  return std::abs(sum);
}

double hexagon_relation_residual(const Hexagon& hexagon, int n) {
  return alternating_sum_residual(hexagon, hexagon_relation_orders(), n);
}

double hexagon_negative_control_residual(const Hexagon& hexagon, int n) {
  auto orders = hexagon_relation_orders();
  orders[1] = HexOrder{1, 2, 3, 4, 6, 5};
  return alternating_sum_residual(hexagon, orders, n);
}

std::array<double, 2> hexagon_involution_residual(const Hexagon& hexagon, int n) {
  DirectIsometry product;
  for (int label = 1; label <= 6; ++label) {
    product = compose(product, hexagon_vertex_rotation(hexagon, label, n));
  }
  const DirectIsometry twice = compose(product, product);
  return {std::abs(twice.offset()), std::abs(twice.rotor().value() - 1.0)};
}

}  // namespace quadsq
