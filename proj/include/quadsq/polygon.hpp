#pragma once

#include <span>
#include <string>
#include <vector>

#include "quadsq/isometry.hpp"

namespace quadsq {

/// Sign of the orientation determinant of (a, b, c): +1 for a left turn,
/// -1 for a right turn, 0 when collinear. Evaluated exactly.
int orientation(Point a, Point b, Point c);

/// True when closed segments [p1, p2] and [q1, q2] share at least one point.
bool segments_intersect(Point p1, Point p2, Point q1, Point q2);

/// Shoelace signed area; positive for counter-clockwise vertex order.
double signed_area(std::span<const Point> vertices);

/// Largest pairwise vertex distance. All residual tolerances in the library
/// are multiplied by this (or its square for areas).
double polygon_scale(std::span<const Point> vertices);

struct PolygonAngles {
  std::vector<double> angles;  // interior angle at each vertex, in (0, 2pi)
  bool clockwise = false;      // input was traversed clockwise
};

struct PolygonAnalysis {
  PolygonAngles angles;
  std::string defect;  // empty when the polygon is valid

  bool ok() const { return defect.empty(); }
};

/// Validates a simple polygon and computes its interior angles.
///
/// The traversal is normalized to counter-clockwise, then the angle at a
/// vertex is pi minus the signed turning angle there, so reflex vertices get
/// angles above pi and the angles of an n-gon sum to (n - 2) pi. Angles stay
/// attached to the input vertex labels. Repeated vertices, spikes, collinear
/// consecutive triples and self-intersections are reported in `defect`.
PolygonAnalysis analyze_simple_polygon(std::span<const Point> vertices);

}  // namespace quadsq
