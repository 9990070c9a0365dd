#include "quadsq/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace quadsq {
namespace {

// Error-free transforms; an expansion is a list of non-overlapping doubles
// in increasing magnitude whose exact sum is the represented value.
void two_sum(double a, double b, double& sum, double& err) {
  sum = a + b;
  const double b_virtual = sum - a;
  const double a_virtual = sum - b_virtual;
  err = (a - a_virtual) + (b - b_virtual);
}

void grow_expansion(std::vector<double>& expansion, double value) {
  double carry = value;
  for (double& component : expansion) {
    double sum = 0.0;
    double err = 0.0;
    two_sum(carry, component, sum, err);
    component = err;
    carry = sum;
  }
  expansion.push_back(carry);
}

void add_product(std::vector<double>& expansion, double a, double b) {
  const double product = a * b;
  const double err = std::fma(a, b, -product);
  grow_expansion(expansion, err);
  grow_expansion(expansion, product);
}

int exact_orientation(Point a, Point b, Point c) {
  // (a - c) x (b - c) expanded into six products; the c.x * c.y terms cancel.
  std::vector<double> expansion;
  expansion.reserve(16);
  add_product(expansion, a.x, b.y);
  add_product(expansion, -a.x, c.y);
  add_product(expansion, -c.x, b.y);
  add_product(expansion, -a.y, b.x);
  add_product(expansion, a.y, c.x);
  add_product(expansion, c.y, b.x);
  for (auto it = expansion.rbegin(); it != expansion.rend(); ++it) {
    if (*it > 0.0) return 1;
    if (*it < 0.0) return -1;
  }
  return 0;
}

bool on_segment(Point p, Point q, Point r) {
  // r collinear with p q; check it lies inside the bounding box.
  return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) &&
         std::min(p.y, q.y) <= r.y && r.y <= std::max(p.y, q.y);
}

}  // namespace

int orientation(Point a, Point b, Point c) {
  const double left = (a.x - c.x) * (b.y - c.y);
  const double right = (a.y - c.y) * (b.x - c.x);
  const double det = left - right;
  const double bound = 3.3306690738754716e-16 * (std::abs(left) + std::abs(right));
  if (det > bound) return 1;
  if (-det > bound) return -1;
  return exact_orientation(a, b, c);
}

bool segments_intersect(Point p1, Point p2, Point q1, Point q2) {
  const int d1 = orientation(q1, q2, p1);
  const int d2 = orientation(q1, q2, p2);
  const int d3 = orientation(p1, p2, q1);
  const int d4 = orientation(p1, p2, q2);
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  if (d1 == 0 && on_segment(q1, q2, p1)) return true;
  if (d2 == 0 && on_segment(q1, q2, p2)) return true;
  if (d3 == 0 && on_segment(p1, p2, q1)) return true;
  if (d4 == 0 && on_segment(p1, p2, q2)) return true;
  return false;
}

double signed_area(std::span<const Point> vertices) {
  const std::size_t n = vertices.size();
  double twice = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    twice += cross(vertices[i], vertices[(i + 1) % n]);
  }
  return 0.5 * twice;
}

double polygon_scale(std::span<const Point> vertices) {
  double scale = 0.0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      scale = std::max(scale, distance(vertices[i], vertices[j]));
    }
  }
  return scale;
}

PolygonAnalysis analyze_simple_polygon(std::span<const Point> vertices) {
  PolygonAnalysis result;
  const std::size_t n = vertices.size();
  if (n < 3) {
    result.defect = "fewer than three vertices";
    return result;
  }
  for (const auto& v : vertices) {
    if (!std::isfinite(v.x) || !std::isfinite(v.y)) {
      result.defect = "non-finite coordinate";
      return result;
    }
  }

  const double scale = polygon_scale(vertices);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!(distance(vertices[i], vertices[j]) > 1e-9 * scale)) {
        result.defect = "vertices " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                        " coincide";
        return result;
      }
    }
  }

  std::vector<double> turns(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point prev = vertices[(i + n - 1) % n];
    const Point next = vertices[(i + 1) % n];
    const Point incoming = vertices[i] - prev;
    const Point outgoing = next - vertices[i];
    turns[i] = std::atan2(cross(incoming, outgoing), dot(incoming, outgoing));
    if (std::abs(turns[i]) <= 1e-9 || kPi - std::abs(turns[i]) <= 1e-9) {
      result.defect = "collinear edges at vertex " + std::to_string(i + 1);
      return result;
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent through the closing edge
      if (segments_intersect(vertices[i], vertices[i + 1], vertices[j],
                             vertices[(j + 1) % n])) {
        result.defect = "edges " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                        " intersect";
        return result;
      }
    }
  }

  const bool clockwise = signed_area(vertices) < 0.0;
  const double sign = clockwise ? -1.0 : 1.0;
  result.angles.clockwise = clockwise;
  result.angles.angles.resize(n);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    result.angles.angles[i] = kPi - sign * turns[i];
    total += result.angles.angles[i];
  }
  if (std::abs(total - static_cast<double>(n - 2) * kPi) > 1e-9) {
    result.defect = "interior angles do not sum to (n - 2) pi";
  }
  return result;
}

}  // namespace quadsq
