#pragma once

// Reference computations for the tests. They use real 2x2 affine algebra in
// long double and never touch the complex-number code paths under test.

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <vector>

#include "quadsq/isometry.hpp"

namespace oracle {

struct Affine {
  long double a = 1, b = 0, c = 0, d = 1;  // linear part [[a, b], [c, d]]
  long double tx = 0, ty = 0;
};

inline Affine rotation(quadsq::Point center, long double angle) {
  const long double co = std::cos(angle);
  const long double si = std::sin(angle);
  Affine m{co, -si, si, co, 0, 0};
  m.tx = center.x - (co * center.x - si * center.y);
  m.ty = center.y - (si * center.x + co * center.y);
  return m;
}

// outer after inner
inline Affine then(const Affine& outer, const Affine& inner) {
  Affine m;
  m.a = outer.a * inner.a + outer.b * inner.c;
  m.b = outer.a * inner.b + outer.b * inner.d;
  m.c = outer.c * inner.a + outer.d * inner.c;
  m.d = outer.c * inner.b + outer.d * inner.d;
  m.tx = outer.a * inner.tx + outer.b * inner.ty + outer.tx;
  m.ty = outer.c * inner.tx + outer.d * inner.ty + outer.ty;
  return m;
}

// Solves (I - L) p = t by Cramer's rule.
inline quadsq::Point fixed_point(const Affine& m) {
  const long double p = 1 - m.a, q = -m.b, r = -m.c, s = 1 - m.d;
  const long double det = p * s - q * r;
  return {static_cast<double>((m.tx * s - q * m.ty) / det),
          static_cast<double>((p * m.ty - r * m.tx) / det)};
}

// Fixed point of r_{c1,t1} ... r_{cm,tm} (the last one applied first).
inline quadsq::Point chain_fixed_point(const std::vector<quadsq::Point>& centers,
                                       const std::vector<long double>& angles) {
  Affine m;
  for (std::size_t k = 0; k < centers.size(); ++k) m = then(m, rotation(centers[k], angles[k]));
  return fixed_point(m);
}

// Interior angles from atan2 of edge directions, for a polygon given in
// counter-clockwise order.
inline std::vector<double> ccw_interior_angles(const std::vector<quadsq::Point>& v) {
  const std::size_t n = v.size();
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const quadsq::Point prev = v[(k + n - 1) % n];
    const quadsq::Point next = v[(k + 1) % n];
    const long double to_prev = std::atan2((long double)prev.y - v[k].y, (long double)prev.x - v[k].x);
    const long double to_next = std::atan2((long double)next.y - v[k].y, (long double)next.x - v[k].x);
    long double angle = to_prev - to_next;
    while (angle <= 0) angle += 2 * 3.14159265358979323846264338327950288L;
    while (angle > 2 * 3.14159265358979323846264338327950288L) angle -= 2 * 3.14159265358979323846264338327950288L;
    out[k] = static_cast<double>(angle);
  }
  return out;
}

// Brute-force offset tuples in [0, 2M)^4 with sum divisible by 2M.
inline std::vector<std::array<int, 4>> offset_tuples(int modulus) {
  std::vector<std::array<int, 4>> out;
  const int top = 2 * modulus;
  for (int a = 0; a < top; ++a)
    for (int b = 0; b < top; ++b)
      for (int c = 0; c < top; ++c)
        for (int d = 0; d < top; ++d)
          if ((a + b + c + d) % top == 0) out.push_back({a, b, c, d});
  return out;
}

// Multiset class sizes keyed by the tuple sorted in descending order.
inline std::map<std::array<int, 4>, int> class_sizes(const std::vector<std::array<int, 4>>& tuples) {
  std::map<std::array<int, 4>, int> sizes;
  for (auto t : tuples) {
    std::sort(t.begin(), t.end(), [](int x, int y) { return x > y; });
    ++sizes[t];
  }
  return sizes;
}

}  // namespace oracle
