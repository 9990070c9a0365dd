#include "quadsq/square_constructions.hpp"

#include <algorithm>
#include <cstdio>
#include <cmath>

#include "quadsq/errors.hpp"
#include "quadsq/polygon.hpp"

namespace quadsq {
namespace {

double parity_sign(int n) { return (n % 2 == 0) ? 1.0 : -1.0; }

Parity parity_of(int n) { return (n % 2 == 0) ? Parity::Even : Parity::Odd; }

const PermIndex& perm_of(const AdmissibleTuple& t) { return t.perm(); }

Quad square_vertices(const ParallelogramQuad& quad, const PermIndex& perm, int n,
                     const std::optional<AngleOffsets>& offsets = std::nullopt) {
  return parallelogram(quad.base(), quad.angles(), perm, n, offsets).vertices;
}

bool is_square_offset(const AngleOffsets& offsets) {
  const auto& m = offsets.values();
  const bool in_range = std::all_of(m.begin(), m.end(), [](int v) { return v >= 0 && v < 4; });
  return offsets.modulus() == 2 && in_range && m[0] == m[2] && m[1] == m[3] &&
         (m[0] + m[1]) % 2 == 0;
}

}  // namespace

ParallelogramQuad as_parallelogram(const Quadrilateral& quad, double tol) {
  const Quad& v = quad.vertices();
  const double scale = quad.scale();
  const double residual = closure_residual(v);
  if (residual > tol * scale) {
    char message[96];
    std::snprintf(message, sizeof message, "closure residual %.3e exceeds %.3e", residual, tol * scale);
    throw NotAParallelogram(residual, message);
  }

  // Angle errors scale like the closure defect over the shortest edge.
  double shortest = scale;
  for (std::size_t m = 0; m < 4; ++m) shortest = std::min(shortest, distance(v[m], v[(m + 1) % 4]));
  const double angle_tol = std::max(tol, 1e-12) * scale / shortest;
  const InteriorAngles& angles = quad.angles();
  const double a1 = alpha(angles, 1, 0);
  const double a2 = alpha(angles, 2, 0);
  const double a3 = alpha(angles, 3, 0);
  const double a4 = alpha(angles, 4, 0);
  const double angle_defect = std::max(
      {std::abs(a1 - a3), std::abs(a2 - a4), std::abs(a1 + a2 - kPi / 2.0)});
  if (angle_defect > angle_tol) {
    char message[96];
    std::snprintf(message, sizeof message, "angle relations fail by %.3e rad", angle_defect);
    throw NotAParallelogram(residual, message);
  }
  return ParallelogramQuad(quad, midpoint(v[0], v[2]), residual);
}

AdmissibleTuple::AdmissibleTuple(const PermIndex& perm) : perm_(perm) {
  const auto& l = perm.labels();
  // Cyclic shifts of 1234 step +1 around the quadrilateral, those of 1432
  // step -1; either way every consecutive pair is adjacent and the walk is
  // consistent.
  const int step = (l[1] - l[0] + 4) % 4;
  bool ok = step == 1 || step == 3;
  for (std::size_t m = 1; m < 4 && ok; ++m) {
    ok = (l[(m + 1) % 4] - l[m] + 4) % 4 == step;
  }
  if (!ok) {
    throw Error(ErrorKind::NotAdmissibleTuple,
                perm.str() + " is not a cyclic shift of 1234 or 1432");
  }
}

const std::array<AdmissibleTuple, 8>& AdmissibleTuple::all() {
  static const std::array<AdmissibleTuple, 8> tuples{
      AdmissibleTuple(PermIndex{1, 2, 3, 4}), AdmissibleTuple(PermIndex{2, 3, 4, 1}),
      AdmissibleTuple(PermIndex{3, 4, 1, 2}), AdmissibleTuple(PermIndex{4, 1, 2, 3}),
      AdmissibleTuple(PermIndex{1, 4, 3, 2}), AdmissibleTuple(PermIndex{4, 3, 2, 1}),
      AdmissibleTuple(PermIndex{3, 2, 1, 4}), AdmissibleTuple(PermIndex{2, 1, 4, 3})};
  return tuples;
}

SquareMetrics measure_square(const Quad& q, double scale) {
  SquareMetrics metrics;
  double shortest = distance(q[0], q[1]);
  double longest = shortest;
  double total = 0.0;
  for (std::size_t m = 0; m < 4; ++m) {
    const double side = distance(q[m], q[(m + 1) % 4]);
    shortest = std::min(shortest, side);
    longest = std::max(longest, side);
    total += side;
  }
  metrics.side = total / 4.0;
  metrics.side_spread = longest - shortest;
  metrics.closure = closure_residual(q);
  const double area = signed_area(q);
  metrics.orientation = area > 0.0 ? 1 : (area < 0.0 ? -1 : 0);
  if (metrics.side <= 1e-9 * scale) return metrics;
  for (std::size_t m = 0; m < 4; ++m) {
    const Point back = q[(m + 3) % 4] - q[m];
    const Point ahead = q[(m + 1) % 4] - q[m];
    const double corner = std::atan2(std::abs(cross(back, ahead)), dot(back, ahead));
    metrics.angle_error = std::max(metrics.angle_error, std::abs(corner - kPi / 2.0));
  }
  return metrics;
}

std::vector<AngleOffsets> square_offset_variants() {
  std::vector<AngleOffsets> result;
  for (const auto& offsets : offset_variants(2)) {
    if (is_square_offset(offsets)) result.push_back(offsets);
  }
  return result;
}

LabeledSquare square(const ParallelogramQuad& quad, const AdmissibleTuple& tuple, int n,
                     const std::optional<AngleOffsets>& offsets) {
  if (offsets && !is_square_offset(*offsets)) {
    throw Error(ErrorKind::InvalidOffsets,
                "square offsets need modulus 2, m1 = m3, m2 = m4 and m1 + m2 even");
  }
  const PermIndex& perm = perm_of(tuple);
  LabeledSquare result;
  result.shape = parallelogram(quad.base(), quad.angles(), perm, n, offsets);
  result.metrics = measure_square(result.shape.vertices, quad.scale());
  result.degenerate = result.metrics.side <= 1e-9 * quad.scale();

  // e^{i(alpha_i + alpha_j)} = (-1)^n i, times i^{m_i + m_j} with offsets.
  Complex rotor{0.0, parity_sign(n)};
  if (offsets) {
    const int quarter_turns = offsets->m(perm.i()) + offsets->m(perm.j());
    rotor *= std::pow(Complex(0.0, 1.0), quarter_turns);
  }
  const Complex b_ijkl = result.shape.vertices[0].z();
  const Complex b_ijlk = result.shape.vertices[1].z();
  const Complex b_jilk = result.shape.vertices[2].z();
  const Complex b_jikl = result.shape.vertices[3].z();
  result.relation_residual = std::abs((b_ijkl - b_ijlk) + rotor * (b_ijkl - b_jikl));
  result.mirror_relation_residual = std::abs((b_ijlk - b_ijkl) - rotor * (b_ijlk - b_jilk));
  return result;
}

FourSquares four_distinct_squares(const ParallelogramQuad& quad, int n) {
  static const std::array<AdmissibleTuple, 4> reps{
      AdmissibleTuple(PermIndex{1, 2, 3, 4}), AdmissibleTuple(PermIndex{3, 2, 1, 4}),
      AdmissibleTuple(PermIndex{3, 4, 1, 2}), AdmissibleTuple(PermIndex{1, 4, 3, 2})};
  FourSquares result;
  for (std::size_t s = 0; s < reps.size(); ++s) result.squares[s] = square(quad, reps[s], n);

  const double tol = 1e-9 * quad.scale();
  std::vector<Quad> all;
  for (const auto& tuple : AdmissibleTuple::all()) {
    for (const PermIndex& perm : {tuple.perm(), tuple.perm().swap_last()}) {
      const auto p = parallelogram(quad.base(), quad.angles(), perm, n);
      for (const Quad& q : {p.vertices, p.primed().vertices}) {
        const bool matched =
            std::any_of(result.squares.begin(), result.squares.end(), [&](const LabeledSquare& sq) {
              return same_vertex_set(sq.shape.vertices, q, tol);
            });
        if (!matched) ++result.unmatched;
        all.push_back(q);
      }
    }
  }
  result.distinct_vertex_sets = count_distinct_vertex_sets(all, tol);
  return result;
}

PivotCenter pivot_center_simplified(const ParallelogramQuad& quad, int i, int j, int n) {
  const int gap = (j - i + 4) % 4;
  if (i < 1 || i > 4 || j < 1 || j > 4 || (gap != 1 && gap != 3)) {
    throw Error(ErrorKind::NotAdmissibleTuple, "pivot labels must be adjacent vertices");
  }
  const double ai = alpha(quad.angles(), i, n);
  const double s = parity_sign(n);
  const double w_i = (1.0 - std::cos(ai) + s * std::sin(ai)) / 2.0;
  const double w_j = (1.0 + std::cos(ai) - s * std::sin(ai)) / 2.0;
  const Point a_i = quad.base().vertex(i);
  const Point a_j = quad.base().vertex(j);
  return PivotCenter{Point{w_i * a_i.x + w_j * a_j.x, w_i * a_i.y + w_j * a_j.y}, w_i, w_j, i, j,
                     n};
}

double simplified_congruence_angle(int n) { return -(2.0 * n + 1.0) * kPi / 2.0; }

CentralSymmetryRecord central_symmetry_check(const ParallelogramQuad& quad,
                                             const AdmissibleTuple& tuple, int n) {
  const PermIndex& t = perm_of(tuple);
  const PermIndex opposite{t.k(), t.l(), t.i(), t.j()};
  const Quad source = square_vertices(quad, t, n);
  const LabeledParallelogram image = parallelogram(quad.base(), quad.angles(), opposite, n);
  const Quad& target = image.vertices;
  const DirectIsometry half_turn = rotation_about(quad.center(), kPi);

  CentralSymmetryRecord record;
  Quad rotated{};
  for (std::size_t m = 0; m < 4; ++m) {
    rotated[m] = half_turn(source[m]);
    record.vertex_residual = std::max(record.vertex_residual, distance(rotated[m], target[m]));
  }
  // A half turn keeps orientation, so the reversed listing can only match as a set.
  record.primed_set_match =
      same_vertex_set(rotated, image.primed().vertices, kDefaultTolerance * quad.scale());
  record.midpoint_residual = distance(midpoint(source[0], target[0]), quad.center());
  return record;
}

SquareCenter square_center(const ParallelogramQuad& quad, const AdmissibleTuple& tuple, int n) {
  const Quad v = square_vertices(quad, perm_of(tuple), n);
  return SquareCenter{midpoint(v[0], v[2]), perm_of(tuple), n, parity_of(n)};
}

Point square_center_step(const ParallelogramQuad& quad, const AdmissibleTuple& tuple, int n) {
  const PermIndex& t = perm_of(tuple);
  const double angle_i = quad.angles().at(t.i());
  const double previous = alpha(quad.angles(), t.i(), n - 1);
  const double dilation =
      std::sin(angle_i) * (std::cos(previous) + parity_sign(n) * std::sin(previous));
  const Complex edge = quad.base().vertex(t.j()).z() - quad.base().vertex(t.i()).z();
  return Point::from(Complex(0.0, dilation) * edge);
}

std::pair<CenterLine, CenterLine> center_lines(const ParallelogramQuad& quad,
                                               const AdmissibleTuple& tuple,
                                               std::span<const int> ns) {
  const PermIndex& t = perm_of(tuple);
  std::vector<int> even_ns;
  std::vector<int> odd_ns;
  for (int n : ns) {
    auto& bucket = parity_of(n) == Parity::Even ? even_ns : odd_ns;
    if (std::find(bucket.begin(), bucket.end(), n) == bucket.end()) bucket.push_back(n);
  }
  if (even_ns.size() < 2 || odd_ns.size() < 2) {
    throw Error(ErrorKind::InsufficientPoints,
                "center lines need at least two even and two odd family indices");
  }

  const Point edge = quad.base().vertex(t.j()) - quad.base().vertex(t.i());
  const Point normal = (1.0 / norm(edge)) * Point{-edge.y, edge.x};

  auto fit = [&](const std::vector<int>& family, Parity parity) {
    std::vector<Point> centers;
    for (int n : family) centers.push_back(square_center(quad, tuple, n).point);
    Point centroid{0.0, 0.0};
    for (const auto& c : centers) centroid = centroid + c;
    centroid = (1.0 / static_cast<double>(centers.size())) * centroid;

    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    double spread = 0.0;
    for (const auto& c : centers) {
      const Point d = c - centroid;
      sxx += d.x * d.x;
      sxy += d.x * d.y;
      syy += d.y * d.y;
      spread = std::max(spread, norm(d));
    }

    CenterLine line{centroid, normal, parity, t.i(), t.j(), 0.0, false};
    if (spread <= 1e-9 * quad.scale()) {
      line.degenerate = true;
    } else {
      const double theta = 0.5 * std::atan2(2.0 * sxy, sxx - syy);
      line.direction = {std::cos(theta), std::sin(theta)};
    }
    for (const auto& c : centers) {
      line.max_residual = std::max(line.max_residual, std::abs(cross(line.direction, c - centroid)));
    }
    return line;
  };

  return {fit(even_ns, Parity::Even), fit(odd_ns, Parity::Odd)};
}

DiagonalRecord diagonal_parallel_check(const ParallelogramQuad& quad, const AdmissibleTuple& tuple,
                                       int n) {
  const PermIndex& t = perm_of(tuple);
  const Quad v = square_vertices(quad, t, n);
  const Point diagonal = v[0] - v[2];
  const Point a_i = quad.base().vertex(t.i());
  const Point a_j = quad.base().vertex(t.j());

  DiagonalRecord record;
  record.cross_residual = std::abs(cross(diagonal, a_j - a_i));
  record.coefficient = diagonal.z() / (a_i - a_j).z();
  const double ai = alpha(quad.angles(), t.i(), n);
  record.predicted_coefficient = 1.0 - std::cos(ai) - parity_sign(n) * std::sin(ai);
  return record;
}

CentersParallelogram centers_parallelogram(const ParallelogramQuad& quad, int n,
                                           const AdmissibleTuple& tuple) {
  const PermIndex& t = perm_of(tuple);
  const std::array<PermIndex, 4> corners{t, PermIndex{t.k(), t.j(), t.i(), t.l()},
                                         PermIndex{t.k(), t.l(), t.i(), t.j()},
                                         PermIndex{t.i(), t.l(), t.k(), t.j()}};
  CentersParallelogram result;
  result.tuple = t;
  result.n = n;
  for (std::size_t m = 0; m < 4; ++m) {
    result.vertices[m] = square_center(quad, AdmissibleTuple(corners[m]), n).point;
  }
  result.closure = closure_residual(result.vertices);
  result.center_residual = distance(midpoint(result.vertices[0], result.vertices[2]), quad.center());
  return result;
}

CompositeResult squares_from_any_quad(const Quadrilateral& quad, const PermIndex& stage1_perm,
                                      int stage1_n, const AdmissibleTuple& stage2_tuple,
                                      int stage2_n) {
  LabeledParallelogram stage1 = parallelogram(quad, quad.angles(), stage1_perm, stage1_n);
  const double area = signed_area(stage1).area;
  if (std::abs(area) <= 1e-9 * quad.scale() * quad.scale()) {
    throw Error(ErrorKind::DegenerateIntermediate,
                "stage-1 parallelogram P_" + stage1_perm.str() + " has zero area");
  }
  std::optional<Quadrilateral> intermediate;
  try {
    intermediate = Quadrilateral::make(stage1.vertices);
  } catch (const Error& e) {
    throw Error(ErrorKind::DegenerateIntermediate, e.what());
  }
  ParallelogramQuad stage2 = as_parallelogram(*intermediate, kCompositeTolerance);
  LabeledSquare selected = square(stage2, stage2_tuple, stage2_n);
  FourSquares squares = four_distinct_squares(stage2, stage2_n);
  return CompositeResult{std::move(stage1), std::move(stage2), std::move(selected),
                         std::move(squares)};
}

}  // namespace quadsq
