#include "quadsq/quad_constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "quadsq/errors.hpp"
#include "quadsq/polygon.hpp"
#include "quadsq/rotation_chain.hpp"

namespace quadsq {
namespace {

std::size_t slot(int label) { return static_cast<std::size_t>(label - 1); }

struct ChainInput {
  std::array<Point, 4> centers;
  std::array<double, 4> angles;
};

ChainInput chain_input(const Quadrilateral& quad, const InteriorAngles& angles,
                       const PermIndex& perm, int n, const std::optional<AngleOffsets>& offsets) {
  const auto by_vertex = rotation_angles(angles, n, offsets);
  ChainInput input{};
  for (std::size_t m = 0; m < 4; ++m) {
    const int label = perm.labels()[m];
    input.centers[m] = quad.vertex(label);
    input.angles[m] = by_vertex[slot(label)];
  }
  return input;
}

}  // namespace

Quadrilateral Quadrilateral::make(const Quad& vertices) {
  const PolygonAnalysis analysis = analyze_simple_polygon(vertices);
  if (!analysis.ok()) throw Error(ErrorKind::DegenerateQuadrilateral, analysis.defect);
  Quadrilateral quad;
  quad.vertices_ = vertices;
  quad.scale_ = polygon_scale(vertices);
  std::copy(analysis.angles.angles.begin(), analysis.angles.angles.end(),
            quad.angles_.values.begin());
  quad.angles_.clockwise = analysis.angles.clockwise;
  return quad;
}

InteriorAngles interior_angles(const Quadrilateral& quad) { return quad.angles(); }

PermIndex::PermIndex(int i, int j, int k, int l) : labels_{i, j, k, l} {
  std::array<int, 4> sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 4>{1, 2, 3, 4}) {
    throw Error(ErrorKind::InvalidPermutation,
                "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "," +
                    std::to_string(l) + ") is not a permutation of 1..4");
  }
}

PermIndex PermIndex::parse(std::string_view digits) {
  if (digits.size() != 4 ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '1' && c <= '4'; })) {
    throw Error(ErrorKind::InvalidPermutation,
                "expected four digits from 1-4, got '" + std::string(digits) + "'");
  }
  return {digits[0] - '0', digits[1] - '0', digits[2] - '0', digits[3] - '0'};
}

std::vector<PermIndex> PermIndex::all() {
  std::array<int, 4> labels{1, 2, 3, 4};
  std::vector<PermIndex> perms;
  perms.reserve(24);
  do {
    perms.emplace_back(labels[0], labels[1], labels[2], labels[3]);
  } while (std::next_permutation(labels.begin(), labels.end()));
  return perms;
}

std::string PermIndex::str() const {
  std::string s;
  for (int label : labels_) s.push_back(static_cast<char>('0' + label));
  return s;
}

AngleOffsets::AngleOffsets(const std::array<int, 4>& m, int modulus) : m_(m), modulus_(modulus) {
  if (modulus < 1) throw Error(ErrorKind::InvalidOffsets, "modulus must be at least 1");
  const int total = std::accumulate(m.begin(), m.end(), 0);
  if (total % (2 * modulus) != 0) {
    throw Error(ErrorKind::InvalidOffsets, "offsets sum to " + std::to_string(total) +
                                               ", not a multiple of " +
                                               std::to_string(2 * modulus));
  }
}

double AngleOffsets::shift(int label) const {
  return static_cast<double>(m(label)) * kPi / static_cast<double>(modulus_);
}

std::vector<AngleOffsets> offset_variants(int modulus) {
  if (modulus < 1) throw Error(ErrorKind::InvalidOffsets, "modulus must be at least 1");
  const int range = 2 * modulus;
  std::vector<AngleOffsets> variants;
  for (int a = 0; a < range; ++a)
    for (int b = 0; b < range; ++b)
      for (int c = 0; c < range; ++c)
        for (int d = 0; d < range; ++d)
          if ((a + b + c + d) % range == 0) variants.emplace_back(std::array{a, b, c, d}, modulus);
  return variants;
}

double alpha(const InteriorAngles& angles, int label, int n) {
  return (2.0 * n + 1.0) / 2.0 * angles.at(label);
}

std::array<double, 4> rotation_angles(const InteriorAngles& angles, int n,
                                      const std::optional<AngleOffsets>& offsets) {
  std::array<double, 4> result{};
  for (int label = 1; label <= 4; ++label) {
    result[slot(label)] = alpha(angles, label, n) + (offsets ? offsets->shift(label) : 0.0);
  }
  return result;
}

DirectIsometry vertex_rotation(const Quadrilateral& quad, const InteriorAngles& angles, int label,
                               int n, const std::optional<AngleOffsets>& offsets) {
  const double shift = offsets ? offsets->shift(label) : 0.0;
  return rotation_about(quad.vertex(label), alpha(angles, label, n) + shift);
}

Point b_point(const Quadrilateral& quad, const InteriorAngles& angles, const PermIndex& perm, int n,
              const std::optional<AngleOffsets>& offsets) {
  const ChainInput input = chain_input(quad, angles, perm, n, offsets);
  return chain_fixed_point(input.centers, input.angles);
}

DirectIsometry four_rotation_map(const Quadrilateral& quad, const InteriorAngles& angles,
                                 const PermIndex& perm, int n,
                                 const std::optional<AngleOffsets>& offsets) {
  return compose_chain({vertex_rotation(quad, angles, perm.i(), n, offsets),
                        vertex_rotation(quad, angles, perm.j(), n, offsets),
                        vertex_rotation(quad, angles, perm.k(), n, offsets),
                        vertex_rotation(quad, angles, perm.l(), n, offsets)});
}

FixedPoint b_point_by_composition(const Quadrilateral& quad, const InteriorAngles& angles,
                                  const PermIndex& perm, int n,
                                  const std::optional<AngleOffsets>& offsets) {
  return fixed_point(four_rotation_map(quad, angles, perm, n, offsets));
}

LabeledParallelogram LabeledParallelogram::primed() const {
  LabeledParallelogram p = *this;
  p.vertices = {vertices[0], vertices[3], vertices[2], vertices[1]};
  p.reversed = !reversed;
  return p;
}

double closure_residual(const Quad& q) {
  return std::abs(q[0].z() - q[1].z() + q[2].z() - q[3].z());
}

LabeledParallelogram parallelogram(const Quadrilateral& quad, const InteriorAngles& angles,
                                   const PermIndex& perm, int n,
                                   const std::optional<AngleOffsets>& offsets) {
  LabeledParallelogram p;
  p.vertices = {b_point(quad, angles, perm, n, offsets),
                b_point(quad, angles, perm.swap_last(), n, offsets),
                b_point(quad, angles, perm.swap_first().swap_last(), n, offsets),
                b_point(quad, angles, perm.swap_first(), n, offsets)};
  p.perm = perm;
  p.n = n;
  p.offsets = offsets;
  p.source = quad.vertices();
  p.rotation_angles = rotation_angles(angles, n, offsets);
  return p;
}

bool same_vertex_set(const Quad& a, const Quad& b, double tol) {
  std::array<int, 4> order{0, 1, 2, 3};
  do {
    bool all_close = true;
    for (std::size_t m = 0; m < 4 && all_close; ++m) {
      all_close = distance(a[m], b[static_cast<std::size_t>(order[m])]) <= tol;
    }
    if (all_close) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

std::size_t count_distinct_vertex_sets(std::span<const Quad> quads, double tol) {
  std::vector<Quad> classes;
  for (const auto& q : quads) {
    const bool seen = std::any_of(classes.begin(), classes.end(),
                                  [&](const Quad& c) { return same_vertex_set(c, q, tol); });
    if (!seen) classes.push_back(q);
  }
  return classes.size();
}

const std::array<PermIndex, 6>& family_representatives() {
  static const std::array<PermIndex, 6> reps{PermIndex{1, 2, 3, 4}, PermIndex{3, 4, 1, 2},
                                             PermIndex{1, 3, 2, 4}, PermIndex{2, 4, 1, 3},
                                             PermIndex{1, 4, 3, 2}, PermIndex{3, 2, 1, 4}};
  return reps;
}

SixFamilies six_families(const Quadrilateral& quad, const InteriorAngles& angles, int n) {
  SixFamilies result;
  const auto& reps = family_representatives();
  for (std::size_t f = 0; f < reps.size(); ++f) {
    result.families[f] = parallelogram(quad, angles, reps[f], n);
  }

  const double tol = 1e-9 * quad.scale();
  std::vector<Quad> sweep;
  for (const auto& perm : PermIndex::all()) {
    const Quad vertices = parallelogram(quad, angles, perm, n).vertices;
    const bool matched =
        std::any_of(result.families.begin(), result.families.end(),
                    [&](const LabeledParallelogram& f) { return same_vertex_set(f.vertices, vertices, tol); });
    if (!matched) ++result.unmatched_permutations;
    sweep.push_back(vertices);
  }
  result.distinct_vertex_sets = count_distinct_vertex_sets(sweep, tol);
  return result;
}

Point PivotCenter::barycentric(Point a_i, Point a_j) const {
  return {mu_i * a_i.x + mu_j * a_j.x, mu_i * a_i.y + mu_j * a_j.y};
}

namespace {

// sin((a + b) / 2) with the rounding error of a + b folded back in, so the
// result keeps full relative accuracy near multiples of 2 pi.
struct HalfSum {
  double sine;
  double angle;  // fl(a + b) / 2
};

HalfSum half_sum(double a, double b) {
  const double s = a + b;
  const double b_virtual = s - a;
  const double lost = (a - (s - b_virtual)) + (b - b_virtual);
  const double h = 0.5 * s;
  return {std::sin(h) + std::cos(h) * (0.5 * lost), h};
}

// 1 - e^{i(a+b)} = -2i sin((a+b)/2) e^{i(a+b)/2}
Complex one_minus_rotor(const HalfSum& half) {
  return Complex(0.0, -2.0 * half.sine) * std::polar(1.0, half.angle);
}

}  // namespace

std::array<Complex, 2> pivot_weights_exponential(double alpha_i, double alpha_j) {
  const Complex ei = std::polar(1.0, alpha_i);
  const Complex ej = std::polar(1.0, alpha_j);
  const Complex denominator = 2.0 * one_minus_rotor(half_sum(alpha_i, alpha_j));
  return {(1.0 - ei) * (1.0 + ej) / denominator, (1.0 - ej) * (1.0 + ei) / denominator};
}

std::array<double, 2> pivot_weights_cosine(double alpha_i, double alpha_j) {
  // Half-angle form of (1 - cos a_i + cos a_j - cos(a_i + a_j)) / (2 - 2 cos(a_i + a_j)).
  const double denominator = half_sum(alpha_i, alpha_j).sine;
  return {std::sin(0.5 * alpha_i) * std::cos(0.5 * alpha_j) / denominator,
          std::cos(0.5 * alpha_i) * std::sin(0.5 * alpha_j) / denominator};
}

PivotCenter pivot_center(const Quadrilateral& quad, const InteriorAngles& angles, int i, int j,
                         int n) {
  if (i == j || i < 1 || i > 4 || j < 1 || j > 4) {
    throw Error(ErrorKind::InvalidPermutation, "pivot needs two distinct labels in 1..4");
  }
  const double ai = alpha(angles, i, n);
  const double aj = alpha(angles, j, n);
  const Complex ei = std::polar(1.0, ai);
  const Complex ej = std::polar(1.0, aj);
  const Complex gap = one_minus_rotor(half_sum(ai, aj));
  if (std::abs(gap) <= kDefaultTolerance) {
    throw Error(ErrorKind::PivotUndefined, "alpha_i + alpha_j is a multiple of 2 pi");
  }
  const Complex zi = quad.vertex(i).z();
  const Complex zj = quad.vertex(j).z();
  const Complex center = (zi * (1.0 - ei) * (1.0 + ej) + zj * (1.0 - ej) * (1.0 + ei)) / (2.0 * gap);
  const auto mu = pivot_weights_cosine(ai, aj);
  return PivotCenter{Point::from(center), mu[0], mu[1], i, j, n};
}

DirectIsometry congruence_rotation(const Quadrilateral& quad, const InteriorAngles& angles, int i,
                                   int j, int n) {
  const PivotCenter pivot = pivot_center(quad, angles, i, j, n);
  return rotation_about(pivot.point, -(alpha(angles, i, n) + alpha(angles, j, n)));
}

AreaDecomposition signed_area(const LabeledParallelogram& p) {
  const auto& v = p.vertices;
  AreaDecomposition d;
  d.area = ((v[3].z() - v[0].z()) * std::conj(v[1].z() - v[0].z())).imag();

  const double ai = p.rotation_angles[slot(p.perm.i())];
  const double aj = p.rotation_angles[slot(p.perm.j())];
  const double ak = p.rotation_angles[slot(p.perm.k())];
  d.factor_im = 2.0 * (std::sin(ai) + std::sin(aj) + std::sin(ak) - std::sin(ai + aj) -
                       std::sin(ai + ak) - std::sin(aj + ak) + std::sin(ai + aj + ak));

  const Complex zi = p.source[slot(p.perm.i())].z();
  const Complex zj = p.source[slot(p.perm.j())].z();
  const Complex zk = p.source[slot(p.perm.k())].z();
  const Complex zl = p.source[slot(p.perm.l())].z();
  d.chord_product_re = ((zj - zi) * std::conj(zl - zk)).real();
  if (p.reversed) d.chord_product_re = -d.chord_product_re;
  return d;
}

}  // namespace quadsq
