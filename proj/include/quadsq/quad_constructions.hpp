#pragma once

// Parallelograms from an arbitrary simple quadrilateral.
//
// Vertex labels are 1-based throughout (a_1 .. a_4), matching the index
// strings users type ("1234"). For a permutation (i, j, k, l) and a family
// index n, b_{ijkl,n} is the fixed point of
//
//   r_{a_i, alpha_i} r_{a_j, alpha_j} r_{a_k, alpha_k} r_{a_l, alpha_l},
//   alpha_{v,n} = (2n + 1) / 2 * interior_angle(v),
//
// and P_{ijkl,n} = [b_{ijkl}, b_{ijlk}, b_{jilk}, b_{jikl}] is a parallelogram.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quadsq/isometry.hpp"

namespace quadsq {

using Quad = std::array<Point, 4>;

struct InteriorAngles {
  std::array<double, 4> values{};  // interior angle at a_1 .. a_4, each in (0, 2pi)
  bool clockwise = false;          // vertex order was reversed to measure them

  double at(int label) const { return values.at(static_cast<std::size_t>(label - 1)); }
  double sum() const { return values[0] + values[1] + values[2] + values[3]; }
};

class Quadrilateral {
 public:
  /// Throws Error(DegenerateQuadrilateral) for repeated vertices, collinear
  /// consecutive vertices or crossing edges.
  static Quadrilateral make(const Quad& vertices);

  const Quad& vertices() const { return vertices_; }
  Point vertex(int label) const { return vertices_.at(static_cast<std::size_t>(label - 1)); }
  double scale() const { return scale_; }
  bool clockwise() const { return angles_.clockwise; }
  const InteriorAngles& angles() const { return angles_; }

 private:
  Quadrilateral() = default;

  Quad vertices_{};
  InteriorAngles angles_;
  double scale_ = 0.0;
};

InteriorAngles interior_angles(const Quadrilateral& quad);

/// A permutation (i, j, k, l) of the labels 1..4.
class PermIndex {
 public:
  /// Throws Error(InvalidPermutation) unless the labels are a permutation.
  PermIndex(int i, int j, int k, int l);
  /// Parses "ijkl", e.g. "1324".
  static PermIndex parse(std::string_view digits);
  /// All 24 permutations in lexicographic order.
  static std::vector<PermIndex> all();

  int i() const { return labels_[0]; }
  int j() const { return labels_[1]; }
  int k() const { return labels_[2]; }
  int l() const { return labels_[3]; }
  const std::array<int, 4>& labels() const { return labels_; }
  std::string str() const;

  PermIndex swap_first() const { return {j(), i(), k(), l()}; }   // ijkl -> jikl
  PermIndex swap_last() const { return {i(), j(), l(), k()}; }    // ijkl -> ijlk
  PermIndex reversed() const { return {l(), k(), j(), i()}; }     // ijkl -> lkji

  friend bool operator==(const PermIndex&, const PermIndex&) = default;

 private:
  std::array<int, 4> labels_;
};

/// Integer angle offsets m_1..m_4 over modulus M: vertex v is additionally
/// rotated by m_v * pi / M. Valid when the m_v sum to a multiple of 2M, which
/// keeps the total rotation an odd multiple of pi.
class AngleOffsets {
 public:
  /// Throws Error(InvalidOffsets) when modulus < 1 or the sum condition fails.
  AngleOffsets(const std::array<int, 4>& m, int modulus);

  int m(int label) const { return m_.at(static_cast<std::size_t>(label - 1)); }
  const std::array<int, 4>& values() const { return m_; }
  int modulus() const { return modulus_; }
  double shift(int label) const;

  friend bool operator==(const AngleOffsets&, const AngleOffsets&) = default;

 private:
  std::array<int, 4> m_;
  int modulus_;
};

/// Every valid tuple with 0 <= m_v < 2M, in lexicographic order.
std::vector<AngleOffsets> offset_variants(int modulus);

/// (2n + 1) / 2 times the interior angle at `label`.
double alpha(const InteriorAngles& angles, int label, int n);

/// alpha(v, n) plus the optional offset shift, for v = 1..4.
std::array<double, 4> rotation_angles(const InteriorAngles& angles, int n,
                                      const std::optional<AngleOffsets>& offsets = std::nullopt);

DirectIsometry vertex_rotation(const Quadrilateral& quad, const InteriorAngles& angles, int label,
                               int n, const std::optional<AngleOffsets>& offsets = std::nullopt);

/// b_{ijkl,n} from the closed-form expansion.
Point b_point(const Quadrilateral& quad, const InteriorAngles& angles, const PermIndex& perm, int n,
              const std::optional<AngleOffsets>& offsets = std::nullopt);

/// b_{ijkl,n} as the fixed point of the composed four-rotation map.
FixedPoint b_point_by_composition(const Quadrilateral& quad, const InteriorAngles& angles,
                                  const PermIndex& perm, int n,
                                  const std::optional<AngleOffsets>& offsets = std::nullopt);

/// The composed map r_i r_j r_k r_l itself.
DirectIsometry four_rotation_map(const Quadrilateral& quad, const InteriorAngles& angles,
                                 const PermIndex& perm, int n,
                                 const std::optional<AngleOffsets>& offsets = std::nullopt);

struct LabeledParallelogram {
  // [b_ijkl, b_ijlk, b_jilk, b_jikl]; for the primed (reversed) variant the
  // order is [b_ijkl, b_jikl, b_jilk, b_ijlk].
  Quad vertices{};
  PermIndex perm{1, 2, 3, 4};
  int n = 0;
  bool reversed = false;
  std::optional<AngleOffsets> offsets;
  Quad source{};                          // a_1 .. a_4
  std::array<double, 4> rotation_angles{};  // angle used at a_1 .. a_4

  LabeledParallelogram primed() const;
};

/// |z1 - z2 + z3 - z4|: zero exactly for a parallelogram in this order.
double closure_residual(const Quad& q);

LabeledParallelogram parallelogram(const Quadrilateral& quad, const InteriorAngles& angles,
                                   const PermIndex& perm, int n,
                                   const std::optional<AngleOffsets>& offsets = std::nullopt);

/// True when every point of `a` can be paired with a distinct point of `b`
/// no farther than `tol`.
bool same_vertex_set(const Quad& a, const Quad& b, double tol);

/// Number of classes of `quads` under same_vertex_set.
std::size_t count_distinct_vertex_sets(std::span<const Quad> quads, double tol);

struct SixFamilies {
  // P_1234, P_3412, P_1324, P_2413, P_1432, P_3214
  std::array<LabeledParallelogram, 6> families;
  // Over all 24 permutations: how many distinct vertex sets appear, and how
  // many permutations produce a set matching none of the six families.
  std::size_t distinct_vertex_sets = 0;
  std::size_t unmatched_permutations = 0;
};

SixFamilies six_families(const Quadrilateral& quad, const InteriorAngles& angles, int n);

/// The six family representatives, in the order used by six_families().
const std::array<PermIndex, 6>& family_representatives();

struct PivotCenter {
  Point point;   // from the direct two-term formula
  double mu_i;   // real barycentric weights from the cosine form
  double mu_j;
  int i;
  int j;
  int n;

  Point barycentric(Point a_i, Point a_j) const;
};

/// Barycentric weights from the complex-exponential form; for valid input
/// both are real up to rounding.
std::array<Complex, 2> pivot_weights_exponential(double alpha_i, double alpha_j);
/// The same weights in real form, evaluated through the half-angle identity
/// mu_i = sin(a_i/2) cos(a_j/2) / sin((a_i + a_j)/2).
std::array<double, 2> pivot_weights_cosine(double alpha_i, double alpha_j);

/// Center of the rotation carrying P_{ijkl,n} onto P'_{klji,n}. Throws
/// Error(PivotUndefined) when alpha_i + alpha_j is a multiple of 2 pi.
PivotCenter pivot_center(const Quadrilateral& quad, const InteriorAngles& angles, int i, int j,
                         int n);

/// Rotation about the pivot center through -(alpha_i + alpha_j).
DirectIsometry congruence_rotation(const Quadrilateral& quad, const InteriorAngles& angles, int i,
                                   int j, int n);

struct AreaDecomposition {
  double area = 0.0;              // signed, positive for counter-clockwise
  double factor_im = 0.0;         // Im of the purely imaginary angle factor
  double chord_product_re = 0.0;  // Re[(a_j - a_i) conj(a_l - a_k)]
};

AreaDecomposition signed_area(const LabeledParallelogram& p);

}  // namespace quadsq
