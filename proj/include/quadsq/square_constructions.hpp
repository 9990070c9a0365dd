#pragma once

// Squares from a parallelogram, and the two-stage map that produces squares
// from any simple quadrilateral.
//
// When a_1 a_2 a_3 a_4 is a parallelogram and (i, j, k, l) is one of the eight
// admissible tuples, P_{ijkl,n} is a square for every n.

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "quadsq/quad_constructions.hpp"

namespace quadsq {

class ParallelogramQuad {
 public:
  const Quadrilateral& base() const { return base_; }
  const InteriorAngles& angles() const { return base_.angles(); }
  Point center() const { return center_; }
  /// |a1 - a2 + a3 - a4| measured at acceptance.
  double closure() const { return closure_; }
  double scale() const { return base_.scale(); }

 private:
  friend ParallelogramQuad as_parallelogram(const Quadrilateral& quad, double tol);
  ParallelogramQuad(Quadrilateral base, Point center, double closure)
      : base_(std::move(base)), center_(center), closure_(closure) {}

  Quadrilateral base_;
  Point center_;
  double closure_;
};

/// Accepts `quad` when |a1 - a2 + a3 - a4| <= tol * scale and the angle
/// relations alpha_1 = alpha_3, alpha_2 = alpha_4, alpha_1 + alpha_2 = pi / 2
/// (family n = 0) hold to the same tolerance. Throws NotAParallelogram.
ParallelogramQuad as_parallelogram(const Quadrilateral& quad, double tol = kDefaultTolerance);

/// One of (1,2,3,4), (1,4,3,2) or a cyclic shift of either.
class AdmissibleTuple {
 public:
  /// Throws Error(NotAdmissibleTuple).
  explicit AdmissibleTuple(const PermIndex& perm);
  static const std::array<AdmissibleTuple, 8>& all();

  const PermIndex& perm() const { return perm_; }

 private:
  PermIndex perm_;
};

struct SquareMetrics {
  double side = 0.0;          // mean side length
  double side_spread = 0.0;   // max minus min side length
  double angle_error = 0.0;   // max |corner angle - pi/2|, radians
  double closure = 0.0;
  int orientation = 0;        // sign of the signed area
};

/// Side, corner and closure measurements of q as an ordered quadrilateral.
/// Corner angles are reported as 0 error when the square has collapsed to a
/// point (mean side <= 1e-9 * scale).
SquareMetrics measure_square(const Quad& q, double scale);

struct LabeledSquare {
  LabeledParallelogram shape;
  SquareMetrics metrics;
  // b_ijkl - b_ijlk against -rotor * (b_ijkl - b_jikl), where rotor is
  // e^{i(alpha_i + alpha_j)} = (-1)^n i without offsets.
  double relation_residual = 0.0;
  // Same check for the companion square P_{ijlk,n}.
  double mirror_relation_residual = 0.0;
  bool degenerate = false;

  double side() const { return metrics.side; }
  int orientation() const { return metrics.orientation; }
};

/// The eight offset tuples (modulus 2) that keep the square property:
/// m_1 = m_3, m_2 = m_4 and m_1 + m_2 even.
std::vector<AngleOffsets> square_offset_variants();

/// Throws NotAdmissibleTuple or InvalidOffsets.
LabeledSquare square(const ParallelogramQuad& quad, const AdmissibleTuple& tuple, int n,
                     const std::optional<AngleOffsets>& offsets = std::nullopt);

struct FourSquares {
  // P_1234, P_3214, P_3412, P_1432
  std::array<LabeledSquare, 4> squares;
  // Over the 32 squares (8 tuples, P and P' of ijkl and ijlk).
  std::size_t distinct_vertex_sets = 0;
  std::size_t unmatched = 0;
};

FourSquares four_distinct_squares(const ParallelogramQuad& quad, int n);

/// Pivot center from the parallelogram-specific formula; the congruence
/// rotation about it is through -(2n + 1) pi / 2. Requires adjacent labels.
PivotCenter pivot_center_simplified(const ParallelogramQuad& quad, int i, int j, int n);
double simplified_congruence_angle(int n);

struct CentralSymmetryRecord {
  double vertex_residual = 0.0;    // max |r_{C,pi}(P_ijkl)[m] - P_klij[m]|
  double midpoint_residual = 0.0;  // |(b_ijkl + b_klij) / 2 - C|
  bool primed_set_match = false;   // image equals P'_klij as a vertex set
};

CentralSymmetryRecord central_symmetry_check(const ParallelogramQuad& quad,
                                             const AdmissibleTuple& tuple, int n);

enum class Parity { Even, Odd };

struct SquareCenter {
  Point point;
  PermIndex tuple;
  int n;
  Parity parity;
};

SquareCenter square_center(const ParallelogramQuad& quad, const AdmissibleTuple& tuple, int n);

/// Predicted C_{ijkl,n} - C_{ijkl,n-2}:
/// i sin(a_i) (cos alpha_{i,n-1} + (-1)^n sin alpha_{i,n-1}) (a_j - a_i).
Point square_center_step(const ParallelogramQuad& quad, const AdmissibleTuple& tuple, int n);

struct CenterLine {
  Point anchor;     // centroid of the parity class
  Point direction;  // unit vector
  Parity parity;
  int i;
  int j;
  double max_residual = 0.0;  // largest perpendicular distance of a center
  // All centers of the class coincide; the direction is then taken
  // perpendicular to a_i a_j.
  bool degenerate = false;
};

/// Principal-axis lines through the even and odd centers. Throws
/// Error(InsufficientPoints) unless each parity has at least two n values.
std::pair<CenterLine, CenterLine> center_lines(const ParallelogramQuad& quad,
                                               const AdmissibleTuple& tuple,
                                               std::span<const int> ns);

struct DiagonalRecord {
  double cross_residual = 0.0;       // |(b_ijkl - b_jilk) x (a_j - a_i)|
  Complex coefficient;               // (b_ijkl - b_jilk) / (a_i - a_j)
  double predicted_coefficient = 0.0;  // 1 - cos alpha_i - (-1)^n sin alpha_i
};

DiagonalRecord diagonal_parallel_check(const ParallelogramQuad& quad, const AdmissibleTuple& tuple,
                                       int n);

struct CentersParallelogram {
  Quad vertices{};  // [C_ijkl, C_kjil, C_klij, C_ilkj]
  PermIndex tuple{1, 2, 3, 4};
  int n = 0;
  double closure = 0.0;
  double center_residual = 0.0;  // |midpoint(C_ijkl, C_klij) - C|
};

CentersParallelogram centers_parallelogram(const ParallelogramQuad& quad, int n,
                                           const AdmissibleTuple& tuple = AdmissibleTuple(
                                               PermIndex{1, 2, 3, 4}));

struct CompositeResult {
  LabeledParallelogram stage1;
  ParallelogramQuad stage2_input;
  LabeledSquare selected;  // the square for the requested stage-2 tuple
  FourSquares squares;
  // Stage-2 vertices are the stage-1 vertices in stored order.
  static constexpr const char* vertex_order = "stage2 a1..a4 = [b_ijkl, b_ijlk, b_jilk, b_jikl]";
};

inline constexpr double kCompositeTolerance = 1e-7;

/// Stage 1 builds P_{perm,n1}; stage 2 treats its vertices as a parallelogram
/// and builds the squares at n2. Throws Error(DegenerateIntermediate) when
/// the stage-1 parallelogram has (near) zero area.
CompositeResult squares_from_any_quad(const Quadrilateral& quad,
                                      const PermIndex& stage1_perm = PermIndex{1, 2, 3, 4},
                                      int stage1_n = 0,
                                      const AdmissibleTuple& stage2_tuple =
                                          AdmissibleTuple(PermIndex{1, 2, 3, 4}),
                                      int stage2_n = 0);

}  // namespace quadsq
