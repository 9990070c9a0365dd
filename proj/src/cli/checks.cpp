#include "quadsq/cli/checks.hpp"

#include <algorithm>
#include <cmath>

#include "quadsq/errors.hpp"

namespace quadsq::cli {
namespace {

constexpr double kTight = 1e-12;

double max_vertex_distance(const Quad& a, const Quad& b) {
  double worst = 0.0;
  for (std::size_t m = 0; m < 4; ++m) worst = std::max(worst, distance(a[m], b[m]));
  return worst;
}

Quad apply_all(const DirectIsometry& f, const Quad& q) { return {f(q[0]), f(q[1]), f(q[2]), f(q[3])}; }

std::vector<PermIndex> perms_for(const CheckOptions& options) {
  if (options.perm) return {*options.perm};
  return PermIndex::all();
}

Point unit(Point v) { return (1.0 / norm(v)) * v; }

void check_parallelogram_family(const Quadrilateral& quad, const PermIndex& perm, int n,
                                const CheckOptions& options, VerificationReport& report) {
  const InteriorAngles& angles = quad.angles();
  const double s = quad.scale();
  const double s2 = s * s;
  const double tol = options.tol;

  const LabeledParallelogram p = parallelogram(quad, angles, perm, n);
  report.record("closure", "b_ijkl - b_ijlk + b_jilk - b_jikl = 0", closure_residual(p.vertices) / s,
                tol);

  try {
    const FixedPoint composed = b_point_by_composition(quad, angles, perm, n);
    report.record("dual_oracle", "closed-form b_ijkl = fixed point of r_i r_j r_k r_l",
                  distance(composed.point, p.vertices[0]) / s, tol);
  } catch (const Error& e) {
    report.fail("dual_oracle", "closed-form b_ijkl = fixed point of r_i r_j r_k r_l", tol, e.what());
  }

  const DirectIsometry map = four_rotation_map(quad, angles, perm, n);
  const DirectIsometry twice = compose(map, map);
  report.record("involution", "(r_i r_j r_k r_l)^2 = id",
                std::max(std::abs(twice.rotor().value() - 1.0), std::abs(twice.offset()) / s), tol);

  report.record("reflection_symmetry", "b_ijkl,n = b_lkji,-n-1",
                distance(p.vertices[0], b_point(quad, angles, perm.reversed(), -n - 1)) / s, tol);

  {
    const PermIndex opposite{perm.k(), perm.l(), perm.i(), perm.j()};
    const Quad target = parallelogram(quad, angles, opposite, -n - 1).primed().vertices;
    const DirectIsometry half_turn =
        rotation_about(midpoint(p.vertices[0], p.vertices[2]), kPi);
    report.record("half_turn_congruence", "half turn about center maps P_ijkl,n to P'_klij,-n-1",
                  max_vertex_distance(apply_all(half_turn, p.vertices), target) / s, tol);
  }

  {
    const auto& r = p.rotation_angles;
    const auto e = [&](int label) { return std::polar(1.0, r[static_cast<std::size_t>(label - 1)]); };
    const auto z = [&](int label) { return quad.vertex(label).z(); };
    const Complex first = 0.5 * (1.0 - e(perm.i())) * (1.0 - e(perm.j())) * (z(perm.j()) - z(perm.i()));
    const Complex second = 0.5 * std::polar(1.0, r[static_cast<std::size_t>(perm.i() - 1)] +
                                                     r[static_cast<std::size_t>(perm.j() - 1)]) *
                           (1.0 - e(perm.k())) * (1.0 - e(perm.l())) * (z(perm.l()) - z(perm.k()));
    report.record("side_vector_first", "b_jikl - b_ijkl = (1-e_i)(1-e_j)(a_j-a_i)/2",
                  std::abs((p.vertices[3].z() - p.vertices[0].z()) - first) / s, tol);
    report.record("side_vector_second", "b_ijlk - b_ijkl = e_ij (1-e_k)(1-e_l)(a_l-a_k)/2",
                  std::abs((p.vertices[1].z() - p.vertices[0].z()) - second) / s, tol);
  }

  const AreaDecomposition area = signed_area(p);
  report.record("area_factorization", "area = Im[I] Re[(a_j-a_i) conj(a_l-a_k)] / 4",
                std::abs(area.area - 0.25 * area.factor_im * area.chord_product_re) / s2, tol);
  {
    const PermIndex ikjl{perm.i(), perm.k(), perm.j(), perm.l()};
    const PermIndex ilkj{perm.i(), perm.l(), perm.k(), perm.j()};
    const double a2 = signed_area(parallelogram(quad, angles, ikjl, n)).area;
    const double a3 = signed_area(parallelogram(quad, angles, ilkj, n)).area;
    report.record("area_sum", "area(ijkl) = area(ikjl) + area(ilkj)",
                  std::abs(area.area - a2 - a3) / s2, tol);
    const double mirrored = signed_area(parallelogram(quad, angles, perm.swap_last(), -n - 1)).area;
    report.record("area_reflection", "area(ijkl,n) = area(ijlk,-n-1)",
                  std::abs(area.area - mirrored) / s2, tol);
  }

  try {
    const DirectIsometry rotation = congruence_rotation(quad, angles, perm.i(), perm.j(), n);
    const PermIndex klji{perm.k(), perm.l(), perm.j(), perm.i()};
    const Quad target = parallelogram(quad, angles, klji, n).primed().vertices;
    report.record("congruence_rotation", "R_ij maps P_ijkl onto P'_klji vertexwise",
                  max_vertex_distance(apply_all(rotation, p.vertices), target) / s, tol);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::PivotUndefined) throw;
    report.annotate("congruence_rotation", "pivot undefined for some samples (skipped)");
  }
}

void check_pivots(const Quadrilateral& quad, int n, const CheckOptions& options,
                  VerificationReport& report) {
  const InteriorAngles& angles = quad.angles();
  const double s = quad.scale();
  const double tol = options.tol;
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) {
      try {
        const PivotCenter pivot = pivot_center(quad, angles, i, j, n);
        const Point a_i = quad.vertex(i);
        const Point a_j = quad.vertex(j);
        // The weights grow like 1 / |1 - e^{i(alpha_i + alpha_j)}|, and so does
        // the rounding error of anything built from them. The 1e-12 checks
        // are therefore taken relative to |mu_i| + |mu_j|.
        const double weight = std::abs(pivot.mu_i) + std::abs(pivot.mu_j);
        report.record("pivot_collinear", "O_ij lies on line a_i a_j",
                      std::abs(cross(unit(a_j - a_i), pivot.point - a_i)) / s, tol);
        report.record("pivot_barycentric", "O_ij = mu_i a_i + mu_j a_j",
                      distance(pivot.point, pivot.barycentric(a_i, a_j)) / (s * weight), kTight);
        report.record("pivot_weight_sum", "mu_i + mu_j = 1",
                      std::abs(pivot.mu_i + pivot.mu_j - 1.0) / weight, kTight);
        const auto exponential = pivot_weights_exponential(alpha(angles, i, n), alpha(angles, j, n));
        report.record("pivot_weight_forms", "real and exponential weights agree",
                      std::max(std::abs(exponential[0] - pivot.mu_i),
                               std::abs(exponential[1] - pivot.mu_j)) / weight,
                      kTight);
        const PivotCenter mirrored = pivot_center(quad, angles, i, j, -n - 1);
        report.record("pivot_reflection", "O_ij,n = O_ij,-n-1",
                      distance(pivot.point, mirrored.point) / s, tol);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::PivotUndefined) throw;
        report.annotate("pivot_collinear", "pivot undefined for some samples (skipped)");
      }
    }
  }
}

void check_composite(const Quadrilateral& quad, const CheckOptions& options,
                     VerificationReport& report) {
  const double tol = std::max(options.tol, kCompositeTolerance);
  for (const PermIndex& stage1 : family_representatives()) {
    try {
      const CompositeResult result = squares_from_any_quad(quad, stage1, 0);
      const double s = result.stage2_input.scale();
      for (const LabeledSquare& sq : result.squares.squares) {
        report.record("composite_square_sides", "two-stage map: equal sides",
                      sq.metrics.side_spread / s, tol);
        report.record("composite_square_angles", "two-stage map: right angles",
                      sq.metrics.angle_error, tol);
        report.record("composite_square_relation", "two-stage map: adjacent sides differ by a quarter turn",
                      sq.relation_residual / s, tol);
      }
      report.record("composite_four_squares", "two-stage map: 32 squares, 4 vertex sets",
                    static_cast<double>(result.squares.unmatched +
                                        (result.squares.distinct_vertex_sets == 4 ? 0 : 1)),
                    0.0);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DegenerateIntermediate) {
        report.fail("composite_square_sides", "two-stage map: equal sides", tol, e.what());
      } else {
        report.annotate("composite_square_sides", "degenerate stage-1 parallelogram skipped");
      }
    }
  }
}

}  // namespace

std::vector<int> CheckOptions::ns() const {
  std::vector<int> out;
  for (int n = n_min; n <= n_max; ++n) out.push_back(n);
  return out;
}

void check_quadrilateral(const Quadrilateral& quad, const CheckOptions& options,
                         VerificationReport& report) {
  const InteriorAngles& angles = quad.angles();
  const double s = quad.scale();
  const double tol = options.tol;
  report.record("angle_sum", "interior angles sum to 2 pi", std::abs(angles.sum() - kTwoPi), tol);

  for (int n : options.ns()) {
    double alpha_total = 0.0;
    for (int label = 1; label <= 4; ++label) alpha_total += alpha(angles, label, n);
    report.record("alpha_sum", "sum of alpha_v,n = (2n+1) pi",
                  std::abs(alpha_total - (2.0 * n + 1.0) * kPi), tol);

    for (const PermIndex& perm : perms_for(options)) {
      check_parallelogram_family(quad, perm, n, options, report);
    }
    check_pivots(quad, n, options, report);

    const SixFamilies families = six_families(quad, angles, n);
    report.record("family_collapse", "24 permutations give 6 vertex sets",
                  static_cast<double>(families.unmatched_permutations +
                                      (families.distinct_vertex_sets == 6 ? 0 : 1)),
                  0.0);
  }

  for (int modulus = 1; modulus <= 3; ++modulus) {
    for (const AngleOffsets& offsets : offset_variants(modulus)) {
      for (const PermIndex& perm : family_representatives()) {
        const LabeledParallelogram p = parallelogram(quad, angles, perm, 0, offsets);
        report.record("offset_closure", "closure with angle offsets m_v pi / M, sum m = 0 mod 2M",
                      closure_residual(p.vertices) / s, tol);
      }
    }
  }

  check_composite(quad, options, report);
}

void check_orientation_signs(const Quadrilateral& quad, const std::map<std::string, int>& expected,
                             VerificationReport& report) {
  for (const auto& [digits, sign] : expected) {
    const double area = signed_area(parallelogram(quad, quad.angles(), PermIndex::parse(digits), 0)).area;
    const int actual = area > 0.0 ? 1 : (area < 0.0 ? -1 : 0);
    report.record("orientation_signs", "family orientation signs at n = 0",
                  actual == sign ? 0.0 : 1.0, 0.0);
  }
}

void check_parallelogram(const ParallelogramQuad& quad, const CheckOptions& options,
                         VerificationReport& report) {
  const double s = quad.scale();
  const double s2 = s * s;
  const double tol = options.tol;
  report.record("parallelogram_closure", "a_1 - a_2 + a_3 - a_4 = 0", quad.closure() / s, tol);

  const auto offsets = square_offset_variants();
  for (int n : options.ns()) {
    for (const AdmissibleTuple& tuple : AdmissibleTuple::all()) {
      if (options.perm && !(tuple.perm() == *options.perm)) continue;
      const PermIndex& t = tuple.perm();
      const LabeledSquare sq = square(quad, tuple, n);
      report.record("square_sides", "P_ijkl has equal sides", sq.metrics.side_spread / s, tol);
      report.record("square_angles", "P_ijkl has right angles", sq.metrics.angle_error, tol);
      report.record("square_relation", "b_ijkl - b_ijlk = -(-1)^n i (b_ijkl - b_jikl)",
                    sq.relation_residual / s, tol);
      report.record("square_mirror_relation", "b_ijlk - b_ijkl = (-1)^n i (b_ijlk - b_jilk)",
                    sq.mirror_relation_residual / s, tol);
      const SquareMetrics mirror =
          measure_square(parallelogram(quad.base(), quad.angles(), t.swap_last(), n).vertices, s);
      report.record("square_mirror_sides", "P_ijlk has equal sides", mirror.side_spread / s, tol);

      for (const AngleOffsets& m : offsets) {
        const LabeledSquare shifted = square(quad, tuple, n, m);
        report.record("square_offsets", "squares persist under the 8 admissible offsets",
                      std::max(shifted.metrics.side_spread / s, shifted.metrics.angle_error), tol);
      }

      const PivotCenter simple = pivot_center_simplified(quad, t.i(), t.j(), n);
      const PivotCenter general = pivot_center(quad.base(), quad.angles(), t.i(), t.j(), n);
      report.record("pivot_simplified", "parallelogram pivot formula matches the general one",
                    distance(simple.point, general.point) / s, tol);
      {
        const DirectIsometry r = rotation_about(simple.point, simplified_congruence_angle(n));
        const PermIndex klji{t.k(), t.l(), t.j(), t.i()};
        const Quad target = parallelogram(quad.base(), quad.angles(), klji, n).primed().vertices;
        report.record("pivot_simplified_rotation",
                      "rotation by -(2n+1) pi / 2 about O_ij maps P_ijkl onto P'_klji",
                      max_vertex_distance(apply_all(r, sq.shape.vertices), target) / s, tol);
      }

      const CentralSymmetryRecord sym = central_symmetry_check(quad, tuple, n);
      report.record("central_symmetry", "half turn about C maps P_ijkl onto P_klij vertexwise",
                    sym.vertex_residual / s, tol);
      report.record("central_symmetry_set", "half turn about C maps P_ijkl onto the vertex set of P'_klij",
                    sym.primed_set_match ? 0.0 : 1.0, 0.0);
      report.record("central_midpoint", "(b_ijkl + b_klij) / 2 = C", sym.midpoint_residual / s, tol);

      {
        const Point step = square_center(quad, tuple, n).point - square_center(quad, tuple, n - 2).point;
        report.record("center_step", "C_n - C_n-2 = i sin(a_i)(cos + (-1)^n sin)(a_j - a_i)",
                      distance(step, square_center_step(quad, tuple, n)) / s, tol);
      }

      const DiagonalRecord diag = diagonal_parallel_check(quad, tuple, n);
      report.record("diagonal_parallel", "diagonal b_ijkl b_jilk parallel to a_i a_j",
                    diag.cross_residual / s2, tol);
      report.record("diagonal_coefficient_real", "diagonal / (a_i - a_j) is real",
                    std::abs(diag.coefficient.imag()), kTight);
      report.record("diagonal_coefficient_value", "diagonal / (a_i - a_j) = 1 - cos - (-1)^n sin",
                    std::abs(diag.coefficient.real() - diag.predicted_coefficient), tol);

      const CentersParallelogram centers = centers_parallelogram(quad, n, tuple);
      report.record("centers_parallelogram_closure", "[C_ijkl, C_kjil, C_klij, C_ilkj] is a parallelogram",
                    centers.closure / s, tol);
      report.record("centers_parallelogram_center", "centers parallelogram is centered at C",
                    centers.center_residual / s, tol);
    }

    const FourSquares four = four_distinct_squares(quad, n);
    report.record("four_squares", "32 squares give 4 vertex sets",
                  static_cast<double>(four.unmatched + (four.distinct_vertex_sets == 4 ? 0 : 1)), 0.0);
  }

  const std::vector<int> ns = options.ns();
  for (const AdmissibleTuple& tuple : AdmissibleTuple::all()) {
    if (options.perm && !(tuple.perm() == *options.perm)) continue;
    try {
      const auto [even, odd] = center_lines(quad, tuple, ns);
      const Point edge = unit(quad.base().vertex(tuple.perm().j()) - quad.base().vertex(tuple.perm().i()));
      for (const CenterLine& line : {even, odd}) {
        report.record("center_line_collinear", "centers of one parity are collinear",
                      line.max_residual / s, tol);
        report.record("center_line_perpendicular", "center lines are perpendicular to a_i a_j",
                      std::abs(dot(line.direction, edge)), tol);
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InsufficientPoints) throw;
      report.annotate("center_step", "n range too short for center lines (skipped)");
    }
  }
}

void check_square_negative_control(const Quadrilateral& quad, const CheckOptions& options,
                                   VerificationReport& report) {
  const double s = quad.scale();
  if (!options.controls || closure_residual(quad.vertices()) < 0.01 * s) return;
  const LabeledParallelogram p = parallelogram(quad, quad.angles(), PermIndex{1, 2, 3, 4}, 0);
  const SquareMetrics metrics = measure_square(p.vertices, s);
  report.count("square_negative_control", "non-parallelograms do not give squares (share passing)",
               metrics.side_spread <= options.tol * s, 0.0);
}

void check_triangle(const Triangle& triangle, const CheckOptions& options,
                    VerificationReport& report) {
  const MorleyResult morley = morley_points(triangle);
  const double s = triangle.scale();
  report.record("morley_identity", "fix(g1g2) + j fix(g2g3) + j^2 fix(g3g1) = 0",
                morley.identity_residual / s, options.tol);
  report.record("morley_equilateral", "Morley triangle has equal sides", morley.side_spread / s,
                options.tol);
}

void check_hexagon(const Hexagon& hexagon, const CheckOptions& options, VerificationReport& report) {
  const double s = hexagon.scale();
  for (int n : options.ns()) {
    report.record("hexagon_relation", "b_123456 - b_123564 + b_231564 - b_231645 + b_312645 - b_312456 = 0",
                  hexagon_relation_residual(hexagon, n) / s, options.tol);
    const auto involution = hexagon_involution_residual(hexagon, n);
    report.record("hexagon_involution", "six-rotation product squared is the identity",
                  std::max(involution[0] / s, involution[1]), options.tol);
    if (!options.controls) continue;
    report.count("hexagon_negative_control", "perturbed alternating sum stays below 1e-3 (share)",
                 hexagon_negative_control_residual(hexagon, n) <= 1e-3 * s, 0.05);
  }
}

}  // namespace quadsq::cli
