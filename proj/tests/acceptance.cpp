// Acceptance criteria 1-14. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "quadsq/cli/commands.hpp"
#include "quadsq/cli/sampling.hpp"
#include "quadsq/cli/svg.hpp"
#include "quadsq/errors.hpp"

using namespace quadsq;
using namespace quadsq::cli;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* format, double a, double b = 0, double c = 0) {
  char buffer[256];
  std::snprintf(buffer, sizeof buffer, format, a, b, c);
  return buffer;
}

double max_distance(const Quad& a, const Quad& b) {
  double worst = 0;
  for (std::size_t m = 0; m < 4; ++m) worst = std::max(worst, distance(a[m], b[m]));
  return worst;
}

std::vector<Quadrilateral> quads(std::uint64_t seed, int count) {
  PolygonSampler sampler(seed);
  std::vector<Quadrilateral> out;
  for (int k = 0; k < count; ++k) out.push_back(sampler.quadrilateral());
  return out;
}

std::vector<ParallelogramQuad> parallelograms(std::uint64_t seed, int count) {
  PolygonSampler sampler(seed);
  std::vector<ParallelogramQuad> out;
  for (int k = 0; k < count; ++k) out.push_back(sampler.parallelogram());
  return out;
}

const std::vector<Quadrilateral>& sweep_quads() {
  static const std::vector<Quadrilateral> q = quads(42, 500);
  return q;
}

const std::vector<ParallelogramQuad>& sweep_parallelograms() {
  static const std::vector<ParallelogramQuad> p = parallelograms(42, 500);
  return p;
}

Outcome closure() {
  double worst = 0;
  for (const Quadrilateral& q : sweep_quads())
    for (int n = -3; n <= 3; ++n)
      for (const PermIndex& p : PermIndex::all())
        worst = std::max(worst, closure_residual(parallelogram(q, q.angles(), p, n).vertices) / q.scale());
  return {worst <= 1e-9, fmt("max closure %.2e * scale", worst)};
}

Outcome dual_oracle() {
  double worst = 0;
  for (const Quadrilateral& q : sweep_quads())
    for (int n = -3; n <= 3; ++n)
      for (const PermIndex& p : PermIndex::all()) {
        const Point closed = b_point(q, q.angles(), p, n);
        const Point composed = b_point_by_composition(q, q.angles(), p, n).point;
        worst = std::max(worst, distance(closed, composed) / q.scale());
      }
  return {worst <= 1e-9, fmt("max disagreement %.2e * scale", worst)};
}

Outcome reflection() {
  double worst = 0;
  for (const Quadrilateral& q : sweep_quads())
    for (int n = -3; n <= 3; ++n)
      for (const PermIndex& p : PermIndex::all()) {
        const Point a = b_point(q, q.angles(), p, n);
        const Point b = b_point(q, q.angles(), p.reversed(), -n - 1);
        worst = std::max(worst, distance(a, b) / q.scale());
      }
  return {worst <= 1e-9, fmt("max |b_ijkl,n - b_lkji,-n-1| %.2e * scale", worst)};
}

Outcome congruence() {
  double rot = 0, collinear = 0, mirror = 0;
  std::size_t skipped = 0;
  for (const Quadrilateral& q : sweep_quads()) {
    const double s = q.scale();
    for (int n = -3; n <= 3; ++n)
      for (const PermIndex& p : PermIndex::all()) {
        try {
          const DirectIsometry r = congruence_rotation(q, q.angles(), p.i(), p.j(), n);
          const Quad src = parallelogram(q, q.angles(), p, n).vertices;
          const Quad dst =
              parallelogram(q, q.angles(), PermIndex{p.k(), p.l(), p.j(), p.i()}, n).primed().vertices;
          const Quad img{r(src[0]), r(src[1]), r(src[2]), r(src[3])};
          rot = std::max(rot, max_distance(img, dst) / s);

          const PivotCenter o = pivot_center(q, q.angles(), p.i(), p.j(), n);
          const Point u = q.vertex(p.j()) - q.vertex(p.i());
          collinear = std::max(collinear, std::abs(cross(u, o.point - q.vertex(p.i()))) / norm(u) / s);
          const PivotCenter o2 = pivot_center(q, q.angles(), p.i(), p.j(), -n - 1);
          mirror = std::max(mirror, distance(o.point, o2.point) / s);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::PivotUndefined) throw;
          ++skipped;
        }
      }
  }
  const double worst = std::max({rot, collinear, mirror});
  return {worst <= 1e-9, fmt("rotation %.2e, collinear %.2e, O_n vs O_-n-1 %.2e", rot, collinear, mirror) +
                             " (* scale; " + std::to_string(skipped) + " undefined pivots skipped)"};
}

Outcome areas() {
  double sum = 0, mirror = 0;
  for (const Quadrilateral& q : sweep_quads()) {
    const double s2 = q.scale() * q.scale();
    for (int n = -3; n <= 3; ++n)
      for (const PermIndex& p : PermIndex::all()) {
        auto area = [&](const PermIndex& perm, int m) { return signed_area(parallelogram(q, q.angles(), perm, m)).area; };
        const double a = area(p, n);
        sum = std::max(sum, std::abs(a - area({p.i(), p.k(), p.j(), p.l()}, n) - area({p.i(), p.l(), p.k(), p.j()}, n)) / s2);
        mirror = std::max(mirror, std::abs(a - area(p.swap_last(), -n - 1)) / s2);
      }
  }
  return {std::max(sum, mirror) <= 1e-9, fmt("sum identity %.2e, reflection %.2e (* scale^2)", sum, mirror)};
}

Outcome reference_signs() {
  const Quadrilateral q = Quadrilateral::make({{{0, 0}, {1, 0}, {2, 1}, {0.5, 2}}});
  const std::map<std::string, int> expected{{"1234", 1}, {"3412", 1}, {"1432", 1},
                                            {"3214", 1}, {"1324", -1}, {"2413", -1}};
  std::string detail;
  bool pass = true;
  for (const auto& [digits, sign] : expected) {
    const double a = signed_area(parallelogram(q, q.angles(), PermIndex::parse(digits), 0)).area;
    pass = pass && (a > 0 ? 1 : -1) == sign;
    detail += digits + fmt("=%+.4f ", a);
  }
  return {pass, detail};
}

Outcome offset_enumeration() {
  const auto variants = offset_variants(2);
  std::map<std::string, int> classes;
  for (const AngleOffsets& v : variants) {
    auto m = v.values();
    std::sort(m.begin(), m.end(), std::greater<>());
    ++classes[std::to_string(m[0]) + std::to_string(m[1]) + std::to_string(m[2]) + std::to_string(m[3])];
  }
  const std::map<std::string, int> expected{{"0000", 1}, {"1111", 1}, {"2110", 12}, {"2200", 6},
                                            {"3100", 12}, {"3320", 12}, {"3311", 6}, {"3221", 12},
                                            {"2222", 1}, {"3333", 1}};
  double worst = 0;
  for (const Quadrilateral& q : quads(4242, 50))
    for (const AngleOffsets& m : variants)
      for (const PermIndex& p : PermIndex::all())
        worst = std::max(worst, closure_residual(parallelogram(q, q.angles(), p, 0, m).vertices) / q.scale());
  const bool pass = variants.size() == 64 && classes == expected && worst <= 1e-9;
  return {pass, fmt("%.0f tuples, %.0f classes, max closure %.2e * scale", static_cast<double>(variants.size()),
                    static_cast<double>(classes.size()), worst)};
}

Outcome squares() {
  double spread = 0, angle = 0, offsets = 0;
  const auto variants = square_offset_variants();
  for (const ParallelogramQuad& p : sweep_parallelograms()) {
    const double s = p.scale();
    for (int n = -3; n <= 3; ++n)
      for (const AdmissibleTuple& t : AdmissibleTuple::all()) {
        const LabeledSquare sq = square(p, t, n);
        spread = std::max(spread, sq.metrics.side_spread / s);
        angle = std::max(angle, sq.metrics.angle_error);
        for (const AngleOffsets& m : variants) {
          const LabeledSquare v = square(p, t, n, m);
          offsets = std::max({offsets, v.metrics.side_spread / s, v.metrics.angle_error});
        }
      }
  }
  return {std::max({spread, angle, offsets}) <= 1e-9 && variants.size() == 8,
          fmt("side spread %.2e * scale, angle %.2e rad, offset variants %.2e", spread, angle, offsets)};
}

Outcome square_items() {
  double sym = 0, line = 0, perp = 0, diag = 0, coeff_im = 0, centers = 0;
  std::vector<int> ns;
  for (int n = -3; n <= 3; ++n) ns.push_back(n);
  for (const ParallelogramQuad& p : sweep_parallelograms()) {
    const double s = p.scale();
    for (const AdmissibleTuple& t : AdmissibleTuple::all()) {
      for (int n : ns) {
        const CentralSymmetryRecord c = central_symmetry_check(p, t, n);
        sym = std::max({sym, c.vertex_residual / s, c.midpoint_residual / s, c.primed_set_match ? 0.0 : 1.0});
        const DiagonalRecord d = diagonal_parallel_check(p, t, n);
        diag = std::max(diag, d.cross_residual / (s * s));
        coeff_im = std::max(coeff_im, std::abs(d.coefficient.imag()));
        const CentersParallelogram cp = centers_parallelogram(p, n, t);
        centers = std::max({centers, cp.closure / s, cp.center_residual / s});
      }
      const auto [even, odd] = center_lines(p, t, ns);
      const Point edge = p.base().vertex(t.perm().j()) - p.base().vertex(t.perm().i());
      for (const CenterLine& l : {even, odd}) {
        line = std::max(line, l.max_residual / s);
        perp = std::max(perp, std::abs(dot(l.direction, edge)) / norm(edge));
      }
    }
  }
  const bool pass = sym <= 1e-9 && line <= 1e-9 && perp <= 1e-9 && diag <= 1e-9 && coeff_im <= 1e-12 &&
                    centers <= 1e-9;
  return {pass, fmt("symmetry %.2e, center lines %.2e, perpendicular %.2e", sym, line, perp) +
                    fmt(", diagonal %.2e, Im coefficient %.2e, centers parallelogram %.2e", diag, coeff_im, centers)};
}

Outcome composite() {
  double worst = 0;
  std::size_t runs = 0, skipped = 0;
  for (const Quadrilateral& q : quads(2000, 200)) {
    for (const PermIndex& stage1 : family_representatives()) {
      try {
        const CompositeResult r = squares_from_any_quad(q, stage1, 0);
        const double s = r.stage2_input.scale();
        for (const LabeledSquare& sq : r.squares.squares) {
          worst = std::max({worst, sq.metrics.side_spread / s, sq.metrics.angle_error, sq.relation_residual / s});
        }
        if (r.squares.distinct_vertex_sets != 4) worst = 1;
        ++runs;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::DegenerateIntermediate) throw;
        ++skipped;
      }
    }
  }
  return {worst <= kCompositeTolerance,
          fmt("max square residual %.2e over %.0f pipelines (%.0f degenerate intermediates skipped)", worst,
              static_cast<double>(runs), static_cast<double>(skipped))};
}

Outcome negative_control() {
  std::size_t tested = 0, squares_found = 0;
  double smallest = 1e300;
  for (const Quadrilateral& q : quads(777, 500)) {
    const double s = q.scale();
    if (closure_residual(q.vertices()) < 0.01 * s) continue;
    ++tested;
    for (const AdmissibleTuple& t : AdmissibleTuple::all()) {
      const SquareMetrics m = measure_square(parallelogram(q, q.angles(), t.perm(), 0).vertices, s);
      smallest = std::min(smallest, m.side_spread / s);
      if (m.side_spread <= 1e-9 * s) ++squares_found;
    }
  }
  return {tested > 0 && squares_found == 0,
          fmt("%.0f quadrilaterals, %.0f accidental squares, smallest side spread %.2e * scale",
              static_cast<double>(tested), static_cast<double>(squares_found), smallest)};
}

Outcome morley() {
  PolygonSampler sampler(12);
  double identity = 0, spread = 0;
  for (int k = 0; k < 500; ++k) {
    const Triangle t = sampler.triangle(0.05);
    const MorleyResult m = morley_points(t);
    identity = std::max(identity, m.identity_residual / t.scale());
    spread = std::max(spread, m.side_spread / t.scale());
  }
  return {std::max(identity, spread) <= 1e-9, fmt("identity %.2e, side spread %.2e (* scale)", identity, spread)};
}

Outcome hexagon() {
  PolygonSampler sampler(7);
  double worst = 0;
  std::size_t samples = 0, large = 0;
  for (int k = 0; k < 500; ++k) {
    const Hexagon h = sampler.hexagon();
    for (int n = -2; n <= 2; ++n) {
      worst = std::max(worst, hexagon_relation_residual(h, n) / h.scale());
      ++samples;
      if (hexagon_negative_control_residual(h, n) > 1e-3 * h.scale()) ++large;
    }
  }
  const double share = static_cast<double>(large) / static_cast<double>(samples);
  return {worst <= 1e-9 && share >= 0.95, fmt("relation %.2e * scale, control above 1e-3 * scale in %.1f%%", worst, 100 * share)};
}

Outcome determinism() {
  bool same = true;
  for (PolygonKind kind : {PolygonKind::Quad, PolygonKind::Parallelogram, PolygonKind::Triangle, PolygonKind::Hexagon}) {
    SweepOptions o;
    o.kind = kind;
    o.count = 50;
    o.seed = 42;
    std::tie(o.checks.n_min, o.checks.n_max) = default_n_range(kind);
    same = same && run_sweep(o).render(true) == run_sweep(o).render(true);
  }
  for (const char* name : {"quad_reference.json", "parallelogram_reference.json"}) {
    const PolygonDocument doc = load_polygon(std::string(QUADSQ_FIXTURES) + "/" + name);
    for (FigurePreset preset : {FigurePreset::SixFamilies, FigurePreset::FamilySweep}) {
      same = same && render_svg(doc, default_figure(preset)) == render_svg(doc, default_figure(preset));
    }
    if (doc.kind == PolygonKind::Parallelogram) {
      for (FigurePreset preset : {FigurePreset::FourSquares, FigurePreset::SquareSweep}) {
        same = same && render_svg(doc, default_figure(preset)) == render_svg(doc, default_figure(preset));
      }
    }
  }
  return {same, "sweep reports and SVG figures compared byte for byte (the CLI binary is also compared by ctest)"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"parallelogram closure, 500 quads x 24 perms x n in -3..3", closure},
      {"closed-form b-point vs composed fixed point", dual_oracle},
      {"b_ijkl,n = b_lkji,-n-1", reflection},
      {"congruence rotation and pivot properties", congruence},
      {"area identities", areas},
      {"orientation signs of the reference quadrilateral", reference_signs},
      {"offset enumeration for M = 2 and closure under offsets", offset_enumeration},
      {"squares from 500 parallelograms x 8 tuples x n in -3..3, with offsets", squares},
      {"central symmetry, center lines, diagonals, centers parallelogram", square_items},
      {"two-stage squares from 200 quadrilaterals", composite},
      {"negative control: non-parallelograms give no squares", negative_control},
      {"Morley equilateral triangle and identity, 500 triangles", morley},
      {"hexagon alternating sum and negative control, 500 hexagons", hexagon},
      {"determinism of sweeps and SVG", determinism},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[k].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!outcome.pass) ++failures;
    std::printf("criterion %2zu %s: %s -- %s [%.2fs]\n", k + 1, outcome.pass ? "PASS" : "FAIL", criteria[k].first,
                outcome.detail.c_str(), seconds);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
