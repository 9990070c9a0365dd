#include "quadsq/cli/commands.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "quadsq/cli/sampling.hpp"
#include "quadsq/errors.hpp"

namespace quadsq::cli {
namespace {

// Runs `suite`, turning a domain error into a failed check named after it.
void guarded(VerificationReport& report, const std::string& name, const std::function<void()>& suite) {
  try {
    suite();
  } catch (const Error& e) {
    report.fail(name, "domain precondition", 0.0, e.what());
  }
}

void verify_quad(const Quadrilateral& quad, const PolygonDocument& doc, const CheckOptions& options,
                 VerificationReport& report) {
  guarded(report, "quadrilateral_suite", [&] { check_quadrilateral(quad, options, report); });
  if (!doc.expected_signs.empty()) {
    guarded(report, "orientation_signs",
            [&] { check_orientation_signs(quad, doc.expected_signs, report); });
  }
}

}  // namespace

std::pair<int, int> default_n_range(PolygonKind kind) {
  return kind == PolygonKind::Hexagon ? std::pair{-2, 2} : std::pair{-3, 3};
}

VerificationReport run_verify(const PolygonDocument& doc, const CheckOptions& options,
                              std::optional<std::uint64_t> seed) {
  VerificationReport report;
  report.kind = std::string(to_string(doc.kind));
  report.label = doc.label;
  report.seed = seed;
  report.instances = 1;

  switch (doc.kind) {
    case PolygonKind::Quad:
      verify_quad(to_quadrilateral(doc), doc, options, report);
      break;
    case PolygonKind::Parallelogram: {
      const Quadrilateral quad = to_quadrilateral(doc);
      try {
        const ParallelogramQuad p = as_parallelogram(quad, options.tol);
        guarded(report, "parallelogram_suite", [&] { check_parallelogram(p, options, report); });
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotAParallelogram) throw;
        report.fail("parallelogram_input", "input satisfies the parallelogram relations", options.tol,
                    e.what());
      }
      verify_quad(quad, doc, options, report);
      break;
    }
    case PolygonKind::Triangle:
      guarded(report, "triangle_suite", [&] { check_triangle(to_triangle(doc), options, report); });
      break;
    case PolygonKind::Hexagon:
      guarded(report, "hexagon_suite", [&] { check_hexagon(to_hexagon(doc), options, report); });
      break;
  }
  return report;
}

VerificationReport run_sweep(const SweepOptions& options) {
  VerificationReport report;
  report.kind = std::string(to_string(options.kind));
  report.label = "sweep";
  report.seed = options.seed;
  CheckOptions checks = options.checks;
  checks.controls = true;

  PolygonSampler sampler(options.seed);
  for (std::size_t index = 0; index < options.count; ++index) {
    switch (options.kind) {
      case PolygonKind::Quad: {
        const Quadrilateral quad = sampler.quadrilateral();
        guarded(report, "quadrilateral_suite", [&] {
          check_quadrilateral(quad, checks, report);
          check_square_negative_control(quad, checks, report);
        });
        break;
      }
      case PolygonKind::Parallelogram: {
        const ParallelogramQuad p = sampler.parallelogram();
        guarded(report, "parallelogram_suite", [&] { check_parallelogram(p, checks, report); });
        break;
      }
      case PolygonKind::Triangle: {
        const Triangle t = sampler.triangle();
        guarded(report, "triangle_suite", [&] { check_triangle(t, checks, report); });
        break;
      }
      case PolygonKind::Hexagon: {
        const Hexagon h = sampler.hexagon();
        guarded(report, "hexagon_suite", [&] { check_hexagon(h, checks, report); });
        break;
      }
    }
    ++report.instances;
  }
  return report;
}

std::string variants_dump(int modulus) {
  const std::vector<AngleOffsets> variants = offset_variants(modulus);
  std::string out = "variants modulus=" + std::to_string(modulus) +
                    " count=" + std::to_string(variants.size()) + "\n";
  std::map<std::string, int, std::greater<>> classes;
  for (const AngleOffsets& v : variants) {
    std::string m;
    for (int value : v.values()) m += std::to_string(value) + " ";
    m.pop_back();
    out += "m " + m + "\n";
    std::array<int, 4> sorted = v.values();
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    std::string key;
    for (int value : sorted) {
      if (modulus > 5 && !key.empty()) key += ",";
      key += std::to_string(value);
    }
    ++classes[key];
  }
  for (const auto& [key, size] : classes) {
    out += "class " + key + " size=" + std::to_string(size) + "\n";
  }
  return out;
}

}  // namespace quadsq::cli
