#pragma once

// Invariant suites shared by `verify` (one polygon) and `sweep` (many).
// Each suite folds scale-normalized residuals into a VerificationReport.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quadsq/cli/report.hpp"
#include "quadsq/extensions.hpp"
#include "quadsq/quad_constructions.hpp"
#include "quadsq/square_constructions.hpp"

namespace quadsq::cli {

struct CheckOptions {
  int n_min = -3;
  int n_max = 3;
  std::optional<PermIndex> perm;  // restrict permutation loops to this one
  double tol = 1e-9;
  // Statistical negative controls; meaningful over a sweep, not one polygon.
  bool controls = false;

  std::vector<int> ns() const;
};

/// Parallelogram families from an arbitrary quadrilateral, offset variants,
/// and the two-stage squares map.
void check_quadrilateral(const Quadrilateral& quad, const CheckOptions& options,
                         VerificationReport& report);

/// Signs of the n = 0 family areas against `expected` ("1234" -> +1, ...).
void check_orientation_signs(const Quadrilateral& quad, const std::map<std::string, int>& expected,
                             VerificationReport& report);

/// Squares from a parallelogram.
void check_parallelogram(const ParallelogramQuad& quad, const CheckOptions& options,
                         VerificationReport& report);

/// For a quadrilateral that is far from a parallelogram (closure at least
/// 0.01 * scale), counts whether the (1,2,3,4), n = 0 construction still came
/// out square; a sweep expects zero such hits.
void check_square_negative_control(const Quadrilateral& quad, const CheckOptions& options,
                                   VerificationReport& report);

void check_triangle(const Triangle& triangle, const CheckOptions& options,
                    VerificationReport& report);

void check_hexagon(const Hexagon& hexagon, const CheckOptions& options, VerificationReport& report);

}  // namespace quadsq::cli
