#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "quadsq/cli/checks.hpp"
#include "quadsq/cli/document.hpp"
#include "quadsq/cli/report.hpp"

namespace quadsq::cli {

enum ExitCode : int { kExitPass = 0, kExitCheckFailure = 1, kExitInputError = 2 };

/// Every suite that applies to the document kind. Domain errors raised while
/// checking become failed checks.
VerificationReport run_verify(const PolygonDocument& doc, const CheckOptions& options,
                              std::optional<std::uint64_t> seed = std::nullopt);

struct SweepOptions {
  PolygonKind kind = PolygonKind::Quad;
  std::size_t count = 100;
  std::uint64_t seed = 0;
  CheckOptions checks;
};

/// Seeded random instances of one kind, aggregated into one report.
VerificationReport run_sweep(const SweepOptions& options);

/// Default family range per kind: -2..2 for hexagons, -3..3 otherwise.
std::pair<int, int> default_n_range(PolygonKind kind);

/// Text listing of offset_variants(modulus) with a class histogram, where a
/// class is the multiset of offsets.
std::string variants_dump(int modulus);

inline int exit_code(const VerificationReport& report) {
  return report.all_passed() ? kExitPass : kExitCheckFailure;
}

}  // namespace quadsq::cli
