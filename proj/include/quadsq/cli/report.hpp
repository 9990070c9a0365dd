#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace quadsq::cli {

inline constexpr const char* kToolVersion = "0.1.0";

struct CheckRecord {
  std::string name;
  std::string anchor;  // the identity or property being checked
  double residual = 0.0;
  double tolerance = 0.0;
  std::size_t samples = 0;
  std::size_t hits = 0;  // fraction checks: residual = hits / samples
  std::string note;

  bool passed() const { return residual <= tolerance; }
};

/// Per-check maximum residuals. Residuals are already normalized by the
/// instance scale (or its square for areas), so they aggregate across
/// instances of different sizes.
class VerificationReport {
 public:
  std::string kind;
  std::string label;
  std::optional<std::uint64_t> seed;
  std::size_t instances = 0;

  /// Folds one residual into the named check, keeping the maximum. A
  /// non-finite residual is recorded as a failure.
  void record(const std::string& name, const std::string& anchor, double residual,
              double tolerance);
  /// Fraction check: residual is the share of samples for which `hit` was
  /// true.
  void count(const std::string& name, const std::string& anchor, bool hit, double tolerance);
  /// Records a failed sample (domain error or broken precondition).
  void fail(const std::string& name, const std::string& anchor, double tolerance,
            const std::string& note);
  /// Attaches a note without changing the residual.
  void annotate(const std::string& name, const std::string& note);

  const std::vector<CheckRecord>& checks() const { return checks_; }
  const CheckRecord* find(const std::string& name) const;
  std::size_t passed_count() const;
  std::size_t failed_count() const;
  bool all_passed() const { return failed_count() == 0; }

  /// Line-oriented text: a header, one `check` line per check and a
  /// `summary` line. Residuals use 3 significant digits unless verbose.
  std::string render(bool verbose = false) const;

 private:
  CheckRecord& slot(const std::string& name, const std::string& anchor, double tolerance);
  std::vector<CheckRecord> checks_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace quadsq::cli
