#include "quadsq/cli/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace quadsq::cli {
namespace {

std::string scientific(double value, bool verbose) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, verbose ? "%.17e" : "%.2e", value);
  return buffer;
}

}  // namespace

CheckRecord& VerificationReport::slot(const std::string& name, const std::string& anchor,
                                      double tolerance) {
  auto [it, inserted] = index_.try_emplace(name, checks_.size());
  if (inserted) checks_.push_back(CheckRecord{name, anchor, 0.0, tolerance, 0, 0, {}});
  return checks_[it->second];
}

void VerificationReport::record(const std::string& name, const std::string& anchor,
                                double residual, double tolerance) {
  if (!std::isfinite(residual)) {
    fail(name, anchor, tolerance, "non-finite residual");
    return;
  }
  CheckRecord& check = slot(name, anchor, tolerance);
  check.residual = std::max(check.residual, residual);
  ++check.samples;
}

void VerificationReport::count(const std::string& name, const std::string& anchor, bool hit,
                               double tolerance) {
  CheckRecord& check = slot(name, anchor, tolerance);
  ++check.samples;
  if (hit) ++check.hits;
  check.residual = static_cast<double>(check.hits) / static_cast<double>(check.samples);
}

void VerificationReport::fail(const std::string& name, const std::string& anchor,
                              double tolerance, const std::string& note) {
  CheckRecord& check = slot(name, anchor, tolerance);
  check.residual = std::numeric_limits<double>::max();
  ++check.samples;
  if (check.note.empty()) check.note = note;
}

void VerificationReport::annotate(const std::string& name, const std::string& note) {
  for (auto& check : checks_) {
    if (check.name == name) check.note = note;
  }
}

const CheckRecord* VerificationReport::find(const std::string& name) const {
  auto it = std::find_if(checks_.begin(), checks_.end(),
                         [&](const CheckRecord& c) { return c.name == name; });
  return it == checks_.end() ? nullptr : &*it;
}

std::size_t VerificationReport::passed_count() const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [](const CheckRecord& c) { return c.passed(); }));
}

std::size_t VerificationReport::failed_count() const { return checks_.size() - passed_count(); }

std::string VerificationReport::render(bool verbose) const {
  std::string out;
  out += "quadsq-report 1\n";
  out += std::string("tool_version ") + kToolVersion + "\n";
  out += "kind " + kind + "\n";
  if (!label.empty()) out += "label " + label + "\n";
  if (seed) out += "seed " + std::to_string(*seed) + "\n";
  out += "instances " + std::to_string(instances) + "\n";
  for (const auto& check : checks_) {
    out += "check " + check.name + " anchor=\"" + check.anchor + "\"";
    out += " residual=" + scientific(check.residual, verbose);
    out += " tolerance=" + scientific(check.tolerance, verbose);
    out += " samples=" + std::to_string(check.samples);
    out += check.passed() ? " status=pass" : " status=FAIL";
    if (!check.note.empty()) out += " note=\"" + check.note + "\"";
    out += "\n";
  }
  out += "summary checks=" + std::to_string(checks_.size()) +
         " passed=" + std::to_string(passed_count()) +
         " failed=" + std::to_string(failed_count()) + "\n";
  return out;
}

}  // namespace quadsq::cli
