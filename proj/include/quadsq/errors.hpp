#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quadsq {

enum class ErrorKind {
  NoUniqueFixedPoint,
  DegenerateQuadrilateral,
  DegenerateTriangle,
  DegenerateHexagon,
  InvalidOffsets,
  InvalidPermutation,
  PivotUndefined,
  NotAParallelogram,
  NotAdmissibleTuple,
  InsufficientPoints,
  DegenerateIntermediate,
  ParseError,
  ValidationError,
  IoError,
  SamplingExhausted,
};

std::string_view to_string(ErrorKind kind);

// Every domain failure in the library is reported through this type; the
// kind lets callers (the CLI in particular) map failures without parsing
// message text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

enum class Degeneracy { Translation, Identity };

class NoUniqueFixedPoint : public Error {
 public:
  explicit NoUniqueFixedPoint(Degeneracy which)
      : Error(ErrorKind::NoUniqueFixedPoint,
              which == Degeneracy::Translation
                  ? "map is a translation (no fixed point)"
                  : "map is the identity (every point is fixed)"),
        which_(which) {}

  Degeneracy which() const noexcept { return which_; }

 private:
  Degeneracy which_;
};

class NotAParallelogram : public Error {
 public:
  NotAParallelogram(double residual, const std::string& detail)
      : Error(ErrorKind::NotAParallelogram, detail), residual_(residual) {}

  /// Closure residual |a1 - a2 + a3 - a4| that caused the rejection.
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace quadsq
