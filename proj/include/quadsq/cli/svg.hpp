#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quadsq/cli/document.hpp"

namespace quadsq::cli {

enum class FigurePreset {
  SixFamilies,   // quad, the six n-th parallelogram families, pivots O_12, O_13, O_14
  FamilySweep,   // quad and P_perm,n over the n list
  FourSquares,   // parallelogram, the four distinct squares, pivots O_12, O_14
  SquareSweep,   // parallelogram and the square P_perm,n over the n list
};

std::string_view to_string(FigurePreset preset);
/// "six-families", "family-sweep", "four-squares" or "square-sweep";
/// Error(ValidationError) otherwise.
FigurePreset parse_figure(std::string_view name);

struct FigureSpec {
  FigurePreset preset = FigurePreset::SixFamilies;
  std::vector<int> ns{0};
  std::optional<PermIndex> perm;  // sweeps only; defaults to 1234
  double width = 800.0;           // pixels; height follows the aspect ratio
};

/// six-families for quads and four-squares for parallelograms, with the n
/// list matching the preset (0, or 0..5 for the sweeps).
FigureSpec default_figure(PolygonKind kind);
FigureSpec default_figure(FigurePreset preset);

/// SVG 1.1 text. The y axis points up and the viewport is fitted to the
/// drawing with a 10% margin. Throws Error(ValidationError) when the preset
/// does not apply to the document kind.
std::string render_svg(const PolygonDocument& doc, const FigureSpec& spec);

/// Error(IoError) when the file cannot be written.
void write_svg(const std::string& path, const std::string& svg);

}  // namespace quadsq::cli
