#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "quadsq/extensions.hpp"
#include "quadsq/quad_constructions.hpp"

namespace quadsq::cli {

enum class PolygonKind { Quad, Parallelogram, Triangle, Hexagon };

std::string_view to_string(PolygonKind kind);
/// Throws Error(ValidationError) for an unknown name.
PolygonKind parse_kind(std::string_view name);
std::size_t vertex_count(PolygonKind kind);

struct PolygonDocument {
  PolygonKind kind = PolygonKind::Quad;
  std::vector<Point> vertices;
  std::string label;
  // Optional expected orientation per parallelogram family, e.g.
  // {"1234": +1, "1324": -1}; checked by `verify` when present.
  std::map<std::string, int> expected_signs;
};

/// Parses a JSON document
///
///   {"kind": "quad", "label": "...", "vertices": [[x, y], ...],
///    "expected_signs": {"1234": "+", "1324": "-"}}
///
/// `label` and `expected_signs` are optional. Throws Error(ParseError) with
/// line and column for malformed JSON and Error(ValidationError) for schema
/// violations, wrong vertex counts or degenerate polygons.
PolygonDocument parse_polygon(std::string_view text);

/// Reads and parses a file; Error(IoError) when it cannot be read.
PolygonDocument load_polygon(const std::string& path);

Quadrilateral to_quadrilateral(const PolygonDocument& doc);
Triangle to_triangle(const PolygonDocument& doc);
Hexagon to_hexagon(const PolygonDocument& doc);

}  // namespace quadsq::cli
