#include "quadsq/cli/document.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "quadsq/errors.hpp"

namespace quadsq::cli {
namespace {

using nlohmann::json;

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t pos = 0; pos + 1 < byte && pos < text.size(); ++pos) {
    if (text[pos] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

[[noreturn]] void invalid(const std::string& message) {
  throw Error(ErrorKind::ValidationError, message);
}

template <std::size_t N>
std::array<Point, N> fixed_vertices(const PolygonDocument& doc) {
  if (doc.vertices.size() != N) {
    invalid("expected " + std::to_string(N) + " vertices, got " +
            std::to_string(doc.vertices.size()));
  }
  std::array<Point, N> out{};
  std::copy(doc.vertices.begin(), doc.vertices.end(), out.begin());
  return out;
}

}  // namespace

std::string_view to_string(PolygonKind kind) {
  switch (kind) {
    case PolygonKind::Quad: return "quad";
    case PolygonKind::Parallelogram: return "parallelogram";
    case PolygonKind::Triangle: return "triangle";
    case PolygonKind::Hexagon: return "hexagon";
  }
  return "unknown";
}

PolygonKind parse_kind(std::string_view name) {
  if (name == "quad") return PolygonKind::Quad;
  if (name == "parallelogram") return PolygonKind::Parallelogram;
  if (name == "triangle") return PolygonKind::Triangle;
  if (name == "hexagon") return PolygonKind::Hexagon;
  invalid("unknown kind '" + std::string(name) + "'");
}

std::size_t vertex_count(PolygonKind kind) {
  switch (kind) {
    case PolygonKind::Quad:
    case PolygonKind::Parallelogram: return 4;
    case PolygonKind::Triangle: return 3;
    case PolygonKind::Hexagon: return 6;
  }
  return 0;
}

PolygonDocument parse_polygon(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, line_column(text, e.byte) + ": " + e.what());
  }
  if (!root.is_object()) invalid("document must be a JSON object");

  PolygonDocument doc;
  if (!root.contains("kind") || !root["kind"].is_string()) invalid("missing string field 'kind'");
  doc.kind = parse_kind(root["kind"].get<std::string>());

  if (root.contains("label")) {
    if (!root["label"].is_string()) invalid("'label' must be a string");
    doc.label = root["label"].get<std::string>();
  }

  if (!root.contains("vertices") || !root["vertices"].is_array()) {
    invalid("missing array field 'vertices'");
  }
  const json& vertices = root["vertices"];
  for (std::size_t m = 0; m < vertices.size(); ++m) {
    const json& v = vertices[m];
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
      invalid("vertex " + std::to_string(m + 1) + " must be an [x, y] pair of numbers");
    }
    doc.vertices.push_back({v[0].get<double>(), v[1].get<double>()});
  }
  if (doc.vertices.size() != vertex_count(doc.kind)) {
    invalid("kind '" + std::string(to_string(doc.kind)) + "' needs " +
            std::to_string(vertex_count(doc.kind)) + " vertices, got " +
            std::to_string(doc.vertices.size()));
  }

  if (root.contains("expected_signs")) {
    const json& signs = root["expected_signs"];
    if (!signs.is_object()) invalid("'expected_signs' must be an object");
    for (const auto& [perm, sign] : signs.items()) {
      try {
        PermIndex::parse(perm);
      } catch (const Error&) {
        invalid("'" + perm + "' in expected_signs is not a permutation of 1234");
      }
      if (sign == "+") {
        doc.expected_signs[perm] = 1;
      } else if (sign == "-") {
        doc.expected_signs[perm] = -1;
      } else {
        invalid("expected sign for " + perm + " must be \"+\" or \"-\"");
      }
    }
  }

  // Construct the domain object once so degenerate input fails here.
  try {
    switch (doc.kind) {
      case PolygonKind::Quad:
      case PolygonKind::Parallelogram: to_quadrilateral(doc); break;
      case PolygonKind::Triangle: to_triangle(doc); break;
      case PolygonKind::Hexagon: to_hexagon(doc); break;
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ValidationError) throw;
    invalid(e.what());
  }
  return doc;
}

PolygonDocument load_polygon(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_polygon(buffer.str());
}

Quadrilateral to_quadrilateral(const PolygonDocument& doc) {
  return Quadrilateral::make(fixed_vertices<4>(doc));
}

Triangle to_triangle(const PolygonDocument& doc) { return Triangle::make(fixed_vertices<3>(doc)); }

Hexagon to_hexagon(const PolygonDocument& doc) { return Hexagon::make(fixed_vertices<6>(doc)); }

}  // namespace quadsq::cli
