#include "quadsq/cli/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <limits>

#include "quadsq/errors.hpp"
#include "quadsq/square_constructions.hpp"

namespace quadsq::cli {
namespace {

constexpr std::array<const char*, 6> kPalette{"#d62728", "#1f77b4", "#2ca02c",
                                               "#9467bd", "#ff7f0e", "#8c564b"};

struct Polyline {
  std::vector<Point> points;
  std::string stroke;
  std::string label;
  double width = 1.5;
};

struct Marker {
  Point point;
  std::string label;
  std::string fill;
};

struct Drawing {
  std::vector<Polyline> shapes;
  std::vector<Marker> markers;
};

std::string num(double v) {
  if (v == 0.0) v = 0.0;  // no "-0.000000"
  char buffer[48];
  std::snprintf(buffer, sizeof buffer, "%.6f", v);
  return buffer;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::vector<Point> to_vector(const Quad& q) { return {q.begin(), q.end()}; }

void add_input(Drawing& d, const Quadrilateral& quad) {
  d.shapes.push_back({to_vector(quad.vertices()), "#000000", "input", 2.0});
  for (int label = 1; label <= 4; ++label) {
    d.markers.push_back({quad.vertex(label), "a" + std::to_string(label), "#000000"});
  }
}

void add_pivot(Drawing& d, const PivotCenter& pivot) {
  d.markers.push_back({pivot.point,
                       "O" + std::to_string(pivot.i) + std::to_string(pivot.j) + "," +
                           std::to_string(pivot.n),
                       "#7f7f7f"});
}

Drawing six_families_drawing(const Quadrilateral& quad, const FigureSpec& spec) {
  Drawing d;
  add_input(d, quad);
  std::size_t colour = 0;
  for (int n : spec.ns) {
    const SixFamilies six = six_families(quad, quad.angles(), n);
    for (const LabeledParallelogram& p : six.families) {
      d.shapes.push_back({to_vector(p.vertices), kPalette[colour++ % kPalette.size()],
                          "P" + p.perm.str() + "," + std::to_string(n)});
    }
    for (int j = 2; j <= 4; ++j) {
      try {
        add_pivot(d, pivot_center(quad, quad.angles(), 1, j, n));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::PivotUndefined) throw;
      }
    }
  }
  return d;
}

Drawing family_sweep_drawing(const Quadrilateral& quad, const FigureSpec& spec) {
  Drawing d;
  add_input(d, quad);
  const PermIndex perm = spec.perm.value_or(PermIndex{1, 2, 3, 4});
  std::size_t colour = 0;
  for (int n : spec.ns) {
    const LabeledParallelogram p = parallelogram(quad, quad.angles(), perm, n);
    d.shapes.push_back({to_vector(p.vertices), kPalette[colour++ % kPalette.size()],
                        "P" + perm.str() + "," + std::to_string(n)});
  }
  return d;
}

Drawing four_squares_drawing(const ParallelogramQuad& quad, const FigureSpec& spec) {
  Drawing d;
  add_input(d, quad.base());
  std::size_t colour = 0;
  for (int n : spec.ns) {
    const FourSquares four = four_distinct_squares(quad, n);
    for (const LabeledSquare& sq : four.squares) {
      d.shapes.push_back({to_vector(sq.shape.vertices), kPalette[colour++ % kPalette.size()],
                          "P" + sq.shape.perm.str() + "," + std::to_string(n)});
    }
    add_pivot(d, pivot_center_simplified(quad, 1, 2, n));
    add_pivot(d, pivot_center_simplified(quad, 1, 4, n));
  }
  return d;
}

Drawing square_sweep_drawing(const ParallelogramQuad& quad, const FigureSpec& spec) {
  Drawing d;
  add_input(d, quad.base());
  const AdmissibleTuple tuple(spec.perm.value_or(PermIndex{1, 2, 3, 4}));
  std::size_t colour = 0;
  for (int n : spec.ns) {
    const LabeledSquare sq = square(quad, tuple, n);
    d.shapes.push_back({to_vector(sq.shape.vertices), kPalette[colour++ % kPalette.size()],
                        "P" + tuple.perm().str() + "," + std::to_string(n)});
  }
  return d;
}

ParallelogramQuad require_parallelogram(const PolygonDocument& doc) {
  if (doc.kind != PolygonKind::Parallelogram) {
    throw Error(ErrorKind::ValidationError, "figure needs a parallelogram document");
  }
  return as_parallelogram(to_quadrilateral(doc));
}

Drawing build(const PolygonDocument& doc, const FigureSpec& spec) {
  switch (spec.preset) {
    case FigurePreset::SixFamilies:
    case FigurePreset::FamilySweep: {
      if (doc.kind != PolygonKind::Quad && doc.kind != PolygonKind::Parallelogram) {
        throw Error(ErrorKind::ValidationError, "figure needs a quad or parallelogram document");
      }
      const Quadrilateral quad = to_quadrilateral(doc);
      return spec.preset == FigurePreset::SixFamilies ? six_families_drawing(quad, spec)
                                                      : family_sweep_drawing(quad, spec);
    }
    case FigurePreset::FourSquares:
      return four_squares_drawing(require_parallelogram(doc), spec);
    case FigurePreset::SquareSweep:
      return square_sweep_drawing(require_parallelogram(doc), spec);
  }
  throw Error(ErrorKind::ValidationError, "unknown figure");
}

}  // namespace

std::string_view to_string(FigurePreset preset) {
  switch (preset) {
    case FigurePreset::SixFamilies: return "six-families";
    case FigurePreset::FamilySweep: return "family-sweep";
    case FigurePreset::FourSquares: return "four-squares";
    case FigurePreset::SquareSweep: return "square-sweep";
  }
  return "?";
}

FigurePreset parse_figure(std::string_view name) {
  for (FigurePreset preset : {FigurePreset::SixFamilies, FigurePreset::FamilySweep,
                              FigurePreset::FourSquares, FigurePreset::SquareSweep}) {
    if (to_string(preset) == name) return preset;
  }
  throw Error(ErrorKind::ValidationError, "unknown figure '" + std::string(name) + "'");
}

FigureSpec default_figure(FigurePreset preset) {
  FigureSpec spec;
  spec.preset = preset;
  if (preset == FigurePreset::FamilySweep || preset == FigurePreset::SquareSweep) {
    spec.ns = {0, 1, 2, 3, 4, 5};
  }
  return spec;
}

FigureSpec default_figure(PolygonKind kind) {
  return default_figure(kind == PolygonKind::Parallelogram ? FigurePreset::FourSquares
                                                           : FigurePreset::SixFamilies);
}

std::string render_svg(const PolygonDocument& doc, const FigureSpec& spec) {
  const Drawing d = build(doc, spec);

  double min_x = std::numeric_limits<double>::infinity();
  double min_y = min_x;
  double max_x = -min_x;
  double max_y = -min_x;
  auto extend = [&](Point p) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  };
  for (const Polyline& s : d.shapes) std::for_each(s.points.begin(), s.points.end(), extend);
  for (const Marker& m : d.markers) extend(m.point);

  const double extent = std::max({max_x - min_x, max_y - min_y, 1e-12});
  const double margin_x = 0.1 * std::max(max_x - min_x, 1e-3 * extent);
  const double margin_y = 0.1 * std::max(max_y - min_y, 1e-3 * extent);
  min_x -= margin_x;
  max_x += margin_x;
  min_y -= margin_y;
  max_y += margin_y;
  const double k = spec.width / (max_x - min_x);
  const double height = k * (max_y - min_y);
  auto px = [&](Point p) { return num(k * (p.x - min_x)) + "," + num(k * (max_y - p.y)); };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(spec.width) +
         "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(spec.width) + " " + num(height) +
         "\">\n";
  out += "<title>" + escape(doc.label.empty() ? std::string(to_string(doc.kind)) : doc.label) + " " +
         std::string(to_string(spec.preset)) + "</title>\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  for (const Polyline& s : d.shapes) {
    out += "<g class=\"family\" data-label=\"" + escape(s.label) + "\">\n";
    out += "<polygon fill=\"none\" stroke=\"" + s.stroke + "\" stroke-width=\"" + num(s.width) +
           "\" points=\"";
    for (std::size_t m = 0; m < s.points.size(); ++m) {
      if (m) out += " ";
      out += px(s.points[m]);
    }
    out += "\"/>\n";
    if (!s.points.empty()) {
      out += "<text font-size=\"11\" fill=\"" + s.stroke + "\" x=\"" + num(k * (s.points[0].x - min_x) + 4) +
             "\" y=\"" + num(k * (max_y - s.points[0].y) - 4) + "\">" + escape(s.label) + "</text>\n";
    }
    out += "</g>\n";
  }
  for (const Marker& m : d.markers) {
    const double x = k * (m.point.x - min_x);
    const double y = k * (max_y - m.point.y);
    out += "<circle cx=\"" + num(x) + "\" cy=\"" + num(y) + "\" r=\"3.000000\" fill=\"" + m.fill +
           "\"/>\n";
    out += "<text font-size=\"12\" fill=\"" + m.fill + "\" x=\"" + num(x + 5) + "\" y=\"" +
           num(y + 14) + "\">" + escape(m.label) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

void write_svg(const std::string& path, const std::string& svg) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorKind::IoError, "cannot open '" + path + "' for writing");
  file << svg;
  file.flush();
  if (!file) throw Error(ErrorKind::IoError, "write to '" + path + "' failed");
}

}  // namespace quadsq::cli
