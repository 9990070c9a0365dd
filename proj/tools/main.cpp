// quadsq: verify, draw and sweep rotation-composition constructions.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "quadsq/cli/commands.hpp"
#include "quadsq/cli/svg.hpp"
#include "quadsq/errors.hpp"

namespace {

using namespace quadsq;
using namespace quadsq::cli;

// "3" or "-2..5".
std::pair<int, int> parse_n_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int n = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {n, n};
    }
    const std::string lo = text.substr(0, dots);
    const std::string hi = text.substr(dots + 2);
    const int a = std::stoi(lo, &used);
    if (used != lo.size()) throw std::invalid_argument(text);
    const int b = std::stoi(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(text);
    if (a > b) throw std::invalid_argument(text);
    return {a, b};
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::ValidationError, "--n expects an integer or a range a..b, got '" + text + "'");
  }
}

struct Common {
  std::string input;
  std::string n;
  std::string perm;
  std::optional<std::uint64_t> seed;
  double tol = 1e-9;
  bool verbose = false;
};

CheckOptions check_options(const Common& c, PolygonKind kind) {
  CheckOptions options;
  std::tie(options.n_min, options.n_max) = c.n.empty() ? default_n_range(kind) : parse_n_range(c.n);
  if (!c.perm.empty()) {
    try {
      options.perm = PermIndex::parse(c.perm);
    } catch (const Error& e) {
      throw Error(ErrorKind::ValidationError, std::string("--perm: ") + e.what());
    }
  }
  options.tol = c.tol;
  return options;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fixed points of rotation products: parallelograms, squares, Morley and hexagon identities"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  Common c;
  std::string out;
  std::string kind_name = "quad";
  std::size_t count = 100;
  std::string figure;
  int modulus = 2;

  auto add_common = [&](CLI::App* sub, bool with_input) {
    if (with_input) sub->add_option("--input", c.input, "polygon document (JSON)")->required();
    sub->add_option("--n", c.n, "family index or range a..b");
    sub->add_option("--perm", c.perm, "restrict to one permutation, e.g. 1324");
    sub->add_option("--tol", c.tol, "residual tolerance (relative to scale)");
    sub->add_flag("--verbose", c.verbose, "print residuals at full precision");
  };

  CLI::App* verify = app.add_subcommand("verify", "run every applicable check on one polygon");
  add_common(verify, true);
  verify->add_option("--seed", c.seed, "recorded in the report");

  CLI::App* svg = app.add_subcommand("svg", "draw a construction as SVG");
  add_common(svg, true);
  svg->add_option("--out", out, "output path")->required();
  svg->add_option("--figure", figure,
                  "six-families | family-sweep | four-squares | square-sweep");

  CLI::App* sweep = app.add_subcommand("sweep", "run the checks over seeded random polygons");
  add_common(sweep, false);
  sweep->add_option("--kind", kind_name, "quad | parallelogram | triangle | hexagon");
  sweep->add_option("--count", count, "number of polygons")->check(CLI::PositiveNumber);
  sweep->add_option("--seed", c.seed, "generator seed (default 0)");

  CLI::App* variants = app.add_subcommand("variants", "list angle-offset tuples for a modulus");
  variants->add_option("--modulus", modulus, "M >= 1")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (verify->parsed()) {
      const PolygonDocument doc = load_polygon(c.input);
      const VerificationReport report = run_verify(doc, check_options(c, doc.kind), c.seed);
      std::cout << report.render(c.verbose);
      return exit_code(report);
    }
    if (svg->parsed()) {
      const PolygonDocument doc = load_polygon(c.input);
      FigureSpec spec = figure.empty() ? default_figure(doc.kind) : default_figure(parse_figure(figure));
      if (!c.n.empty()) {
        const auto [lo, hi] = parse_n_range(c.n);
        spec.ns.clear();
        for (int n = lo; n <= hi; ++n) spec.ns.push_back(n);
      }
      if (!c.perm.empty()) spec.perm = check_options(c, doc.kind).perm;
      write_svg(out, render_svg(doc, spec));
      return kExitPass;
    }
    if (sweep->parsed()) {
      SweepOptions options;
      options.kind = parse_kind(kind_name);
      options.count = count;
      options.seed = c.seed.value_or(0);
      options.checks = check_options(c, options.kind);
      const VerificationReport report = run_sweep(options);
      std::cout << report.render(c.verbose);
      return exit_code(report);
    }
    if (variants->parsed()) {
      std::cout << variants_dump(modulus);
      return kExitPass;
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "quadsq: %s\n", e.what());
    return kExitInputError;
  }
  return kExitInputError;
}
