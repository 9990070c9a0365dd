#include "quadsq/cli/sampling.hpp"

#include <algorithm>

#include "quadsq/errors.hpp"

namespace quadsq::cli {
namespace {

template <typename Draw>
auto with_retries(const char* what, Draw draw) {
  for (int attempt = 0; attempt < PolygonSampler::kRetryCap; ++attempt) {
    try {
      return draw();
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::SamplingExhausted) throw;
    }
  }
  throw Error(ErrorKind::SamplingExhausted,
              std::string("no valid ") + what + " after " +
                  std::to_string(PolygonSampler::kRetryCap) + " draws");
}

}  // namespace

Point PolygonSampler::point() {
  const double x = coordinate_(rng_);
  const double y = coordinate_(rng_);
  return {x, y};
}

Quadrilateral PolygonSampler::quadrilateral() {
  return with_retries("quadrilateral", [&] {
    const Quad q{point(), point(), point(), point()};
    return Quadrilateral::make(q);
  });
}

ParallelogramQuad PolygonSampler::parallelogram() {
  return with_retries("parallelogram", [&] {
    const Point a1 = point();
    const Point a2 = point();
    const Point a3 = point();
    const Quad q{a1, a2, a3, a1 - a2 + a3};
    return as_parallelogram(Quadrilateral::make(q));
  });
}

Triangle PolygonSampler::triangle(double min_angle) {
  return with_retries("triangle", [&] {
    const Triangle t = Triangle::make({point(), point(), point()});
    if (*std::min_element(t.angles().begin(), t.angles().end()) < min_angle) {
      throw Error(ErrorKind::DegenerateTriangle, "angle below minimum");
    }
    return t;
  });
}

Hexagon PolygonSampler::hexagon() {
  return with_retries("hexagon", [&] {
    return Hexagon::make({point(), point(), point(), point(), point(), point()});
  });
}

}  // namespace quadsq::cli
