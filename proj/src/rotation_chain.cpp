#include "quadsq/rotation_chain.hpp"

#include <stdexcept>

#include "quadsq/errors.hpp"

namespace quadsq {

DirectIsometry rotation_chain(std::span<const Point> centers, std::span<const double> angles) {
  if (centers.size() != angles.size()) {
    throw std::invalid_argument("rotation_chain: centers and angles differ in length");
  }
  DirectIsometry product;
  for (std::size_t m = 0; m < centers.size(); ++m) {
    product = compose(product, rotation_about(centers[m], angles[m]));
  }
  return product;
}

Point chain_fixed_point(std::span<const Point> centers, std::span<const double> angles) {
  if (centers.size() != angles.size()) {
    throw std::invalid_argument("chain_fixed_point: centers and angles differ in length");
  }
  Complex numerator{0.0, 0.0};
  double leading = 0.0;
  for (std::size_t m = 0; m < centers.size(); ++m) {
    numerator += centers[m].z() * std::polar(1.0, leading) * (1.0 - std::polar(1.0, angles[m]));
    leading += angles[m];
  }
  const Complex denominator = 1.0 - std::polar(1.0, leading);
  if (std::abs(denominator) <= 1e-12) {
    throw NoUniqueFixedPoint(std::abs(numerator) <= kDefaultTolerance ? Degeneracy::Identity
                                                                      : Degeneracy::Translation);
  }
  return Point::from(numerator / denominator);
}

}  // namespace quadsq
