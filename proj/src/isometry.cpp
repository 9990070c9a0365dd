#include "quadsq/isometry.hpp"

#include <stdexcept>

#include "quadsq/errors.hpp"

namespace quadsq {

UnitRotor UnitRotor::from_angle(double angle) {
  return UnitRotor(Complex(std::cos(angle), std::sin(angle)));
}

UnitRotor UnitRotor::from_complex(Complex value) {
  const double magnitude = std::abs(value);
  if (!(magnitude > 0.0) || !std::isfinite(magnitude)) {
    throw std::invalid_argument("rotor needs a finite non-zero value");
  }
  return UnitRotor(value / magnitude);
}

UnitRotor operator*(UnitRotor a, UnitRotor b) {
  const Complex product = a.value_ * b.value_;
  return UnitRotor(product / std::abs(product));
}

DirectIsometry rotation_about(Point center, double angle) {
  const UnitRotor rotor = UnitRotor::from_angle(angle);
  const Complex c = center.z();
  return DirectIsometry(rotor, c - rotor.value() * c);
}

DirectIsometry translation(Point vector) { return DirectIsometry(UnitRotor(), vector.z()); }

DirectIsometry compose(const DirectIsometry& outer, const DirectIsometry& inner) {
  return DirectIsometry(outer.rotor() * inner.rotor(),
                        outer.rotor().value() * inner.offset() + outer.offset());
}

DirectIsometry inverse(const DirectIsometry& f) {
  const UnitRotor back = f.rotor().conj();
  return DirectIsometry(back, -(back.value() * f.offset()));
}

DirectIsometry compose_chain(std::span<const DirectIsometry> maps) {
  DirectIsometry product;
  for (const auto& f : maps) product = compose(product, f);
  return product;
}

DirectIsometry compose_chain(std::initializer_list<DirectIsometry> maps) {
  return compose_chain(std::span<const DirectIsometry>(maps.begin(), maps.size()));
}

IsometryClass classify(const DirectIsometry& f, double tol, double scale) {
  const Complex rotor = f.rotor().value();
  const double rotor_gap = std::abs(rotor - 1.0);
  if (rotor_gap <= tol) {
    if (std::abs(f.offset()) <= tol * scale) return Identity{};
    return Translation{Point::from(f.offset())};
  }
  return Rotation{Point::from(f.offset() / (1.0 - rotor)), f.rotor().angle()};
}

FixedPoint fixed_point(const DirectIsometry& f) {
  const Complex gap = 1.0 - f.rotor().value();
  const double gap_size = std::abs(gap);
  if (gap_size <= 1e-12) {
    throw NoUniqueFixedPoint(std::abs(f.offset()) <= kDefaultTolerance ? Degeneracy::Identity
                                                                       : Degeneracy::Translation);
  }
  return FixedPoint{Point::from(f.offset() / gap), gap_size <= 1e-9};
}

}  // namespace quadsq
