#pragma once

#include <span>

#include "quadsq/isometry.hpp"

namespace quadsq {

/// The product r_{c1,t1} r_{c2,t2} ... r_{cm,tm} of rotations about `centers`
/// through `angles`, built by composing the individual maps.
DirectIsometry rotation_chain(std::span<const Point> centers, std::span<const double> angles);

/// Fixed point of the same product, from the expanded closed form
///
///   sum_m z_m e^{i(t1 + ... + t(m-1))} (1 - e^{i tm})  /  (1 - e^{i(t1 + ... + tm)})
///
/// with every phase taken from the summed angles rather than from products
/// of rotors, so it shares no arithmetic with rotation_chain(). When the
/// total angle is an odd multiple of pi the denominator is exactly 2.
/// Throws NoUniqueFixedPoint when the total angle is a multiple of 2 pi.
Point chain_fixed_point(std::span<const Point> centers, std::span<const double> angles);

}  // namespace quadsq
