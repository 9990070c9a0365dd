#pragma once

// Orientation-preserving isometries of the plane, z -> rotor * z + offset,
// with points identified with complex numbers.
//
// Composition convention: compose(f, g) applies g first, then f. This is the
// usual operator-product order, so compose(r1, r2) is the map z -> r1(r2(z)).
// compose_chain({f1, f2, ..., fn}) is f1 f2 ... fn and therefore applies fn
// first.

#include <cmath>
#include <complex>
#include <initializer_list>
#include <numbers>
#include <span>
#include <variant>

namespace quadsq {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Point {
  double x = 0.0;
  double y = 0.0;

  Complex z() const { return {x, y}; }
  static Point from(Complex c) { return {c.real(), c.imag()}; }

  friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
inline Point midpoint(Point a, Point b) { return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)}; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }

/// Unit complex multiplier e^{i angle}. Always renormalized to |rotor| = 1.
class UnitRotor {
 public:
  UnitRotor() = default;

  static UnitRotor from_angle(double angle);
  /// Throws std::invalid_argument for a zero or non-finite value.
  static UnitRotor from_complex(Complex value);

  double re() const { return value_.real(); }
  double im() const { return value_.imag(); }
  Complex value() const { return value_; }
  /// Principal argument in (-pi, pi].
  double angle() const { return std::arg(value_); }
  UnitRotor conj() const { return UnitRotor(std::conj(value_)); }

  friend UnitRotor operator*(UnitRotor a, UnitRotor b);

 private:
  explicit UnitRotor(Complex unit) : value_(unit) {}
  Complex value_{1.0, 0.0};
};

class DirectIsometry {
 public:
  /// Identity map.
  DirectIsometry() = default;
  DirectIsometry(UnitRotor rotor, Complex offset) : rotor_(rotor), offset_(offset) {}

  UnitRotor rotor() const { return rotor_; }
  Complex offset() const { return offset_; }

  Complex apply(Complex z) const { return rotor_.value() * z + offset_; }
  Point operator()(Point p) const { return Point::from(apply(p.z())); }

 private:
  UnitRotor rotor_;
  Complex offset_{0.0, 0.0};
};

DirectIsometry rotation_about(Point center, double angle);
DirectIsometry translation(Point vector);
DirectIsometry compose(const DirectIsometry& outer, const DirectIsometry& inner);
DirectIsometry inverse(const DirectIsometry& f);

/// Product f1 f2 ... fn (fn applied first). Empty input yields the identity.
DirectIsometry compose_chain(std::span<const DirectIsometry> maps);
DirectIsometry compose_chain(std::initializer_list<DirectIsometry> maps);

struct Rotation {
  Point center;
  double angle;  // principal value in (-pi, pi]
};
struct Translation {
  Point vector;
};
struct Identity {};

using IsometryClass = std::variant<Rotation, Translation, Identity>;

inline constexpr double kDefaultTolerance = 1e-9;

/// Identity if |rotor - 1| <= tol and |offset| <= tol * scale, Translation if
/// only the rotor test passes, Rotation otherwise.
IsometryClass classify(const DirectIsometry& f, double tol = kDefaultTolerance,
                       double scale = 1.0);

struct FixedPoint {
  Point point;
  // Set when 1e-12 < |rotor - 1| <= 1e-9: the solve went through but the
  // map is within rounding distance of a translation.
  bool ill_conditioned = false;
};

/// Unique fixed point offset / (1 - rotor). Throws NoUniqueFixedPoint when
/// |rotor - 1| <= 1e-12, distinguishing translations from the identity.
FixedPoint fixed_point(const DirectIsometry& f);

}  // namespace quadsq
