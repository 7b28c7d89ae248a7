#pragma once

// Planar primitives: points, sign predicates with explicit tolerances, and
// scaled isometries (similarities of the plane).

#include <cmath>
#include <numbers>
#include <span>
#include <utility>

namespace btw {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Thresholds for the sign predicates. `eps_sign` bounds the magnitude of a
/// twice-signed triangle area treated as zero; `eps_metric` bounds distances
/// treated as equal. Both are absolute and assume unit-magnitude inputs.
class Tolerance {
 public:
  Tolerance() = default;
  Tolerance(double eps_sign, double eps_metric);

  double eps_sign() const noexcept { return eps_sign_; }
  double eps_metric() const noexcept { return eps_metric_; }

  friend bool operator==(const Tolerance&, const Tolerance&) = default;

 private:
  double eps_sign_ = 1e-9;
  double eps_metric_ = 1e-9;
};

/// A point of the plane. Construction rejects NaN and infinite coordinates.
struct Point {
  double x = 0.0;
  double y = 0.0;

  constexpr Point() = default;
  Point(double px, double py);

  friend constexpr bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator-(Point a) { return {-a.x, -a.y}; }
inline Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
inline Point operator*(Point a, double s) { return {s * a.x, s * a.y}; }
inline Point operator/(Point a, double s) { return {a.x / s, a.y / s}; }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }

/// (cos a, sin a)
inline Point unit_vector(double angle) { return {std::cos(angle), std::sin(angle)}; }

/// Angle of `p` in [0, 2pi).
double polar_angle(Point p);

/// Reduce an angle to [0, 2pi).
double normalize_angle(double angle);

/// Shortest angular distance between two angles, in [0, pi].
double angular_distance(double a, double b);

/// Counterclockwise displacement from `from` to `to`, in [0, 2pi).
double ccw_displacement(double from, double to);

enum class Sign { negative = -1, zero = 0, positive = 1 };

/// Direction of travel around a circle.
enum class Turn { ccw = 1, cw = -1 };

/// Twice the signed area of triangle pqr (positive when counterclockwise).
double signed_area2(Point p, Point q, Point r);

Sign orient(Point p, Point q, Point r, const Tolerance& tol = {});
bool collinear(Point p, Point q, Point r, const Tolerance& tol = {});

/// Whether `y` lies on the closed segment [x, z]. The strict form also
/// requires `y` to be distinct from both endpoints.
bool between(Point x, Point y, Point z, bool strict, const Tolerance& tol = {});

/// p -> scale * Rot(rotation) * Refl^reflect(p) + translation, where Refl is
/// the reflection across the x-axis.
class ScaledIsometry {
 public:
  ScaledIsometry() = default;
  ScaledIsometry(double scale, double rotation, bool reflect, Point translation);

  static ScaledIsometry identity() { return {}; }
  static ScaledIsometry rescale(double factor);
  static ScaledIsometry translate(Point offset);
  static ScaledIsometry rotate(double angle);
  /// t P(a) -> t P(angle - a).
  static ScaledIsometry reflect_rotate(double angle);

  double scale() const noexcept { return scale_; }
  double rotation() const noexcept { return rotation_; }
  bool reflect() const noexcept { return reflect_; }
  Point translation() const noexcept { return translation_; }

  Point apply(Point p) const;
  Point operator()(Point p) const { return apply(p); }

  /// Linear part only (no translation).
  Point apply_linear(Point v) const;

 private:
  double scale_ = 1.0;
  double rotation_ = 0.0;
  bool reflect_ = false;
  Point translation_{};
};

/// outer ∘ inner: apply `inner` first.
ScaledIsometry compose(const ScaledIsometry& outer, const ScaledIsometry& inner);
ScaledIsometry invert(const ScaledIsometry& map);

struct SimilarityFit {
  ScaledIsometry map;
  double residual = 0.0;  ///< max |map(src) - dst| over all pairs
};

using Correspondence = std::pair<Point, Point>;

/// Determines the similarity from the first pair and the next pair whose
/// source is distinct from it, then reports the worst residual over every
/// pair. With `allow_reflection` both orientations are tried and the one
/// with the smaller residual wins (orientation-preserving on ties).
/// Throws Error(degenerate_input) when all sources coincide.
SimilarityFit fit_similarity(std::span<const Correspondence> pairs, bool allow_reflection,
                             const Tolerance& tol = {});

}  // namespace btw
