#pragma once

// Circle pairs and the incidence queries (line traces, open intervals,
// extremeness) on their unions.

#include <optional>
#include <vector>

#include "btw/geom.hpp"

namespace btw {

struct Circle {
  Point center;
  double radius = 1.0;

  Point at(double angle) const { return center + radius * unit_vector(angle); }
  double angle_of(Point p) const { return polar_angle(p - center); }
  bool contains_on_boundary(Point p, double eps) const {
    return std::fabs(distance(p, center) - radius) <= eps;
  }
};

/// S(c, rho) ∪ S(c, rho') with 0 < rho < rho'.
class ConcentricPair {
 public:
  ConcentricPair(Point center, double rho, double rho_prime);

  Point center() const noexcept { return center_; }
  double rho() const noexcept { return rho_; }
  double rho_prime() const noexcept { return rho_prime_; }

  Circle inner() const { return {center_, rho_}; }
  Circle outer() const { return {center_, rho_prime_}; }

  /// rho / rho' in (0, 1).
  double ratio() const noexcept { return rho_ / rho_prime_; }

  /// Image under a similarity (ratios are preserved).
  ConcentricPair transformed(const ScaledIsometry& map) const;

 private:
  Point center_;
  double rho_;
  double rho_prime_;
};

double radius_ratio(const ConcentricPair& pair);

/// Angular band around a tangency inside which a line may be reported as
/// tangent or secant: the tangency test accepts deviations of about
/// sqrt(eps_sign) radians, widened by a constant for the lever arm.
inline double tangency_band(const Tolerance& tol) { return 1e-6 + 20.0 * std::sqrt(tol.eps_sign()); }

/// Two circles with distinct centers.
class NonConcentricPair {
 public:
  NonConcentricPair(Point c1, double r1, Point c2, double r2, const Tolerance& tol = {});

  const Circle& first() const noexcept { return first_; }
  const Circle& second() const noexcept { return second_; }
  /// The circle with the larger radius (first on ties).
  const Circle& larger() const noexcept;
  const Circle& smaller() const noexcept;
  double center_distance() const { return distance(first_.center, second_.center); }

 private:
  Circle first_;
  Circle second_;
};

/// Union of two circles, the common shape behind both pair types.
class TwoCircles {
 public:
  TwoCircles(Circle a, Circle b, Tolerance tol = {});
  explicit TwoCircles(const ConcentricPair& pair, Tolerance tol = {});
  explicit TwoCircles(const NonConcentricPair& pair, Tolerance tol = {});

  const Circle& circle(int index) const noexcept { return index == 0 ? a_ : b_; }
  const Tolerance& tolerance() const noexcept { return tol_; }

  bool contains(Point p) const;

  /// All points of the union on the line through p and q, ordered along
  /// the direction from p to q and deduplicated by eps_metric. A tangent
  /// line contributes a single point for that circle. Throws
  /// Error(off_set) if p or q is not on the union, Error(invalid_argument)
  /// if they coincide.
  std::vector<Point> line_trace(Point p, Point q) const;

  /// card (x, z)_S: union points strictly inside the open segment.
  int interval_card(Point x, Point z) const;

  /// Union points strictly inside the open segment, ordered from x to z.
  std::vector<Point> interval_points(Point x, Point z) const;

  /// Whether `p` (on the union) is an extreme point: no line through p
  /// meets the union on both sides of p.
  bool is_extreme(Point p) const;

  /// Points lying on both circles (0, 1 for tangency, or 2).
  std::vector<Point> common_points() const;

 private:
  void require_on_set(Point p, const char* name) const;
  /// Parameters t with p + t (q - p) on the union, sorted, deduplicated.
  std::vector<double> line_parameters(Point p, Point q) const;

  Circle a_;
  Circle b_;
  Tolerance tol_;
};

}  // namespace btw
