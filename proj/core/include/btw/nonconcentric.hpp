#pragma once

// Two circles with distinct centers: the five mutual positions, and the
// tangent-chord (Poncelet) dynamics for one circle strictly inside another.

#include <string>

#include "btw/circles.hpp"

namespace btw {

/// a: one strictly inside the other; b: internally tangent; c: two
/// intersection points; d: externally tangent; e: strictly outside.
enum class CaseLabel { a, b, c, d, e };

std::string to_string(CaseLabel label);

/// Tangent cases use eps_metric-tolerant equality on the center distance.
CaseLabel classify(const NonConcentricPair& pair, const Tolerance& tol = {});

/// An outer circle with an inner circle strictly inside it. Built from a
/// case-(a) pair or from a concentric pair.
class NestedCircles {
 public:
  /// Throws Error(invalid_argument) unless classify(pair) == a.
  explicit NestedCircles(const NonConcentricPair& pair, const Tolerance& tol = {});
  explicit NestedCircles(const ConcentricPair& pair);

  const Circle& outer() const noexcept { return outer_; }
  const Circle& inner() const noexcept { return inner_; }

 private:
  Circle outer_;
  Circle inner_;
};

struct ChordStep {
  double theta = 0.0;  ///< angle of the next outer point
  Point tangency;      ///< where the chord touches the inner circle
};

/// From the outer point at `theta`, follow the tangent to the inner circle
/// that advances in the requested direction (the smaller displacement in
/// that direction) to its second outer intersection.
ChordStep tangent_chord_step(const NestedCircles& nested, double theta, Turn direction);

/// Open outer arc cut off by the tangent to the inner circle at u, on the
/// side away from the inner center. `start` is its clockwise end; the arc
/// runs counterclockwise for `extent` radians.
struct AngularInterval {
  double start = 0.0;
  double extent = 0.0;

  double end() const { return normalize_angle(start + extent); }
  bool contains(double angle, double slack = 1e-12) const;
};

/// Throws Error(off_set) if u is not on the inner circle.
AngularInterval generalized_arc(const NestedCircles& nested, Point u, const Tolerance& tol = {});

/// Sweep check of generalized_arc against the incidence characterization
/// (trace of 4 points through s and u, and (s, u) empty). Returns the
/// number of disagreeing samples outside tangency_band(tol) of the endpoints.
int generalized_arc_disagreements(const NestedCircles& nested, Point u, int samples,
                                  const Tolerance& tol = {});

}  // namespace btw
