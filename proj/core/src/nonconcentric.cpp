#include "btw/nonconcentric.hpp"

#include <algorithm>

#include "btw/errors.hpp"

namespace btw {

std::string to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::a: return "a";
    case CaseLabel::b: return "b";
    case CaseLabel::c: return "c";
    case CaseLabel::d: return "d";
    case CaseLabel::e: return "e";
  }
  return "?";
}

CaseLabel classify(const NonConcentricPair& pair, const Tolerance& tol) {
  const double d = pair.center_distance();
  const double big = pair.larger().radius;
  const double small = pair.smaller().radius;
  const double eps = tol.eps_metric();
  if (std::fabs(d - (big - small)) <= eps) return CaseLabel::b;
  if (d < big - small) return CaseLabel::a;
  if (std::fabs(d - (big + small)) <= eps) return CaseLabel::d;
  if (d < big + small) return CaseLabel::c;
  return CaseLabel::e;
}

NestedCircles::NestedCircles(const NonConcentricPair& pair, const Tolerance& tol)
    : outer_(pair.larger()), inner_(pair.smaller()) {
  if (classify(pair, tol) != CaseLabel::a) {
    throw Error(ErrorCode::invalid_argument, "inner circle is not strictly inside the outer one");
  }
}

NestedCircles::NestedCircles(const ConcentricPair& pair)
    : outer_(pair.outer()), inner_(pair.inner()) {}

ChordStep tangent_chord_step(const NestedCircles& nested, double theta, Turn direction) {
  const Circle& outer = nested.outer();
  const Circle& inner = nested.inner();
  const Point start = outer.at(theta);
  const Point offset = start - inner.center;
  const double d = norm(offset);
  if (!(d > inner.radius)) {
    throw Error(ErrorCode::invalid_argument, "outer point is not outside the inner circle");
  }
  const double base = polar_angle(offset);
  const double spread = std::acos(inner.radius / d);

  ChordStep best;
  double best_advance = kTwoPi + 1.0;
  for (double side : {-1.0, 1.0}) {
    const Point touch = inner.at(base + side * spread);
    // a chord from angle t1 along direction psi ends at angle 2 psi - pi - t1
    // (measured about the outer center)
    const double psi = polar_angle(touch - start);
    const double t1 = outer.angle_of(start);
    const double next = normalize_angle(2.0 * psi - std::numbers::pi - t1);
    const double advance =
        direction == Turn::ccw ? ccw_displacement(theta, next) : ccw_displacement(next, theta);
    if (advance < best_advance) {
      best_advance = advance;
      best = {next, touch};
    }
  }
  return best;
}

bool AngularInterval::contains(double angle, double slack) const {
  const double offset = ccw_displacement(start, angle);
  return offset > slack && offset < extent - slack;
}

AngularInterval generalized_arc(const NestedCircles& nested, Point u, const Tolerance& tol) {
  const Circle& outer = nested.outer();
  const Circle& inner = nested.inner();
  if (!inner.contains_on_boundary(u, tol.eps_metric())) {
    throw Error(ErrorCode::off_set, "point is not on the inner circle");
  }
  const Point normal = (u - inner.center) / norm(u - inner.center);
  const Point along{-normal.y, normal.x};
  const Point w = u - outer.center;
  const double b = dot(w, along);
  const double cc = dot(w, w) - outer.radius * outer.radius;  // negative: u is inside
  const double root = std::sqrt(b * b - cc);
  const double t1 = outer.angle_of(u + (-b - root) * along);
  const double t2 = outer.angle_of(u + (-b + root) * along);

  const double span = ccw_displacement(t1, t2);
  const Point mid = outer.at(t1 + 0.5 * span);
  if (dot(mid - u, normal) > 0.0) return {t1, span};
  return {t2, kTwoPi - span};
}

int generalized_arc_disagreements(const NestedCircles& nested, Point u, int samples,
                                  const Tolerance& tol) {
  const AngularInterval arc = generalized_arc(nested, u, tol);
  const TwoCircles set(nested.inner(), nested.outer(), tol);
  int disagreements = 0;
  for (int j = 0; j < samples; ++j) {
    const double theta = kTwoPi * j / samples;
    const Point s = nested.outer().at(theta);
    const bool by_incidence = set.line_trace(s, u).size() == 4 && set.interval_card(s, u) == 0;
    const bool by_geometry = arc.contains(theta);
    if (by_incidence == by_geometry) continue;
    const double band =
        std::min(angular_distance(theta, arc.start), angular_distance(theta, arc.end()));
    if (band > tangency_band(tol)) ++disagreements;
  }
  return disagreements;
}

}  // namespace btw
