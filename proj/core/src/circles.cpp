#include "btw/circles.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "btw/errors.hpp"

namespace btw {

namespace {

constexpr double kAngleEps = 1e-9;

void require_positive_radius(double r, const char* name) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw Error(ErrorCode::invalid_argument, std::string(name) + " must be positive and finite");
  }
}

}  // namespace

ConcentricPair::ConcentricPair(Point center, double rho, double rho_prime)
    : center_(center), rho_(rho), rho_prime_(rho_prime) {
  require_positive_radius(rho, "rho");
  require_positive_radius(rho_prime, "rho_prime");
  if (!(rho < rho_prime)) {
    throw Error(ErrorCode::invalid_argument, "concentric pair requires rho < rho_prime");
  }
}

ConcentricPair ConcentricPair::transformed(const ScaledIsometry& map) const {
  return {map(center_), map.scale() * rho_, map.scale() * rho_prime_};
}

double radius_ratio(const ConcentricPair& pair) { return pair.ratio(); }

NonConcentricPair::NonConcentricPair(Point c1, double r1, Point c2, double r2,
                                     const Tolerance& tol)
    : first_{c1, r1}, second_{c2, r2} {
  require_positive_radius(r1, "r1");
  require_positive_radius(r2, "r2");
  if (distance(c1, c2) <= tol.eps_metric()) {
    throw Error(ErrorCode::invalid_argument, "non-concentric pair requires distinct centers");
  }
}

const Circle& NonConcentricPair::larger() const noexcept {
  return second_.radius > first_.radius ? second_ : first_;
}

const Circle& NonConcentricPair::smaller() const noexcept {
  return second_.radius > first_.radius ? first_ : second_;
}

// --- TwoCircles --------------------------------------------------------------

TwoCircles::TwoCircles(Circle a, Circle b, Tolerance tol) : a_(a), b_(b), tol_(tol) {}

TwoCircles::TwoCircles(const ConcentricPair& pair, Tolerance tol)
    : TwoCircles(pair.inner(), pair.outer(), tol) {}

TwoCircles::TwoCircles(const NonConcentricPair& pair, Tolerance tol)
    : TwoCircles(pair.first(), pair.second(), tol) {}

bool TwoCircles::contains(Point p) const {
  return a_.contains_on_boundary(p, tol_.eps_metric()) ||
         b_.contains_on_boundary(p, tol_.eps_metric());
}

void TwoCircles::require_on_set(Point p, const char* name) const {
  if (!contains(p)) {
    throw Error(ErrorCode::off_set, std::string("point ") + name + " is not on the circle union");
  }
}

std::vector<double> TwoCircles::line_parameters(Point p, Point q) const {
  const double length = distance(p, q);
  if (length <= tol_.eps_metric()) {
    throw Error(ErrorCode::invalid_argument, "line needs two distinct points");
  }
  const Point u = (q - p) / length;
  std::vector<double> s_values;
  for (const Circle* c : {&a_, &b_}) {
    const Point w = p - c->center;
    const double b = dot(w, u);
    const double cc = dot(w, w) - c->radius * c->radius;
    const double disc = b * b - cc;
    const double tangency = tol_.eps_sign() * c->radius * c->radius;
    if (disc < -tangency) continue;
    if (disc <= tangency) {
      s_values.push_back(-b);
      continue;
    }
    // stable roots: p is often on the circle, making one root ~0
    const double root = std::sqrt(disc);
    const double big = b >= 0.0 ? -(b + root) : -(b - root);
    s_values.push_back(big);
    s_values.push_back(big != 0.0 ? cc / big : 0.0);
  }
  std::sort(s_values.begin(), s_values.end());
  std::vector<double> out;
  for (double s : s_values) {
    // snap to the defining points
    if (std::fabs(s) <= tol_.eps_metric()) s = 0.0;
    if (std::fabs(s - length) <= tol_.eps_metric()) s = length;
    if (out.empty() || s - out.back() > tol_.eps_metric()) out.push_back(s);
  }
  for (double& s : out) s /= length;
  return out;
}

std::vector<Point> TwoCircles::line_trace(Point p, Point q) const {
  require_on_set(p, "p");
  require_on_set(q, "q");
  std::vector<Point> out;
  for (double t : line_parameters(p, q)) {
    if (t == 0.0) {
      out.push_back(p);
    } else if (t == 1.0) {
      out.push_back(q);
    } else {
      out.push_back(p + t * (q - p));
    }
  }
  return out;
}

std::vector<Point> TwoCircles::interval_points(Point x, Point z) const {
  require_on_set(x, "x");
  require_on_set(z, "z");
  std::vector<Point> out;
  for (double t : line_parameters(x, z)) {
    if (t > 0.0 && t < 1.0) out.push_back(x + t * (z - x));
  }
  return out;
}

int TwoCircles::interval_card(Point x, Point z) const {
  return static_cast<int>(interval_points(x, z).size());
}

bool TwoCircles::is_extreme(Point p) const {
  require_on_set(p, "p");
  // Directions d for which the open ray p + t d (t > 0) meets a circle:
  // an angular arc around the direction to its center.
  struct DirectionArc {
    double center;
    double half_width;
    bool closed;
  };
  std::vector<DirectionArc> arcs;
  for (const Circle* c : {&a_, &b_}) {
    const double d = distance(p, c->center);
    const double toward = polar_angle(c->center - p);
    if (d < c->radius - tol_.eps_metric()) return false;  // inside the disk
    if (d <= c->radius + tol_.eps_metric()) {
      arcs.push_back({toward, std::numbers::pi / 2, false});
    } else {
      arcs.push_back({toward, std::asin(c->radius / d), true});
    }
  }
  for (const auto& i : arcs) {
    for (const auto& j : arcs) {
      const double gap = angular_distance(i.center, j.center + std::numbers::pi);
      const double reach = i.half_width + j.half_width;
      const bool meets = (i.closed && j.closed) ? gap <= reach + kAngleEps : gap < reach - kAngleEps;
      if (meets) return false;
    }
  }
  return true;
}

std::vector<Point> TwoCircles::common_points() const {
  const double d = distance(a_.center, b_.center);
  if (d <= tol_.eps_metric()) return {};
  const Point u = (b_.center - a_.center) / d;
  const double along = (d * d + a_.radius * a_.radius - b_.radius * b_.radius) / (2.0 * d);
  const double h2 = a_.radius * a_.radius - along * along;
  const double scale = std::max(a_.radius, b_.radius);
  const double tangency = tol_.eps_sign() * scale * scale;
  if (h2 < -tangency) return {};
  const Point foot = a_.center + along * u;
  if (h2 <= tangency) return {foot};
  const double h = std::sqrt(h2);
  const Point normal{-u.y, u.x};
  return {foot + h * normal, foot - h * normal};
}

}  // namespace btw
