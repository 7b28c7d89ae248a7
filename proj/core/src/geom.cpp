#include "btw/geom.hpp"

#include <algorithm>
#include <complex>
#include <string>

#include "btw/errors.hpp"

namespace btw {

Tolerance::Tolerance(double eps_sign, double eps_metric)
    : eps_sign_(eps_sign), eps_metric_(eps_metric) {
  if (!(eps_sign > 0.0) || !(eps_metric > 0.0) || !std::isfinite(eps_sign) ||
      !std::isfinite(eps_metric)) {
    throw Error(ErrorCode::invalid_argument, "tolerances must be positive and finite");
  }
}

Point::Point(double px, double py) : x(px), y(py) {
  if (!std::isfinite(px) || !std::isfinite(py)) {
    throw Error(ErrorCode::invalid_argument, "point coordinates must be finite");
  }
}

double normalize_angle(double angle) {
  double a = std::fmod(angle, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  // fmod of a tiny negative value can round up to exactly 2pi
  if (a >= kTwoPi) a = 0.0;
  return a;
}

double polar_angle(Point p) { return normalize_angle(std::atan2(p.y, p.x)); }

double angular_distance(double a, double b) {
  double d = std::fabs(normalize_angle(a) - normalize_angle(b));
  return d > std::numbers::pi ? kTwoPi - d : d;
}

double ccw_displacement(double from, double to) { return normalize_angle(to - from); }

double signed_area2(Point p, Point q, Point r) { return cross(q - p, r - p); }

Sign orient(Point p, Point q, Point r, const Tolerance& tol) {
  double area = signed_area2(p, q, r);
  if (std::fabs(area) <= tol.eps_sign()) return Sign::zero;
  return area > 0.0 ? Sign::positive : Sign::negative;
}

bool collinear(Point p, Point q, Point r, const Tolerance& tol) {
  return orient(p, q, r, tol) == Sign::zero;
}

bool between(Point x, Point y, Point z, bool strict, const Tolerance& tol) {
  const double eps = tol.eps_metric();
  const double len = distance(x, z);
  if (len <= eps) {
    return !strict && distance(x, y) <= eps;
  }
  if (!collinear(x, y, z, tol)) return false;
  // symmetric in x and z: compute the parameter from the midpoint
  const Point mid = 0.5 * (x + z);
  const double t = dot(y - mid, z - x) / len;  // signed offset along the segment
  if (std::fabs(t) > 0.5 * len + eps) return false;
  if (strict) {
    return distance(x, y) > eps && distance(z, y) > eps;
  }
  return true;
}

// --- ScaledIsometry ---------------------------------------------------------

ScaledIsometry::ScaledIsometry(double scale, double rotation, bool reflect, Point translation)
    : scale_(scale), rotation_(normalize_angle(rotation)), reflect_(reflect),
      translation_(translation) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw Error(ErrorCode::invalid_argument, "scale must be positive, got " + std::to_string(scale));
  }
  if (!std::isfinite(rotation)) {
    throw Error(ErrorCode::invalid_argument, "rotation must be finite");
  }
}

ScaledIsometry ScaledIsometry::rescale(double factor) { return {factor, 0.0, false, {}}; }
ScaledIsometry ScaledIsometry::translate(Point offset) { return {1.0, 0.0, false, offset}; }
ScaledIsometry ScaledIsometry::rotate(double angle) { return {1.0, angle, false, {}}; }
ScaledIsometry ScaledIsometry::reflect_rotate(double angle) { return {1.0, angle, true, {}}; }

Point ScaledIsometry::apply_linear(Point v) const {
  if (reflect_) v.y = -v.y;
  const double c = std::cos(rotation_);
  const double s = std::sin(rotation_);
  return {scale_ * (c * v.x - s * v.y), scale_ * (s * v.x + c * v.y)};
}

Point ScaledIsometry::apply(Point p) const { return apply_linear(p) + translation_; }

ScaledIsometry compose(const ScaledIsometry& outer, const ScaledIsometry& inner) {
  // Rot(a) Refl Rot(b) = Rot(a - b) Refl
  const double rotation =
      outer.reflect() ? outer.rotation() - inner.rotation() : outer.rotation() + inner.rotation();
  return {outer.scale() * inner.scale(), rotation, outer.reflect() != inner.reflect(),
          outer.apply(inner.translation())};
}

ScaledIsometry invert(const ScaledIsometry& map) {
  // (s Rot(t) Refl^f)^-1 = (1/s) Refl^f Rot(-t) = (1/s) Rot(f ? t : -t) Refl^f
  const double rotation = map.reflect() ? map.rotation() : -map.rotation();
  ScaledIsometry linear(1.0 / map.scale(), rotation, map.reflect(), {});
  return {linear.scale(), linear.rotation(), linear.reflect(), -linear.apply(map.translation())};
}

namespace {

using Complex = std::complex<double>;

Complex as_complex(Point p) { return {p.x, p.y}; }

double max_residual(const ScaledIsometry& map, std::span<const Correspondence> pairs) {
  double worst = 0.0;
  for (const auto& [src, dst] : pairs) worst = std::max(worst, distance(map(src), dst));
  return worst;
}

// z -> a * (reflect ? conj(z) : z) + b through (z1 -> w1), (z2 -> w2).
ScaledIsometry two_point_similarity(Correspondence first, Correspondence second, bool reflect) {
  auto src = [reflect](Point p) {
    Complex z = as_complex(p);
    return reflect ? std::conj(z) : z;
  };
  const Complex z1 = src(first.first);
  const Complex z2 = src(second.first);
  const Complex w1 = as_complex(first.second);
  const Complex w2 = as_complex(second.second);
  const Complex a = (w2 - w1) / (z2 - z1);
  const Complex b = w1 - a * z1;
  const double scale = std::abs(a);
  if (!(scale > 0.0)) {
    throw Error(ErrorCode::degenerate_input, "correspondence collapses distinct points");
  }
  return {scale, std::arg(a), reflect, Point{b.real(), b.imag()}};
}

}  // namespace

SimilarityFit fit_similarity(std::span<const Correspondence> pairs, bool allow_reflection,
                             const Tolerance& tol) {
  if (pairs.size() < 2) {
    throw Error(ErrorCode::degenerate_input, "need at least two correspondence pairs");
  }
  const Correspondence& first = pairs.front();
  auto second = std::find_if(pairs.begin() + 1, pairs.end(), [&](const Correspondence& c) {
    return distance(c.first, first.first) > tol.eps_metric();
  });
  if (second == pairs.end()) {
    throw Error(ErrorCode::degenerate_input, "all source points coincide");
  }

  SimilarityFit best;
  best.map = two_point_similarity(first, *second, false);
  best.residual = max_residual(best.map, pairs);
  if (allow_reflection) {
    SimilarityFit mirrored;
    mirrored.map = two_point_similarity(first, *second, true);
    mirrored.residual = max_residual(mirrored.map, pairs);
    if (mirrored.residual < best.residual) best = mirrored;
  }
  return best;
}

}  // namespace btw
