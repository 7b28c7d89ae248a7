#include "btw/arcs.hpp"

#include <algorithm>
#include <string>

#include "btw/errors.hpp"

namespace btw {

namespace {

// Angular slack for open-arc membership: points closer than this to an
// endpoint count as uncovered.
constexpr double kArcEps = 1e-12;

void require_on_circle(const Circle& circle, Point p, double eps, const char* what) {
  if (!circle.contains_on_boundary(p, eps)) {
    throw Error(ErrorCode::off_set, std::string("point is not on the ") + what + " circle");
  }
}

}  // namespace

double arc_half_width(const ConcentricPair& pair) { return std::acos(pair.ratio()); }

Arc::Arc(const ConcentricPair& pair, double alpha, bool is_double)
    : pair_(pair),
      alpha_(normalize_angle(alpha)),
      half_width_((is_double ? 2.0 : 1.0) * arc_half_width(pair)),
      double_(is_double) {}

std::pair<Point, Point> Arc::endpoints() const {
  const Circle outer = pair_.outer();
  return {outer.at(alpha_ - half_width_), outer.at(alpha_ + half_width_)};
}

Point Arc::tangency_point() const { return pair_.inner().at(alpha_); }

bool Arc::contains_angle(double angle) const {
  return angular_distance(angle, alpha_) < half_width_ - kArcEps;
}

Arc make_arc(const ConcentricPair& pair, double alpha, bool is_double) {
  return Arc(pair, alpha, is_double);
}

std::pair<Point, Point> arc_endpoints(const Arc& arc) { return arc.endpoints(); }

bool arc_contains(const Arc& arc, double angle) { return arc.contains_angle(angle); }

namespace {

template <typename Predicate>
ArcIdentification sweep_identify(const ConcentricPair& pair, Point u, const Arc& arc, int samples,
                                 const Tolerance& tol, std::size_t endpoint_trace,
                                 Predicate characterized) {
  if (samples < 8) throw Error(ErrorCode::invalid_argument, "need at least 8 sweep samples");
  const TwoCircles set(pair, tol);
  const Circle outer = pair.outer();
  ArcIdentification out{arc, {}, arc.endpoints(), samples};
  const double lo = arc.alpha() - arc.half_width();
  const double hi = arc.alpha() + arc.half_width();

  for (int j = 0; j < samples; ++j) {
    const double theta = kTwoPi * j / samples;
    const Point s = outer.at(theta);
    if (distance(s, u) <= tol.eps_metric()) continue;
    const bool by_incidence = characterized(set, s);
    if (by_incidence) out.characterized_angles.push_back(theta);
    const bool by_geometry = arc.contains_angle(theta);
    if (by_incidence != by_geometry) {
      const double band = std::min(angular_distance(theta, lo), angular_distance(theta, hi));
      if (band > tangency_band(tol)) {
        throw Error(ErrorCode::invariant_violation,
                    "arc characterization disagrees with geometry at angle " + std::to_string(theta));
      }
    }
  }

  for (Point endpoint : {out.endpoints.first, out.endpoints.second}) {
    if (set.line_trace(endpoint, u).size() != endpoint_trace) {
      throw Error(ErrorCode::invariant_violation,
                  "arc endpoint does not have the expected trace cardinality");
    }
  }
  return out;
}

}  // namespace

ArcIdentification identify_arc_from_inner(const ConcentricPair& pair, Point u, int samples,
                                          const Tolerance& tol) {
  require_on_circle(pair.inner(), u, tol.eps_metric(), "inner");
  const Arc arc(pair, pair.inner().angle_of(u), false);
  return sweep_identify(pair, u, arc, samples, tol, 3, [&](const TwoCircles& set, Point s) {
    return set.line_trace(s, u).size() == 4 && set.interval_card(s, u) == 0;
  });
}

ArcIdentification identify_double_arc(const ConcentricPair& pair, Point u, int samples,
                                      const Tolerance& tol) {
  require_on_circle(pair.outer(), u, tol.eps_metric(), "outer");
  const Arc arc(pair, pair.outer().angle_of(u), true);
  return sweep_identify(pair, u, arc, samples, tol, 3, [&](const TwoCircles& set, Point s) {
    return set.line_trace(s, u).size() == 2;
  });
}

int m_invariant(const ConcentricPair& pair) {
  // n open arcs of half width a cover the circle iff n * a > pi
  const double x = std::numbers::pi / arc_half_width(pair);
  const double nearest = std::round(x);
  if (std::fabs(x - nearest) <= 1e-9 * x) return static_cast<int>(nearest) + 1;
  return static_cast<int>(std::floor(x)) + 1;
}

double M_invariant(const ConcentricPair& pair) {
  return std::numbers::pi / arc_half_width(pair);
}

bool cover_lower_bound_ok(const ConcentricPair& pair, int n, int k) {
  if (n < 1 || k < 1) throw Error(ErrorCode::invalid_argument, "n and k must be positive");
  const double lhs = n * arc_half_width(pair);
  const double rhs = k * std::numbers::pi;
  return lhs >= rhs - 1e-12 * rhs;
}

CoverCertificate construct_cover(const ConcentricPair& pair, double target) {
  const double M = M_invariant(pair);
  if (!(target > M)) {
    throw Error(ErrorCode::invalid_argument,
                "no k-cover with n/k <= " + std::to_string(target) + " exists (M = " +
                    std::to_string(M) + ")");
  }
  const double a = arc_half_width(pair);
  const int max_k = static_cast<int>(std::ceil(1.0 / (target - M))) + 1;
  for (int k = 1; k <= max_k; ++k) {
    int n = static_cast<int>(std::floor(M * k)) + 1;
    // strict inequality with a margin: arcs that only abut leave their endpoints bare
    while (n * a - k * std::numbers::pi <= 1e-9 * k * std::numbers::pi) ++n;
    if (n > target * k) continue;

    // consecutive arcs overlap by eps; n steps of (2a - eps) wrap k times
    const double eps = (2.0 * n * a - kTwoPi * k) / n;
    CoverCertificate cert;
    cert.k = k;
    for (int i = 1; i <= n; ++i) cert.alphas.push_back(normalize_angle(i * (2.0 * a - eps)));
    if (verify_cover(pair, cert) < k) {
      throw Error(ErrorCode::invariant_violation, "constructed cover failed verification");
    }
    return cert;
  }
  throw Error(ErrorCode::invariant_violation, "cover construction did not terminate");
}

int verify_cover(const ConcentricPair& pair, const CoverCertificate& cert) {
  if (cert.alphas.empty()) return 0;
  const double a = arc_half_width(pair);
  std::vector<double> events;
  events.reserve(2 * cert.alphas.size());
  for (double alpha : cert.alphas) {
    events.push_back(normalize_angle(alpha - a));
    events.push_back(normalize_angle(alpha + a));
  }
  std::sort(events.begin(), events.end());
  events.erase(std::unique(events.begin(), events.end()), events.end());

  auto coverage = [&](double theta) {
    int count = 0;
    for (double alpha : cert.alphas)
      if (angular_distance(theta, alpha) < a - kArcEps) ++count;
    return count;
  };

  int minimum = static_cast<int>(cert.alphas.size());
  for (std::size_t i = 0; i < events.size(); ++i) {
    const double here = events[i];
    const double next = i + 1 < events.size() ? events[i + 1] : events.front() + kTwoPi;
    minimum = std::min(minimum, coverage(here));
    minimum = std::min(minimum, coverage(0.5 * (here + next)));
  }
  return minimum;
}

}  // namespace btw
