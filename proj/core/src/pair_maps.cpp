#include "btw/pair_maps.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

namespace btw {

namespace {

std::string mismatch_message(double m_source, double m_target) {
  std::ostringstream os;
  os.precision(12);
  os << "radius ratios differ: M(source) = " << m_source << ", M(target) = " << m_target;
  return os.str();
}

}  // namespace

RatioMismatchError::RatioMismatchError(double m_source, double m_target)
    : Error(ErrorCode::ratio_mismatch, mismatch_message(m_source, m_target)),
      m_source_(m_source),
      m_target_(m_target) {}

bool decide_isomorphic(const ConcentricPair& s, const ConcentricPair& r, const Tolerance& tol) {
  return std::fabs(s.ratio() - r.ratio()) <= tol.eps_metric();
}

ScaledIsometry canonical_isomorphism(const ConcentricPair& s, const ConcentricPair& r,
                                     const Tolerance& tol) {
  if (!decide_isomorphic(s, r, tol)) throw RatioMismatchError(M_invariant(s), M_invariant(r));
  const auto to_origin = ScaledIsometry::translate(-s.center());
  const auto rescale = ScaledIsometry::rescale(r.rho_prime() / s.rho_prime());
  const auto to_target = ScaledIsometry::translate(r.center());
  return compose(to_target, compose(rescale, to_origin));
}

std::vector<double> chord_orbit(const ConcentricPair& pair, double theta0, Turn sign, int steps) {
  if (steps < 0) throw Error(ErrorCode::invalid_argument, "steps must be non-negative");
  const double step = 2.0 * arc_half_width(pair) * static_cast<int>(sign);
  std::vector<double> out;
  out.reserve(steps + 1);
  for (int k = 0; k <= steps; ++k) out.push_back(normalize_angle(theta0 + k * step));
  return out;
}

SimilarityExtension extend_to_similarity(const ConcentricPair& s, const ConcentricPair& r,
                                         std::span<const Correspondence> samples,
                                         const Tolerance& tol) {
  if (!decide_isomorphic(s, r, tol)) throw RatioMismatchError(M_invariant(s), M_invariant(r));
  if (samples.size() < 2) throw Error(ErrorCode::degenerate_input, "need at least two samples");
  const TwoCircles source(s, tol);
  const TwoCircles target(r, tol);
  for (const auto& [src, dst] : samples) {
    if (!source.contains(src) || !target.contains(dst)) {
      throw Error(ErrorCode::off_set, "sample point is not on its circle pair");
    }
  }

  std::vector<Correspondence> ordered(samples.begin(), samples.end());
  const Point anchor = ordered.front().first;
  auto far = std::max_element(ordered.begin() + 1, ordered.end(), [&](const auto& x, const auto& y) {
    return distance(x.first, anchor) < distance(y.first, anchor);
  });
  std::iter_swap(ordered.begin() + 1, far);

  const SimilarityFit fit = fit_similarity(ordered, true, tol);
  SimilarityExtension out{fit.map, fit.residual, true};
  const double eps = tol.eps_metric() * std::max(1.0, r.rho_prime());
  for (const auto& [src, dst] : samples) {
    const bool src_outer = s.outer().contains_on_boundary(src, tol.eps_metric());
    const Circle& expected = src_outer ? r.outer() : r.inner();
    if (!expected.contains_on_boundary(fit.map(src), eps)) out.images_on_target = false;
  }
  return out;
}

FiniteConfig sample_configuration(const ConcentricPair& pair, int n, int p, const Tolerance& tol) {
  if (n < 4 || n % 2 != 0) throw Error(ErrorCode::invalid_argument, "N must be even and >= 4");
  if (p < 1) throw Error(ErrorCode::invalid_argument, "p must be positive");
  const double step = kTwoPi * p / n;
  if (!(step < std::numbers::pi / 2)) {
    throw Error(ErrorCode::invalid_argument, "2 pi p / N must lie in (0, pi/2)");
  }
  if (std::fabs(pair.ratio() - std::cos(step)) > tol.eps_metric()) {
    std::ostringstream os;
    os.precision(12);
    os << "ratio " << pair.ratio() << " is not cos(2 pi " << p << "/" << n
       << ") = " << std::cos(step);
    throw Error(ErrorCode::invalid_argument, os.str());
  }

  std::vector<Point> points;
  points.reserve(2 * n);
  for (int j = 0; j < n; ++j) points.push_back(pair.outer().at(kTwoPi * j / n));
  for (int j = 0; j < n; ++j) points.push_back(pair.inner().at(kTwoPi * j / n));

  using Key = std::tuple<PointId, PointId, PointId>;
  auto key = [](PointId a, PointId b, PointId c) {
    std::array<PointId, 3> t{a, b, c};
    std::sort(t.begin(), t.end());
    return Key{t[0], t[1], t[2]};
  };
  const auto outer = [n](int j) { return static_cast<PointId>(((j % n) + n) % n); };
  const auto inner = [n](int j) { return static_cast<PointId>(n + ((j % n) + n) % n); };

  std::set<Key> expected;
  for (int j = 0; j < n; ++j) expected.insert(key(outer(j), inner(j + p), outer(j + 2 * p)));
  for (int j = 0; j < n / 2; ++j) {
    const std::array<PointId, 4> line{outer(j), inner(j), inner(j + n / 2), outer(j + n / 2)};
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b)
        for (int c = b + 1; c < 4; ++c) expected.insert(key(line[a], line[b], line[c]));
  }

  const double near = 10.0 * tol.eps_sign();
  const std::size_t count = points.size();
  for (PointId a = 0; a < count; ++a) {
    for (PointId b = a + 1; b < count; ++b) {
      for (PointId c = b + 1; c < count; ++c) {
        const double area = std::fabs(signed_area2(points[a], points[b], points[c]));
        const bool wanted = expected.count(Key{a, b, c}) != 0;
        if (wanted && area > tol.eps_sign()) {
          throw Error(ErrorCode::invariant_violation, "expected incidence is not collinear");
        }
        if (!wanted && area <= near) {
          throw Error(ErrorCode::accidental_incidence,
                      "points " + std::to_string(a) + ", " + std::to_string(b) + ", " +
                          std::to_string(c) + " are unexpectedly (nearly) collinear");
        }
      }
    }
  }
  return FiniteConfig(std::move(points), tol);
}

}  // namespace btw
