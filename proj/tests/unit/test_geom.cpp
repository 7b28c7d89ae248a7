#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "btw/errors.hpp"
#include "btw/geom.hpp"

using namespace btw;
using doctest::Approx;

namespace {
constexpr double pi = std::numbers::pi;

bool close(Point a, Point b, double eps = 1e-12) { return distance(a, b) <= eps; }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected btw::Error");
  return ErrorCode::io_error;
}
}  // namespace

TEST_CASE("orientation signs") {
  CHECK(orient({0, 0}, {1, 0}, {0, 1}) == Sign::positive);
  CHECK(orient({0, 0}, {1, 0}, {2, 0}) == Sign::zero);
  CHECK(orient({0, 0}, {2, 0}, {1, -1}) == Sign::negative);
  CHECK(signed_area2({0, 0}, {1, 0}, {0, 1}) == Approx(1.0));
}

TEST_CASE("orientation respects eps_sign") {
  const Tolerance loose(1e-3, 1e-9);
  CHECK(orient({0, 0}, {1, 0}, {2, 1e-4}) == Sign::positive);
  CHECK(orient({0, 0}, {1, 0}, {2, 1e-4}, loose) == Sign::zero);
}

TEST_CASE("collinear") {
  CHECK(collinear({-1, 0}, {0, 0}, {1, 0}));
  CHECK(collinear({0, -1}, {0, 0}, {0, 1}));
  CHECK_FALSE(collinear({0, 0}, {1, 0}, {1, 1}));
}

TEST_CASE("between, strict and closed") {
  CHECK(between({0, 0}, {1, 0}, {2, 0}, true));
  CHECK(between({0, -1}, {0, 0}, {0, 1}, true));
  CHECK_FALSE(between({3, 4}, {3, 4}, {3, 4}, true));
  CHECK(between({3, 4}, {3, 4}, {3, 4}, false));
  // endpoints: closed yes, strict no
  CHECK(between({0, 0}, {0, 0}, {2, 0}, false));
  CHECK_FALSE(between({0, 0}, {0, 0}, {2, 0}, true));
  // collinear but outside
  CHECK_FALSE(between({0, 0}, {3, 0}, {2, 0}, false));
  CHECK_FALSE(between({0, 0}, {1, 0.1}, {2, 0}, false));
}

TEST_CASE("tolerance and point validation") {
  CHECK(code_of([] { Tolerance(0.0, 1e-9); }) == ErrorCode::invalid_argument);
  CHECK(code_of([] { Tolerance(1e-9, -1.0); }) == ErrorCode::invalid_argument);
  CHECK(code_of([] { Tolerance(std::numeric_limits<double>::infinity(), 1e-9); }) ==
        ErrorCode::invalid_argument);
  CHECK(code_of([] { Point(std::nan(""), 0.0); }) == ErrorCode::invalid_argument);
  CHECK(code_of([] { Point(0.0, std::numeric_limits<double>::infinity()); }) ==
        ErrorCode::invalid_argument);
}

TEST_CASE("angle helpers") {
  CHECK(polar_angle({0, -1}) == Approx(1.5 * pi));
  CHECK(normalize_angle(-pi / 2) == Approx(1.5 * pi));
  CHECK(normalize_angle(4 * pi + 0.25) == Approx(0.25));
  CHECK(angular_distance(0.1, kTwoPi - 0.1) == Approx(0.2));
  CHECK(ccw_displacement(kTwoPi - 0.1, 0.1) == Approx(0.2));
  CHECK(ccw_displacement(0.1, kTwoPi - 0.1) == Approx(kTwoPi - 0.2));
}

TEST_CASE("scaled isometry factories") {
  CHECK(close(ScaledIsometry::rescale(2.0)({1, 1}), {2, 2}));
  CHECK(close(ScaledIsometry::translate({0, 0})({3.5, -2}), {3.5, -2}));
  CHECK(close(ScaledIsometry::rotate(pi / 2)({1, 0}), {0, 1}));
  const auto refl = ScaledIsometry::reflect_rotate(0.6);
  CHECK(close(refl(unit_vector(0.2)), unit_vector(0.4)));
  CHECK_THROWS_AS(ScaledIsometry(0.0, 0.0, false, {}), Error);
}

TEST_CASE("compose and invert agree with pointwise application") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-3, 3);
  std::uniform_real_distribution<double> s(0.2, 4);
  for (int t = 0; t < 200; ++t) {
    const ScaledIsometry f(s(rng), u(rng), t % 2 == 0, {u(rng), u(rng)});
    const ScaledIsometry g(s(rng), u(rng), t % 3 == 0, {u(rng), u(rng)});
    const Point p{u(rng), u(rng)};
    CHECK(close(compose(f, g)(p), f(g(p)), 1e-11));
    CHECK(close(invert(f)(f(p)), p, 1e-11));
    // distances scale uniformly
    const Point q{u(rng), u(rng)};
    CHECK(distance(f(p), f(q)) == Approx(f.scale() * distance(p, q)).epsilon(1e-12));
  }
}

TEST_CASE("fit_similarity: two-point solve") {
  const std::vector<Correspondence> pairs{{{1, 0}, {0, 2}}, {{-1, 0}, {0, -2}}};
  const auto fit = fit_similarity(pairs, false);
  CHECK(fit.map.scale() == Approx(2.0));
  CHECK(normalize_angle(fit.map.rotation()) == Approx(pi / 2));
  CHECK(close(fit.map.translation(), {0, 0}));
  CHECK(fit.residual <= 1e-12);
  CHECK(close(fit.map({0, 1}), {-2, 0}));
}

TEST_CASE("fit_similarity: identity and a non-similarity") {
  const std::vector<Correspondence> id{{{0, 0}, {0, 0}}, {{1, 0}, {1, 0}}, {{0, 1}, {0, 1}}};
  const auto fit = fit_similarity(id, true);
  CHECK(fit.residual <= 1e-12);
  CHECK_FALSE(fit.map.reflect());
  CHECK(fit.map.scale() == Approx(1.0));

  // first two pairs force scale 2, which sends (0,1) to (0,2), not (0,1)
  const std::vector<Correspondence> bad{{{0, 0}, {0, 0}}, {{1, 0}, {2, 0}}, {{0, 1}, {0, 1}}};
  CHECK(fit_similarity(bad, false).residual >= 1.0 - 1e-12);
}

TEST_CASE("fit_similarity recovers random similarities") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int t = 0; t < 100; ++t) {
    const ScaledIsometry f(std::exp(u(rng)), u(rng), t % 2 == 1, {u(rng), u(rng)});
    std::vector<Correspondence> pairs;
    for (int i = 0; i < 6; ++i) {
      const Point p{u(rng), u(rng)};
      pairs.push_back({p, f(p)});
    }
    const auto fit = fit_similarity(pairs, true);
    CHECK(fit.residual < 1e-10);
    CHECK(fit.map.reflect() == f.reflect());
    CHECK(fit.map.scale() == Approx(f.scale()).epsilon(1e-10));
  }
}

TEST_CASE("fit_similarity rejects coincident sources") {
  const std::vector<Correspondence> same{{{1, 1}, {0, 0}}, {{1, 1}, {2, 2}}};
  CHECK(code_of([&] { fit_similarity(same, true); }) == ErrorCode::degenerate_input);
  CHECK(code_of([] { fit_similarity({}, true); }) == ErrorCode::degenerate_input);
}
