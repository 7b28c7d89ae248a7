#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "btw/arcs.hpp"
#include "btw/errors.hpp"
#include "oracles.hpp"

using namespace btw;
using doctest::Approx;

namespace {
constexpr double pi = std::numbers::pi;
const ConcentricPair kHalf({0, 0}, 1.0, 2.0);

ConcentricPair with_ratio(double r) { return ConcentricPair({0, 0}, r, 1.0); }

bool close(Point a, Point b, double eps = 1e-12) { return distance(a, b) <= eps; }
}  // namespace

TEST_CASE("single arc endpoints and tangency") {
  const Arc arc = make_arc(kHalf, 0.0);
  CHECK(arc.half_width() == Approx(pi / 3));
  const auto [v, w] = arc_endpoints(arc);
  CHECK(close(v, 2.0 * unit_vector(-pi / 3)));
  CHECK(close(w, 2.0 * unit_vector(pi / 3)));
  CHECK(close(arc.tangency_point(), {1, 0}));
}

TEST_CASE("open arcs exclude their endpoints and wrap around") {
  const Arc arc = make_arc(kHalf, 0.0);
  CHECK(arc_contains(arc, 0.0));
  CHECK(arc_contains(arc, kTwoPi - 0.5));
  CHECK(arc_contains(arc, pi / 3 - 1e-6));
  CHECK_FALSE(arc_contains(arc, pi / 3));
  CHECK_FALSE(arc_contains(arc, -pi / 3));
  CHECK_FALSE(arc_contains(arc, pi));
}

TEST_CASE("double arcs have twice the half width") {
  const Arc d = make_arc(kHalf, pi, true);
  CHECK(d.is_double());
  CHECK(d.half_width() == Approx(2 * pi / 3));
  const auto [v, w] = d.endpoints();
  CHECK(close(v, 2.0 * unit_vector(pi / 3), 1e-12));
  CHECK(close(w, 2.0 * unit_vector(5 * pi / 3), 1e-12));
  CHECK(d.contains_angle(pi / 3 + 0.01));
  CHECK_FALSE(d.contains_angle(0.0));
}

TEST_CASE("arc identified from an inner point agrees with the sweep") {
  for (double t : {0.0, pi / 2, 2.0, 5.5}) {
    const auto id = identify_arc_from_inner(kHalf, unit_vector(t), 720);
    CHECK(id.arc.alpha() == Approx(normalize_angle(t)));
    CHECK_FALSE(id.characterized_angles.empty());
    for (double s : id.characterized_angles) CHECK(id.arc.contains_angle(s));
    CHECK(close(id.endpoints.first, id.arc.endpoints().first, 1e-9));
    CHECK(close(id.endpoints.second, id.arc.endpoints().second, 1e-9));
  }
  CHECK_THROWS_AS(identify_arc_from_inner(kHalf, {1.5, 0}, 100), Error);
}

TEST_CASE("double arc identified from an outer point") {
  const auto id = identify_double_arc(kHalf, {2, 0}, 720);
  CHECK(id.arc.half_width() == Approx(2 * pi / 3));
  for (double s : id.characterized_angles) CHECK(id.arc.contains_angle(s));
  try {
    identify_double_arc(kHalf, {1, 0}, 100);
    FAIL("expected off_set");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::off_set);
  }
}

TEST_CASE("covering number m") {
  CHECK(m_invariant(with_ratio(0.4)) == 3);
  CHECK(m_invariant(with_ratio(std::sqrt(0.5))) == 5);
  CHECK(m_invariant(with_ratio(0.9)) == 7);
  // three open arcs of length exactly 2 pi / 3 leave their endpoints uncovered
  CHECK(m_invariant(kHalf) == 4);
  // two arcs of width below pi never suffice
  CHECK(m_invariant(with_ratio(0.01)) == 3);
}

TEST_CASE("m agrees with a grid search over evenly spaced arcs") {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  int tested = 0;
  while (tested < 12) {
    const double r = u(rng);
    const double x = pi / std::acos(r);
    // keep away from the integer boundaries where the grid cannot resolve coverage
    if (std::fabs(x - std::round(x)) < 1e-3) continue;
    CHECK(m_invariant(with_ratio(r)) == oracle::grid_m(r));
    ++tested;
  }
}

TEST_CASE("M invariant") {
  CHECK(M_invariant(kHalf) == Approx(3.0));
  CHECK(M_invariant(with_ratio(std::cos(pi / 5))) == Approx(5.0));
  // similarity invariance
  const auto moved = kHalf.transformed(ScaledIsometry(2.5, 1.1, true, {3, -1}));
  CHECK(M_invariant(moved) == Approx(M_invariant(kHalf)).epsilon(1e-12));
  CHECK(m_invariant(moved) == m_invariant(kHalf));
}

TEST_CASE("cover construction") {
  for (double target : {3.2, 4.5, 3.01}) {
    const auto cert = construct_cover(kHalf, target);
    const int n = static_cast<int>(cert.alphas.size());
    CHECK(static_cast<double>(n) / cert.k <= target);
    CHECK(verify_cover(kHalf, cert) >= cert.k);
    CHECK(oracle::grid_coverage(cert.alphas, pi / 3) >= cert.k);
    CHECK(cover_lower_bound_ok(kHalf, n, cert.k));
  }
  try {
    construct_cover(kHalf, 2.9);
    FAIL("expected invalid_argument");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_argument);
  }
  CHECK_THROWS_AS(construct_cover(kHalf, 3.0), Error);
}

TEST_CASE("cover verification") {
  CHECK(verify_cover(kHalf, {{0.0, 2 * pi / 3, 4 * pi / 3}, 1}) == 0);
  CHECK(verify_cover(kHalf, {{0.0, pi / 2, pi, 3 * pi / 2}, 1}) >= 1);
  CHECK(verify_cover(kHalf, {{}, 1}) == 0);
  // the same arc twice still leaves a gap
  CHECK(verify_cover(kHalf, {{1.0, 1.0}, 1}) == 0);
}

TEST_CASE("verify_cover matches a fine grid on random certificates") {
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> ang(0, kTwoPi);
  std::uniform_int_distribution<int> count(1, 12);
  for (int t = 0; t < 40; ++t) {
    std::vector<double> alphas(count(rng));
    for (double& a : alphas) a = ang(rng);
    const int exact = verify_cover(kHalf, {alphas, 1});
    const int grid = oracle::grid_coverage(alphas, pi / 3, 20000);
    // the grid can only miss thin uncovered slivers
    CHECK(exact <= grid);
    CHECK(grid - exact <= 1);
  }
}

TEST_CASE("measure bound") {
  CHECK(cover_lower_bound_ok(kHalf, 3, 1));
  CHECK_FALSE(cover_lower_bound_ok(kHalf, 2, 1));
  CHECK(cover_lower_bound_ok(kHalf, 31, 10));
  CHECK_FALSE(cover_lower_bound_ok(kHalf, 29, 10));
  CHECK_THROWS_AS(cover_lower_bound_ok(kHalf, 0, 1), Error);
}
