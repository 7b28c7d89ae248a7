#include "btw/case_studies.hpp"

#include <algorithm>
#include <cmath>

#include "btw/arcs.hpp"
#include "btw/errors.hpp"
#include "btw/iso_search.hpp"
#include "btw/pair_maps.hpp"

namespace btw {

namespace {

using ojson = nlohmann::ordered_json;
using Json = ojson;

ojson point_json(Point p) { return ojson::array({p.x, p.y}); }

// Second intersection of the line through `from` (on the unit circle about
// the origin) along `toward` with that circle.
Point second_unit_intersection(Point from, Point toward) {
  const Point dir = (toward - from) / distance(toward, from);
  return from + (-2.0 * dot(from, dir)) * dir;
}

Point foot_of_perpendicular(Point p, Point a, Point b) {
  const Point ab = b - a;
  return a + (dot(p - a, ab) / dot(ab, ab)) * ab;
}

void require_height(double y) {
  if (!(y > -1.0 && y < 1.0)) {
    throw Error(ErrorCode::invalid_argument, "height y must lie in (-1, 1)");
  }
}

constexpr double kConcentricBand = 1e-12;

}  // namespace

Report example_covering_number(double rho, double tau) {
  if (!(rho > 0.0 && rho < 0.5)) {
    throw Error(ErrorCode::invalid_argument, "rho must lie in (0, 1/2)");
  }
  if (!(tau >= std::sqrt(0.5) && tau < 1.0)) {
    throw Error(ErrorCode::invalid_argument, "tau must lie in [sqrt(1/2), 1)");
  }
  const ConcentricPair s({0.0, 0.0}, rho, 1.0);
  const ConcentricPair r({0.0, 0.0}, tau, 1.0);
  const int m_s = m_invariant(s);
  const int m_r = m_invariant(r);

  Report rep;
  rep.name = "covering_number";
  rep.inputs["rho"] = rho;
  rep.inputs["tau"] = tau;
  rep.quantities["m_S"] = m_s;
  rep.quantities["m_R"] = m_r;
  rep.quantities["M_S"] = M_invariant(s);
  rep.quantities["M_R"] = M_invariant(r);
  rep.verdicts["m_S_equals_3"] = m_s == 3;
  rep.verdicts["m_R_at_least_4"] = m_r >= 4;
  rep.verdicts["non_isomorphic"] = m_s != m_r && !decide_isomorphic(s, r);
  rep.claims = {"three single arcs cover the outer circle of S",
                "at least four single arcs are needed for R",
                "m differs, so S and R are not betweenness isomorphic"};
  return rep;
}

FivePointSets five_point_sets() {
  FiniteConfig a({{-1, 0}, {0, -1}, {0, 0}, {0, 1}, {1, 0}});
  FiniteConfig b({{0, -1}, {0, 0}, {0, 1}, {1, 0}, {2, 0}});
  return {std::move(a), std::move(b), IdMap{4, 0, 1, 2, 3}};
}

Report example_five_points() {
  const FivePointSets sets = five_point_sets();
  const MapCheck col = verify_map(sets.a, sets.b, sets.map, IsoKind::collinearity);
  const MapCheck btw_check = verify_map(sets.a, sets.b, sets.map, IsoKind::betweenness);
  const SearchResult col_search = find_isomorphism(sets.a, sets.b, IsoKind::collinearity);
  const SearchResult btw_search = find_isomorphism(sets.a, sets.b, IsoKind::betweenness);
  const auto ext_a = extreme_points(sets.a).size();
  const auto ext_b = extreme_points(sets.b).size();

  Report rep;
  rep.name = "five_points";
  ojson pa = ojson::array();
  ojson pb = ojson::array();
  for (Point p : sets.a.points()) pa.push_back(point_json(p));
  for (Point p : sets.b.points()) pb.push_back(point_json(p));
  rep.inputs["A"] = pa;
  rep.inputs["B"] = pb;
  rep.inputs["map"] = sets.map;
  rep.quantities["extreme_count_A"] = ext_a;
  rep.quantities["extreme_count_B"] = ext_b;
  if (btw_check.violation) {
    const auto& v = *btw_check.violation;
    rep.quantities["violating_triple"] =
        ojson::array({point_json(sets.a.point(v[0])), point_json(sets.a.point(v[1])),
                      point_json(sets.a.point(v[2]))});
  }
  if (btw_search.certificate) {
    rep.quantities["certificate"] = {{"invariant", btw_search.certificate->invariant},
                                     {"value_A", btw_search.certificate->value_a},
                                     {"value_B", btw_search.certificate->value_b}};
  }
  rep.verdicts["map_preserves_collinearity"] = col.ok;
  rep.verdicts["map_breaks_betweenness"] = !btw_check.ok;
  rep.verdicts["collinearity_isomorphic"] =
      col_search.outcome == SearchResult::Outcome::found;
  rep.verdicts["betweenness_refuted"] = btw_search.outcome == SearchResult::Outcome::refuted;
  rep.verdicts["extreme_counts_differ"] = ext_a != ext_b;
  rep.claims = {"the map preserves collinear triples",
                "A and B are not betweenness isomorphic",
                "A has 4 extreme points and B has 3"};
  return rep;
}

TangentTriangle construct_tangent_triangle(double y) {
  require_height(y);
  TangentTriangle t;
  const double x = std::sqrt(1.0 - y * y);
  t.a = {x, y};
  t.a_prime = {-x, y};
  t.e = {0.0, -1.0};
  const double side_a = distance(t.a_prime, t.e);  // opposite A
  const double side_ap = distance(t.a, t.e);       // opposite A'
  const double side_e = distance(t.a, t.a_prime);  // opposite E
  const double perimeter = side_a + side_ap + side_e;
  const Point incenter = (side_a * t.a + side_ap * t.a_prime + side_e * t.e) / perimeter;
  const double area2 = std::fabs(signed_area2(t.a, t.a_prime, t.e));
  t.incircle = {incenter, area2 / perimeter};
  t.b = foot_of_perpendicular(incenter, t.a, t.e);
  t.b_prime = foot_of_perpendicular(incenter, t.a_prime, t.e);
  t.d = second_unit_intersection(t.a_prime, t.b);
  t.d_prime = second_unit_intersection(t.a, t.b_prime);
  return t;
}

double nested_center_height(double y) { return 1.0 - std::sqrt(2.0 - 2.0 * y); }

double nested_radius(double y) { return y + std::sqrt(2.0 - 2.0 * y) - 1.0; }

Point nested_tangency_point(double y) {
  const double r2 = std::sqrt(2.0);
  return {((y - 1.0) * std::sqrt(1.0 + y) + std::sqrt(2.0 - 2.0 * y * y)) / r2,
          (r2 * y - (1.0 + y) * std::sqrt(1.0 - y)) / r2};
}

double nested_chord_height(double y) {
  const double s = std::sqrt(2.0 - 2.0 * y);
  return (2.0 * y * y + (2.0 + 4.0 * y) * s - 4.0 * y - 1.0) / (2.0 * s - 5.0);
}

double nested_lowest_point(double y) { return 2.0 - y - 2.0 * std::sqrt(2.0 - 2.0 * y); }

double nested_gap(double y) {
  const double q = std::sqrt(1.0 - y);
  const double r2 = std::sqrt(2.0);
  const double f1 = q - r2;
  const double f2 = q - r2 / 2.0;
  return 2.0 * f1 * f1 * f2 * f2 / (5.0 - 2.0 * std::sqrt(2.0 - 2.0 * y));
}

std::string to_string(NestedVerdict verdict) {
  return verdict == NestedVerdict::non_isomorphic ? "non_isomorphic" : "degenerate_concentric";
}

NestedTriangleReport example_nested_triangle(double y, int poncelet_starts) {
  require_height(y);
  if (poncelet_starts < 1) {
    throw Error(ErrorCode::invalid_argument, "poncelet_starts must be positive");
  }
  NestedTriangleReport rep;
  rep.y = y;
  rep.y0 = nested_center_height(y);
  rep.r = nested_radius(y);
  rep.b = nested_tangency_point(y);
  rep.dy = nested_chord_height(y);
  rep.my = nested_lowest_point(y);
  rep.gap_closed_form = nested_gap(y);

  const TangentTriangle tri = construct_tangent_triangle(y);
  const double my_direct = tri.incircle.center.y - tri.incircle.radius;
  rep.gap_direct = my_direct - tri.d.y;
  const double diffs[] = {
      std::fabs(rep.y0 - tri.incircle.center.y),
      std::fabs(tri.incircle.center.x),
      std::fabs(rep.r - tri.incircle.radius),
      distance(rep.b, tri.b),
      std::fabs(rep.dy - tri.d.y),
      std::fabs(tri.d.y - tri.d_prime.y),
      std::fabs(rep.my - my_direct),
      std::fabs(rep.gap_closed_form - rep.gap_direct),
      std::fabs(rep.gap_closed_form - (rep.my - rep.dy)),
  };
  rep.max_closed_form_discrepancy = *std::max_element(std::begin(diffs), std::end(diffs));

  // card (d, d')_S for the concentric pair with rho' = 2 rho, which is the
  // same construction at y = 1/2
  const ConcentricPair concentric({0.0, 0.0}, 0.5, 1.0);
  const TangentTriangle flat = construct_tangent_triangle(0.5);
  rep.card_d_dprime_concentric = TwoCircles(concentric).interval_card(flat.d, flat.d_prime);

  if (std::fabs(y - 0.5) <= kConcentricBand) {
    rep.verdict = NestedVerdict::degenerate_concentric;
    rep.card_d_dprime = rep.card_d_dprime_concentric;
    return rep;
  }

  const NonConcentricPair pair({0.0, 0.0}, 1.0, tri.incircle.center, tri.incircle.radius);
  rep.card_d_dprime = TwoCircles(pair).interval_card(tri.d, tri.d_prime);

  const NestedCircles nested(pair);
  double worst = 0.0;
  for (int k = 0; k < poncelet_starts; ++k) {
    const double theta0 = kTwoPi * k / poncelet_starts;
    double theta = theta0;
    for (int step = 0; step < 3; ++step) theta = tangent_chord_step(nested, theta, Turn::ccw).theta;
    worst = std::max(worst, angular_distance(theta, theta0));
  }
  rep.poncelet_defect = worst;
  rep.verdict = rep.card_d_dprime != rep.card_d_dprime_concentric
                    ? NestedVerdict::non_isomorphic
                    : NestedVerdict::degenerate_concentric;
  return rep;
}

Report NestedTriangleReport::to_report() const {
  Report rep;
  rep.name = "nested_triangle";
  rep.inputs["y"] = y;
  rep.quantities["y0"] = y0;
  rep.quantities["r"] = r;
  rep.quantities["B"] = point_json(b);
  rep.quantities["D_y"] = dy;
  rep.quantities["M_y"] = my;
  rep.quantities["gap_closed_form"] = gap_closed_form;
  rep.quantities["gap_direct"] = gap_direct;
  rep.quantities["poncelet_defect"] = poncelet_defect;
  rep.quantities["card_D_Dprime"] = card_d_dprime;
  rep.quantities["card_d_dprime_concentric"] = card_d_dprime_concentric;
  rep.quantities["max_closed_form_discrepancy"] = max_closed_form_discrepancy;
  rep.quantities["verdict"] = to_string(verdict);
  const bool concentric = verdict == NestedVerdict::degenerate_concentric;
  rep.verdicts["gap_positive"] = concentric || gap_closed_form > 0.0;
  rep.verdicts["triangle_closes"] = concentric || poncelet_defect < 1e-9;
  rep.verdicts["card_D_Dprime_is_0"] = concentric || card_d_dprime == 0;
  rep.verdicts["card_d_dprime_concentric_is_1"] = card_d_dprime_concentric == 1;
  rep.verdicts["non_isomorphic"] = verdict == NestedVerdict::non_isomorphic;
  rep.claims = {"the chord DD' passes strictly below the inner circle",
                "every tangent-chord path closes after three steps",
                "the corresponding interval is empty in R but not in the concentric pair"};
  return rep;
}

double concentric_ratio_for_closure(int sides, int winding) {
  if (sides < 3 || winding < 1 || 2 * winding >= sides) {
    throw Error(ErrorCode::invalid_argument, "need sides >= 3 and 1 <= winding < sides / 2");
  }
  // total advance sides * 2 arccos(r) decreases in r; solve advance = 2 pi winding
  auto excess = [&](double r) {
    const ConcentricPair pair({0.0, 0.0}, r, 1.0);
    return sides * 2.0 * arc_half_width(pair) - kTwoPi * winding;
  };
  double lo = 1e-12;
  double hi = 1.0 - 1e-12;
  for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (excess(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

Report example_forced_ratio(double y) {
  require_height(y);
  if (std::fabs(y - 0.5) <= kConcentricBand) {
    throw Error(ErrorCode::invalid_argument, "y = 1/2 gives a concentric pair");
  }
  const double y0 = nested_center_height(y);
  const double r = nested_radius(y);
  const NonConcentricPair pair({0.0, 0.0}, 1.0, {0.0, y0}, r);
  const TwoCircles set(pair);
  const double x = std::sqrt(1.0 - y * y);
  const Point a{x, y};
  const Point a_prime{-x, y};
  const Point e{0.0, -1.0};

  const auto ae = set.interval_points(a, e);
  const auto ape = set.interval_points(a_prime, e);
  const auto aap = set.interval_points(a, a_prime);
  const Circle inner{{0.0, y0}, r};
  auto single_tangency = [&](const std::vector<Point>& pts) {
    return pts.size() == 1 && inner.contains_on_boundary(pts[0], 1e-9);
  };

  // walk the tangent-chord polygon from A
  const NestedCircles nested(pair);
  const double start = polar_angle(a);
  double theta = start;
  double travelled = 0.0;
  int sides = 0;
  for (int step = 1; step <= 12; ++step) {
    const double next = tangent_chord_step(nested, theta, Turn::ccw).theta;
    travelled += ccw_displacement(theta, next);
    theta = next;
    if (angular_distance(theta, start) < 1e-9) {
      sides = step;
      break;
    }
  }
  const int winding = sides > 0 ? static_cast<int>(std::lround(travelled / kTwoPi)) : 0;

  Report rep;
  rep.name = "forced_ratio";
  rep.inputs["y"] = y;
  rep.quantities["y0"] = y0;
  rep.quantities["r"] = r;
  rep.quantities["polygon_sides"] = sides;
  rep.quantities["polygon_winding"] = winding;
  rep.verdicts["sides_tangent"] =
      single_tangency(ae) && single_tangency(ape) && single_tangency(aap) &&
      distance(ae[0], nested_tangency_point(y)) <= 1e-9;
  rep.verdicts["polygon_is_triangle"] = sides == 3 && winding == 1;
  if (rep.verdict("polygon_is_triangle")) {
    const double ratio = concentric_ratio_for_closure(sides, winding);
    const ConcentricPair forced({0.0, 0.0}, ratio, 1.0);
    rep.quantities["forced_ratio"] = ratio;
    rep.quantities["forced_M"] = M_invariant(forced);
    rep.verdicts["ratio_is_half"] = std::fabs(ratio - 0.5) <= 1e-12;
    rep.verdicts["M_is_3"] = std::fabs(M_invariant(forced) - 3.0) <= 1e-9;
  } else {
    rep.verdicts["ratio_is_half"] = false;
    rep.verdicts["M_is_3"] = false;
  }
  rep.claims = {"each side of AA'E meets the union in exactly one interior point",
                "an isomorphic concentric pair would need a tangent-chord triangle",
                "that forces rho/rho' = 1/2 and M = 3"};
  return rep;
}

Report position_signatures(const NonConcentricPair& pair, int samples, const Tolerance& tol) {
  if (samples < 8) throw Error(ErrorCode::invalid_argument, "need at least 8 samples per circle");
  const TwoCircles set(pair, tol);
  const double sep = 1e-6 * std::max(pair.first().radius, pair.second().radius);

  std::vector<Point> pts;
  auto add = [&](Point p) {
    for (Point q : pts) {
      if (distance(p, q) <= sep) return;
    }
    pts.push_back(p);
  };
  // the common points come first so that they survive deduplication exactly
  const std::vector<Point> common = set.common_points();
  for (Point p : common) add(p);
  const std::size_t n_common = pts.size();
  for (int c = 0; c < 2; ++c) {
    for (int j = 0; j < samples; ++j) add(set.circle(c).at(kTwoPi * (j + 0.5) / samples));
  }

  std::vector<std::size_t> ext, non;
  for (std::size_t i = 0; i < pts.size(); ++i) (set.is_extreme(pts[i]) ? ext : non).push_back(i);
  auto is_sample = [&](std::size_t i) { return i >= n_common; };

  // b: an extreme point seeing exactly one union point on every chord to
  // another extreme point
  bool sig_b = false;
  for (std::size_t x : ext) {
    bool all_one = true;
    int checked = 0;
    for (std::size_t y : ext) {
      if (y == x || !is_sample(y)) continue;
      ++checked;
      if (set.interval_card(pts[x], pts[y]) != 1) {
        all_one = false;
        break;
      }
    }
    if (all_one && checked > 0) {
      sig_b = true;
      break;
    }
  }

  // a: any two non-extreme points are the interior of the segment joining
  // the outermost points of their line, and those are extreme
  bool sig_a = non.size() >= 2;
  for (std::size_t i = 0; sig_a && i < non.size(); ++i) {
    for (std::size_t j = i + 1; sig_a && j < non.size(); ++j) {
      const Point u = pts[non[i]];
      const Point w = pts[non[j]];
      const auto trace = set.line_trace(u, w);
      const Point x = trace.front();
      const Point y = trace.back();
      if (distance(x, u) <= sep || distance(y, w) <= sep || !set.is_extreme(x) ||
          !set.is_extreme(y)) {
        sig_a = false;
        break;
      }
      const auto inside = set.interval_points(x, y);
      sig_a = inside.size() == 2;
    }
  }

  // d: a non-extreme point with every segment to an extreme point empty
  bool sig_d = false;
  for (std::size_t w : non) {
    bool empty = true;
    for (std::size_t x : ext) {
      if (!is_sample(x)) continue;
      if (set.interval_card(pts[w], pts[x]) != 0) {
        empty = false;
        break;
      }
    }
    if (empty && !ext.empty()) {
      sig_d = true;
      break;
    }
  }

  // e: segments from non-extreme to extreme points hold at most one point
  bool sig_e = true;
  Json e_witness;
  for (std::size_t w : non) {
    for (std::size_t x : ext) {
      const int card = set.interval_card(pts[w], pts[x]);
      if (card > 1) {
        sig_e = false;
        e_witness = {{"w", point_json(pts[w])}, {"x", point_json(pts[x])}, {"card", card}};
        break;
      }
    }
    if (!sig_e) break;
  }

  CaseLabel label = CaseLabel::c;
  if (sig_b) {
    label = CaseLabel::b;
  } else if (sig_a) {
    label = CaseLabel::a;
  } else if (sig_d) {
    label = CaseLabel::d;
  } else if (sig_e) {
    label = CaseLabel::e;
  }
  const CaseLabel expected = classify(pair, tol);

  Report rep;
  rep.name = "position_signatures";
  rep.inputs["first"] = {{"center", point_json(pair.first().center)},
                         {"radius", pair.first().radius}};
  rep.inputs["second"] = {{"center", point_json(pair.second().center)},
                          {"radius", pair.second().radius}};
  rep.inputs["samples"] = samples;
  rep.quantities["points"] = pts.size();
  rep.quantities["extreme"] = ext.size();
  rep.quantities["non_extreme"] = non.size();
  rep.quantities["signature_a"] = sig_a;
  rep.quantities["signature_b"] = sig_b;
  rep.quantities["signature_d"] = sig_d;
  rep.quantities["signature_e"] = sig_e;
  if (!sig_e) rep.quantities["signature_e_witness"] = e_witness;
  rep.quantities["signature_label"] = to_string(label);
  rep.quantities["geometric_label"] = to_string(expected);
  rep.verdicts["labels_agree"] = label == expected;
  rep.claims = {"the mutual position is recoverable from interval cardinalities alone"};
  return rep;
}

}  // namespace btw
