#pragma once

// Executable reproductions of the worked examples: each builds its point
// sets from scratch, recomputes every claimed quantity through the public
// operations, and records verdicts in a report.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "btw/finite_config.hpp"
#include "btw/nonconcentric.hpp"

namespace btw {

/// Generic report. `inputs` and `quantities` are JSON objects; every
/// verdict can be recomputed from the inputs.
struct Report {
  std::string name;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  nlohmann::ordered_json quantities = nlohmann::ordered_json::object();
  nlohmann::ordered_json verdicts = nlohmann::ordered_json::object();
  std::vector<std::string> claims;

  bool verdict(const std::string& key) const { return verdicts.at(key).get<bool>(); }
};

/// m for the pair (rho, 1) with rho < 1/2 and for (tau, 1) with
/// sqrt(1/2) <= tau < 1; the two values differ, so the sets are not
/// betweenness isomorphic. Throws Error(invalid_argument) out of range.
Report example_covering_number(double rho, double tau);

/// The five-point sets A = {(-1,0),(0,-1),(0,0),(0,1),(1,0)} and
/// B = {(0,-1),(0,0),(0,1),(1,0),(2,0)} with the map moving (-1,0) to (2,0).
struct FivePointSets {
  FiniteConfig a;
  FiniteConfig b;
  IdMap map;
};
FivePointSets five_point_sets();

/// Collinearity isomorphic but not betweenness isomorphic.
Report example_five_points();

/// The triangle A A' E inscribed in the unit circle with A = (sqrt(1-y^2), y),
/// A' its mirror image and E = (0,-1), together with its incircle and the
/// derived points, all obtained by direct geometric construction.
struct TangentTriangle {
  Point a, a_prime, e;
  Circle incircle;
  Point b, b_prime;  ///< tangency points on AE and A'E
  Point d, d_prime;  ///< second outer intersections of A'B and AB'
};
TangentTriangle construct_tangent_triangle(double y);

enum class NestedVerdict { non_isomorphic, degenerate_concentric };
std::string to_string(NestedVerdict verdict);

/// The nested pair R = S((0,0),1) ∪ S((0,y0), r) circumscribing the tangent
/// triangle at height y, with every closed form checked against the
/// geometric construction.
struct NestedTriangleReport {
  double y = 0.0;
  double y0 = 0.0;
  double r = 0.0;
  Point b;
  double dy = 0.0;
  double my = 0.0;
  double gap_closed_form = 0.0;
  double gap_direct = 0.0;
  double poncelet_defect = 0.0;
  int card_d_dprime = 0;   ///< card (D, D')_R
  int card_d_dprime_concentric = 0;  ///< card (d, d')_S for rho' = 2 rho
  /// Largest difference between a closed form and its geometric
  /// reconstruction (y0, r, B, D_y, M_y, gap, D_y = D'_y).
  double max_closed_form_discrepancy = 0.0;
  NestedVerdict verdict = NestedVerdict::non_isomorphic;

  Report to_report() const;
};

/// Throws Error(invalid_argument) unless -1 < y < 1. At y = 1/2 the pair is
/// concentric and only `verdict` is meaningful.
NestedTriangleReport example_nested_triangle(double y, int poncelet_starts = 32);

/// Closed forms for the nested pair at height y.
double nested_center_height(double y);
double nested_radius(double y);
Point nested_tangency_point(double y);
double nested_chord_height(double y);
double nested_lowest_point(double y);
double nested_gap(double y);

/// Tangent triangle of the nested pair and the concentric ratio it forces.
/// Throws Error(invalid_argument) unless y in (-1,1) \ {1/2}.
Report example_forced_ratio(double y);

/// Ratio rho/rho' of the concentric pair whose tangent-chord polygon closes
/// after `sides` steps winding `winding` times, found by bisection.
double concentric_ratio_for_closure(int sides, int winding);

/// Interval-cardinality signatures of the five mutual positions, evaluated
/// on a deterministic sample (`samples` points per circle plus the common
/// points) and compared with classify().
Report position_signatures(const NonConcentricPair& pair, int samples = 64,
                           const Tolerance& tol = {});

}  // namespace btw
