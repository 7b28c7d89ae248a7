#pragma once

// Open arcs A_S(alpha) of the outer circle cut off by tangents to the inner
// circle, the covering invariants m and M, and k-cover certificates.

#include <utility>
#include <vector>

#include "btw/circles.hpp"

namespace btw {

/// Open angular interval (alpha - half_width, alpha + half_width) on the
/// outer circle of a concentric pair. Single arcs have half width
/// arccos(rho/rho'); double arcs twice that.
class Arc {
 public:
  Arc(const ConcentricPair& pair, double alpha, bool is_double);

  const ConcentricPair& pair() const noexcept { return pair_; }
  double alpha() const noexcept { return alpha_; }
  double half_width() const noexcept { return half_width_; }
  bool is_double() const noexcept { return double_; }

  /// Endpoints (v, w) at angles alpha - half_width and alpha + half_width.
  std::pair<Point, Point> endpoints() const;

  /// Point where the chord of a single arc touches the inner circle.
  Point tangency_point() const;

  /// Open-interval membership with wraparound.
  bool contains_angle(double angle) const;

 private:
  ConcentricPair pair_;
  double alpha_;
  double half_width_;
  bool double_;
};

/// arccos(rho / rho'): half the angular length of a single arc.
double arc_half_width(const ConcentricPair& pair);

Arc make_arc(const ConcentricPair& pair, double alpha, bool is_double = false);
std::pair<Point, Point> arc_endpoints(const Arc& arc);
bool arc_contains(const Arc& arc, double angle);

/// Result of locating A_S(alpha) from the inner point u two ways: by
/// geometry and by sweeping outer points s with card c-hull({s,u}) = 4 and
/// (s, u)_S = ∅.
struct ArcIdentification {
  Arc arc;
  std::vector<double> characterized_angles;  ///< sweep samples satisfying the characterization
  std::pair<Point, Point> endpoints;          ///< outer points with trace cardinality 3
  int samples = 0;
};

/// Throws Error(off_set) if u is not on the inner circle and
/// Error(invariant_violation) if the two routes disagree.
ArcIdentification identify_arc_from_inner(const ConcentricPair& pair, Point u, int samples = 3600,
                                          const Tolerance& tol = {});

/// Double-arc analogue for an outer point u: outer points s whose line
/// through u meets the union in exactly 2 points form Ã_S(angle of u) minus
/// u itself.
ArcIdentification identify_double_arc(const ConcentricPair& pair, Point u, int samples = 3600,
                                      const Tolerance& tol = {});

/// Least number of single arcs covering the outer circle.
int m_invariant(const ConcentricPair& pair);

/// pi / arccos(rho / rho').
double M_invariant(const ConcentricPair& pair);

struct CoverCertificate {
  std::vector<double> alphas;
  int k = 1;
};

/// Builds n arcs forming a k-cover with n / k <= target.
/// Throws Error(invalid_argument) when target <= M(pair).
CoverCertificate construct_cover(const ConcentricPair& pair, double target);

/// Minimum over the outer circle of the number of open single arcs
/// containing each point. Empty certificates give 0.
int verify_cover(const ConcentricPair& pair, const CoverCertificate& cert);

/// Necessary measure condition n * arccos(r) >= k * pi.
bool cover_lower_bound_ok(const ConcentricPair& pair, int n, int k);

}  // namespace btw
