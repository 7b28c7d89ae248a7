#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "btw/arcs.hpp"
#include "btw/case_studies.hpp"
#include "btw/errors.hpp"
#include "btwlab/cli.hpp"

namespace btwlab {

namespace {

using btw::Point;

class Csv {
 public:
  Csv(std::string header, bool full) : full_(full) { text_ << header << '\n'; }

  void row(const std::string& set, const std::string& label, Point p, const std::string& extra = "") {
    text_ << set << ',' << label << ',' << num(p.x) << ',' << num(p.y) << ',' << extra << '\n';
  }
  std::string num(double v) const {
    char buf[40];
    std::snprintf(buf, sizeof buf, full_ ? "%.17g" : "%.12g", v == 0.0 ? 0.0 : v);
    return buf;
  }
  std::string str() const { return text_.str(); }

 private:
  bool full_;
  std::ostringstream text_;
};

constexpr const char* kHeader = "set,label,x,y,note";

// Fig. 1 proportions: S(c, 3.210) and S(c, 5.656), c = (-1, 0), alpha = 41.08 deg.
std::string fig1_arc(bool full) {
  const btw::ConcentricPair pair({-1.0, 0.0}, 3.210, 5.656);
  const double alpha = 41.08 * std::numbers::pi / 180.0;
  const btw::Arc arc = btw::make_arc(pair, alpha);
  const Point u = arc.tangency_point();
  const auto [v, w] = arc.endpoints();
  const auto ident = btw::identify_arc_from_inner(pair, u, 3600);

  Csv csv(kHeader, full);
  csv.row("S", "c", pair.center());
  csv.row("S", "u", u, "tangency point");
  csv.row("S", "v", v, "arc endpoint");
  csv.row("S", "w", w, "arc endpoint");
  csv.row("S", "v_incidence", ident.endpoints.first, "trace cardinality 3 verified");
  csv.row("S", "w_incidence", ident.endpoints.second, "trace cardinality 3 verified");
  const int n = 32;
  for (int i = 0; i <= n; ++i) {
    const double t = alpha - arc.half_width() + 2.0 * arc.half_width() * i / n;
    csv.row("S", "arc", pair.outer().at(t));
  }
  return csv.str();
}

// Fig. 2: r = 1/2, the line through P(alpha + pi) and r P(alpha + gamma)
// meets the outer circle again at P(alpha + omega) with 0 < omega < gamma.
std::string fig2_density(bool full) {
  const btw::ConcentricPair pair({0.0, 0.0}, 0.5, 1.0);
  const btw::TwoCircles set(pair);
  const double alpha = std::atan2(0.2146, -0.976);
  const double gamma = btw::ccw_displacement(alpha, std::atan2(-0.687, -0.726));
  const Point far = pair.outer().at(alpha + std::numbers::pi);
  const Point inner = pair.inner().at(alpha + gamma);
  const auto trace = set.line_trace(far, inner);
  const Point hit = trace.back();
  const double omega = btw::ccw_displacement(alpha, pair.outer().angle_of(hit));

  Csv csv(kHeader, full);
  csv.row("S", "P(alpha)", pair.outer().at(alpha));
  csv.row("S", "P(alpha+pi)", far);
  csv.row("S", "P(alpha+gamma)", pair.outer().at(alpha + gamma));
  csv.row("S", "rP(alpha+gamma)", inner);
  csv.row("S", "P(alpha+omega)", hit,
          "omega=" + csv.num(omega) + " gamma=" + csv.num(gamma));
  for (std::size_t i = 0; i < trace.size(); ++i) csv.row("S", "trace" + std::to_string(i), trace[i]);
  return csv.str();
}

// Fig. 3: one pair per mutual position, 64 samples per circle marked
// extreme or not, plus common points.
std::string fig3_cases(bool full) {
  struct Position { const char* name; double cx; };
  const Position positions[] = {{"a", 0.2}, {"b", 0.5}, {"c", 0.8}, {"d", 1.5}, {"e", 2.0}};
  Csv csv(kHeader, full);
  for (const Position& s : positions) {
    const btw::NonConcentricPair pair({0.0, 0.0}, 1.0, {s.cx, 0.0}, 0.5);
    const btw::TwoCircles set(pair);
    const std::string name = std::string(s.name) + "/" + btw::to_string(btw::classify(pair));
    for (Point p : set.common_points()) {
      csv.row(name, "common", p, set.is_extreme(p) ? "extreme" : "non-extreme");
    }
    for (int c = 0; c < 2; ++c) {
      for (int j = 0; j < 64; ++j) {
        const Point p = set.circle(c).at(btw::kTwoPi * (j + 0.5) / 64);
        csv.row(name, "circle" + std::to_string(c + 1), p,
                set.is_extreme(p) ? "extreme" : "non-extreme");
      }
    }
  }
  return csv.str();
}

// Fig. 4: the tangent triangle in the concentric pair rho' = 2 rho and in
// the nested pair at y = 0.
std::string fig4_triangles(bool full) {
  Csv csv(kHeader, full);
  const auto emit = [&](const std::string& set, const btw::TangentTriangle& t) {
    csv.row(set, "A", t.a);
    csv.row(set, "A'", t.a_prime);
    csv.row(set, "E", t.e);
    csv.row(set, "B", t.b);
    csv.row(set, "B'", t.b_prime);
    csv.row(set, "D", t.d);
    csv.row(set, "D'", t.d_prime);
    csv.row(set, "inner_center", t.incircle.center, "radius=" + csv.num(t.incircle.radius));
    csv.row(set, "M", t.incircle.center - Point{0.0, t.incircle.radius}, "lowest inner point");
  };
  emit("S", btw::construct_tangent_triangle(0.5));
  emit("R", btw::construct_tangent_triangle(0.0));
  return csv.str();
}

}  // namespace

std::string figure_csv(const std::string& name, bool full_precision) {
  if (name == "fig1_arc") return fig1_arc(full_precision);
  if (name == "fig2_density") return fig2_density(full_precision);
  if (name == "fig3_cases") return fig3_cases(full_precision);
  if (name == "fig4_triangles") return fig4_triangles(full_precision);
  throw btw::Error(btw::ErrorCode::invalid_argument, "unknown figure '" + name + "'");
}

}  // namespace btwlab
