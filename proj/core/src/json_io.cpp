#include "btw/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "btw/errors.hpp"

namespace btw {

namespace {

[[noreturn]] void schema_fail(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::schema_error, "field '" + field + "' " + what);
}

const Json& field_of(const Json& j, const std::string& key, const std::string& ctx) {
  if (!j.is_object()) schema_fail(ctx.empty() ? "<root>" : ctx, "must be an object");
  auto it = j.find(key);
  if (it == j.end()) schema_fail(ctx.empty() ? key : ctx + "." + key, "is missing");
  return *it;
}

double number_of(const Json& j, const std::string& field) {
  if (!j.is_number()) schema_fail(field, "must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) schema_fail(field, "must be finite");
  return v;
}

double number_field(const Json& j, const std::string& key) {
  return number_of(field_of(j, key, ""), key);
}

// Translates library errors from constructors into schema errors for the
// given field, keeping the original message.
template <typename F>
auto guarded(const std::string& field, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::invalid_argument || e.code() == ErrorCode::degenerate_input) {
      schema_fail(field, std::string("is invalid: ") + e.what());
    }
    throw;
  }
}

}  // namespace

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::parse_error,
                "malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json load_json_input(const std::string& text_or_path) {
  std::size_t first = text_or_path.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text_or_path[first] == '{' || text_or_path[first] == '[')) {
    return parse_json_text(text_or_path);
  }
  std::ifstream in(text_or_path);
  if (!in) throw Error(ErrorCode::io_error, "cannot read input file '" + text_or_path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

Point point_from_json(const Json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2) schema_fail(field, "must be an array [x, y]");
  return Point{number_of(j[0], field + "[0]"), number_of(j[1], field + "[1]")};
}

Json to_json(Point p) { return Json::array({p.x, p.y}); }

FiniteConfig config_from_json(const Json& j, const Tolerance& fallback) {
  const Json& pts = field_of(j, "points", "");
  if (!pts.is_array()) schema_fail("points", "must be an array");
  std::vector<Point> points;
  points.reserve(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    points.push_back(point_from_json(pts[i], "points[" + std::to_string(i) + "]"));
  }
  double eps_sign = fallback.eps_sign();
  double eps_metric = fallback.eps_metric();
  if (j.contains("eps_sign")) eps_sign = number_field(j, "eps_sign");
  if (j.contains("eps_metric")) eps_metric = number_field(j, "eps_metric");
  const Tolerance tol = guarded("eps_sign", [&] { return Tolerance(eps_sign, eps_metric); });
  return guarded("points", [&] { return FiniteConfig(std::move(points), tol); });
}

Json to_json(const FiniteConfig& cfg) {
  Json pts = Json::array();
  for (Point p : cfg.points()) pts.push_back(to_json(p));
  return {{"points", pts},
          {"eps_sign", cfg.tolerance().eps_sign()},
          {"eps_metric", cfg.tolerance().eps_metric()}};
}

ConcentricPair concentric_pair_from_json(const Json& j) {
  const Point c = point_from_json(field_of(j, "center", ""), "center");
  const double rho = number_field(j, "rho");
  const double rho_prime = number_field(j, "rho_prime");
  return guarded("rho", [&] { return ConcentricPair(c, rho, rho_prime); });
}

Json to_json(const ConcentricPair& pair) {
  return {{"center", to_json(pair.center())}, {"rho", pair.rho()}, {"rho_prime", pair.rho_prime()}};
}

NonConcentricPair nonconcentric_pair_from_json(const Json& j, const Tolerance& tol) {
  const Point c1 = point_from_json(field_of(j, "c1", ""), "c1");
  const double r1 = number_field(j, "r1");
  const Point c2 = point_from_json(field_of(j, "c2", ""), "c2");
  const double r2 = number_field(j, "r2");
  return guarded("c2", [&] { return NonConcentricPair(c1, r1, c2, r2, tol); });
}

Json to_json(const NonConcentricPair& pair) {
  return {{"c1", to_json(pair.first().center)},
          {"r1", pair.first().radius},
          {"c2", to_json(pair.second().center)},
          {"r2", pair.second().radius}};
}

CoverCertificate cover_from_json(const Json& j) {
  const Json& alphas = field_of(j, "alphas", "");
  if (!alphas.is_array()) schema_fail("alphas", "must be an array");
  CoverCertificate cert;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    cert.alphas.push_back(number_of(alphas[i], "alphas[" + std::to_string(i) + "]"));
  }
  const Json& k = field_of(j, "k", "");
  if (!k.is_number_integer() || k.get<std::int64_t>() < 1) {
    schema_fail("k", "must be a positive integer");
  }
  cert.k = k.get<int>();
  return cert;
}

Json to_json(const CoverCertificate& cert) {
  return {{"alphas", cert.alphas}, {"k", cert.k}};
}

Json to_json(const Certificate& cert) {
  return {{"invariant", cert.invariant},
          {"value_a", cert.value_a},
          {"value_b", cert.value_b},
          {"detail", cert.detail}};
}

Certificate certificate_from_json(const Json& j) {
  Certificate c;
  const Json& inv = field_of(j, "invariant", "");
  if (!inv.is_string()) schema_fail("invariant", "must be a string");
  c.invariant = inv.get<std::string>();
  for (const char* key : {"value_a", "value_b"}) {
    const Json& v = field_of(j, key, "");
    if (!v.is_number_integer()) schema_fail(key, "must be an integer");
    (std::string(key) == "value_a" ? c.value_a : c.value_b) = v.get<std::int64_t>();
  }
  if (j.contains("detail")) {
    if (!j["detail"].is_string()) schema_fail("detail", "must be a string");
    c.detail = j["detail"].get<std::string>();
  }
  return c;
}

Json to_json(const Report& report) {
  return {{"name", report.name},
          {"inputs", report.inputs},
          {"quantities", report.quantities},
          {"verdicts", report.verdicts},
          {"claims", report.claims}};
}

Json round_significant(const Json& j, int digits) {
  if (j.is_number_float()) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, j.get<double>());
    double v = std::strtod(buf, nullptr);
    if (v == 0.0) v = 0.0;
    return v;
  }
  if (j.is_array()) {
    Json out = Json::array();
    for (const auto& v : j) out.push_back(round_significant(v, digits));
    return out;
  }
  if (j.is_object()) {
    Json out = Json::object();
    for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = round_significant(it.value(), digits);
    return out;
  }
  return j;
}

std::string dump_json(const Json& j, bool full_precision) {
  return (full_precision ? j : round_significant(j, 12)).dump(2) + "\n";
}

}  // namespace btw
