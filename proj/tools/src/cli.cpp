#include "btwlab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "btw/arcs.hpp"
#include "btw/case_studies.hpp"
#include "btw/errors.hpp"
#include "btw/iso_search.hpp"
#include "btw/json_io.hpp"
#include "btw/nonconcentric.hpp"
#include "btw/pair_maps.hpp"

namespace btwlab {

namespace {

using btw::Json;

struct Options {
  double eps_sign = 1e-9;
  double eps_metric = 1e-9;
  std::uint64_t node_limit = btw::kDefaultNodeLimit;
  std::string output;
  bool full_precision = false;

  // command inputs
  std::string pair, a, b, certificate, kind = "betweenness", name;
  double target = 0.0;
  int n = 0, p = 0, samples = 64;
  bool all = false;
  std::optional<double> rho, tau, y;
};

struct Response {
  std::string status = "ok";
  Json payload = Json::object();
  std::vector<std::string> diagnostics;
};

int exit_code_for(const std::string& status) {
  if (status == "inconclusive") return 2;
  if (status == "error") return 1;
  return 0;
}

Json envelope(const Response& r) {
  return {{"status", r.status}, {"payload", r.payload}, {"diagnostics", r.diagnostics}};
}

Json error_envelope(const std::string& code, const std::string& message) {
  return {{"status", "error"},
          {"payload", Json::object()},
          {"diagnostics", Json::array()},
          {"error", {{"code", code}, {"message", message}}}};
}

void require(bool present, const char* flag) {
  if (!present) {
    throw btw::Error(btw::ErrorCode::invalid_argument, std::string("missing required option ") + flag);
  }
}

Response cmd_invariant(const Options& o, const btw::Tolerance&) {
  require(!o.pair.empty(), "--pair");
  const auto pair = btw::concentric_pair_from_json(btw::load_json_input(o.pair));
  Response r;
  r.payload = {{"m", btw::m_invariant(pair)},
               {"M", btw::M_invariant(pair)},
               {"ratio", pair.ratio()},
               {"arc_half_width", btw::arc_half_width(pair)}};
  return r;
}

Response cmd_classify(const Options& o, const btw::Tolerance& tol) {
  require(!o.pair.empty(), "--pair");
  const auto pair = btw::nonconcentric_pair_from_json(btw::load_json_input(o.pair), tol);
  Response r;
  r.payload = {{"case", btw::to_string(btw::classify(pair, tol))},
               {"center_distance", pair.center_distance()}};
  return r;
}

Response cmd_iso(const Options& o, const btw::Tolerance& tol) {
  require(!o.a.empty(), "--a");
  require(!o.b.empty(), "--b");
  const auto kind = btw::parse_iso_kind(o.kind);
  const auto a = btw::config_from_json(btw::load_json_input(o.a), tol);
  const auto b = btw::config_from_json(btw::load_json_input(o.b), tol);
  const auto res = btw::find_isomorphism(a, b, kind, o.all ? btw::SearchMode::all : btw::SearchMode::first,
                                         o.node_limit);
  Response r;
  r.payload["kind"] = btw::to_string(kind);
  r.payload["outcome"] = btw::to_string(res.outcome);
  r.payload["maps"] = res.maps;
  if (res.certificate) r.payload["certificate"] = btw::to_json(*res.certificate);
  r.payload["nodes_explored"] = res.nodes_explored;
  switch (res.outcome) {
    case btw::SearchResult::Outcome::found: r.status = "ok"; break;
    case btw::SearchResult::Outcome::refuted: r.status = "refuted"; break;
    case btw::SearchResult::Outcome::inconclusive:
      r.status = "inconclusive";
      r.diagnostics.push_back("node limit " + std::to_string(o.node_limit) + " reached");
      break;
  }
  return r;
}

Response cmd_cover(const Options& o, const btw::Tolerance&) {
  require(!o.pair.empty(), "--pair");
  const auto pair = btw::concentric_pair_from_json(btw::load_json_input(o.pair));
  const auto cert = btw::construct_cover(pair, o.target);
  const int coverage = btw::verify_cover(pair, cert);
  Response r;
  r.payload = {{"certificate", btw::to_json(cert)},
               {"n", cert.alphas.size()},
               {"k", cert.k},
               {"n_over_k", static_cast<double>(cert.alphas.size()) / cert.k},
               {"min_coverage", coverage},
               {"M", btw::M_invariant(pair)}};
  return r;
}

Response cmd_verify(const Options& o, const btw::Tolerance&) {
  require(!o.pair.empty(), "--pair");
  require(!o.certificate.empty(), "--certificate");
  const auto pair = btw::concentric_pair_from_json(btw::load_json_input(o.pair));
  const auto cert = btw::cover_from_json(btw::load_json_input(o.certificate));
  const int coverage = btw::verify_cover(pair, cert);
  Response r;
  const bool valid = coverage >= cert.k;
  r.status = valid ? "ok" : "refuted";
  r.payload = {{"valid", valid},
               {"min_coverage", coverage},
               {"k", cert.k},
               {"n", cert.alphas.size()},
               {"measure_bound_ok",
                cert.alphas.empty() ? false
                                    : btw::cover_lower_bound_ok(
                                          pair, static_cast<int>(cert.alphas.size()), cert.k)}};
  return r;
}

Response cmd_sample(const Options& o, const btw::Tolerance& tol) {
  require(!o.pair.empty(), "--pair");
  const auto pair = btw::concentric_pair_from_json(btw::load_json_input(o.pair));
  const auto cfg = btw::sample_configuration(pair, o.n, o.p, tol);
  Response r;
  r.payload = {{"configuration", btw::to_json(cfg)},
               {"between_triples", cfg.between_triples().size()},
               {"collinear_triples", cfg.collinear_triples().size()}};
  return r;
}

Response cmd_example(const Options& o, const btw::Tolerance& tol) {
  require(!o.name.empty(), "--name");
  btw::Report rep;
  if (o.name == "covering_number") {
    rep = btw::example_covering_number(o.rho.value_or(0.4), o.tau.value_or(std::sqrt(0.5)));
  } else if (o.name == "five_points") {
    rep = btw::example_five_points();
  } else if (o.name == "nested_triangle") {
    rep = btw::example_nested_triangle(o.y.value_or(0.0)).to_report();
  } else if (o.name == "forced_ratio") {
    rep = btw::example_forced_ratio(o.y.value_or(0.0));
  } else if (o.name == "position_signatures") {
    require(!o.pair.empty(), "--pair");
    const auto pair = btw::nonconcentric_pair_from_json(btw::load_json_input(o.pair), tol);
    rep = btw::position_signatures(pair, o.samples, tol);
  } else {
    throw btw::Error(btw::ErrorCode::invalid_argument, "unknown example '" + o.name + "'");
  }
  Response r;
  r.payload = btw::to_json(rep);
  return r;
}

void emit(const std::string& text, const Options& o, std::ostream& out) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.output, std::ios::binary | std::ios::trunc);
  if (!file) throw btw::Error(btw::ErrorCode::io_error, "cannot write '" + o.output + "'");
  file << text;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Betweenness structure of finite point sets and circle pairs", "btwlab"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--tolerance-sign", o.eps_sign, "zero threshold for twice signed areas");
  app.add_option("--tolerance-metric", o.eps_metric, "distance equality threshold");
  app.add_option("--node-limit", o.node_limit, "backtracking node budget for iso");
  app.add_option("--output", o.output, "write the result to this file instead of stdout");
  app.add_flag("--full-precision", o.full_precision, "17 significant digits instead of 12");

  auto* inv = app.add_subcommand("invariant", "m and M of a concentric pair");
  inv->add_option("--pair", o.pair, "concentric pair (JSON text or file)");

  auto* cls = app.add_subcommand("classify", "mutual position of two circles");
  cls->add_option("--pair", o.pair, "non-concentric pair (JSON text or file)");

  auto* iso = app.add_subcommand("iso", "decide isomorphism of two finite configurations");
  iso->add_option("--kind", o.kind, "betweenness or collinearity");
  iso->add_option("--a", o.a, "first configuration");
  iso->add_option("--b", o.b, "second configuration");
  iso->add_flag("--all", o.all, "enumerate every isomorphism");

  auto* cov = app.add_subcommand("cover", "construct a k-cover by single arcs");
  cov->add_option("--pair", o.pair, "concentric pair");
  cov->add_option("--target", o.target, "bound on n/k, must exceed M")->required();

  auto* ver = app.add_subcommand("verify", "check a k-cover certificate");
  ver->add_option("--pair", o.pair, "concentric pair");
  ver->add_option("--certificate", o.certificate, "{\"alphas\":[...],\"k\":n}");

  auto* smp = app.add_subcommand("sample", "commensurate finite sample of a concentric pair");
  smp->add_option("--pair", o.pair, "concentric pair with ratio cos(2 pi p / n)");
  smp->add_option("--n", o.n, "points per circle")->required();
  smp->add_option("--p", o.p, "tangency offset")->required();

  auto* ex = app.add_subcommand("example", "recompute a worked example report");
  ex->add_option("--name", o.name,
                 "covering_number | five_points | nested_triangle | forced_ratio | "
                 "position_signatures");
  ex->add_option("--rho", o.rho);
  ex->add_option("--tau", o.tau);
  ex->add_option("--y", o.y);
  ex->add_option("--pair", o.pair, "non-concentric pair for position_signatures");
  ex->add_option("--samples", o.samples, "samples per circle for position_signatures");

  auto* fig = app.add_subcommand("figure", "emit figure coordinates as CSV");
  fig->add_option("--name", o.name, "fig1_arc | fig2_density | fig3_cases | fig4_triangles")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    out << btw::dump_json(error_envelope("usage_error", e.what()));
    err << "btwlab: " << e.what() << '\n';
    return 1;
  }

  try {
    const btw::Tolerance tol(o.eps_sign, o.eps_metric);
    if (fig->parsed()) {
      emit(figure_csv(o.name, o.full_precision), o, out);
      return 0;
    }
    Response r;
    if (inv->parsed()) r = cmd_invariant(o, tol);
    else if (cls->parsed()) r = cmd_classify(o, tol);
    else if (iso->parsed()) r = cmd_iso(o, tol);
    else if (cov->parsed()) r = cmd_cover(o, tol);
    else if (ver->parsed()) r = cmd_verify(o, tol);
    else if (smp->parsed()) r = cmd_sample(o, tol);
    else r = cmd_example(o, tol);
    if (const char* seed = std::getenv("BETWEENNESS_LAB_SEED")) {
      r.diagnostics.push_back(std::string("BETWEENNESS_LAB_SEED=") + seed + " ignored (deterministic command)");
    }
    emit(btw::dump_json(envelope(r), o.full_precision), o, out);
    return exit_code_for(r.status);
  } catch (const btw::Error& e) {
    out << btw::dump_json(error_envelope(std::string(btw::to_string(e.code())), e.what()));
    err << "btwlab: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace btwlab
