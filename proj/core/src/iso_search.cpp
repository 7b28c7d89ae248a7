#include "btw/iso_search.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "btw/errors.hpp"

namespace btw {

std::string to_string(IsoKind kind) {
  return kind == IsoKind::betweenness ? "betweenness" : "collinearity";
}

IsoKind parse_iso_kind(const std::string& text) {
  if (text == "betweenness") return IsoKind::betweenness;
  if (text == "collinearity") return IsoKind::collinearity;
  throw Error(ErrorCode::invalid_argument, "unknown isomorphism kind '" + text + "'");
}

std::string to_string(SearchResult::Outcome outcome) {
  switch (outcome) {
    case SearchResult::Outcome::found: return "found";
    case SearchResult::Outcome::refuted: return "refuted";
    case SearchResult::Outcome::inconclusive: return "inconclusive";
  }
  return "unknown";
}

std::vector<PointSignature> point_signatures(const FiniteConfig& cfg, IsoKind kind) {
  std::vector<PointSignature> sig(cfg.size());
  for (const auto& t : cfg.collinear_triples()) {
    ++sig[t.a].collinear_triple_count;
    ++sig[t.b].collinear_triple_count;
    ++sig[t.c].collinear_triple_count;
  }
  if (kind == IsoKind::betweenness) {
    for (auto& s : sig) s.is_extreme = true;
    for (const auto& t : cfg.between_triples()) {
      ++sig[t.y].middle_count;
      ++sig[t.x].end_count;
      ++sig[t.z].end_count;
      sig[t.y].is_extreme = false;
    }
  }
  return sig;
}

namespace {

bool related(const FiniteConfig& cfg, IsoKind kind, PointId x, PointId y, PointId z) {
  return kind == IsoKind::betweenness ? cfg.is_between(x, y, z) : cfg.is_collinear(x, y, z);
}

std::string encode(const PointSignature& s) {
  std::ostringstream os;
  os << "extreme=" << int(s.is_extreme) << ",middle=" << s.middle_count << ",end=" << s.end_count
     << ",collinear=" << s.collinear_triple_count;
  return os.str();
}

PointSignature decode(const std::string& text) {
  PointSignature s;
  int extreme = 0;
  char sep = 0;
  std::istringstream is(text);
  auto field = [&](const char* name) {
    std::string key;
    std::getline(is, key, '=');
    if (key != name) throw Error(ErrorCode::invalid_argument, "malformed signature '" + text + "'");
  };
  field("extreme");
  is >> extreme >> sep;
  field("middle");
  is >> s.middle_count >> sep;
  field("end");
  is >> s.end_count >> sep;
  field("collinear");
  is >> s.collinear_triple_count;
  if (!is) throw Error(ErrorCode::invalid_argument, "malformed signature '" + text + "'");
  s.is_extreme = extreme != 0;
  return s;
}

std::optional<Certificate> invariant_mismatch(const FiniteConfig& a, const FiniteConfig& b,
                                              IsoKind kind) {
  const std::vector<std::string> scalar_invariants =
      kind == IsoKind::betweenness
          ? std::vector<std::string>{"point_count", "extreme_count", "between_triple_count",
                                     "collinear_triple_count"}
          : std::vector<std::string>{"point_count", "collinear_triple_count"};
  for (const auto& name : scalar_invariants) {
    Certificate cert{name, 0, 0, {}};
    cert.value_a = certificate_value(a, kind, cert);
    cert.value_b = certificate_value(b, kind, cert);
    if (cert.value_a != cert.value_b) return cert;
  }

  std::map<PointSignature, std::pair<std::int64_t, std::int64_t>> classes;
  for (const auto& s : point_signatures(a, kind)) ++classes[s].first;
  for (const auto& s : point_signatures(b, kind)) ++classes[s].second;
  for (const auto& [sig, counts] : classes) {
    if (counts.first != counts.second) {
      return Certificate{"signature_class", counts.first, counts.second, encode(sig)};
    }
  }
  return std::nullopt;
}

class Matcher {
 public:
  Matcher(const FiniteConfig& a, const FiniteConfig& b, IsoKind kind, SearchMode mode,
          std::uint64_t node_limit)
      : a_(a), b_(b), kind_(kind), mode_(mode), node_limit_(node_limit),
        image_(a.size(), kUnset), used_(b.size(), false) {
    const auto sig_a = point_signatures(a, kind);
    const auto sig_b = point_signatures(b, kind);
    candidates_.resize(a.size());
    for (PointId i = 0; i < a.size(); ++i)
      for (PointId j = 0; j < b.size(); ++j)
        if (sig_a[i] == sig_b[j]) candidates_[i].push_back(j);
    build_order();
  }

  SearchResult run() {
    SearchResult result;
    search(0);
    result.nodes_explored = nodes_;
    if (aborted_) {
      result.outcome = SearchResult::Outcome::inconclusive;
    } else {
      result.outcome =
          found_.empty() ? SearchResult::Outcome::refuted : SearchResult::Outcome::found;
    }
    std::sort(found_.begin(), found_.end());
    result.maps = std::move(found_);
    return result;
  }

 private:
  static constexpr PointId kUnset = static_cast<PointId>(-1);

  // Most-constrained-first: start from the smallest signature class, then
  // repeatedly take the vertex sharing the most collinear triples with the
  // already ordered prefix.
  void build_order() {
    const std::size_t n = a_.size();
    std::vector<std::vector<std::pair<PointId, PointId>>> incident(n);
    for (const auto& t : a_.collinear_triples()) {
      incident[t.a].push_back({t.b, t.c});
      incident[t.b].push_back({t.a, t.c});
      incident[t.c].push_back({t.a, t.b});
    }
    std::vector<bool> placed(n, false);
    order_.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
      PointId best = kUnset;
      std::tuple<int, int, std::size_t, PointId> best_key{};
      for (PointId v = 0; v < n; ++v) {
        if (placed[v]) continue;
        int both = 0, one = 0;
        for (const auto& [u, w] : incident[v]) {
          const int k = int(placed[u]) + int(placed[w]);
          if (k == 2) ++both;
          if (k == 1) ++one;
        }
        // larger counts first, then smaller class, then lower id
        std::tuple<int, int, std::size_t, PointId> key{-both, -one, candidates_[v].size(), v};
        if (best == kUnset || key < best_key) {
          best = v;
          best_key = key;
        }
      }
      placed[best] = true;
      order_.push_back(best);
    }
  }

  bool consistent(std::size_t depth, PointId v, PointId w) const {
    for (std::size_t i = 0; i < depth; ++i) {
      const PointId u1 = order_[i];
      const PointId f1 = image_[u1];
      for (std::size_t j = i + 1; j < depth; ++j) {
        const PointId u2 = order_[j];
        const PointId f2 = image_[u2];
        if (kind_ == IsoKind::collinearity) {
          if (a_.is_collinear(u1, u2, v) != b_.is_collinear(f1, f2, w)) return false;
        } else {
          if (a_.is_between(u1, v, u2) != b_.is_between(f1, w, f2)) return false;
          if (a_.is_between(v, u1, u2) != b_.is_between(w, f1, f2)) return false;
          if (a_.is_between(v, u2, u1) != b_.is_between(w, f2, f1)) return false;
        }
      }
    }
    return true;
  }

  // Returns false to stop the search.
  bool search(std::size_t depth) {
    if (depth == order_.size()) {
      found_.push_back(image_);
      return mode_ == SearchMode::all;
    }
    const PointId v = order_[depth];
    for (PointId w : candidates_[v]) {
      if (used_[w]) continue;
      if (++nodes_ > node_limit_) {
        aborted_ = true;
        return false;
      }
      if (!consistent(depth, v, w)) continue;
      image_[v] = w;
      used_[w] = true;
      const bool keep_going = search(depth + 1);
      used_[w] = false;
      image_[v] = kUnset;
      if (!keep_going) return false;
    }
    return true;
  }

  const FiniteConfig& a_;
  const FiniteConfig& b_;
  IsoKind kind_;
  SearchMode mode_;
  std::uint64_t node_limit_;
  std::vector<std::vector<PointId>> candidates_;
  std::vector<PointId> order_;
  IdMap image_;
  std::vector<bool> used_;
  std::vector<IdMap> found_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

MapCheck verify_map(const FiniteConfig& a, const FiniteConfig& b, std::span<const PointId> map,
                    IsoKind kind) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::size_mismatch, "configurations have different sizes");
  }
  require_bijection(map, a.size());
  const std::size_t n = a.size();
  for (PointId x = 0; x < n; ++x) {
    for (PointId y = 0; y < n; ++y) {
      if (y == x) continue;
      for (PointId z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        if (related(a, kind, x, y, z) != related(b, kind, map[x], map[y], map[z])) {
          return {false, std::array<PointId, 3>{x, y, z}};
        }
      }
    }
  }
  return {};
}

std::int64_t certificate_value(const FiniteConfig& cfg, IsoKind kind, const Certificate& cert) {
  if (cert.invariant == "point_count") return static_cast<std::int64_t>(cfg.size());
  if (cert.invariant == "extreme_count")
    return static_cast<std::int64_t>(extreme_points(cfg).size());
  if (cert.invariant == "between_triple_count")
    return static_cast<std::int64_t>(cfg.between_triples().size());
  if (cert.invariant == "collinear_triple_count")
    return static_cast<std::int64_t>(cfg.collinear_triples().size());
  if (cert.invariant == "signature_class") {
    const PointSignature target = decode(cert.detail);
    const auto sigs = point_signatures(cfg, kind);
    return std::count(sigs.begin(), sigs.end(), target);
  }
  throw Error(ErrorCode::invalid_argument, "unknown certificate invariant '" + cert.invariant + "'");
}

SearchResult find_isomorphism(const FiniteConfig& a, const FiniteConfig& b, IsoKind kind,
                              SearchMode mode, std::uint64_t node_limit) {
  if (auto cert = invariant_mismatch(a, b, kind)) {
    SearchResult result;
    result.outcome = SearchResult::Outcome::refuted;
    result.certificate = std::move(cert);
    return result;
  }
  return Matcher(a, b, kind, mode, node_limit).run();
}

std::vector<IdMap> enumerate_automorphisms(const FiniteConfig& cfg, IsoKind kind,
                                           std::uint64_t node_limit) {
  auto result = find_isomorphism(cfg, cfg, kind, SearchMode::all, node_limit);
  if (result.outcome == SearchResult::Outcome::inconclusive) {
    throw Error(ErrorCode::search_limit,
                "automorphism search exceeded " + std::to_string(node_limit) + " nodes");
  }
  return std::move(result.maps);
}

}  // namespace btw
