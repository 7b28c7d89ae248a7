#pragma once

// Deciding betweenness and collinearity isomorphism of finite configurations
// by signature-pruned backtracking.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "btw/finite_config.hpp"

namespace btw {

enum class IsoKind { betweenness, collinearity };

std::string to_string(IsoKind kind);
IsoKind parse_iso_kind(const std::string& text);

/// Per-point invariants used to restrict candidate images. For the
/// collinearity kind only `collinear_triple_count` is populated, since
/// extremeness and betweenness roles are not collinearity invariants.
struct PointSignature {
  bool is_extreme = false;
  std::uint32_t middle_count = 0;
  std::uint32_t end_count = 0;
  std::uint32_t collinear_triple_count = 0;

  friend auto operator<=>(const PointSignature&, const PointSignature&) = default;
};

std::vector<PointSignature> point_signatures(const FiniteConfig& cfg, IsoKind kind);

struct MapCheck {
  bool ok = true;
  /// First ordered triple (ids in the source config) whose relation is not
  /// preserved. For betweenness the middle element is the second id.
  std::optional<std::array<PointId, 3>> violation;
};

/// Checks that `map` preserves the relation in both directions on all
/// ordered triples. Throws Error(size_mismatch) / Error(not_bijective).
MapCheck verify_map(const FiniteConfig& a, const FiniteConfig& b, std::span<const PointId> map,
                    IsoKind kind);

/// Names an invariant that differs between the two configurations.
struct Certificate {
  std::string invariant;
  std::int64_t value_a = 0;
  std::int64_t value_b = 0;
  std::string detail;
};

enum class SearchMode { first, all };

struct SearchResult {
  enum class Outcome { found, refuted, inconclusive };

  Outcome outcome = Outcome::refuted;
  std::vector<IdMap> maps;
  /// Present when refutation came from an invariant mismatch; absent when
  /// the pruned search space was exhausted.
  std::optional<Certificate> certificate;
  std::uint64_t nodes_explored = 0;
};

std::string to_string(SearchResult::Outcome outcome);

inline constexpr std::uint64_t kDefaultNodeLimit = 10'000'000;

/// Maps are emitted in lexicographic order of the image vector.
SearchResult find_isomorphism(const FiniteConfig& a, const FiniteConfig& b, IsoKind kind,
                              SearchMode mode = SearchMode::first,
                              std::uint64_t node_limit = kDefaultNodeLimit);

/// Throws Error(search_limit) if the node limit is hit.
std::vector<IdMap> enumerate_automorphisms(const FiniteConfig& cfg, IsoKind kind,
                                           std::uint64_t node_limit = kDefaultNodeLimit);

/// Recomputes the invariant named by a certificate on one configuration.
std::int64_t certificate_value(const FiniteConfig& cfg, IsoKind kind, const Certificate& cert);

}  // namespace btw
