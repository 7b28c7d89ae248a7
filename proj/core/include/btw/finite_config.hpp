#pragma once

// Betweenness and collinearity structure of finite planar point sets.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "btw/geom.hpp"

namespace btw {

/// Index of a point inside its FiniteConfig.
using PointId = std::size_t;

/// Subset of a configuration, always sorted ascending without duplicates.
using IdSet = std::vector<PointId>;

/// Self-map or bijection between configurations: `map[i]` is the image of i.
using IdMap = std::vector<PointId>;

/// Ordered triple (x, y, z) recording that y lies strictly between x and z.
/// Stored once with x < z.
struct BetweenTriple {
  PointId x, y, z;
  friend bool operator==(const BetweenTriple&, const BetweenTriple&) = default;
};

/// Unordered collinear triple, stored with a < b < c.
struct CollinearTriple {
  PointId a, b, c;
  friend bool operator==(const CollinearTriple&, const CollinearTriple&) = default;
};

/// Finite set of pairwise distinct points with an eagerly built incidence
/// cache. Immutable after construction.
class FiniteConfig {
 public:
  /// Throws Error(invalid_argument) if two points are within eps_metric.
  explicit FiniteConfig(std::vector<Point> points, Tolerance tol = {});

  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<Point>& points() const noexcept { return points_; }
  const Point& point(PointId id) const;
  const Tolerance& tolerance() const noexcept { return tol_; }

  /// y strictly between x and z (cached).
  bool is_between(PointId x, PointId y, PointId z) const noexcept {
    return (cell(x, y, z) & kBetweenBit) != 0;
  }
  /// x, y, z pairwise distinct and collinear (cached).
  bool is_collinear(PointId x, PointId y, PointId z) const noexcept {
    return (cell(x, y, z) & kCollinearBit) != 0;
  }

  const std::vector<BetweenTriple>& between_triples() const noexcept { return between_; }
  const std::vector<CollinearTriple>& collinear_triples() const noexcept { return collinear_; }

  void check_id(PointId id) const;

 private:
  static constexpr std::uint8_t kCollinearBit = 1;
  static constexpr std::uint8_t kBetweenBit = 2;

  std::uint8_t cell(PointId x, PointId y, PointId z) const noexcept {
    return relation_[(x * size() + y) * size() + z];
  }

  std::vector<Point> points_;
  Tolerance tol_;
  std::vector<std::uint8_t> relation_;
  std::vector<BetweenTriple> between_;
  std::vector<CollinearTriple> collinear_;
};

/// [x, z]_S (closed) or (x, z)_S (open).
IdSet interval(const FiniteConfig& cfg, PointId x, PointId z, bool open);

/// Points that lie strictly between no two other points.
IdSet extreme_points(const FiniteConfig& cfg);

/// Every configuration point collinear with two distinct members of `subset`
/// is itself a member.
bool is_collinearly_closed(const FiniteConfig& cfg, std::span<const PointId> subset);

/// Least collinearly closed superset of `subset`.
IdSet collinear_hull(const FiniteConfig& cfg, std::span<const PointId> subset);

/// All configuration points on the line through p and q (p, q included).
/// Throws Error(invalid_argument) when p == q.
IdSet line_trace(const FiniteConfig& cfg, PointId p, PointId q);

/// Fixed points of a bijective self-map. Throws Error(not_bijective).
IdSet fixed_point_set(const FiniteConfig& cfg, std::span<const PointId> selfmap);

/// Throws Error(not_bijective) unless `map` is a permutation of 0..size-1.
void require_bijection(std::span<const PointId> map, std::size_t size);

/// Images of the ids of `subset` under `map`, as a sorted set.
IdSet image(std::span<const PointId> map, std::span<const PointId> subset);

}  // namespace btw
