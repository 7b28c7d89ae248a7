#include "btw/finite_config.hpp"

#include <algorithm>
#include <string>

#include "btw/errors.hpp"

namespace btw {

FiniteConfig::FiniteConfig(std::vector<Point> points, Tolerance tol)
    : points_(std::move(points)), tol_(tol) {
  const std::size_t n = points_.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (distance(points_[i], points_[j]) <= tol_.eps_metric()) {
        throw Error(ErrorCode::invalid_argument,
                    "duplicate points " + std::to_string(i) + " and " + std::to_string(j));
      }
    }
  }

  relation_.assign(n * n * n, 0);
  auto set = [&](PointId x, PointId y, PointId z, std::uint8_t bit) {
    relation_[(x * n + y) * n + z] |= bit;
  };
  for (PointId a = 0; a < n; ++a) {
    for (PointId b = a + 1; b < n; ++b) {
      for (PointId c = b + 1; c < n; ++c) {
        if (!collinear(points_[a], points_[b], points_[c], tol_)) continue;
        collinear_.push_back({a, b, c});
        const std::array<PointId, 3> t{a, b, c};
        for (PointId x : t)
          for (PointId y : t)
            for (PointId z : t)
              if (x != y && y != z && x != z) set(x, y, z, kCollinearBit);

        // exactly one of the three is the middle for distinct collinear points
        const std::array<BetweenTriple, 3> candidates{
            BetweenTriple{b, a, c}, BetweenTriple{a, b, c}, BetweenTriple{a, c, b}};
        for (const auto& bt : candidates) {
          if (between(points_[bt.x], points_[bt.y], points_[bt.z], true, tol_)) {
            between_.push_back(bt);
            set(bt.x, bt.y, bt.z, kBetweenBit);
            set(bt.z, bt.y, bt.x, kBetweenBit);
          }
        }
      }
    }
  }
}

const Point& FiniteConfig::point(PointId id) const {
  check_id(id);
  return points_[id];
}

void FiniteConfig::check_id(PointId id) const {
  if (id >= size()) {
    throw Error(ErrorCode::invalid_id,
                "point id " + std::to_string(id) + " out of range (size " + std::to_string(size()) + ")");
  }
}

IdSet interval(const FiniteConfig& cfg, PointId x, PointId z, bool open) {
  cfg.check_id(x);
  cfg.check_id(z);
  IdSet out;
  if (x == z) {
    if (!open) out.push_back(x);
    return out;
  }
  for (PointId y = 0; y < cfg.size(); ++y) {
    if (y == x || y == z) {
      if (!open) out.push_back(y);
    } else if (cfg.is_between(x, y, z)) {
      out.push_back(y);
    }
  }
  return out;
}

IdSet extreme_points(const FiniteConfig& cfg) {
  std::vector<bool> middle(cfg.size(), false);
  for (const auto& t : cfg.between_triples()) middle[t.y] = true;
  IdSet out;
  for (PointId i = 0; i < cfg.size(); ++i)
    if (!middle[i]) out.push_back(i);
  return out;
}

namespace {

std::vector<bool> membership(const FiniteConfig& cfg, std::span<const PointId> subset) {
  std::vector<bool> in(cfg.size(), false);
  for (PointId id : subset) {
    cfg.check_id(id);
    in[id] = true;
  }
  return in;
}

}  // namespace

bool is_collinearly_closed(const FiniteConfig& cfg, std::span<const PointId> subset) {
  const auto in = membership(cfg, subset);
  for (const auto& t : cfg.collinear_triples()) {
    const int count = int(in[t.a]) + int(in[t.b]) + int(in[t.c]);
    if (count == 2) return false;
  }
  return true;
}

IdSet collinear_hull(const FiniteConfig& cfg, std::span<const PointId> subset) {
  auto in = membership(cfg, subset);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& t : cfg.collinear_triples()) {
      const int count = int(in[t.a]) + int(in[t.b]) + int(in[t.c]);
      if (count == 2) {
        in[t.a] = in[t.b] = in[t.c] = true;
        changed = true;
      }
    }
  }
  IdSet out;
  for (PointId i = 0; i < cfg.size(); ++i)
    if (in[i]) out.push_back(i);
  return out;
}

IdSet line_trace(const FiniteConfig& cfg, PointId p, PointId q) {
  cfg.check_id(p);
  cfg.check_id(q);
  if (p == q) throw Error(ErrorCode::invalid_argument, "line_trace needs two distinct points");
  IdSet out;
  for (PointId z = 0; z < cfg.size(); ++z) {
    if (z == p || z == q || cfg.is_collinear(p, q, z)) out.push_back(z);
  }
  return out;
}

void require_bijection(std::span<const PointId> map, std::size_t size) {
  if (map.size() != size) {
    throw Error(ErrorCode::not_bijective, "map has " + std::to_string(map.size()) +
                                              " entries, expected " + std::to_string(size));
  }
  std::vector<bool> hit(size, false);
  for (PointId image : map) {
    if (image >= size || hit[image]) {
      throw Error(ErrorCode::not_bijective, "map is not a bijection");
    }
    hit[image] = true;
  }
}

IdSet fixed_point_set(const FiniteConfig& cfg, std::span<const PointId> selfmap) {
  require_bijection(selfmap, cfg.size());
  IdSet out;
  for (PointId i = 0; i < cfg.size(); ++i)
    if (selfmap[i] == i) out.push_back(i);
  return out;
}

IdSet image(std::span<const PointId> map, std::span<const PointId> subset) {
  IdSet out;
  out.reserve(subset.size());
  for (PointId id : subset) out.push_back(map[id]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace btw
