#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "attract/mapping.hpp"
#include "attract/point.hpp"

namespace attract {

/// Regular grid over a bounded box, endpoints included, per_axis >= 2.
std::vector<Point> box_grid(const Box& box, int per_axis);

/// Deterministic sample family over a domain: a structured part of roughly
/// `grid_count` points plus `random_count` seeded draws. The structured part
/// refines geometrically toward the domain's refine target, down to the
/// domain's clamp margin, so boundary behaviour near the target is resolved
/// far below the uniform spacing:
///   dim 1: half uniform across the window, half geometric toward the target;
///   dim 2: concentric rings around the target with dyadically shrinking radii;
///   dim 3+: a uniform box grid, filtered to the domain.
std::vector<Point> sample_schedule(const Domain& domain, int grid_count,
                                   int random_count, std::uint64_t seed);

/// Seeded pairs for two-point inequalities.
std::vector<std::pair<Point, Point>> sample_pairs(const Domain& domain, int count,
                                                  std::uint64_t seed);

}  // namespace attract
