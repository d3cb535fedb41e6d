#pragma once

#include <map>
#include <string>
#include <vector>

#include "attract/mapping.hpp"

namespace attract {

/// T x = x/2 on C = (0, inf). No fixed point in C; the attractive set is
/// (-inf, 0]. Nonexpansive (1-hybrid).
Mapping make_halving(double window_hi = 4.0);

/// T x = x^2 on C = [0, hi], hi <= 1. For hi = 1 the fixed points are {0, 1}
/// but the attractive set is (-inf, 0], so 1 is fixed yet not attractive and
/// the mapping is not quasinonexpansive. For hi < 1 only 0 is fixed.
Mapping make_square(double hi = 1.0);

/// Rotation by theta (radians, not a multiple of 2 pi) about `center` on
/// C = R^2. Fixed set and attractive set are both {center}. Nonexpansive.
Mapping make_rotation(double theta, Point center = Point{0.0, 0.0},
                      double window_half_width = 2.0);

/// T x = center + rho R_theta (x - center) on R^2 with 0 < rho < 1:
/// a contractive twist whose fixed and attractive sets are {center}.
Mapping make_contraction(double rho, double theta, Point center = Point{0.0, 0.0},
                         double window_half_width = 2.0);

/// Metric projection onto a closed convex target, as a mapping of all of
/// R^d. Fixed set and attractive set both equal the target; projections
/// satisfy the hybrid inequality for every lambda in [-1, 1], in particular
/// the nonspreading case lambda = 0.
Mapping make_projection_mapping(ConvexSet target, Box window);

struct CatalogEntry {
  std::string id;
  std::string params_help;
  std::string fixed_desc;
  std::string attractive_desc;
};

const std::vector<CatalogEntry>& catalog_entries();

/// Instantiates a catalog mapping from its id and textual parameters
/// (already stripped of the config prefix). Unknown ids or parameter keys
/// and malformed values throw std::invalid_argument.
Mapping make_from_catalog(const std::string& id,
                          const std::map<std::string, std::string>& params);

}  // namespace attract
