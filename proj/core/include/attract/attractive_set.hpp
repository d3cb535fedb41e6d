#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "attract/convex_set.hpp"
#include "attract/mapping.hpp"
#include "attract/point.hpp"

namespace attract {

/// Finite fixed-point list found by grid filtering plus averaged-iteration
/// refinement. Exact nearest-point projection, since the set is finite.
struct FixedSetApprox {
  std::vector<Point> points;
  double tol = kFixedTol;
  std::string generator_label;

  bool empty() const { return points.empty(); }
  std::optional<Point> nearest(const Point& x) const;
};

/// Grid points already fixed at tol are polished by iterating the averaged
/// map x <- (x + Tx)/2 up to 100 steps (same fixed points, better damping
/// than raw iteration), then kept if the displacement stays below tol.
/// Results within 1e-5 of each other collapse to one representative, so an
/// exact grid hit survives while nearby polished duplicates do not. The grid
/// must hit fixed points to within tol for them to be found at all; pair
/// with a grid that contains the candidates exactly (box_grid endpoints and
/// midpoints) rather than a random cloud.
FixedSetApprox find_fixed_points(const Mapping& T, std::span<const Point> grid,
                                 double tol = kFixedTol);

/// The attractiveness constraint contributed by a single domain point x:
///   ||Tx - z|| <= ||x - z||   <=>   <2(x - Tx), z> <= ||x||^2 - ||Tx||^2.
/// A fixed x yields a zero normal with zero offset, i.e. no constraint.
Halfspace attractive_halfspace(const Mapping& T, const Point& x);

/// Outer polytope approximation of the attractive set: the intersection of
/// the per-sample halfspaces. Coarser sample families give larger sets, so
/// membership here never rejects a true attractive point.
struct AttractiveApprox {
  std::vector<Halfspace> halfspaces;
  std::vector<Point> sample_points;
  std::string generator_label;
  double tol = kResidualTol;
  int dim = 0;
  /// Every sample was fixed: the constraints are vacuous and the
  /// approximation is all of R^d.
  bool whole_space = false;
  /// Feasibility probe outcome at build time. Sampled constraint families
  /// can be inconsistent (mappings with empty attractive set).
  bool feasible = true;
  /// Two-scale estimate of the sampling accuracy: the largest projection
  /// displacement observed between this approximation and the one built from
  /// the even-indexed half of the samples, floored by the projection
  /// tolerance (realized accuracy cannot beat the projector's).
  double resolution = kProjectionTol;

  /// Max signed geometric distance over the halfspaces; negative strictly
  /// inside, 0 for a whole-space approximation.
  double membership_violation(const Point& z) const;
  bool contains(const Point& z, double member_tol) const {
    return membership_violation(z) <= member_tol;
  }

  /// One halfspace per line: the normal's coordinates then the offset,
  /// %.17g, space-separated. Lines starting with '#' carry metadata.
  void write_table(std::ostream& os) const;

  static AttractiveApprox from_halfspaces(std::vector<Halfspace> halfspaces,
                                          std::string label,
                                          double tol = kResidualTol);
};

AttractiveApprox build_attractive_approx(const Mapping& T,
                                         std::span<const Point> samples,
                                         double tol = kResidualTol);

/// Dykstra projection onto the approximation polytope. Identity for a
/// whole-space approximation; throws InfeasibleIntersection when the build
/// probe found the constraints inconsistent.
ProjectionResult project_attractive(const AttractiveApprox& approx, const Point& x,
                                    int max_sweeps = kMaxSweeps,
                                    double tol = kProjectionTol);

/// || P_F x - P_A x ||: how far the nearest found fixed point sits from the
/// polytope projection. Small for quasinonexpansive mappings on closed
/// convex domains, where the two projections agree on the domain.
double check_projection_identity(const Mapping& T, const AttractiveApprox& approx,
                                 const FixedSetApprox& fixed, const Point& x);

/// Projects z onto the closed convex set C and reports whether the result is
/// a fixed point of T at tol. The hypothesis that z is attractive must hold
/// first: z is checked against attractive_residual over `samples` and a
/// failure throws std::invalid_argument rather than passing silently.
bool attractive_projects_to_fixed(const Mapping& T, const ConvexSet& C,
                                  const Point& z, std::span<const Point> samples,
                                  double tol = kFixedTol);

}  // namespace attract
