#pragma once

#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "attract/point.hpp"

namespace attract {

struct ConvexSet;

/// {z : <normal, z> <= offset}. A zero normal with offset >= 0 is the whole
/// space (a vacuous constraint); a zero normal with offset < 0 would be the
/// empty set and is rejected at construction.
struct Halfspace {
  Point normal;
  double offset = 0.0;

  Halfspace(Point normal, double offset);

  bool whole_space() const { return norm_squared(normal) == 0.0; }

  /// Geometric signed distance to the boundary; positive outside, and 0 for
  /// a whole-space halfspace.
  double signed_distance(const Point& z) const;
};

struct Ball {
  Point center;
  double radius = 0.0;

  Ball(Point center, double radius);
};

/// anchor + span{directions}. Directions must be orthonormal; that keeps the
/// projection a plain sum of inner products.
struct AffineSet {
  Point anchor;
  std::vector<Point> directions;

  AffineSet(Point anchor, std::vector<Point> directions);
};

/// Coordinate-wise bounds. Entries may be infinite on either side.
struct Box {
  std::vector<double> lower;
  std::vector<double> upper;

  Box(std::vector<double> lower, std::vector<double> upper);

  static Box centered(const Point& center, double half_width);

  int dim() const { return static_cast<int>(lower.size()); }
  bool bounded() const;
};

struct Singleton {
  Point point;
};

struct WholeSpace {
  int dim = 1;
};

struct Intersection {
  std::vector<ConvexSet> members;
};

/// Closed convex subset of R^d, represented as a tagged union of the shapes
/// the toolkit can project onto in closed form, plus finite intersections
/// (handled by Dykstra's algorithm).
struct ConvexSet {
  using Variant =
      std::variant<Halfspace, Ball, AffineSet, Box, Singleton, WholeSpace, Intersection>;

  Variant value;

  ConvexSet(Halfspace v) : value(std::move(v)) {}
  ConvexSet(Ball v) : value(std::move(v)) {}
  ConvexSet(AffineSet v) : value(std::move(v)) {}
  ConvexSet(Box v) : value(std::move(v)) {}
  ConvexSet(Singleton v) : value(std::move(v)) {}
  ConvexSet(WholeSpace v) : value(std::move(v)) {}
  ConvexSet(Intersection v) : value(std::move(v)) {}

  int dim() const;

  /// Geometric constraint violation: 0 inside, roughly "distance to the
  /// set" outside (exactly that for single shapes, max over members for an
  /// intersection). Scale-invariant in the halfspace normals.
  double violation(const Point& x) const;

  bool contains(const Point& x, double tol = 1e-9) const {
    return violation(x) <= tol;
  }
};

struct ProjectionResult {
  Point point;
  bool converged = true;
  int sweeps = 0;
  /// Last full-sweep displacement (0 for closed-form projections).
  double residual = 0.0;
};

class InfeasibleIntersection : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kProjectionTol = 1e-10;
inline constexpr int kMaxSweeps = 10000;
inline constexpr double kFeasibilityTol = 1e-6;

/// Metric projection onto a single set. Closed form except for
/// Intersection, which delegates to dykstra_project.
ProjectionResult project(const ConvexSet& set, const Point& x);

/// Dykstra's alternating projection scheme onto the intersection of `sets`
/// (nested intersections are flattened). Stops when a full sweep moves the
/// iterate by at most `tol`. With `probe` set, an infeasible-looking
/// intersection throws InfeasibleIntersection before any projection runs.
ProjectionResult dykstra_project(const std::vector<ConvexSet>& sets, const Point& x,
                                 int max_sweeps = kMaxSweeps,
                                 double tol = kProjectionTol, bool probe = true);

/// Cheap feasibility heuristic: run a capped Dykstra pass from the origin and
/// test the geometric violation of where it lands. Returns the near-feasible
/// point, or nullopt when the violation stays above kFeasibilityTol.
std::optional<Point> feasibility_probe(const std::vector<ConvexSet>& sets);

/// Exhaustive grid-search projection, the test oracle for dykstra_project.
/// Scans `probe_box` (or a box derived from the bounded members) with the
/// given step and returns the feasible grid point nearest to x. Dimensions
/// above 3 are rejected; an empty feasible grid throws.
Point brute_force_project(const std::vector<ConvexSet>& sets, const Point& x,
                          double grid_step,
                          std::optional<Box> probe_box = std::nullopt);

}  // namespace attract
