#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "attract/convex_set.hpp"
#include "attract/point.hpp"
#include "attract/report.hpp"
#include "attract/rng.hpp"

namespace attract {

inline constexpr double kFixedTol = 1e-9;
inline constexpr double kResidualTol = 1e-9;

/// Describes the set C a mapping acts on: strict membership, membership in
/// the closure, a bounded sampling window, and the point sample schedules
/// refine toward (typically where the interesting boundary behaviour lives).
/// Open domains carry a clamp margin keeping samples off the boundary.
class Domain {
 public:
  using Predicate = std::function<bool(const Point&)>;
  using Sampler = std::function<Point(Rng&)>;

  Domain(int dim, Predicate member, Predicate closure_member, Box window,
         Point refine_target, Sampler sampler, double clamp_eps = 1e-6);

  /// (lo, infinity) when open_lo, else [lo, infinity); sampled inside
  /// [lo + clamp, window_hi].
  static Domain half_line_above(double lo, bool open_lo, double window_hi);

  /// Closed interval [lo, hi].
  static Domain interval(double lo, double hi);

  /// All of R^2, sampled in a square window of the given half-width.
  static Domain plane(Point center, double window_half_width);

  /// All of R^d, sampled in the given window, refining toward `target`.
  static Domain whole_space(Box window, Point target);

  int dim() const { return dim_; }
  bool contains(const Point& x) const;
  bool contains_closure(const Point& x) const;
  const Box& window() const { return window_; }
  const Point& refine_target() const { return refine_target_; }
  double clamp_eps() const { return clamp_eps_; }
  Point sample(Rng& rng) const { return sampler_(rng); }

  /// True when C itself is closed; then `as_closed_set` is C, otherwise it
  /// is the closure of C.
  bool is_closed() const { return is_closed_; }
  const std::optional<ConvexSet>& as_closed_set() const { return closed_set_; }

 private:
  bool is_closed_ = true;
  std::optional<ConvexSet> closed_set_;
  int dim_;
  Predicate member_;
  Predicate closure_member_;
  Box window_;
  Point refine_target_;
  Sampler sampler_;
  double clamp_eps_;
};

/// A self-mapping T of a convex set C, bundled with whatever is known about
/// it analytically: a hybridness parameter, its fixed points, its attractive
/// set. The analytic fields are optional metadata used to cross-check the
/// numerically built objects; evaluation never consults them.
struct Mapping {
  std::string label;
  Domain domain;
  std::function<Point(const Point&)> fn;
  std::vector<double> params;

  /// lambda for which the mapping is lambda-hybrid, when known.
  std::optional<double> hybrid_lambda;
  /// Exact attractive set, when known in closed form.
  std::optional<ConvexSet> known_attractive;
  std::optional<std::vector<Halfspace>> known_attractive_halfspaces;
  /// Exact fixed-point list, when finite and known.
  std::optional<std::vector<Point>> known_fixed_points;
  std::string fixed_desc;
  std::string attractive_desc;

  /// Evaluate at a point of C. Throws std::domain_error outside C.
  Point operator()(const Point& x) const;

  /// Evaluate at a point of the closure of C. Orbits may hit the boundary
  /// through floating-point underflow; the catalog formulas all extend
  /// continuously, so evaluation on the closure is well defined.
  Point evaluate_closure(const Point& x) const;
};

bool is_fixed_point(const Mapping& T, const Point& x, double tol = kFixedTol);

/// Max over samples x of ||Tx - z|| - ||x - z||; `passed` when it stays
/// within tol, i.e. z behaves as an attractive point for T on the samples.
ResidualReport attractive_residual(const Mapping& T, const Point& z,
                                   std::span<const Point> samples,
                                   double tol = kResidualTol);

/// Max over fixed points u and samples x of ||Tx - u|| - ||x - u||.
ResidualReport quasinonexpansive_residual(const Mapping& T,
                                          std::span<const Point> fixed_points,
                                          std::span<const Point> samples,
                                          double tol = kResidualTol);

/// Max over pairs (x, y) of
///   ||Tx - Ty||^2 - ||x - y||^2 - 2 (1 - lambda) <x - Tx, y - Ty>.
ResidualReport lambda_hybrid_residual(const Mapping& T, double lambda,
                                      std::span<const std::pair<Point, Point>> pairs,
                                      double tol = kResidualTol);

/// The same inequality rewritten around Ty:
///   ||Tx - Ty||^2 <= ||x - Ty||^2 + ||Ty - y||^2
///                    + 2 <lambda x + (1 - lambda) Tx - Ty, Ty - y>.
/// Algebraically identical to lambda_hybrid_residual; evaluated separately
/// so the two forms can be compared on the same pairs.
ResidualReport lambda_hybrid_equivalent_residual(
    const Mapping& T, double lambda, std::span<const std::pair<Point, Point>> pairs,
    double tol = kResidualTol);

}  // namespace attract
