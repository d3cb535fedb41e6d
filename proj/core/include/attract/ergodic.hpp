#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "attract/attractive_set.hpp"
#include "attract/mapping.hpp"
#include "attract/report.hpp"

namespace attract {

/// Orbit x, Tx, T^2 x, ... with running Cesaro means and the projected
/// trajectory onto an attractive-set approximation.
///
/// Indexing: orbit[n] = T^n x for n = 0..n_max; z(n) = (1/n) sum of the
/// first n orbit points, n = 1..n_max; proj_trajectory[n] = P(orbit[n]);
/// fejer_residuals[n] = ||orbit[n+1] - u|| - ||orbit[n] - u|| for the witness
/// u = P(0). Means use the stable update z_{n+1} = z_n + (orbit[n] - z_n)/(n+1).
struct CesaroTrace {
  Point start;
  std::vector<Point> orbit;
  std::vector<Point> means;
  std::vector<Point> proj_trajectory;
  std::vector<double> fejer_residuals;
  /// ||z_n - mean_limit||, filled by the pipeline once a limit is estimated;
  /// empty otherwise.
  std::vector<double> mean_gaps;
  Point fejer_witness;
  int n_max = 0;
  /// First step whose iterate landed on the domain boundary (outside the
  /// strict domain but inside its closure), typically through floating-point
  /// underflow; -1 when the orbit stayed strictly interior.
  int boundary_contact_step = -1;

  const Point& z(int n) const;  // 1-based
  double max_fejer_residual() const;
  /// Diagonal of the orbit's coordinate bounding box (diameter upper bound).
  double diameter_bound() const;
};

/// Convergence analysis over the tail of a trace. The projected-trajectory
/// limit is a tail average (the projections converge fast); the mean limit
/// estimate is the final mean, whose distance to the true limit is what the
/// truncation term of combined_tolerance bounds.
struct ConvergenceReport {
  Point proj_limit;
  double proj_cauchy_residual = 0.0;
  std::optional<Point> mean_limit;
  double mean_drift = 0.0;
  bool mean_matches_proj = false;
  /// Geometric violation of the mean limit against the approximation.
  double mean_membership_violation = 0.0;
  /// Mean limit exists but is NOT in the approximation: the means settled
  /// outside the attractive set, so the ergodic hypothesis fails.
  bool contradiction_case = false;
  /// tol + 2 * orbit_diameter / n_max + approximation resolution.
  double combined_tolerance = 0.0;
  std::string hypothesis_status;  // verified-on-trace | failed-on-trace | indeterminate
  std::string diagnostics;
};

class OrbitEscape : public std::runtime_error {
 public:
  OrbitEscape(const std::string& what, int step)
      : std::runtime_error(what), step(step) {}
  int step;
};

/// Runs n_max steps of T from x, projecting every iterate onto the
/// approximation. Iterates are accepted on the closure of the domain;
/// leaving the closure (or producing non-finite coordinates) throws
/// OrbitEscape with the offending step.
CesaroTrace iterate(const Mapping& T, const Point& x, int n_max,
                    const AttractiveApprox& approx,
                    double projection_tol = kProjectionTol);

ConvergenceReport analyze(const CesaroTrace& trace, const AttractiveApprox& approx,
                          double tol = kResidualTol);

void fill_mean_gaps(CesaroTrace& trace, const Point& mean_limit);

/// CSV with one row per step n = 1..n_max: n, orbit, mean, proj components,
/// the Fejer residual, and the mean gap (blank until filled). All floats
/// %.17g, so a fixed seed reproduces the file byte for byte.
void write_trace_csv(std::ostream& os, const CesaroTrace& trace);

/// Estimates the limit of the means from the trace tail and checks it is an
/// attractive point of T over the samples. Preconditions: T must declare a
/// hybridness parameter, the declared inequality must hold on pairs drawn
/// from the samples, and the orbit must be Fejer monotone up to tolerance
/// (a bounded-orbit certificate); violations throw std::invalid_argument.
ResidualReport cluster_attractiveness(const CesaroTrace& trace, const Mapping& T,
                                      std::span<const Point> samples,
                                      double tol = kResidualTol);

}  // namespace attract
