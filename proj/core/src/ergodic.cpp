#include "attract/ergodic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace attract {

const Point& CesaroTrace::z(int n) const {
  if (n < 1 || n > static_cast<int>(means.size())) {
    throw std::out_of_range("CesaroTrace::z: n out of range");
  }
  return means[static_cast<std::size_t>(n - 1)];
}

double CesaroTrace::max_fejer_residual() const {
  double worst = -std::numeric_limits<double>::infinity();
  for (double r : fejer_residuals) worst = std::max(worst, r);
  return worst;
}

double CesaroTrace::diameter_bound() const {
  if (orbit.empty()) return 0.0;
  const int d = orbit.front().dim();
  double sum = 0.0;
  for (int i = 0; i < d; ++i) {
    double lo = orbit.front()[i], hi = lo;
    for (const Point& p : orbit) {
      lo = std::min(lo, p[i]);
      hi = std::max(hi, p[i]);
    }
    sum += (hi - lo) * (hi - lo);
  }
  return std::sqrt(sum);
}

CesaroTrace iterate(const Mapping& T, const Point& x, int n_max,
                    const AttractiveApprox& approx, double projection_tol) {
  if (n_max < 1) throw std::invalid_argument("iterate: n_max must be positive");
  if (!T.domain.contains(x)) {
    throw std::domain_error("iterate: start " + to_string(x) + " outside the domain");
  }

  CesaroTrace trace;
  trace.start = x;
  trace.n_max = n_max;
  trace.fejer_witness =
      project_attractive(approx, Point::zero(x.dim()), kMaxSweeps, projection_tol).point;

  trace.orbit.reserve(static_cast<std::size_t>(n_max) + 1);
  trace.proj_trajectory.reserve(static_cast<std::size_t>(n_max) + 1);
  trace.means.reserve(static_cast<std::size_t>(n_max));

  trace.orbit.push_back(x);
  trace.proj_trajectory.push_back(
      project_attractive(approx, x, kMaxSweeps, projection_tol).point);

  Point mean = Point::zero(x.dim());
  Point current = x;
  for (int n = 0; n < n_max; ++n) {
    // z_{n+1} = z_n + (T^n x - z_n)/(n+1); at n = 0 this sets z_1 = x.
    mean = mean + (1.0 / (n + 1)) * (current - mean);
    trace.means.push_back(mean);

    Point next = Point::zero(0);
    try {
      next = T.evaluate_closure(current);
    } catch (const std::domain_error&) {
      throw OrbitEscape("iterate: orbit left the domain closure at step " +
                            std::to_string(n + 1) + " from " + to_string(current),
                        n + 1);
    } catch (const std::invalid_argument&) {
      throw OrbitEscape("iterate: orbit became non-finite at step " +
                            std::to_string(n + 1) + " from " + to_string(current),
                        n + 1);
    }
    if (trace.boundary_contact_step < 0 && !T.domain.contains(next) &&
        T.domain.contains_closure(next)) {
      trace.boundary_contact_step = n + 1;
    }
    const double du_next = distance(next, trace.fejer_witness);
    const double du_cur = distance(current, trace.fejer_witness);
    trace.fejer_residuals.push_back(du_next - du_cur);
    trace.orbit.push_back(next);
    trace.proj_trajectory.push_back(
        project_attractive(approx, next, kMaxSweeps, projection_tol).point);
    current = next;
  }
  return trace;
}

ConvergenceReport analyze(const CesaroTrace& trace, const AttractiveApprox& approx,
                          double tol) {
  const int n = trace.n_max;
  if (n < 50) {
    throw std::invalid_argument("analyze: trace too short (need n_max >= 50)");
  }
  const int window = std::max(50, n / 10);

  ConvergenceReport report;
  Point proj_sum = Point::zero(trace.start.dim());
  double cauchy = 0.0;
  for (int k = n - window + 1; k <= n; ++k) {
    const Point& p = trace.proj_trajectory[static_cast<std::size_t>(k)];
    proj_sum = proj_sum + p;
    if (k > n - window + 1) {
      cauchy = std::max(
          cauchy, distance(p, trace.proj_trajectory[static_cast<std::size_t>(k - 1)]));
    }
  }
  report.proj_limit = (1.0 / window) * proj_sum;
  report.proj_cauchy_residual = cauchy;

  report.combined_tolerance =
      tol + 2.0 * trace.diameter_bound() / n + approx.resolution;

  report.mean_drift = distance(trace.z(n), trace.z(n - window + 1));
  if (report.mean_drift <= report.combined_tolerance) {
    report.mean_limit = trace.z(n);
    report.mean_matches_proj =
        distance(*report.mean_limit, report.proj_limit) <= report.combined_tolerance;
    report.mean_membership_violation =
        std::max(0.0, approx.membership_violation(*report.mean_limit));
    report.contradiction_case =
        report.mean_membership_violation > report.combined_tolerance;
    report.hypothesis_status =
        report.contradiction_case ? "failed-on-trace" : "verified-on-trace";
  } else {
    report.hypothesis_status = "indeterminate";
  }

  char buf[160];
  std::snprintf(buf, sizeof buf,
                "window=%d drift=%.3g combined_tol=%.3g diameter<=%.3g resolution=%.3g",
                window, report.mean_drift, report.combined_tolerance,
                trace.diameter_bound(), approx.resolution);
  report.diagnostics = buf;
  return report;
}

void fill_mean_gaps(CesaroTrace& trace, const Point& mean_limit) {
  trace.mean_gaps.clear();
  trace.mean_gaps.reserve(trace.means.size());
  for (const Point& z : trace.means) {
    trace.mean_gaps.push_back(distance(z, mean_limit));
  }
}

namespace {

void write_components(std::ostream& os, const Point& p) {
  char buf[40];
  for (int i = 0; i < p.dim(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", p[i]);
    os << ',' << buf;
  }
}

}  // namespace

void write_trace_csv(std::ostream& os, const CesaroTrace& trace) {
  const int d = trace.start.dim();
  os << 'n';
  for (int i = 0; i < d; ++i) os << ",orbit_" << i;
  for (int i = 0; i < d; ++i) os << ",mean_" << i;
  for (int i = 0; i < d; ++i) os << ",proj_" << i;
  os << ",fejer_residual,mean_gap\n";
  char buf[40];
  for (int n = 1; n <= trace.n_max; ++n) {
    os << n;
    write_components(os, trace.orbit[static_cast<std::size_t>(n)]);
    write_components(os, trace.z(n));
    write_components(os, trace.proj_trajectory[static_cast<std::size_t>(n)]);
    std::snprintf(buf, sizeof buf, "%.17g",
                  trace.fejer_residuals[static_cast<std::size_t>(n - 1)]);
    os << ',' << buf << ',';
    if (!trace.mean_gaps.empty()) {
      std::snprintf(buf, sizeof buf, "%.17g",
                    trace.mean_gaps[static_cast<std::size_t>(n - 1)]);
      os << buf;
    }
    os << '\n';
  }
}

ResidualReport cluster_attractiveness(const CesaroTrace& trace, const Mapping& T,
                                      std::span<const Point> samples, double tol) {
  if (!T.hybrid_lambda) {
    throw std::invalid_argument("cluster_attractiveness: " + T.label +
                                " declares no hybridness parameter");
  }
  if (samples.size() < 2) {
    throw std::invalid_argument("cluster_attractiveness: need at least 2 samples");
  }
  std::vector<std::pair<Point, Point>> pairs;
  for (std::size_t i = 0; i + 1 < samples.size(); i += 2) {
    pairs.emplace_back(samples[i], samples[i + 1]);
  }
  const auto hybrid = lambda_hybrid_residual(T, *T.hybrid_lambda, pairs, kResidualTol);
  if (!hybrid.passed) {
    throw std::invalid_argument(
        "cluster_attractiveness: declared hybrid inequality fails on samples "
        "(max violation " + std::to_string(hybrid.max_violation) + ")");
  }
  if (trace.max_fejer_residual() > 10.0 * tol) {
    throw std::invalid_argument(
        "cluster_attractiveness: orbit is not Fejer monotone toward the "
        "approximation; the bounded-orbit precondition fails");
  }

  const int n = trace.n_max;
  const int window = std::max(1, std::min(50, n / 10));
  const Point cluster = trace.z(n);
  const double drift = distance(trace.z(n), trace.z(std::max(1, n - window + 1)));
  const double tol_eff = tol + 2.0 * trace.diameter_bound() / n + drift;

  ResidualReport report = attractive_residual(T, cluster, samples, tol_eff);
  char buf[120];
  std::snprintf(buf, sizeof buf,
                "cluster=final mean, drift=%.3g, tol_eff=%.3g (truncation-adjusted)",
                drift, tol_eff);
  report.note = buf;
  return report;
}

}  // namespace attract
