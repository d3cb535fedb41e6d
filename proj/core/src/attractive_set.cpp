#include "attract/attractive_set.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace attract {

std::optional<Point> FixedSetApprox::nearest(const Point& x) const {
  std::optional<Point> best;
  double best_d = std::numeric_limits<double>::infinity();
  for (const Point& p : points) {
    const double d = distance(p, x);
    if (d < best_d) {
      best_d = d;
      best = p;
    }
  }
  return best;
}

FixedSetApprox find_fixed_points(const Mapping& T, std::span<const Point> grid,
                                 double tol) {
  if (grid.empty()) throw std::invalid_argument("find_fixed_points: empty grid");
  constexpr int kMaxRefine = 100;
  constexpr double kMergeRadius = 1e-5;

  FixedSetApprox result;
  result.tol = tol;
  result.generator_label = T.label;
  for (const Point& g : grid) {
    if (!T.domain.contains(g)) continue;
    if (distance(T(g), g) > tol) continue;
    Point x = g;
    for (int it = 0; it < kMaxRefine; ++it) {
      const Point tx = T(x);
      if (distance(tx, x) <= tol / 4.0) break;
      const Point next = 0.5 * (x + tx);
      if (!T.domain.contains(next)) break;
      x = next;
    }
    if (distance(T(x), x) > tol) continue;
    bool merged = false;
    for (const Point& kept : result.points) {
      if (distance(kept, x) <= kMergeRadius) {
        merged = true;
        break;
      }
    }
    if (!merged) result.points.push_back(x);
  }
  return result;
}

Halfspace attractive_halfspace(const Mapping& T, const Point& x) {
  const Point tx = T(x);
  return Halfspace(2.0 * (x - tx), norm_squared(x) - norm_squared(tx));
}

double AttractiveApprox::membership_violation(const Point& z) const {
  if (whole_space) return 0.0;
  double worst = -std::numeric_limits<double>::infinity();
  for (const Halfspace& h : halfspaces) {
    worst = std::max(worst, h.signed_distance(z));
  }
  return worst;
}

void AttractiveApprox::write_table(std::ostream& os) const {
  char buf[40];
  os << "# attractive-set approximation: " << generator_label << "\n";
  os << "# dim " << dim << ", halfspaces " << halfspaces.size() << ", samples "
     << sample_points.size() << "\n";
  std::snprintf(buf, sizeof buf, "%.17g", resolution);
  os << "# resolution " << buf << ", feasible " << (feasible ? 1 : 0)
     << ", whole_space " << (whole_space ? 1 : 0) << "\n";
  for (const Halfspace& h : halfspaces) {
    for (int i = 0; i < h.normal.dim(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", h.normal[i]);
      os << buf << ' ';
    }
    std::snprintf(buf, sizeof buf, "%.17g", h.offset);
    os << buf << '\n';
  }
}

AttractiveApprox AttractiveApprox::from_halfspaces(std::vector<Halfspace> halfspaces,
                                                   std::string label, double tol) {
  if (halfspaces.empty()) {
    throw std::invalid_argument("AttractiveApprox::from_halfspaces: empty list");
  }
  AttractiveApprox a;
  a.dim = halfspaces.front().normal.dim();
  for (const Halfspace& h : halfspaces) {
    if (h.normal.dim() != a.dim) {
      throw std::invalid_argument("AttractiveApprox::from_halfspaces: mixed dims");
    }
    if (!h.whole_space()) a.halfspaces.push_back(h);
  }
  a.generator_label = std::move(label);
  a.tol = tol;
  a.whole_space = a.halfspaces.empty();
  if (!a.whole_space) {
    std::vector<ConvexSet> sets(a.halfspaces.begin(), a.halfspaces.end());
    a.feasible = feasibility_probe(sets).has_value();
  }
  a.resolution = kProjectionTol;
  return a;
}

namespace {

AttractiveApprox build_raw(const Mapping& T, std::span<const Point> samples,
                           double tol) {
  AttractiveApprox a;
  a.dim = T.domain.dim();
  a.generator_label = T.label;
  a.tol = tol;
  for (const Point& x : samples) {
    if (!T.domain.contains(x)) {
      throw std::invalid_argument("build_attractive_approx: sample " + to_string(x) +
                                  " outside the domain of " + T.label);
    }
    const Halfspace h = attractive_halfspace(T, x);
    a.sample_points.push_back(x);
    if (!h.whole_space()) a.halfspaces.push_back(h);
  }
  a.whole_space = a.halfspaces.empty();
  if (!a.whole_space) {
    std::vector<ConvexSet> sets(a.halfspaces.begin(), a.halfspaces.end());
    a.feasible = feasibility_probe(sets).has_value();
  }
  return a;
}

}  // namespace

AttractiveApprox build_attractive_approx(const Mapping& T,
                                         std::span<const Point> samples,
                                         double tol) {
  if (samples.empty()) {
    throw std::invalid_argument("build_attractive_approx: empty sample family");
  }
  AttractiveApprox full = build_raw(T, samples, tol);

  // Two-scale resolution estimate: rebuild from the even-indexed half and
  // compare projections from a handful of seeded domain points.
  double res = 0.0;
  if (!full.whole_space && full.feasible && samples.size() >= 4) {
    std::vector<Point> half;
    for (std::size_t i = 0; i < samples.size(); i += 2) half.push_back(samples[i]);
    AttractiveApprox coarse = build_raw(T, half, tol);
    if (!coarse.whole_space && coarse.feasible) {
      Rng rng(0xA77C0DEull);
      for (int i = 0; i < 8; ++i) {
        const Point p = T.domain.sample(rng);
        const auto pf = project_attractive(full, p);
        const auto pc = project_attractive(coarse, p);
        if (pf.converged && pc.converged) {
          res = std::max(res, distance(pf.point, pc.point));
        }
      }
    }
  }
  full.resolution = std::max(res, kProjectionTol);
  return full;
}

ProjectionResult project_attractive(const AttractiveApprox& approx, const Point& x,
                                    int max_sweeps, double tol) {
  if (x.dim() != approx.dim) {
    throw std::invalid_argument("project_attractive: dimension mismatch");
  }
  if (approx.whole_space) return ProjectionResult{x, true, 0, 0.0};
  if (!approx.feasible) {
    throw InfeasibleIntersection("project_attractive: approximation of " +
                                 approx.generator_label +
                                 " has inconsistent constraints (empty set)");
  }
  std::vector<ConvexSet> sets(approx.halfspaces.begin(), approx.halfspaces.end());
  return dykstra_project(sets, x, max_sweeps, tol, /*probe=*/false);
}

bool attractive_projects_to_fixed(const Mapping& T, const ConvexSet& C,
                                  const Point& z, std::span<const Point> samples,
                                  double tol) {
  const auto pre = attractive_residual(T, z, samples, kResidualTol);
  if (!pre.passed) {
    throw std::invalid_argument(
        "attractive_projects_to_fixed: " + to_string(z) +
        " fails the attractive precondition (violation " +
        std::to_string(pre.max_violation) + " at " + to_string(pre.witness.front()) +
        ")");
  }
  const Point pc = project(C, z).point;
  return is_fixed_point(T, pc, tol);
}

double check_projection_identity(const Mapping& T, const AttractiveApprox& approx,
                                 const FixedSetApprox& fixed, const Point& x) {
  if (!T.domain.contains(x)) {
    throw std::domain_error("check_projection_identity: x outside the domain");
  }
  const auto pf = fixed.nearest(x);
  if (!pf) {
    throw std::invalid_argument("check_projection_identity: no fixed points found");
  }
  const auto pa = project_attractive(approx, x);
  return distance(*pf, pa.point);
}

}  // namespace attract
