#include "attract/convex_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace attract {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

Halfspace::Halfspace(Point n, double b) : normal(std::move(n)), offset(b) {
  if (normal.dim() == 0) {
    throw std::invalid_argument("Halfspace: normal must have positive dimension");
  }
  if (whole_space() && offset < 0.0) {
    throw std::invalid_argument("Halfspace: zero normal with negative offset is empty");
  }
}

double Halfspace::signed_distance(const Point& z) const {
  const double nn = norm_squared(normal);
  if (nn == 0.0) return 0.0;
  return (inner(normal, z) - offset) / std::sqrt(nn);
}

Ball::Ball(Point c, double r) : center(std::move(c)), radius(r) {
  if (!(radius >= 0.0) || !std::isfinite(radius)) {
    throw std::invalid_argument("Ball: radius must be finite and nonnegative");
  }
}

AffineSet::AffineSet(Point a, std::vector<Point> dirs)
    : anchor(std::move(a)), directions(std::move(dirs)) {
  for (std::size_t i = 0; i < directions.size(); ++i) {
    require_same_dim(anchor, directions[i], "AffineSet");
    for (std::size_t j = 0; j <= i; ++j) {
      const double ip = inner(directions[i], directions[j]);
      const double want = (i == j) ? 1.0 : 0.0;
      if (std::abs(ip - want) > 1e-12) {
        throw std::invalid_argument("AffineSet: directions must be orthonormal");
      }
    }
  }
}

Box::Box(std::vector<double> lo, std::vector<double> hi)
    : lower(std::move(lo)), upper(std::move(hi)) {
  if (lower.size() != upper.size() || lower.empty()) {
    throw std::invalid_argument("Box: bound lists must match and be nonempty");
  }
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (std::isnan(lower[i]) || std::isnan(upper[i]) || lower[i] > upper[i]) {
      throw std::invalid_argument("Box: need lower <= upper in every coordinate");
    }
  }
}

Box Box::centered(const Point& center, double half_width) {
  if (!(half_width >= 0.0)) throw std::invalid_argument("Box::centered: negative width");
  std::vector<double> lo(center.coords()), hi(center.coords());
  for (auto& v : lo) v -= half_width;
  for (auto& v : hi) v += half_width;
  return Box(std::move(lo), std::move(hi));
}

bool Box::bounded() const {
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (!std::isfinite(lower[i]) || !std::isfinite(upper[i])) return false;
  }
  return true;
}

int ConvexSet::dim() const {
  return std::visit(
      [](const auto& s) -> int {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Halfspace>) return s.normal.dim();
        if constexpr (std::is_same_v<T, Ball>) return s.center.dim();
        if constexpr (std::is_same_v<T, AffineSet>) return s.anchor.dim();
        if constexpr (std::is_same_v<T, Box>) return s.dim();
        if constexpr (std::is_same_v<T, Singleton>) return s.point.dim();
        if constexpr (std::is_same_v<T, WholeSpace>) return s.dim;
        if constexpr (std::is_same_v<T, Intersection>) {
          if (s.members.empty()) {
            throw std::invalid_argument("Intersection: no members");
          }
          return s.members.front().dim();
        }
      },
      value);
}

double ConvexSet::violation(const Point& x) const {
  return std::visit(
      [&x](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Halfspace>) {
          require_same_dim(x, s.normal, "violation");
          return std::max(0.0, s.signed_distance(x));
        }
        if constexpr (std::is_same_v<T, Ball>) {
          return std::max(0.0, distance(x, s.center) - s.radius);
        }
        if constexpr (std::is_same_v<T, AffineSet>) {
          Point d = x - s.anchor;
          Point in_plane = Point::zero(x.dim());
          for (const Point& u : s.directions) in_plane = in_plane + inner(d, u) * u;
          return distance(d, in_plane);
        }
        if constexpr (std::is_same_v<T, Box>) {
          if (x.dim() != s.dim()) {
            throw std::invalid_argument("violation: dimension mismatch");
          }
          double worst = 0.0;
          for (int i = 0; i < x.dim(); ++i) {
            const auto k = static_cast<std::size_t>(i);
            worst = std::max(worst, s.lower[k] - x[i]);
            worst = std::max(worst, x[i] - s.upper[k]);
          }
          return worst;
        }
        if constexpr (std::is_same_v<T, Singleton>) {
          return distance(x, s.point);
        }
        if constexpr (std::is_same_v<T, WholeSpace>) {
          if (x.dim() != s.dim) {
            throw std::invalid_argument("violation: dimension mismatch");
          }
          return 0.0;
        }
        if constexpr (std::is_same_v<T, Intersection>) {
          if (s.members.empty()) {
            throw std::invalid_argument("Intersection: no members");
          }
          double worst = 0.0;
          for (const ConvexSet& m : s.members) {
            worst = std::max(worst, m.violation(x));
          }
          return worst;
        }
      },
      value);
}

namespace {

Point project_closed_form(const ConvexSet& set, const Point& x) {
  return std::visit(
      [&x](const auto& s) -> Point {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Halfspace>) {
          require_same_dim(x, s.normal, "project");
          const double nn = norm_squared(s.normal);
          if (nn == 0.0) return x;
          const double v = inner(s.normal, x) - s.offset;
          if (v <= 0.0) return x;
          return x - (v / nn) * s.normal;
        }
        if constexpr (std::is_same_v<T, Ball>) {
          const double d = distance(x, s.center);
          if (d <= s.radius) return x;
          if (d == 0.0) return s.center;
          return s.center + (s.radius / d) * (x - s.center);
        }
        if constexpr (std::is_same_v<T, AffineSet>) {
          Point d = x - s.anchor;
          Point p = s.anchor;
          for (const Point& u : s.directions) p = p + inner(d, u) * u;
          return p;
        }
        if constexpr (std::is_same_v<T, Box>) {
          if (x.dim() != s.dim()) {
            throw std::invalid_argument("project: dimension mismatch");
          }
          std::vector<double> c(x.coords());
          for (std::size_t i = 0; i < c.size(); ++i) {
            c[i] = std::clamp(c[i], s.lower[i], s.upper[i]);
          }
          return Point(std::move(c));
        }
        if constexpr (std::is_same_v<T, Singleton>) {
          require_same_dim(x, s.point, "project");
          return s.point;
        }
        if constexpr (std::is_same_v<T, WholeSpace>) {
          if (x.dim() != s.dim) {
            throw std::invalid_argument("project: dimension mismatch");
          }
          return x;
        }
        if constexpr (std::is_same_v<T, Intersection>) {
          throw std::logic_error("project_closed_form: intersection reached");
        }
      },
      set.value);
}

/// Expands nested intersections into a flat list of simple sets, dropping
/// vacuous constraints (WholeSpace, whole-space halfspaces).
void flatten_into(const ConvexSet& set, std::vector<const ConvexSet*>& out) {
  if (const auto* inter = std::get_if<Intersection>(&set.value)) {
    if (inter->members.empty()) {
      throw std::invalid_argument("Intersection: no members");
    }
    for (const ConvexSet& m : inter->members) flatten_into(m, out);
    return;
  }
  if (std::holds_alternative<WholeSpace>(set.value)) return;
  if (const auto* h = std::get_if<Halfspace>(&set.value)) {
    if (h->whole_space()) return;
  }
  out.push_back(&set);
}

std::vector<const ConvexSet*> flatten(const std::vector<ConvexSet>& sets) {
  std::vector<const ConvexSet*> leaves;
  for (const ConvexSet& s : sets) flatten_into(s, leaves);
  return leaves;
}

double max_violation(const std::vector<const ConvexSet*>& leaves, const Point& x) {
  double worst = 0.0;
  for (const ConvexSet* s : leaves) worst = std::max(worst, s->violation(x));
  return worst;
}

ProjectionResult dykstra_core(const std::vector<const ConvexSet*>& leaves,
                              const Point& x, int max_sweeps, double tol) {
  Point iterate = x;
  std::vector<Point> corrections(leaves.size(), Point::zero(x.dim()));

  int sweep = 0;
  double displacement = kInf;
  while (sweep < max_sweeps) {
    const Point before = iterate;
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      const Point shifted = iterate + corrections[i];
      iterate = project_closed_form(*leaves[i], shifted);
      corrections[i] = shifted - iterate;
    }
    ++sweep;
    displacement = distance(before, iterate);
    if (displacement <= tol) break;
  }
  return ProjectionResult{iterate, displacement <= tol, sweep, displacement};
}

}  // namespace

ProjectionResult project(const ConvexSet& set, const Point& x) {
  if (std::holds_alternative<Intersection>(set.value)) {
    return dykstra_project(std::get<Intersection>(set.value).members, x);
  }
  return ProjectionResult{project_closed_form(set, x), true, 0, 0.0};
}

std::optional<Point> feasibility_probe(const std::vector<ConvexSet>& sets) {
  const auto leaves = flatten(sets);
  if (leaves.empty()) return std::nullopt;
  const int dim = leaves.front()->dim();
  const auto result = dykstra_core(leaves, Point::zero(dim), 500, kProjectionTol);
  if (max_violation(leaves, result.point) <= kFeasibilityTol) return result.point;
  return std::nullopt;
}

ProjectionResult dykstra_project(const std::vector<ConvexSet>& sets, const Point& x,
                                 int max_sweeps, double tol, bool probe) {
  const auto leaves = flatten(sets);
  if (leaves.empty()) return ProjectionResult{x, true, 0, 0.0};
  for (const ConvexSet* s : leaves) {
    if (s->dim() != x.dim()) {
      throw std::invalid_argument("dykstra_project: dimension mismatch");
    }
  }
  if (leaves.size() == 1) {
    return ProjectionResult{project_closed_form(*leaves.front(), x), true, 0, 0.0};
  }
  if (probe && !feasibility_probe(sets)) {
    throw InfeasibleIntersection(
        "dykstra_project: intersection looks empty (feasibility probe failed)");
  }
  return dykstra_core(leaves, x, max_sweeps, tol);
}

namespace {

/// Intersects the bounding boxes of members that have one. Unbounded shapes
/// contribute nothing; the caller requires at least one bounded member.
std::optional<Box> derive_probe_box(const std::vector<const ConvexSet*>& leaves, int dim) {
  std::vector<double> lo(static_cast<std::size_t>(dim), -kInf);
  std::vector<double> hi(static_cast<std::size_t>(dim), kInf);
  bool found = false;
  for (const ConvexSet* s : leaves) {
    std::vector<double> slo, shi;
    if (const auto* b = std::get_if<Ball>(&s->value)) {
      for (int i = 0; i < dim; ++i) {
        slo.push_back(b->center[i] - b->radius);
        shi.push_back(b->center[i] + b->radius);
      }
    } else if (const auto* bx = std::get_if<Box>(&s->value)) {
      if (!bx->bounded()) continue;
      slo = bx->lower;
      shi = bx->upper;
    } else if (const auto* pt = std::get_if<Singleton>(&s->value)) {
      slo = pt->point.coords();
      shi = pt->point.coords();
    } else {
      continue;
    }
    found = true;
    for (std::size_t i = 0; i < slo.size(); ++i) {
      lo[i] = std::max(lo[i], slo[i]);
      hi[i] = std::min(hi[i], shi[i]);
    }
  }
  if (!found) return std::nullopt;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (lo[i] > hi[i]) {
      throw InfeasibleIntersection("brute_force_project: derived probe box is empty");
    }
  }
  return Box(std::move(lo), std::move(hi));
}

}  // namespace

Point brute_force_project(const std::vector<ConvexSet>& sets, const Point& x,
                          double grid_step, std::optional<Box> probe_box) {
  if (!(grid_step > 0.0)) {
    throw std::invalid_argument("brute_force_project: grid_step must be positive");
  }
  const int dim = x.dim();
  if (dim < 1 || dim > 3) {
    throw std::invalid_argument("brute_force_project: supports dimensions 1..3 only");
  }
  const auto leaves = flatten(sets);
  if (leaves.empty()) return x;

  if (!probe_box) probe_box = derive_probe_box(leaves, dim);
  if (!probe_box) {
    throw std::invalid_argument(
        "brute_force_project: no bounded member; pass an explicit probe_box");
  }
  if (probe_box->dim() != dim || !probe_box->bounded()) {
    throw std::invalid_argument("brute_force_project: probe box must be bounded, same dim");
  }

  std::vector<int> counts(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    const auto k = static_cast<std::size_t>(i);
    const double span = probe_box->upper[k] - probe_box->lower[k];
    counts[k] = static_cast<int>(std::floor(span / grid_step + 1e-9)) + 1;
  }

  constexpr double kMembershipTol = 1e-9;
  std::vector<int> idx(static_cast<std::size_t>(dim), 0);
  Point best = x;
  double best_d2 = kInf;
  bool any = false;
  while (true) {
    std::vector<double> coords(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) {
      const auto k = static_cast<std::size_t>(i);
      coords[k] = std::min(probe_box->lower[k] + idx[k] * grid_step, probe_box->upper[k]);
    }
    Point p(std::move(coords));
    if (max_violation(leaves, p) <= kMembershipTol) {
      const double d2 = norm_squared(p - x);
      if (d2 < best_d2) {
        best_d2 = d2;
        best = p;
        any = true;
      }
    }
    int axis = 0;
    while (axis < dim) {
      const auto k = static_cast<std::size_t>(axis);
      if (++idx[k] < counts[k]) break;
      idx[k] = 0;
      ++axis;
    }
    if (axis == dim) break;
  }
  if (!any) {
    throw std::runtime_error("brute_force_project: no feasible grid point in probe box");
  }
  return best;
}

}  // namespace attract
