#include "attract/mapping.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace attract {

Domain::Domain(int dim, Predicate member, Predicate closure_member, Box window,
               Point refine_target, Sampler sampler, double clamp_eps)
    : dim_(dim),
      member_(std::move(member)),
      closure_member_(std::move(closure_member)),
      window_(std::move(window)),
      refine_target_(std::move(refine_target)),
      sampler_(std::move(sampler)),
      clamp_eps_(clamp_eps) {
  if (dim_ < 1) throw std::invalid_argument("Domain: dimension must be positive");
  if (window_.dim() != dim_ || refine_target_.dim() != dim_) {
    throw std::invalid_argument("Domain: window/target dimension mismatch");
  }
  if (!(clamp_eps_ > 0.0)) throw std::invalid_argument("Domain: clamp_eps must be positive");
}

bool Domain::contains(const Point& x) const {
  return x.dim() == dim_ && member_(x);
}

bool Domain::contains_closure(const Point& x) const {
  return x.dim() == dim_ && closure_member_(x);
}

Domain Domain::half_line_above(double lo, bool open_lo, double window_hi) {
  if (!(window_hi > lo)) {
    throw std::invalid_argument("Domain::half_line_above: window_hi must exceed lo");
  }
  const double clamp = 1e-6;
  Domain d(1,
           [lo, open_lo](const Point& x) { return open_lo ? x[0] > lo : x[0] >= lo; },
           [lo](const Point& x) { return x[0] >= lo; },
           Box({lo}, {window_hi}), Point{lo},
           [lo, window_hi, clamp](Rng& rng) {
             return Point{rng.uniform(lo + clamp, window_hi)};
           },
           clamp);
  d.is_closed_ = !open_lo;
  d.closed_set_ = ConvexSet(
      Box({lo}, {std::numeric_limits<double>::infinity()}));
  return d;
}

Domain Domain::interval(double lo, double hi) {
  if (!(hi > lo)) throw std::invalid_argument("Domain::interval: need lo < hi");
  Domain d(1,
           [lo, hi](const Point& x) { return x[0] >= lo && x[0] <= hi; },
           [lo, hi](const Point& x) { return x[0] >= lo && x[0] <= hi; },
           Box({lo}, {hi}), Point{lo},
           [lo, hi](Rng& rng) { return Point{rng.uniform(lo, hi)}; });
  d.is_closed_ = true;
  d.closed_set_ = ConvexSet(Box({lo}, {hi}));
  return d;
}

Domain Domain::plane(Point center, double window_half_width) {
  if (center.dim() != 2) throw std::invalid_argument("Domain::plane: center must be 2D");
  Box window = Box::centered(center, window_half_width);
  Domain d(2, [](const Point&) { return true; }, [](const Point&) { return true; },
           window, center,
           [window](Rng& rng) {
             return Point{rng.uniform(window.lower[0], window.upper[0]),
                          rng.uniform(window.lower[1], window.upper[1])};
           });
  d.is_closed_ = true;
  d.closed_set_ = ConvexSet(WholeSpace{2});
  return d;
}

Domain Domain::whole_space(Box window, Point target) {
  const int dim = window.dim();
  if (!window.bounded()) {
    throw std::invalid_argument("Domain::whole_space: window must be bounded");
  }
  Domain d(dim, [](const Point&) { return true; }, [](const Point&) { return true; },
           window, std::move(target),
           [window, dim](Rng& rng) {
             std::vector<double> c(static_cast<std::size_t>(dim));
             for (int i = 0; i < dim; ++i) {
               const auto k = static_cast<std::size_t>(i);
               c[k] = rng.uniform(window.lower[k], window.upper[k]);
             }
             return Point(std::move(c));
           });
  d.is_closed_ = true;
  d.closed_set_ = ConvexSet(WholeSpace{dim});
  return d;
}

Point Mapping::operator()(const Point& x) const {
  if (!domain.contains(x)) {
    throw std::domain_error("Mapping " + label + ": point " + to_string(x) +
                            " lies outside the domain");
  }
  return fn(x);
}

Point Mapping::evaluate_closure(const Point& x) const {
  if (!domain.contains_closure(x)) {
    throw std::domain_error("Mapping " + label + ": point " + to_string(x) +
                            " lies outside the domain closure");
  }
  return fn(x);
}

bool is_fixed_point(const Mapping& T, const Point& x, double tol) {
  return distance(T(x), x) <= tol;
}

namespace {

void require_nonempty(std::size_t n, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + ": empty input");
}

}  // namespace

ResidualReport attractive_residual(const Mapping& T, const Point& z,
                                   std::span<const Point> samples, double tol) {
  require_nonempty(samples.size(), "attractive_residual");
  require_same_dim(z, samples.front(), "attractive_residual");
  ResidualReport report;
  report.tol = tol;
  report.max_violation = -std::numeric_limits<double>::infinity();
  for (const Point& x : samples) {
    const double v = distance(T(x), z) - distance(x, z);
    ++report.samples_checked;
    if (v > report.max_violation) {
      report.max_violation = v;
      report.witness = {x};
    }
  }
  report.passed = report.max_violation <= tol;
  return report;
}

ResidualReport quasinonexpansive_residual(const Mapping& T,
                                          std::span<const Point> fixed_points,
                                          std::span<const Point> samples, double tol) {
  require_nonempty(fixed_points.size(), "quasinonexpansive_residual (fixed points)");
  require_nonempty(samples.size(), "quasinonexpansive_residual (samples)");
  ResidualReport report;
  report.tol = tol;
  report.max_violation = -std::numeric_limits<double>::infinity();
  for (const Point& u : fixed_points) {
    for (const Point& x : samples) {
      const double v = distance(T(x), u) - distance(x, u);
      ++report.samples_checked;
      if (v > report.max_violation) {
        report.max_violation = v;
        report.witness = {x, u};
      }
    }
  }
  report.passed = report.max_violation <= tol;
  return report;
}

ResidualReport lambda_hybrid_residual(const Mapping& T, double lambda,
                                      std::span<const std::pair<Point, Point>> pairs,
                                      double tol) {
  require_nonempty(pairs.size(), "lambda_hybrid_residual");
  ResidualReport report;
  report.tol = tol;
  report.max_violation = -std::numeric_limits<double>::infinity();
  for (const auto& [x, y] : pairs) {
    const Point tx = T(x);
    const Point ty = T(y);
    const double v = norm_squared(tx - ty) - norm_squared(x - y) -
                     2.0 * (1.0 - lambda) * inner(x - tx, y - ty);
    ++report.samples_checked;
    if (v > report.max_violation) {
      report.max_violation = v;
      report.witness = {x, y};
    }
  }
  report.passed = report.max_violation <= tol;
  return report;
}

ResidualReport lambda_hybrid_equivalent_residual(
    const Mapping& T, double lambda, std::span<const std::pair<Point, Point>> pairs,
    double tol) {
  require_nonempty(pairs.size(), "lambda_hybrid_equivalent_residual");
  ResidualReport report;
  report.tol = tol;
  report.max_violation = -std::numeric_limits<double>::infinity();
  for (const auto& [x, y] : pairs) {
    const Point tx = T(x);
    const Point ty = T(y);
    const Point blend = lambda * x + (1.0 - lambda) * tx;
    const double v = norm_squared(tx - ty) - norm_squared(x - ty) -
                     norm_squared(ty - y) - 2.0 * inner(blend - ty, ty - y);
    ++report.samples_checked;
    if (v > report.max_violation) {
      report.max_violation = v;
      report.witness = {x, y};
    }
  }
  report.passed = report.max_violation <= tol;
  return report;
}

}  // namespace attract
