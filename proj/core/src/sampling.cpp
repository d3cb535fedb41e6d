#include "attract/sampling.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "attract/rng.hpp"

namespace attract {

std::vector<Point> box_grid(const Box& box, int per_axis) {
  if (per_axis < 2) throw std::invalid_argument("box_grid: per_axis must be >= 2");
  if (!box.bounded()) throw std::invalid_argument("box_grid: box must be bounded");
  const int dim = box.dim();
  std::vector<int> idx(static_cast<std::size_t>(dim), 0);
  std::vector<Point> out;
  while (true) {
    std::vector<double> c(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) {
      const auto k = static_cast<std::size_t>(i);
      const double t = static_cast<double>(idx[k]) / (per_axis - 1);
      c[k] = box.lower[k] + t * (box.upper[k] - box.lower[k]);
    }
    out.emplace_back(std::move(c));
    int axis = 0;
    while (axis < dim) {
      const auto k = static_cast<std::size_t>(axis);
      if (++idx[k] < per_axis) break;
      idx[k] = 0;
      ++axis;
    }
    if (axis == dim) break;
  }
  return out;
}

namespace {

void append_1d(const Domain& domain, int grid_count, std::vector<Point>& out) {
  const double lo = domain.window().lower[0];
  const double hi = domain.window().upper[0];
  const int uniform_n = std::max(2, grid_count / 2);
  const int geo_n = std::max(1, grid_count - uniform_n);

  const double lo_s = domain.contains(Point{lo}) ? lo : lo + domain.clamp_eps();
  for (int i = 0; i < uniform_n; ++i) {
    const double t = static_cast<double>(i) / (uniform_n - 1);
    Point p{lo_s + t * (hi - lo_s)};
    if (domain.contains(p)) out.push_back(p);
  }

  // Geometric refinement toward the target: x_k = t + span * rho^k with the
  // last point landing exactly one clamp margin away from the target.
  const double target = domain.refine_target()[0];
  const double span = hi - target;
  if (span > domain.clamp_eps()) {
    const double rho = std::pow(domain.clamp_eps() / span, 1.0 / geo_n);
    for (int k = 1; k <= geo_n; ++k) {
      Point p{target + span * std::pow(rho, k)};
      if (domain.contains(p)) out.push_back(p);
    }
  }
}

void append_2d(const Domain& domain, int grid_count, std::vector<Point>& out) {
  const Box& w = domain.window();
  const Point& t = domain.refine_target();
  const double half_w =
      std::min(w.upper[0] - w.lower[0], w.upper[1] - w.lower[1]) / 2.0;
  const int rings = 4;
  const int per_ring = std::max(4, grid_count / rings);
  for (int j = 0; j < rings; ++j) {
    const double r = half_w / std::pow(2.0, j);
    for (int i = 0; i < per_ring; ++i) {
      const double phi = 2.0 * std::numbers::pi * (i + 0.5 * j) / per_ring;
      Point p{t[0] + r * std::cos(phi), t[1] + r * std::sin(phi)};
      if (domain.contains(p)) out.push_back(p);
    }
  }
}

void append_nd(const Domain& domain, int grid_count, std::vector<Point>& out) {
  const int per_axis = std::max(
      2, static_cast<int>(std::llround(std::pow(grid_count, 1.0 / domain.dim()))));
  for (Point& p : box_grid(domain.window(), per_axis)) {
    if (domain.contains(p)) out.push_back(std::move(p));
  }
}

}  // namespace

std::vector<Point> sample_schedule(const Domain& domain, int grid_count,
                                   int random_count, std::uint64_t seed) {
  if (grid_count < 0 || random_count < 0) {
    throw std::invalid_argument("sample_schedule: negative counts");
  }
  if (grid_count + random_count == 0) {
    throw std::invalid_argument("sample_schedule: no samples requested");
  }
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(grid_count + random_count));
  if (grid_count > 0) {
    switch (domain.dim()) {
      case 1:
        append_1d(domain, grid_count, out);
        break;
      case 2:
        append_2d(domain, grid_count, out);
        break;
      default:
        append_nd(domain, grid_count, out);
        break;
    }
  }
  Rng rng(seed);
  for (int i = 0; i < random_count; ++i) {
    Point p = domain.sample(rng);
    if (domain.contains(p)) out.push_back(std::move(p));
  }
  if (out.empty()) {
    throw std::runtime_error("sample_schedule: schedule produced no domain points");
  }
  return out;
}

std::vector<std::pair<Point, Point>> sample_pairs(const Domain& domain, int count,
                                                  std::uint64_t seed) {
  if (count <= 0) throw std::invalid_argument("sample_pairs: count must be positive");
  Rng rng(seed);
  std::vector<std::pair<Point, Point>> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    Point a = domain.sample(rng);
    Point b = domain.sample(rng);
    out.emplace_back(std::move(a), std::move(b));
  }
  return out;
}

}  // namespace attract
