#include "attract/catalog.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

namespace attract {

namespace {

double parse_double(const std::string& key, const std::string& text) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (pos != text.size() || !std::isfinite(v)) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("parameter " + key + ": cannot parse '" + text +
                                "' as a number");
  }
}

std::vector<double> parse_vector(const std::string& key, const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_double(key, item));
  if (out.empty()) throw std::invalid_argument("parameter " + key + ": empty vector");
  return out;
}

class Params {
 public:
  explicit Params(const std::map<std::string, std::string>& kv) : kv_(kv) {}

  double number(const std::string& key, double fallback) {
    used_.insert(key);
    const auto it = kv_.find(key);
    return it == kv_.end() ? fallback : parse_double(key, it->second);
  }

  std::string text(const std::string& key, const std::string& fallback) {
    used_.insert(key);
    const auto it = kv_.find(key);
    return it == kv_.end() ? fallback : it->second;
  }

  std::vector<double> vector(const std::string& key, std::vector<double> fallback) {
    used_.insert(key);
    const auto it = kv_.find(key);
    return it == kv_.end() ? fallback : parse_vector(key, it->second);
  }

  bool has(const std::string& key) const { return kv_.count(key) > 0; }

  void reject_unused() const {
    for (const auto& [key, value] : kv_) {
      if (!used_.count(key)) {
        throw std::invalid_argument("unknown mapping parameter: " + key);
      }
    }
  }

 private:
  const std::map<std::string, std::string>& kv_;
  std::set<std::string> used_;
};

Point rotate_about(const Point& c, double rho, double cs, double sn, const Point& x) {
  const double dx = x[0] - c[0];
  const double dy = x[1] - c[1];
  return Point{c[0] + rho * (cs * dx - sn * dy), c[1] + rho * (sn * dx + cs * dy)};
}

std::vector<Halfspace> singleton_halfspaces(const Point& c) {
  std::vector<Halfspace> hs;
  for (int i = 0; i < c.dim(); ++i) {
    Point plus = Point::zero(c.dim());
    plus[i] = 1.0;
    hs.emplace_back(plus, c[i]);
    Point minus = Point::zero(c.dim());
    minus[i] = -1.0;
    hs.emplace_back(minus, -c[i]);
  }
  return hs;
}

ConvexSet parse_target_set(Params& p) {
  const std::string kind = p.text("set.kind", "");
  if (kind == "ball") {
    Point center{p.vector("set.center", {0.0, 0.0})};
    return ConvexSet(Ball(center, p.number("set.radius", 1.0)));
  }
  if (kind == "halfspace") {
    Point normal{p.vector("set.normal", {})};
    return ConvexSet(Halfspace(normal, p.number("set.offset", 0.0)));
  }
  if (kind == "box") {
    return ConvexSet(Box(p.vector("set.lower", {}), p.vector("set.upper", {})));
  }
  if (kind == "singleton") {
    return ConvexSet(Singleton{Point{p.vector("set.point", {})}});
  }
  throw std::invalid_argument("projection target set.kind must be one of "
                              "ball|halfspace|box|singleton, got '" + kind + "'");
}

}  // namespace

Mapping make_halving(double window_hi) {
  Mapping m{
      .label = "halving",
      .domain = Domain::half_line_above(0.0, /*open_lo=*/true, window_hi),
      .fn = [](const Point& x) { return Point{x[0] / 2.0}; },
      .params = {window_hi}};
  m.hybrid_lambda = 1.0;
  m.known_attractive = ConvexSet(Halfspace(Point{1.0}, 0.0));
  m.known_attractive_halfspaces = {Halfspace(Point{1.0}, 0.0)};
  m.known_fixed_points = std::vector<Point>{};
  m.fixed_desc = "none in C (0 is fixed only in the closure)";
  m.attractive_desc = "(-inf, 0]";
  return m;
}

Mapping make_square(double hi) {
  if (!(hi > 0.0 && hi <= 1.0)) {
    throw std::invalid_argument("make_square: need 0 < hi <= 1");
  }
  Mapping m{.label = "square",
            .domain = Domain::interval(0.0, hi),
            .fn = [](const Point& x) { return Point{x[0] * x[0]}; },
            .params = {hi}};
  m.known_attractive = ConvexSet(Halfspace(Point{1.0}, 0.0));
  m.known_attractive_halfspaces = {Halfspace(Point{1.0}, 0.0)};
  std::vector<Point> fixed{Point{0.0}};
  if (hi == 1.0) fixed.push_back(Point{1.0});
  m.known_fixed_points = std::move(fixed);
  m.fixed_desc = hi == 1.0 ? "{0, 1}" : "{0}";
  m.attractive_desc = "(-inf, 0]";
  return m;
}

Mapping make_rotation(double theta, Point center, double window_half_width) {
  if (center.dim() != 2) throw std::invalid_argument("make_rotation: center must be 2D");
  const double cs = std::cos(theta);
  const double sn = std::sin(theta);
  if (std::abs(sn) < 1e-12 && cs > 0.0) {
    throw std::invalid_argument("make_rotation: theta must not be a multiple of 2 pi");
  }
  Mapping m{.label = "rotation",
            .domain = Domain::plane(center, window_half_width),
            .fn = [center, cs, sn](const Point& x) {
              return rotate_about(center, 1.0, cs, sn, x);
            },
            .params = {theta, center[0], center[1]}};
  m.hybrid_lambda = 1.0;
  m.known_attractive = ConvexSet(Singleton{center});
  m.known_attractive_halfspaces = singleton_halfspaces(center);
  m.known_fixed_points = std::vector<Point>{center};
  m.fixed_desc = "{center}";
  m.attractive_desc = "{center}";
  return m;
}

Mapping make_contraction(double rho, double theta, Point center,
                         double window_half_width) {
  if (center.dim() != 2) throw std::invalid_argument("make_contraction: center must be 2D");
  if (!(rho > 0.0 && rho < 1.0)) {
    throw std::invalid_argument("make_contraction: need 0 < rho < 1");
  }
  const double cs = std::cos(theta);
  const double sn = std::sin(theta);
  Mapping m{.label = "contraction",
            .domain = Domain::plane(center, window_half_width),
            .fn = [center, rho, cs, sn](const Point& x) {
              return rotate_about(center, rho, cs, sn, x);
            },
            .params = {rho, theta, center[0], center[1]}};
  m.hybrid_lambda = 1.0;
  m.known_attractive = ConvexSet(Singleton{center});
  m.known_attractive_halfspaces = singleton_halfspaces(center);
  m.known_fixed_points = std::vector<Point>{center};
  m.fixed_desc = "{center}";
  m.attractive_desc = "{center}";
  return m;
}

Mapping make_projection_mapping(ConvexSet target, Box window) {
  const int dim = target.dim();
  if (window.dim() != dim) {
    throw std::invalid_argument("make_projection_mapping: window/target dim mismatch");
  }
  const Point anchor = project(target, Point::zero(dim)).point;
  Mapping m{.label = "projection",
            .domain = Domain::whole_space(window, anchor),
            .fn = [target](const Point& x) { return project(target, x).point; },
            .params = {}};
  // Projections are firmly nonexpansive, which gives the hybrid inequality
  // for every lambda in [-1, 1]; lambda = 0 is the nonspreading case. No
  // lambda above 1 is possible for any mapping that moves a point (set
  // x = y in the inequality).
  m.hybrid_lambda = 0.0;
  m.known_attractive = target;
  if (const auto* h = std::get_if<Halfspace>(&target.value)) {
    m.known_attractive_halfspaces = std::vector<Halfspace>{*h};
  } else if (const auto* s = std::get_if<Singleton>(&target.value)) {
    m.known_attractive_halfspaces = singleton_halfspaces(s->point);
  }
  if (const auto* s = std::get_if<Singleton>(&target.value)) {
    m.known_fixed_points = std::vector<Point>{s->point};
  }
  m.fixed_desc = "the target set";
  m.attractive_desc = "the target set";
  return m;
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"halving", "window (default 4)", "none in C", "(-inf, 0]"},
      {"square", "hi (default 1)", "{0, 1} for hi = 1, else {0}", "(-inf, 0]"},
      {"rotation", "theta (default pi/3), center (default 0,0), window (default 2)",
       "{center}", "{center}"},
      {"affine-contraction",
       "rho (default 0.5), theta (default pi/3), center (default 0,0), window "
       "(default 2)",
       "{center}", "{center}"},
      {"projection",
       "set.kind = ball|halfspace|box|singleton with set.center/set.radius/"
       "set.normal/set.offset/set.lower/set.upper/set.point, window (default 4)",
       "the target set", "the target set"},
  };
  return entries;
}

Mapping make_from_catalog(const std::string& id,
                          const std::map<std::string, std::string>& params) {
  Params p(params);
  constexpr double third_pi = std::numbers::pi / 3.0;
  Mapping m = [&]() -> Mapping {
    if (id == "halving") return make_halving(p.number("window", 4.0));
    if (id == "square") return make_square(p.number("hi", 1.0));
    if (id == "rotation") {
      return make_rotation(p.number("theta", third_pi),
                           Point{p.vector("center", {0.0, 0.0})},
                           p.number("window", 2.0));
    }
    if (id == "affine-contraction") {
      return make_contraction(p.number("rho", 0.5), p.number("theta", third_pi),
                              Point{p.vector("center", {0.0, 0.0})},
                              p.number("window", 2.0));
    }
    if (id == "projection") {
      ConvexSet target = parse_target_set(p);
      const double half_width = p.number("window", 4.0);
      const Point anchor = project(target, Point::zero(target.dim())).point;
      return make_projection_mapping(std::move(target),
                                     Box::centered(anchor, half_width));
    }
    throw std::invalid_argument("unknown catalog mapping id: " + id);
  }();
  p.reject_unused();
  return m;
}

}  // namespace attract
