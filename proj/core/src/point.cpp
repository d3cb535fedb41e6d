#include "attract/point.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <utility>

namespace attract {

namespace {

void require_finite(const std::vector<double>& coords) {
  for (double c : coords) {
    if (!std::isfinite(c)) {
      throw std::invalid_argument("Point: coordinates must be finite");
    }
  }
}

}  // namespace

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
  require_finite(coords_);
}

Point::Point(std::initializer_list<double> coords) : coords_(coords) {
  require_finite(coords_);
}

Point Point::zero(int dim) {
  if (dim < 0) throw std::invalid_argument("Point::zero: negative dimension");
  return Point(std::vector<double>(static_cast<std::size_t>(dim), 0.0));
}

void require_same_dim(const Point& a, const Point& b, const char* where) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument(std::string(where) + ": dimension mismatch (" +
                                std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()) + ")");
  }
}

double inner(const Point& a, const Point& b) {
  require_same_dim(a, b, "inner");
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

double norm_squared(const Point& a) { return inner(a, a); }

double norm(const Point& a) { return std::sqrt(norm_squared(a)); }

double distance(const Point& a, const Point& b) { return norm(a - b); }

Point operator+(const Point& a, const Point& b) {
  require_same_dim(a, b, "operator+");
  std::vector<double> c(a.coords());
  for (int i = 0; i < b.dim(); ++i) c[static_cast<std::size_t>(i)] += b[i];
  return Point(std::move(c));
}

Point operator-(const Point& a, const Point& b) {
  require_same_dim(a, b, "operator-");
  std::vector<double> c(a.coords());
  for (int i = 0; i < b.dim(); ++i) c[static_cast<std::size_t>(i)] -= b[i];
  return Point(std::move(c));
}

Point operator*(double s, const Point& a) {
  std::vector<double> c(a.coords());
  for (double& v : c) v *= s;
  return Point(std::move(c));
}

std::string to_string(const Point& a) {
  std::string out = "(";
  char buf[40];
  for (int i = 0; i < a.dim(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", a[i]);
    if (i > 0) out += ", ";
    out += buf;
  }
  out += ")";
  return out;
}

}  // namespace attract
