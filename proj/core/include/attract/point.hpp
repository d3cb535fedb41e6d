#pragma once

#include <initializer_list>
#include <string>
#include <vector>

namespace attract {

/// A point of R^d. Coordinates are always finite: construction rejects
/// NaN and infinities, so arithmetic overflow surfaces as an exception
/// instead of propagating silently.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<double> coords);
  Point(std::initializer_list<double> coords);

  static Point zero(int dim);

  int dim() const { return static_cast<int>(coords_.size()); }
  double operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return coords_[static_cast<std::size_t>(i)]; }

  const std::vector<double>& coords() const { return coords_; }

  bool operator==(const Point&) const = default;

 private:
  std::vector<double> coords_;
};

double inner(const Point& a, const Point& b);
double norm_squared(const Point& a);
double norm(const Point& a);
double distance(const Point& a, const Point& b);

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(double s, const Point& a);

std::string to_string(const Point& a);

/// Throws std::invalid_argument naming `where` if dims differ.
void require_same_dim(const Point& a, const Point& b, const char* where);

}  // namespace attract
