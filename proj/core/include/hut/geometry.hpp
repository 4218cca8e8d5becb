#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "hut/scalar.hpp"

namespace hut {

struct Point {
  std::vector<Scalar> coords;

  Point() = default;
  explicit Point(std::vector<Scalar> c);
  Point(std::initializer_list<Scalar> c) : Point(std::vector<Scalar>(c)) {}

  static Point zero(std::size_t dim) { return Point(std::vector<Scalar>(dim)); }

  std::size_t dim() const { return coords.size(); }
  const Scalar& operator[](std::size_t i) const { return coords[i]; }
  Scalar& operator[](std::size_t i) { return coords[i]; }

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point& a, const Point& b) { return a.coords <=> b.coords; }

  std::string to_string() const;
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator-(const Point& a);
Point operator*(const Scalar& s, const Point& a);

// Ordered list of points sharing one dimension; duplicates allowed.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t dim) : dim_(dim) {}
  PointSet(std::size_t dim, std::vector<Point> pts);
  PointSet(std::initializer_list<Point> pts);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return pts_.size(); }
  bool empty() const { return pts_.empty(); }
  void push_back(Point p);

  const Point& operator[](std::size_t i) const { return pts_[i]; }
  const std::vector<Point>& points() const { return pts_; }
  auto begin() const { return pts_.begin(); }
  auto end() const { return pts_.end(); }

  PointSet translated(const Point& v) const;
  PointSet scaled(const Scalar& s) const;
  // Union preserving order: this first, then other.
  PointSet concat(const PointSet& other) const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Point> pts_;
};

// Product of closed intervals; lo may be -inf and hi may be +inf.
struct Box {
  std::vector<Scalar> lo;
  std::vector<Scalar> hi;

  Box() = default;
  Box(std::vector<Scalar> lo, std::vector<Scalar> hi);

  std::size_t dim() const { return lo.size(); }
  bool is_finite() const;
  // Exactly one infinite bound in every dimension.
  bool is_orthant() const;
  bool is_hypercube() const;
  Scalar side(std::size_t i) const { return hi[i] - lo[i]; }
  Scalar volume() const;
  Point lower_corner() const;
  Box translated(const Point& v) const;

  friend bool operator==(const Box&, const Box&) = default;
  std::string to_string() const;
};

Scalar linf_distance(const Point& p, const Point& q);
bool box_contains(const Box& b, const Point& p);
Box minkowski_cube(const Point& q, const Scalar& delta);
std::optional<Box> box_intersect(const Box& a, const Box& b);
// Interiors intersect (positive-volume overlap).
bool boxes_overlap_open(const Box& a, const Box& b);

void require_same_dim(std::size_t a, std::size_t b, const char* what);

}  // namespace hut
