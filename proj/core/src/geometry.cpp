#include "hut/geometry.hpp"

#include <sstream>

#include "hut/errors.hpp"

namespace hut {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": dimension " + std::to_string(a) + " vs " +
                            std::to_string(b));
  }
}

Point::Point(std::vector<Scalar> c) : coords(std::move(c)) {
  for (const auto& x : coords) {
    if (!x.is_finite()) throw InvalidParameter("Point: infinite coordinate");
  }
}

std::string Point::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i];
  os << ')';
  return os.str();
}

Point operator+(const Point& a, const Point& b) {
  require_same_dim(a.dim(), b.dim(), "Point +");
  Point r;
  r.coords.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r.coords.push_back(a[i] + b[i]);
  return r;
}

Point operator-(const Point& a, const Point& b) {
  require_same_dim(a.dim(), b.dim(), "Point -");
  Point r;
  r.coords.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r.coords.push_back(a[i] - b[i]);
  return r;
}

Point operator-(const Point& a) {
  Point r = a;
  for (auto& x : r.coords) x = -x;
  return r;
}

Point operator*(const Scalar& s, const Point& a) {
  Point r = a;
  for (auto& x : r.coords) x = s * x;
  return r;
}

PointSet::PointSet(std::size_t dim, std::vector<Point> pts) : dim_(dim) {
  pts_.reserve(pts.size());
  for (auto& p : pts) push_back(std::move(p));
}

PointSet::PointSet(std::initializer_list<Point> pts) {
  if (pts.size() > 0) dim_ = pts.begin()->dim();
  for (const auto& p : pts) push_back(p);
}

void PointSet::push_back(Point p) {
  require_same_dim(dim_, p.dim(), "PointSet");
  pts_.push_back(std::move(p));
}

PointSet PointSet::translated(const Point& v) const {
  PointSet r(dim_);
  for (const auto& p : pts_) r.pts_.push_back(p + v);
  return r;
}

PointSet PointSet::scaled(const Scalar& s) const {
  PointSet r(dim_);
  for (const auto& p : pts_) r.pts_.push_back(s * p);
  return r;
}

PointSet PointSet::concat(const PointSet& other) const {
  if (!other.empty() && !empty()) require_same_dim(dim_, other.dim_, "PointSet concat");
  PointSet r(empty() ? other.dim_ : dim_);
  r.pts_ = pts_;
  r.pts_.insert(r.pts_.end(), other.pts_.begin(), other.pts_.end());
  return r;
}

Box::Box(std::vector<Scalar> l, std::vector<Scalar> h) : lo(std::move(l)), hi(std::move(h)) {
  require_same_dim(lo.size(), hi.size(), "Box bounds");
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (lo[i].is_pos_inf() || hi[i].is_neg_inf()) throw InvalidParameter("Box: bound of wrong sign at infinity");
    if (hi[i] < lo[i]) throw InvalidParameter("Box: lo > hi in dimension " + std::to_string(i));
  }
}

bool Box::is_finite() const {
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!lo[i].is_finite() || !hi[i].is_finite()) return false;
  }
  return true;
}

bool Box::is_orthant() const {
  for (std::size_t i = 0; i < dim(); ++i) {
    if (lo[i].is_finite() == hi[i].is_finite()) return false;
  }
  return dim() > 0;
}

bool Box::is_hypercube() const {
  if (!is_finite() || dim() == 0) return false;
  Scalar s = side(0);
  for (std::size_t i = 1; i < dim(); ++i) {
    if (side(i) != s) return false;
  }
  return true;
}

Scalar Box::volume() const {
  if (!is_finite()) throw InvalidParameter("Box::volume: unbounded box");
  Scalar v(1);
  for (std::size_t i = 0; i < dim(); ++i) v *= side(i);
  return v;
}

Point Box::lower_corner() const { return Point(lo); }

Box Box::translated(const Point& v) const {
  require_same_dim(dim(), v.dim(), "Box::translated");
  Box r = *this;
  for (std::size_t i = 0; i < dim(); ++i) {
    r.lo[i] += v[i];
    r.hi[i] += v[i];
  }
  return r;
}

std::string Box::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < dim(); ++i) os << (i ? "x" : "") << '[' << lo[i] << ',' << hi[i] << ']';
  return os.str();
}

Scalar linf_distance(const Point& p, const Point& q) {
  require_same_dim(p.dim(), q.dim(), "linf_distance");
  Scalar best(0);
  for (std::size_t i = 0; i < p.dim(); ++i) {
    Scalar d = (p[i] - q[i]).abs();
    if (best < d) best = d;
  }
  return best;
}

bool box_contains(const Box& b, const Point& p) {
  require_same_dim(b.dim(), p.dim(), "box_contains");
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (p[i] < b.lo[i] || b.hi[i] < p[i]) return false;
  }
  return true;
}

Box minkowski_cube(const Point& q, const Scalar& delta) {
  if (delta.sign() <= 0) throw InvalidParameter("minkowski_cube: delta must be positive");
  Box b;
  b.lo.reserve(q.dim());
  b.hi.reserve(q.dim());
  for (const auto& x : q.coords) {
    b.lo.push_back(x - delta);
    b.hi.push_back(x + delta);
  }
  return b;
}

std::optional<Box> box_intersect(const Box& a, const Box& b) {
  require_same_dim(a.dim(), b.dim(), "box_intersect");
  Box r;
  r.lo.reserve(a.dim());
  r.hi.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Scalar& l = a.lo[i] < b.lo[i] ? b.lo[i] : a.lo[i];
    const Scalar& h = a.hi[i] < b.hi[i] ? a.hi[i] : b.hi[i];
    if (h < l) return std::nullopt;
    r.lo.push_back(l);
    r.hi.push_back(h);
  }
  return r;
}

bool boxes_overlap_open(const Box& a, const Box& b) {
  require_same_dim(a.dim(), b.dim(), "boxes_overlap_open");
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!(a.lo[i] < b.hi[i] && b.lo[i] < a.hi[i])) return false;
  }
  return true;
}

}  // namespace hut
