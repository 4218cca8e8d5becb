#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hut/hausdorff.hpp"

namespace hut {

// Continuous piecewise-linear function on the real line. Piece k covers
// [breaks[k-1], breaks[k]] with the outer pieces unbounded.
struct PiecewiseLinearFn {
  std::vector<Scalar> breaks;
  std::vector<Scalar> slopes;
  std::vector<Scalar> intercepts;

  std::size_t pieces() const { return slopes.size(); }
  Scalar eval(const Scalar& t) const;

  // t -> min_c |t - c| over a nonempty set of centers.
  static PiecewiseLinearFn distance_to_set(std::vector<Scalar> centers);
  static PiecewiseLinearFn upper_envelope(const PiecewiseLinearFn& a, const PiecewiseLinearFn& b);

  // Global minimum and its leftmost minimizer. Throws if unbounded or flat at -inf.
  std::pair<Scalar, Scalar> minimum() const;
  // Leftmost t with f(t) <= v.
  std::optional<Scalar> leftmost_at_most(const Scalar& v) const;

  friend bool operator==(const PiecewiseLinearFn&, const PiecewiseLinearFn&) = default;
};

// F(tau) = directed (or undirected) Hausdorff distance between P + tau and Q, for dim 1.
PiecewiseLinearFn envelope_1d(const PointSet& P, const PointSet& Q, Variant variant);

Optimum solve_1d_opt(const PointSet& P, const PointSet& Q, Variant variant);

}  // namespace hut
