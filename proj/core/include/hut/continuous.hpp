#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hut/envelope.hpp"
#include "hut/hausdorff.hpp"

namespace hut {

// A translation together with, for every p, the index of a q with
// |p + tau - q| <= delta (and the reverse matching for undirected).
struct FeasibleTranslation {
  Point tau;
  std::vector<std::size_t> match;
  std::vector<std::size_t> reverse_match;
};

// Builds a certificate for tau by direct search, or nullopt if tau is infeasible.
std::optional<FeasibleTranslation> certify(const PointSet& P, const PointSet& Q, const Scalar& delta,
                                           Variant variant, const Point& tau);
// Re-checks every matched pair of a certificate.
bool check_certificate(const PointSet& P, const PointSet& Q, const Scalar& delta, Variant variant,
                       const FeasibleTranslation& ft);

// The decision procedures below return the lexicographically smallest feasible translation.
std::optional<FeasibleTranslation> decide_1d(const PointSet& P, const PointSet& Q, const Scalar& delta,
                                             Variant variant);
std::optional<FeasibleTranslation> decide_2d(const PointSet& P, const PointSet& Q, const Scalar& delta,
                                             Variant variant);
std::optional<FeasibleTranslation> decide_3d_lopsided(const PointSet& P, const PointSet& Q,
                                                      const Scalar& delta);

using DecideFn = std::function<std::optional<FeasibleTranslation>(
    const PointSet&, const PointSet&, const Scalar&, Variant)>;

// Sorted, duplicate-free {|(q_i - p_i) - (q'_i - p'_i)| / 2} together with 0.
std::vector<Scalar> candidate_deltas(const PointSet& P, const PointSet& Q);

// Smallest feasible candidate threshold for the given decision procedure.
// `decide` must accept delta = 0.
Optimum optimize_with(const PointSet& P, const PointSet& Q, Variant variant, const DecideFn& decide);

// Dispatches to the dimension's decision procedure (1: envelope, 2: sweep, 3: lopsided, directed only).
Optimum optimize(const PointSet& P, const PointSet& Q, Variant variant);

namespace detail {
// Variants of the public decisions that also accept delta = 0.
std::optional<FeasibleTranslation> decide_1d_closed(const PointSet& P, const PointSet& Q,
                                                    const Scalar& delta, Variant variant);
std::optional<FeasibleTranslation> decide_2d_closed(const PointSet& P, const PointSet& Q,
                                                    const Scalar& delta, Variant variant);
std::optional<FeasibleTranslation> decide_3d_closed(const PointSet& P, const PointSet& Q,
                                                    const Scalar& delta);
Box closed_cube(const Point& center, const Scalar& delta);
}  // namespace detail

}  // namespace hut
