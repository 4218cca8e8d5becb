#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hut/additive.hpp"
#include "hut/hausdorff.hpp"
#include "hut/hypergraph.hpp"
#include "hut/translation.hpp"

namespace hut {

// Candidate cap for the enumerating oracles: HUT_MAX_ORACLE if set, else 10^6.
std::size_t oracle_cap();

// Enumerates prod_i {q_i - p_i +- delta} in lexicographic order and returns the
// first feasible translation (which is the lexicographic minimum of the feasible
// region). delta >= 0, dim <= 4.
std::optional<Point> brute_hut_decide(const PointSet& P, const PointSet& Q, const Scalar& delta,
                                      Variant variant, std::optional<std::size_t> cap = std::nullopt);

// Binary search over {0} and all |(q_i - p_i) - (q'_i - p'_i)| / 2 using brute_hut_decide.
Optimum brute_hut_optimize(const PointSet& P, const PointSet& Q, Variant variant,
                           std::optional<std::size_t> cap = std::nullopt);

// Lexicographically smallest tau in T with every p + tau within delta of Q (and back).
std::optional<Point> brute_dischut(const PointSet& T, const PointSet& P, const PointSet& Q,
                                   const Scalar& delta, Variant variant);

// C[k] <= max_{i+j=k} A[i] + B[j] for all 1-indexed k in 2..n.
bool brute_maxconvlb(const MaxConvLbInstance& inst);

// Entry i tells whether A[i] + b + c = 0 for some b in B, c in C.
std::vector<bool> brute_allints3sum(const AllInts3SumInstance& inst);

struct AlignmentResult {
  Scalar value;
  std::size_t s = 0;
  Scalar c;
};

// Minimum over s in 0..m-n and real c of max_i |A[i] + c - B[i+s]|; smallest s on ties.
AlignmentResult brute_linear_alignment(const LinearAlignmentInstance& inst);

// Minimum over rotations s and c in [0,1) of the circular max distance; smallest s,c on ties.
AlignmentResult brute_necklace(const NecklaceInstance& inst);

// Index tuple (one per class) of the first colorful clique in lexicographic order.
std::optional<std::vector<std::size_t>> brute_hyperclique(const KPartiteHypergraph& H);

// Exact directed decision for large structured instances (any dimension):
// depth-first splitting of a candidate region, which is first shrunk to the
// bounding box of every point's reachable cubes. delta >= 0.
std::optional<Point> region_search_decide(const PointSet& P, const PointSet& Q, const Scalar& delta);

// Direct evaluation of the quantified formula.
bool brute_fopz(const FopzAeeFormula& f);

// Grid oracles for the translation problems: every axis takes the facet
// coordinates of the translation regions, the first feasible grid point in
// lexicographic order is returned.
std::optional<Point> brute_tpwc(const TpwcInstance& inst, std::optional<std::size_t> cap = std::nullopt);
std::optional<Point> brute_tpwb(const TpwbInstance& inst, std::optional<std::size_t> cap = std::nullopt);
std::optional<Point> brute_tpwo(const TpwoInstance& inst, std::optional<std::size_t> cap = std::nullopt);
// A common point of all objects.
std::optional<Point> brute_shapes(const TranslatedShapeInstance& inst,
                                  std::optional<std::size_t> cap = std::nullopt);

}  // namespace hut
