#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hut/hausdorff.hpp"
#include "hut/hypergraph.hpp"
#include "hut/translation.hpp"

namespace hut {

// Tuples of a k-partite hypergraph are encoded as unit cells of a hypercube.
// A cell is addressed by its integer origin; a half-open run [a, b) of cells is
// stored as the closed interval [a, b - 1/2], so a cell lies in a box exactly
// when its origin does, and flooring any common point of such boxes yields a
// common cell.

// Base-n positional value, most significant digit first.
std::int64_t positional_index(const std::vector<std::size_t>& digits, std::size_t n);
std::vector<std::size_t> positional_digits(std::int64_t index, std::size_t n, std::size_t count);

// n^(k/d), the side of the d-dimensional encoding hypercube. Throws unless d | k.
std::int64_t hypercube_side(const KPartiteHypergraph& H, std::size_t d);

// Classes 0..k/d-1 form the digits of axis 0, the next k/d those of axis 1, and so on.
Point encode_cell(const KPartiteHypergraph& H, const std::vector<std::size_t>& tuple, std::size_t d);
std::vector<std::size_t> decode_cell(const KPartiteHypergraph& H, const Point& cell, std::size_t d);

// Boxes covering exactly the cells whose tuple avoids the non-edge (vertex ids).
// Per axis holding a vertex of the non-edge, the complement of the matching
// blocks is listed as intervals spanning the other axes.
std::vector<Box> cover_feasible_region(const KPartiteHypergraph& H, const std::vector<std::size_t>& nonedge,
                                       std::size_t d);

// Partition of one axis [0, n^digits) into translates of a prototype slice.
// Slices differ only in the ⌊lambda·digits⌋ most significant digits outside
// `fixed` (fewer if not enough remain), so any cell pattern depending only on
// the fixed digits is identical in every slice.
struct SliceDecomposition {
  std::int64_t side = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> runs;  // prototype, half-open, ascending
  std::vector<std::int64_t> offsets;                        // ascending; offsets[0] == 0
};
SliceDecomposition slice_axis(std::size_t n, std::size_t digits, const std::vector<std::size_t>& fixed,
                              const Scalar& lambda);

// Translated box-shape instance whose common points within the hypercube floor
// to exactly the colorful cliques of H. Object 0 is the bounding hypercube;
// every non-edge contributes one shape and one object per sub-region.
TranslatedShapeInstance build_translated_shape(const KPartiteHypergraph& H, const Scalar& lambda,
                                               std::size_t d);

// Directed HuT instance in dimension 2·⌊d/2⌋ that is feasible exactly when H
// has a colorful clique: shapes in ⌊d/2⌋ dimensions, then boxes, orthants, cubes.
HutInstance lb_pipeline_lopsided(const KPartiteHypergraph& H, const Scalar& lambda, std::size_t d);

// Three sequences over the classes, renamed x_1..x_{k/3}, y_1.., z_1..:
// s1 = (x_1..x_{k/3}, y_{k/3}..y_{2k/9+1}) and cyclically for s2, s3.
struct PrefixCoveringSequences {
  std::size_t k = 0;
  std::array<std::vector<std::size_t>, 3> seq;  // class indices

  std::size_t length() const { return seq[0].size(); }
  // "x1", "y3", ... for a class index.
  std::string label(std::size_t cls) const;
};
PrefixCoveringSequences prefix_covering_sequences(std::size_t k);

// Lexicographically smallest prefix lengths (i, j, l) with min + max <= 4k/9,
// i + j + l <= 2k/3 + 1 and every class in the union of the prefixes.
std::optional<std::array<std::size_t, 3>> prefix_cover(const PrefixCoveringSequences& s,
                                                       const std::vector<std::size_t>& classes);

// Cells of [0, n^digits)^3 whose digit `position` on `axis` equals `value` for
// every constraint. `prefix` holds the coarse side exponents per axis.
struct DigitConstraint {
  std::size_t axis = 0;
  std::size_t position = 0;
  std::size_t value = 0;
};
struct ForbiddenPattern {
  std::size_t n = 0;
  std::size_t digits = 0;
  std::array<std::size_t, 3> prefix{};
  std::vector<DigitConstraint> constraints;

  std::int64_t side() const;
  bool contains(const std::array<std::int64_t, 3>& cell) const;
};

// Decomposition of a forbidden pattern into translates of one quasi-diagonal:
// a chain of blocks increasing on the chain and partner axes, optionally
// confined to one block of a slab axis. Unconstrained axes are unbounded.
struct QuasiDiagonalDecomposition {
  std::vector<Box> prototype;  // chain order
  std::vector<Point> offsets;  // offsets[0] is zero
  std::optional<std::size_t> chainAxis;
  std::optional<std::size_t> partnerAxis;
  std::optional<std::size_t> slabAxis;
};

// Chains have length n^min(e, ⌊(1-lambda)(2k/3+1)⌋), e the exponent of the
// innermost uniform run of the chain axis. Requires lambda in [2/3, 1] and the
// prefix exponents to satisfy min + max <= 4k/9 and sum <= 2k/3 + 1.
QuasiDiagonalDecomposition quasi_diagonal_decompose(const ForbiddenPattern& f, const Scalar& lambda,
                                                    std::size_t k);

// Orthants covering exactly the complement of the prototype quasi-diagonal:
// 2 per element on the chain, plus 2 for a slab axis.
std::vector<Box> quasi_diagonal_complement(const QuasiDiagonalDecomposition& qd);

// Translated orthant shapes over the redundant 3-D encoding of the sequences,
// one shape per non-edge and per inconsistent pair of a repeated class.
TranslatedShapeInstance pcd_orthant_shapes(const KPartiteHypergraph& H, const Scalar& lambda);

// 3-D directed HuT instance feasible exactly when the 3-uniform H has a
// colorful clique. Requires 9 | k and lambda in [2/3, 1].
HutInstance pcd_pipeline_3d(const KPartiteHypergraph& H, const Scalar& lambda);

}  // namespace hut
