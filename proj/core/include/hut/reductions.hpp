#pragma once

#include <cstddef>
#include <utility>

#include "hut/additive.hpp"
#include "hut/hausdorff.hpp"

namespace hut {

struct DirectedPair {
  PointSet P, Q;
  Scalar M;  // shift along the first axis
};

// P' = P u (sigma - Q), Q' = Q u (sigma - P) with sigma = (M, 0, ..., 0) and
// M = 10 (1 + ceil(max |coordinate|)) (n + m).
DirectedPair undirected_to_directed(const PointSet& P, const PointSet& Q);

// 1-D continuous directed instance whose optimum equals the alignment optimum.
// meta["M"] holds the shift scale 10 n m max(1, max |x|).
HutInstance linear_alignment_to_hut1d(const LinearAlignmentInstance& inst);
// Splits tau = s M + c with s the nearest integer to tau / M.
std::pair<std::size_t, Scalar> alignment_from_translation(const Scalar& tau, const Scalar& M);

// B is followed by B + 1 so that rotations become shifts.
LinearAlignmentInstance necklace_to_linear_alignment(const NecklaceInstance& inst);

// 1-D discrete directed instance; the instance is YES exactly when the
// MaxConv lower bound fails (meta["answer_flipped"] = "true").
HutInstance maxconvlb_to_dischut1d(const MaxConvLbInstance& inst);

// Complement boxes of the integer delta-neighbourhood of Q around T + P.
// The box-cover answer is NO exactly when the discrete instance is YES.
BoxCoverInstance dischut_to_boxcover(const PointSet& T, const PointSet& P, const PointSet& Q,
                                     const Scalar& delta);
bool boxcover_decide(const BoxCoverInstance& inst);

// Discrete directed instance in dimension 2h (h = number of atoms). The formula
// is true exactly when the instance is NO (meta["answer_flipped"] = "true").
HutInstance fopz_aee_to_dischut(const FopzAeeFormula& f);

}  // namespace hut
