#pragma once

#include <cstdint>
#include <vector>

#include "hut/geometry.hpp"

namespace hut {

// Arrays are 0-indexed here; the 1-indexed index k of the definition is k+1.
struct MaxConvLbInstance {
  std::vector<std::int64_t> A, B, C;
  friend bool operator==(const MaxConvLbInstance&, const MaxConvLbInstance&) = default;
};

// Sorted A (n) and B (m), m >= n.
struct LinearAlignmentInstance {
  std::vector<Scalar> A, B;
  friend bool operator==(const LinearAlignmentInstance&, const LinearAlignmentInstance&) = default;
};

// Equal-length arrays with entries in [0, 1).
struct NecklaceInstance {
  std::vector<Scalar> A, B;
  friend bool operator==(const NecklaceInstance&, const NecklaceInstance&) = default;
};

struct AllInts3SumInstance {
  std::vector<std::int64_t> A, B, C;
  friend bool operator==(const AllInts3SumInstance&, const AllInts3SumInstance&) = default;
};

// alpha.a + beta.b <= gamma.c + S
struct LinearAtom {
  std::vector<std::int64_t> alpha, beta, gamma;
  std::int64_t S = 0;
  friend bool operator==(const LinearAtom&, const LinearAtom&) = default;
};

struct Literal {
  std::size_t atom = 0;
  bool negated = false;
  friend bool operator==(const Literal&, const Literal&) = default;
};

// forall a in A, exists b in B, exists c in C: OR over clauses of AND over literals.
struct FopzAeeFormula {
  std::size_t dimA = 1, dimB = 1, dimC = 1;
  std::vector<std::vector<std::int64_t>> A, B, C;
  std::vector<LinearAtom> atoms;
  std::vector<std::vector<Literal>> dnf;

  // Throws InvalidParameter on malformed atoms, literals or vectors.
  void validate() const;
  bool eval_atom(std::size_t i, const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
                 const std::vector<std::int64_t>& c) const;
  friend bool operator==(const FopzAeeFormula&, const FopzAeeFormula&) = default;
};

// forall tau in T, exists p in P, exists box: tau + p in box.
struct BoxCoverInstance {
  PointSet T, P;
  std::vector<Box> boxes;
  friend bool operator==(const BoxCoverInstance&, const BoxCoverInstance&) = default;
};

}  // namespace hut
