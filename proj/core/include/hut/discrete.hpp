#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hut/continuous.hpp"

namespace hut {

// Range-tree method for discrete HuT in any fixed dimension. The witness is the
// lexicographically smallest feasible tau in T.
std::optional<FeasibleTranslation> solve_discrete(const PointSet& T, const PointSet& P, const PointSet& Q,
                                                  const Scalar& delta, Variant variant);

struct ScanResult {
  std::vector<std::pair<Scalar, Scalar>> values;  // (tau, F(tau)) in ascending tau
  Scalar best_value;
  Scalar best_tau;  // smallest tau attaining best_value
};

// Evaluates the 1-D envelope at every tau of T with one merged pass.
ScanResult solve_discrete_1d_scan(const PointSet& T, const PointSet& P, const PointSet& Q, Variant variant);

}  // namespace hut
