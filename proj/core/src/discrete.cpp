#include "hut/discrete.hpp"

#include <algorithm>

#include "hut/errors.hpp"
#include "hut/range_tree.hpp"

namespace hut {

namespace {

void require_integral(const PointSet& s, const char* what) {
  for (const auto& p : s) {
    for (const auto& c : p.coords) {
      if (!c.is_integer()) throw FormatError(std::string(what) + ": discrete mode requires integer coordinates");
    }
  }
}

std::vector<Point> sorted_unique(const PointSet& T) {
  std::vector<Point> ts(T.begin(), T.end());
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

}  // namespace

std::optional<FeasibleTranslation> solve_discrete(const PointSet& T, const PointSet& P, const PointSet& Q,
                                                  const Scalar& delta, Variant variant) {
  if (delta.sign() <= 0) throw InvalidParameter("solve_discrete: delta must be positive");
  require_integral(T, "solve_discrete");
  require_integral(P, "solve_discrete");
  require_integral(Q, "solve_discrete");
  if (T.empty()) return std::nullopt;
  const std::size_t d = T.dim();
  if (!P.empty()) require_same_dim(P.dim(), d, "solve_discrete");
  if (!Q.empty()) require_same_dim(Q.dim(), d, "solve_discrete");

  RangeTree qTree(Q);
  RangeTree pTree(P);
  for (const auto& tau : sorted_unique(T)) {
    FeasibleTranslation ft{tau, {}, {}};
    bool ok = true;
    for (std::size_t i = 0; i < P.size() && ok; ++i) {
      auto hit = qTree.query_index(detail::closed_cube(P[i] + tau, delta));
      ok = hit.has_value();
      if (ok) ft.match.push_back(*hit);
    }
    if (ok && variant == Variant::Undirected) {
      for (std::size_t j = 0; j < Q.size() && ok; ++j) {
        auto hit = pTree.query_index(detail::closed_cube(Q[j] - tau, delta));
        ok = hit.has_value();
        if (ok) ft.reverse_match.push_back(*hit);
      }
    }
    if (ok) return ft;
  }
  return std::nullopt;
}

ScanResult solve_discrete_1d_scan(const PointSet& T, const PointSet& P, const PointSet& Q, Variant variant) {
  if (T.empty()) throw InvalidParameter("solve_discrete_1d_scan: T is empty");
  if (T.dim() != 1) throw DimensionMismatch("solve_discrete_1d_scan: requires dimension 1");
  PiecewiseLinearFn F = envelope_1d(P, Q, variant);
  std::vector<Scalar> ts;
  for (const auto& t : T) ts.push_back(t[0]);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

  ScanResult r;
  std::size_t k = 0;  // current piece
  for (const auto& t : ts) {
    while (k < F.breaks.size() && F.breaks[k] <= t) ++k;
    Scalar v = F.slopes[k] * t + F.intercepts[k];
    if (r.values.empty() || v < r.best_value) {
      r.best_value = v;
      r.best_tau = t;
    }
    r.values.emplace_back(t, std::move(v));
  }
  return r;
}

}  // namespace hut
