#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "hut/additive.hpp"
#include "hut/geometry.hpp"
#include "hut/hypergraph.hpp"

namespace hut::tools {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline std::size_t uniform_size(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Rational in [lo, hi] with denominator in 1..maxDen.
inline Scalar rational(Rng& rng, std::int64_t lo, std::int64_t hi, std::int64_t maxDen) {
  std::int64_t den = uniform(rng, 1, maxDen);
  return Scalar(uniform(rng, lo * den, hi * den), den);
}

inline Point random_point(Rng& rng, std::size_t d, std::int64_t lo, std::int64_t hi, std::int64_t maxDen) {
  std::vector<Scalar> c;
  for (std::size_t i = 0; i < d; ++i) c.push_back(rational(rng, lo, hi, maxDen));
  return Point(std::move(c));
}

inline PointSet random_set(Rng& rng, std::size_t n, std::size_t d, std::int64_t lo, std::int64_t hi,
                           std::int64_t maxDen) {
  PointSet s(d);
  for (std::size_t i = 0; i < n; ++i) s.push_back(random_point(rng, d, lo, hi, maxDen));
  return s;
}

// Q uniform in [-range, range]^d. P is a perturbed translate of a sample of Q,
// rounded to a random denominator in 1..maxDen and clamped to the same cube,
// so small thresholds are often feasible.
inline std::pair<PointSet, PointSet> related_sets(Rng& rng, std::size_t n, std::size_t m, std::size_t d,
                                                  std::int64_t range, std::int64_t maxDen) {
  PointSet Q = random_set(rng, m, d, -range, range, maxDen);
  Point shift = random_point(rng, d, -range / 2, range / 2, maxDen);
  const Scalar lo(-range), hi(range);
  PointSet P(d);
  for (std::size_t i = 0; i < n; ++i) {
    Point p = Q[uniform_size(rng, 0, m - 1)] - shift + random_point(rng, d, -3, 3, maxDen);
    for (std::size_t r = 0; r < d; ++r) {
      const Scalar den(uniform(rng, 1, maxDen));
      p[r] = min(max((p[r] * den + Scalar(1, 2)).floor() / den, lo), hi);
    }
    P.push_back(std::move(p));
  }
  return {P, Q};
}

struct DiscreteSample {
  PointSet T, P, Q;
};

// Integer sets in [-range, range]^d. T is uniform except that, with
// probability 1/2, one entry is replaced by q - p for a random pair (clamped),
// so that feasible instances are common.
inline DiscreteSample discrete_sample(Rng& rng, std::size_t t, std::size_t n, std::size_t m, std::size_t d,
                                      std::int64_t range) {
  auto [P, Q] = related_sets(rng, n, m, d, range, 1);
  PointSet T = random_set(rng, t, d, -range, range, 1);
  if (uniform(rng, 0, 1) == 1) {
    Point tau = Q[uniform_size(rng, 0, m - 1)] - P[uniform_size(rng, 0, n - 1)];
    for (std::size_t r = 0; r < d; ++r) tau[r] = min(max(tau[r], Scalar(-range)), Scalar(range));
    PointSet T2(d);
    const std::size_t slot = uniform_size(rng, 0, t - 1);
    for (std::size_t i = 0; i < t; ++i) T2.push_back(i == slot ? tau : T[i]);
    T = std::move(T2);
  }
  return {std::move(T), std::move(P), std::move(Q)};
}

inline std::vector<std::int64_t> random_ints(Rng& rng, std::size_t n, std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> v(n);
  for (auto& x : v) x = uniform(rng, lo, hi);
  return v;
}

inline std::vector<Scalar> sorted_rationals(Rng& rng, std::size_t n, std::int64_t lo, std::int64_t hi,
                                            std::int64_t maxDen) {
  std::vector<Scalar> v(n);
  for (auto& x : v) x = rational(rng, lo, hi, maxDen);
  std::sort(v.begin(), v.end());
  return v;
}

// Sorted rationals in [0, 1) with denominators up to maxDen.
inline std::vector<Scalar> unit_rationals(Rng& rng, std::size_t n, std::int64_t maxDen) {
  std::vector<Scalar> v(n);
  for (auto& x : v) {
    std::int64_t den = uniform(rng, 1, maxDen);
    x = Scalar(uniform(rng, 0, den - 1), den);
  }
  std::sort(v.begin(), v.end());
  return v;
}

// Complete k-partite hypergraph with `removals` random edges deleted.
inline KPartiteHypergraph random_hypergraph(Rng& rng, std::size_t u, std::size_t k, std::size_t n,
                                            std::size_t removals) {
  KPartiteHypergraph H = KPartiteHypergraph::complete(u, k, n);
  std::vector<std::vector<std::size_t>> all(H.edges.begin(), H.edges.end());
  std::shuffle(all.begin(), all.end(), rng);
  for (std::size_t i = 0; i < removals && i < all.size(); ++i) H.edges.erase(all[i]);
  return H;
}

// One-dimensional vectors with entries in [-8, 8], 1..3 atoms and 1..3 clauses.
inline FopzAeeFormula random_formula(Rng& rng, std::size_t maxSize) {
  FopzAeeFormula f;
  for (auto* set : {&f.A, &f.B, &f.C}) {
    const std::size_t n = uniform_size(rng, 1, std::min<std::size_t>(maxSize, 5));
    for (std::size_t i = 0; i < n; ++i) set->push_back({uniform(rng, -8, 8)});
  }
  const std::size_t h = uniform_size(rng, 1, 3);
  for (std::size_t i = 0; i < h; ++i) {
    f.atoms.push_back(LinearAtom{{uniform(rng, -2, 2)}, {uniform(rng, -2, 2)}, {uniform(rng, -2, 2)}, uniform(rng, -6, 6)});
  }
  const std::size_t clauses = uniform_size(rng, 1, 3);
  for (std::size_t c = 0; c < clauses; ++c) {
    std::vector<Literal> clause;
    const std::size_t lits = uniform_size(rng, 1, 3);
    for (std::size_t l = 0; l < lits; ++l) clause.push_back(Literal{uniform_size(rng, 0, h - 1), uniform(rng, 0, 1) == 1});
    f.dnf.push_back(std::move(clause));
  }
  return f;
}

}  // namespace hut::tools
