#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "hut/errors.hpp"
#include "hut/geometry.hpp"
#include "hut/hypergraph.hpp"

namespace hut::test {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
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

// Sets clustered around a random translate of each other, so feasibility at
// small thresholds is common.
inline std::pair<PointSet, PointSet> related_sets(Rng& rng, std::size_t n, std::size_t m, std::size_t d,
                                                  std::int64_t range, std::int64_t maxDen) {
  PointSet Q = random_set(rng, m, d, -range, range, maxDen);
  Point shift = random_point(rng, d, -range / 2, range / 2, maxDen);
  PointSet P(d);
  for (std::size_t i = 0; i < n; ++i) {
    const Point& q = Q[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(m) - 1))];
    P.push_back(q - shift + random_point(rng, d, -3, 3, maxDen));
  }
  return {P, Q};
}

// Complete k-partite hypergraph with `removals` distinct edges deleted at random.
inline KPartiteHypergraph random_hypergraph(Rng& rng, std::size_t u, std::size_t k, std::size_t n,
                                            std::size_t removals) {
  KPartiteHypergraph H = KPartiteHypergraph::complete(u, k, n);
  std::vector<std::vector<std::size_t>> all(H.edges.begin(), H.edges.end());
  std::shuffle(all.begin(), all.end(), rng);
  for (std::size_t i = 0; i < removals && i < all.size(); ++i) H.edges.erase(all[i]);
  return H;
}

}  // namespace hut::test
