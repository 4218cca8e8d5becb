#pragma once

#include <cstddef>
#include <set>
#include <vector>

namespace hut {

// u-uniform k-partite hypergraph with classes V_0..V_{k-1} of n vertices each.
// Vertex j of class c has id c*n + j; an edge is a sorted list of u ids from distinct classes.
struct KPartiteHypergraph {
  std::size_t u = 2;
  std::size_t k = 0;
  std::size_t n = 0;
  std::set<std::vector<std::size_t>> edges;

  std::size_t vertex(std::size_t cls, std::size_t j) const { return cls * n + j; }
  std::size_t class_of(std::size_t v) const { return v / n; }
  std::size_t index_of(std::size_t v) const { return v % n; }

  // Throws InvalidParameter unless every edge is u distinct classes and in range.
  void validate() const;
  bool has_edge(std::vector<std::size_t> e) const;
  void add_edge(std::vector<std::size_t> e);
  // All u-subsets of vertices from distinct classes that are not edges, sorted.
  std::vector<std::vector<std::size_t>> non_edges() const;
  // tuple[c] is the index within class c; every u-subset of positions is an edge.
  bool is_colorful_clique(const std::vector<std::size_t>& tuple) const;

  static KPartiteHypergraph complete(std::size_t u, std::size_t k, std::size_t n);

  friend bool operator==(const KPartiteHypergraph&, const KPartiteHypergraph&) = default;
};

}  // namespace hut
