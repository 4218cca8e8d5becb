#include "hut/hypergraph.hpp"

#include <algorithm>

#include "hut/errors.hpp"

namespace hut {

namespace {

// Calls f on every increasing u-subset of {0..k-1}.
template <class F>
void for_each_subset(std::size_t k, std::size_t u, F&& f) {
  if (u > k) return;
  std::vector<std::size_t> s(u);
  for (std::size_t i = 0; i < u; ++i) s[i] = i;
  while (true) {
    f(s);
    std::size_t i = u;
    while (i > 0 && s[i - 1] == k - u + i - 1) --i;
    if (i == 0) return;
    ++s[i - 1];
    for (std::size_t j = i; j < u; ++j) s[j] = s[j - 1] + 1;
  }
}

}  // namespace

void KPartiteHypergraph::validate() const {
  if (u < 2 || u > 3) throw InvalidParameter("hypergraph: u must be 2 or 3");
  if (n == 0) throw InvalidParameter("hypergraph: empty classes");
  for (const auto& e : edges) {
    if (e.size() != u) throw InvalidParameter("hypergraph: edge of wrong size");
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] >= k * n) throw InvalidParameter("hypergraph: vertex out of range");
      if (i > 0 && class_of(e[i - 1]) >= class_of(e[i])) {
        throw InvalidParameter("hypergraph: edge must span distinct classes in sorted order");
      }
    }
  }
}

bool KPartiteHypergraph::has_edge(std::vector<std::size_t> e) const {
  std::sort(e.begin(), e.end());
  return edges.count(e) > 0;
}

void KPartiteHypergraph::add_edge(std::vector<std::size_t> e) {
  std::sort(e.begin(), e.end());
  edges.insert(std::move(e));
}

std::vector<std::vector<std::size_t>> KPartiteHypergraph::non_edges() const {
  std::vector<std::vector<std::size_t>> out;
  for_each_subset(k, u, [&](const std::vector<std::size_t>& cls) {
    std::vector<std::size_t> idx(u, 0);
    while (true) {
      std::vector<std::size_t> e(u);
      for (std::size_t i = 0; i < u; ++i) e[i] = vertex(cls[i], idx[i]);
      if (!edges.count(e)) out.push_back(e);
      std::size_t i = u;
      while (i > 0 && ++idx[i - 1] == n) idx[--i] = 0;
      if (i == 0) break;
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool KPartiteHypergraph::is_colorful_clique(const std::vector<std::size_t>& tuple) const {
  if (tuple.size() != k) return false;
  bool ok = true;
  for_each_subset(k, u, [&](const std::vector<std::size_t>& cls) {
    if (!ok) return;
    std::vector<std::size_t> e(u);
    for (std::size_t i = 0; i < u; ++i) e[i] = vertex(cls[i], tuple[cls[i]]);
    ok = edges.count(e) > 0;
  });
  return ok;
}

KPartiteHypergraph KPartiteHypergraph::complete(std::size_t u, std::size_t k, std::size_t n) {
  KPartiteHypergraph h;
  h.u = u;
  h.k = k;
  h.n = n;
  for (auto& e : h.non_edges()) h.edges.insert(std::move(e));
  return h;
}

}  // namespace hut
