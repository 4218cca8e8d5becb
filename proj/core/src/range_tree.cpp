#include "hut/range_tree.hpp"

#include <algorithm>
#include <numeric>

namespace hut {

namespace {
// Canonical nodes this small are scanned directly instead of carrying a sub-tree.
constexpr std::size_t kLeafScan = 4;
}  // namespace

struct RangeTree::Layer {
  std::size_t axis = 0;
  std::vector<Scalar> keys;
  std::vector<std::uint32_t> ids;
  std::vector<std::unique_ptr<Layer>> assoc;  // heap-indexed over [0, ids.size())
};

RangeTree::RangeTree(PointSet ps) : ps_(std::move(ps)) {
  if (ps_.empty() || ps_.dim() == 0) return;
  std::vector<std::uint32_t> ids(ps_.size());
  std::iota(ids.begin(), ids.end(), 0u);
  root_ = build(std::move(ids), 0);
}

std::unique_ptr<RangeTree::Layer> RangeTree::build(std::vector<std::uint32_t> ids,
                                                   std::size_t axis) const {
  auto layer = std::make_unique<Layer>();
  layer->axis = axis;
  std::stable_sort(ids.begin(), ids.end(), [&](std::uint32_t a, std::uint32_t b) {
    return ps_[a][axis] < ps_[b][axis];
  });
  layer->keys.reserve(ids.size());
  for (auto id : ids) layer->keys.push_back(ps_[id][axis]);
  layer->ids = std::move(ids);
  if (axis + 1 < ps_.dim() && layer->ids.size() > kLeafScan) {
    layer->assoc.resize(4 * layer->ids.size());
    build_nodes(*layer, 1, 0, layer->ids.size());
  }
  return layer;
}

void RangeTree::build_nodes(Layer& layer, std::size_t node, std::size_t l, std::size_t r) const {
  if (r - l <= kLeafScan) return;
  std::vector<std::uint32_t> sub(layer.ids.begin() + static_cast<std::ptrdiff_t>(l),
                                 layer.ids.begin() + static_cast<std::ptrdiff_t>(r));
  layer.assoc[node] = build(std::move(sub), layer.axis + 1);
  std::size_t mid = (l + r) / 2;
  build_nodes(layer, 2 * node, l, mid);
  build_nodes(layer, 2 * node + 1, mid, r);
}

bool RangeTree::inside_from(std::size_t id, std::size_t axis, const Box& b) const {
  const Point& p = ps_[id];
  for (std::size_t i = axis; i < p.dim(); ++i) {
    if (p[i] < b.lo[i] || b.hi[i] < p[i]) return false;
  }
  return true;
}

std::optional<std::size_t> RangeTree::query_index(const Box& b) const {
  require_same_dim(dim(), b.dim(), "rt_query_witness");
  if (!root_) return std::nullopt;
  return query(*root_, b);
}

std::optional<std::size_t> RangeTree::query(const Layer& layer, const Box& b) const {
  std::size_t a = layer.axis;
  auto L = static_cast<std::size_t>(
      std::lower_bound(layer.keys.begin(), layer.keys.end(), b.lo[a]) - layer.keys.begin());
  auto R = static_cast<std::size_t>(
      std::upper_bound(layer.keys.begin(), layer.keys.end(), b.hi[a]) - layer.keys.begin());
  if (L >= R) return std::nullopt;
  if (a + 1 == dim()) return layer.ids[L];
  if (layer.assoc.empty()) {
    for (std::size_t i = L; i < R; ++i) {
      if (inside_from(layer.ids[i], a + 1, b)) return layer.ids[i];
    }
    return std::nullopt;
  }
  return query_nodes(layer, 1, 0, layer.ids.size(), L, R, b);
}

std::optional<std::size_t> RangeTree::query_nodes(const Layer& layer, std::size_t node,
                                                  std::size_t l, std::size_t r, std::size_t L,
                                                  std::size_t R, const Box& b) const {
  if (R <= l || r <= L) return std::nullopt;
  if (r - l <= kLeafScan) {
    for (std::size_t i = std::max(l, L); i < std::min(r, R); ++i) {
      if (inside_from(layer.ids[i], layer.axis + 1, b)) return layer.ids[i];
    }
    return std::nullopt;
  }
  if (L <= l && r <= R) return query(*layer.assoc[node], b);
  std::size_t mid = (l + r) / 2;
  if (auto hit = query_nodes(layer, 2 * node, l, mid, L, R, b)) return hit;
  return query_nodes(layer, 2 * node + 1, mid, r, L, R, b);
}

RangeTree rt_build(PointSet ps) { return RangeTree(std::move(ps)); }

std::optional<Point> rt_query_witness(const RangeTree& rt, const Box& b) {
  auto id = rt.query_index(b);
  if (!id) return std::nullopt;
  return rt.points()[*id];
}

}  // namespace hut
