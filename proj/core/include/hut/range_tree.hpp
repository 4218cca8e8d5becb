#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>

#include "hut/geometry.hpp"

namespace hut {

// Static orthogonal range tree over a point set of any fixed dimension.
// One balanced layer per axis, no fractional cascading.
class RangeTree {
 public:
  RangeTree() = default;
  explicit RangeTree(PointSet ps);

  std::size_t dim() const { return ps_.dim(); }
  const PointSet& points() const { return ps_; }

  // Index into points() of some point inside b, if any.
  std::optional<std::size_t> query_index(const Box& b) const;

 private:
  struct Layer;

  std::unique_ptr<Layer> build(std::vector<std::uint32_t> ids, std::size_t axis) const;
  void build_nodes(Layer& layer, std::size_t node, std::size_t l, std::size_t r) const;
  std::optional<std::size_t> query(const Layer& layer, const Box& b) const;
  std::optional<std::size_t> query_nodes(const Layer& layer, std::size_t node, std::size_t l,
                                         std::size_t r, std::size_t L, std::size_t R,
                                         const Box& b) const;
  bool inside_from(std::size_t id, std::size_t axis, const Box& b) const;

  PointSet ps_;
  std::shared_ptr<const Layer> root_;
};

RangeTree rt_build(PointSet ps);
std::optional<Point> rt_query_witness(const RangeTree& rt, const Box& b);

}  // namespace hut
