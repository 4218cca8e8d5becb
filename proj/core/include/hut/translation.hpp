#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hut/hausdorff.hpp"

namespace hut {

// Points must land in hypercubes center +- delta.
struct TpwcInstance {
  PointSet P;
  PointSet centers;
  Scalar delta;
  void validate() const;
  friend bool operator==(const TpwcInstance&, const TpwcInstance&) = default;
};

// Points must land in finite boxes of arbitrary aspect ratio.
struct TpwbInstance {
  PointSet P;
  std::vector<Box> boxes;
  void validate() const;
  friend bool operator==(const TpwbInstance&, const TpwbInstance&) = default;
};

struct TpwcSub {
  PointSet P;
  PointSet centers;
  friend bool operator==(const TpwcSub&, const TpwcSub&) = default;
};

// One translation serves every sub-instance: each point of sub-instance i lands
// in one of its cubes (radius delta) and inside targetBox. delta > delta0, the
// largest side of targetBox.
struct TpwoInstance {
  std::vector<TpwcSub> subs;
  Scalar delta;
  Box targetBox;
  Scalar delta0;
  std::size_t dim() const { return targetBox.dim(); }
  void validate() const;
  friend bool operator==(const TpwoInstance&, const TpwoInstance&) = default;
};

struct ShapeObject {
  Point offset;
  std::size_t shape = 0;
  friend bool operator==(const ShapeObject&, const ShapeObject&) = default;
};

// Objects are translates offset + shapes[shape]; a shape is a union of boxes,
// possibly unbounded. The question is whether all objects share a point.
struct TranslatedShapeInstance {
  std::size_t dim = 0;
  std::vector<std::vector<Box>> shapes;
  std::vector<ShapeObject> objects;
  void validate() const;
  // Every box is unbounded on at least one side in every dimension.
  bool is_orthant_variant() const;
  friend bool operator==(const TranslatedShapeInstance&, const TranslatedShapeInstance&) = default;
};

TpwcInstance hut_to_tpwc(const HutInstance& inst);
HutInstance tpwc_to_hut(const TpwcInstance& inst);

TpwcInstance tpwo_to_tpwc(const TpwoInstance& inst);

TpwbInstance shapes_to_tpwb(const TranslatedShapeInstance& inst);

// `bounding` must contain a common point of the objects whenever one exists.
TpwoInstance orthant_shapes_to_tpwo(const TranslatedShapeInstance& inst, const Box& bounding);

TranslatedShapeInstance compose(const TranslatedShapeInstance& a, const TranslatedShapeInstance& b);

// Dimension-doubling map: p -> (p_1, p_1, ..., p_d, p_d), one sub-instance per
// sign pattern of the boxes' orthant images.
TpwoInstance tpwb_to_tpwo_double_dim(const TpwbInstance& inst);

// Undirected continuous instance that is feasible exactly when inst is.
HutInstance tpwo_to_uhut(const TpwoInstance& inst);

}  // namespace hut
