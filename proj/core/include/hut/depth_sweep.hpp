#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hut/geometry.hpp"

namespace hut {

// Segment tree over slots 0..n-1 with range add and global max.
class DepthSweepTree {
 public:
  explicit DepthSweepTree(std::size_t slots);

  // Adds v to every slot in [lo, hi] (inclusive).
  void add(std::size_t lo, std::size_t hi, int v);
  int max() const { return n_ ? mx_[1] : 0; }
  // Leftmost slot attaining max().
  std::size_t argmax() const;
  // Maximal runs [lo, hi] of slots whose value is >= target, left to right.
  std::vector<std::pair<std::size_t, std::size_t>> runs_at_least(int target) const;
  std::size_t size() const { return n_; }

 private:
  void add(std::size_t node, std::size_t l, std::size_t r, std::size_t lo, std::size_t hi, int v);
  void collect(std::size_t node, std::size_t l, std::size_t r, int offset, int target,
               std::vector<std::pair<std::size_t, std::size_t>>& out) const;

  std::size_t n_;
  std::vector<int> mx_;
  std::vector<int> add_;
};

// Axis-aligned rectangle of slot indices, inclusive on both ends.
//
// A slot grid over sorted distinct coordinates c_0 < ... < c_{k-1} has 2k-1
// slots per axis: slot 2i is the point c_i and slot 2i+1 the open gap
// (c_i, c_{i+1}). Closed boxes map to slot rectangles exactly.
struct SlotRect {
  std::size_t x0, x1, y0, y1;
  friend bool operator==(const SlotRect&, const SlotRect&) = default;
};

struct SlotCell {
  int depth = 0;
  std::size_t x = 0, y = 0;
};

// Lexicographically first (x, then y) slot of maximum depth.
SlotCell max_depth_slots(const std::vector<SlotRect>& rects, std::size_t nx, std::size_t ny);
// First slot with depth >= target, or nullopt.
std::optional<SlotCell> first_slot_at_least(const std::vector<SlotRect>& rects, std::size_t nx,
                                            std::size_t ny, int target);
// Disjoint slot rectangles covering exactly the slots of depth >= target.
std::vector<SlotRect> slots_at_least(const std::vector<SlotRect>& rects, std::size_t nx,
                                     std::size_t ny, int target);

// Sorted distinct coordinates of one axis and the slot mapping.
class SlotAxis {
 public:
  SlotAxis() = default;
  explicit SlotAxis(std::vector<Scalar> coords);
  std::size_t slots() const { return cs_.empty() ? 0 : 2 * cs_.size() - 1; }
  // Slot of an existing coordinate value.
  std::size_t slot_of(const Scalar& c) const;
  // A representative value inside the slot (the point, or the gap midpoint).
  Scalar value(std::size_t slot) const;
  const std::vector<Scalar>& coords() const { return cs_; }

 private:
  std::vector<Scalar> cs_;
};

struct DepthResult {
  int depth = 0;
  std::optional<Point> witness;
};

// Maximum number of closed 2-D boxes sharing a point; the witness is the
// lexicographically smallest point attaining it.
DepthResult max_depth_2d(const std::vector<Box>& boxes);

}  // namespace hut
