#pragma once

#include <cstdint>
#include <vector>

#include "hut/geometry.hpp"

namespace hut {

// Boundary candidate set of a union of congruent 3-D cubes: every point whose
// x, y and z coordinates lie on facets of cubes containing it and which is not
// in the open interior of the union. Contains every vertex of the union.
std::vector<Point> union_cube_vertices_3d(const std::vector<Box>& cubes);

// Restricted form used by the 3-D decision procedure. Each cube carries a
// group id (< 32). Only points formed from lower facets of a cube triple whose
// groups are exactly `required` are produced, and only if no cube contains the
// open octant below the point, i.e. the point is a lower-left-front corner of
// the union. Output is sorted and duplicate-free.
std::vector<Point> union_lower_corners_3d(const std::vector<Box>& cubes,
                                          const std::vector<std::uint8_t>& group,
                                          std::uint32_t required);

// Interior-disjoint boxes whose union is the closure of bounding minus the
// union of the cubes (half-open [lo, hi) reading makes it a partition).
std::vector<Box> complement_decompose(const std::vector<Box>& cubes, const Box& bounding);

std::size_t depth_at(const std::vector<Box>& boxes, const Point& p);

// Bit o of the result is set when the closed octant o (bit j of o = positive
// along axis j) at p is locally covered by some box containing p.
std::uint32_t octant_cover_mask(const std::vector<Box>& boxes, const Point& p);

}  // namespace hut
