#include "hut/union_ops.hpp"

#include <algorithm>

#include "hut/errors.hpp"

namespace hut {

namespace {

// Octants locally covered by a single box that contains p.
std::uint32_t box_octants(const Box& b, const Point& p) {
  std::uint32_t mask = 0;
  std::size_t d = p.dim();
  for (std::uint32_t o = 0; o < (1u << d); ++o) {
    bool ok = true;
    for (std::size_t j = 0; j < d && ok; ++j) {
      bool pos = (o >> j) & 1u;
      ok = pos ? p[j] < b.hi[j] : b.lo[j] < p[j];
    }
    if (ok) mask |= 1u << o;
  }
  return mask;
}

bool within(const Scalar& v, const Box& b, std::size_t axis) {
  return !(v < b.lo[axis]) && !(b.hi[axis] < v);
}

void require_cubes_3d(const std::vector<Box>& cubes, const char* what) {
  for (const auto& c : cubes) {
    if (c.dim() != 3) throw DimensionMismatch(std::string(what) + ": cubes must be 3-dimensional");
    if (!c.is_finite()) throw InvalidParameter(std::string(what) + ": cubes must be finite");
    if (!(c.side(0) == c.side(1) && c.side(1) == c.side(2)) || c.side(0) != cubes[0].side(0)) {
      throw InvalidParameter(std::string(what) + ": cubes must be congruent");
    }
  }
}

template <class Emit>
void facet_triples(const std::vector<Box>& cubes, bool lowerOnly,
                   const std::vector<std::uint8_t>* group, std::uint32_t required, Emit&& emit) {
  const std::size_t n = cubes.size();
  std::vector<char> meet(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      bool m = true;
      for (std::size_t j = 0; j < 3 && m; ++j) {
        m = !(cubes[a].hi[j] < cubes[b].lo[j]) && !(cubes[b].hi[j] < cubes[a].lo[j]);
      }
      meet[a * n + b] = meet[b * n + a] = m;
    }
  }
  const int facets = lowerOnly ? 1 : 2;
  for (std::size_t a = 0; a < n; ++a) {
    const Box& A = cubes[a];
    for (int fa = 0; fa < facets; ++fa) {
      const Scalar& x = fa ? A.hi[0] : A.lo[0];
      for (std::size_t b = 0; b < n; ++b) {
        if (!meet[a * n + b]) continue;
        const Box& B = cubes[b];
        if (!within(x, B, 0)) continue;
        for (int fb = 0; fb < facets; ++fb) {
          const Scalar& y = fb ? B.hi[1] : B.lo[1];
          if (!within(y, A, 1)) continue;
          for (std::size_t c = 0; c < n; ++c) {
            if (!meet[a * n + c] || !meet[b * n + c]) continue;
            if (group) {
              std::uint32_t g = (1u << (*group)[a]) | (1u << (*group)[b]) | (1u << (*group)[c]);
              if (g != required) continue;
            }
            const Box& C = cubes[c];
            if (!within(x, C, 0) || !within(y, C, 1)) continue;
            for (int fc = 0; fc < facets; ++fc) {
              const Scalar& z = fc ? C.hi[2] : C.lo[2];
              if (!within(z, A, 2) || !within(z, B, 2)) continue;
              emit(x, y, z);
            }
          }
        }
      }
    }
  }
}

void sort_unique(std::vector<Point>& pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

}  // namespace

std::uint32_t octant_cover_mask(const std::vector<Box>& boxes, const Point& p) {
  std::uint32_t mask = 0;
  for (const auto& b : boxes) {
    if (box_contains(b, p)) mask |= box_octants(b, p);
  }
  return mask;
}

std::vector<Point> union_cube_vertices_3d(const std::vector<Box>& cubes) {
  require_cubes_3d(cubes, "union_cube_vertices_3d");
  std::vector<Point> raw;
  facet_triples(cubes, false, nullptr, 0, [&](const Scalar& x, const Scalar& y, const Scalar& z) {
    raw.push_back(Point{x, y, z});
  });
  sort_unique(raw);
  std::vector<Point> out;
  for (auto& p : raw) {
    if (octant_cover_mask(cubes, p) != 0xFFu) out.push_back(std::move(p));
  }
  return out;
}

std::vector<Point> union_lower_corners_3d(const std::vector<Box>& cubes,
                                          const std::vector<std::uint8_t>& group,
                                          std::uint32_t required) {
  require_cubes_3d(cubes, "union_lower_corners_3d");
  if (group.size() != cubes.size()) throw InvalidParameter("union_lower_corners_3d: group size");
  std::vector<Point> raw;
  facet_triples(cubes, true, &group, required, [&](const Scalar& x, const Scalar& y, const Scalar& z) {
    raw.push_back(Point{x, y, z});
  });
  sort_unique(raw);
  std::vector<Point> out;
  for (auto& p : raw) {
    // Octant 0 is the all-negative one.
    bool covered = false;
    for (const auto& c : cubes) {
      if (c.lo[0] < p[0] && c.lo[1] < p[1] && c.lo[2] < p[2] && box_contains(c, p)) {
        covered = true;
        break;
      }
    }
    if (!covered) out.push_back(std::move(p));
  }
  return out;
}

std::vector<Box> complement_decompose(const std::vector<Box>& cubes, const Box& bounding) {
  const std::size_t d = bounding.dim();
  if (d == 0 || d > 3) throw DimensionMismatch("complement_decompose: dimension must be 1..3");
  if (!bounding.is_finite()) throw InvalidParameter("complement_decompose: bounding box must be finite");
  for (const auto& c : cubes) require_same_dim(c.dim(), d, "complement_decompose");

  std::vector<std::vector<Scalar>> grid(d);
  for (std::size_t j = 0; j < d; ++j) {
    grid[j] = {bounding.lo[j], bounding.hi[j]};
    for (const auto& c : cubes) {
      for (const Scalar* v : {&c.lo[j], &c.hi[j]}) {
        if (bounding.lo[j] < *v && *v < bounding.hi[j]) grid[j].push_back(*v);
      }
    }
    std::sort(grid[j].begin(), grid[j].end());
    grid[j].erase(std::unique(grid[j].begin(), grid[j].end()), grid[j].end());
  }
  for (std::size_t j = 0; j < d; ++j) {
    if (grid[j].size() < 2) return {};  // degenerate bounding box has no volume to cover
  }

  std::vector<std::size_t> cellsPer(d);
  for (std::size_t j = 0; j < d; ++j) cellsPer[j] = grid[j].size() - 1;
  std::vector<std::size_t> idx(d, 0);
  std::vector<Box> out;
  const std::size_t last = d - 1;

  auto covered = [&](const std::vector<std::size_t>& at) {
    for (const auto& c : cubes) {
      bool in = true;
      for (std::size_t j = 0; j < d && in; ++j) {
        in = !(grid[j][at[j]] < c.lo[j]) && !(c.hi[j] < grid[j][at[j] + 1]);
      }
      if (in) return true;
    }
    return false;
  };

  // Iterate over all index combinations of the leading axes; merge runs along the last.
  while (true) {
    std::size_t run = 0;
    bool inRun = false;
    for (std::size_t k = 0; k <= cellsPer[last]; ++k) {
      bool empty = false;
      if (k < cellsPer[last]) {
        idx[last] = k;
        empty = !covered(idx);
      }
      if (empty && !inRun) {
        run = k;
        inRun = true;
      } else if (!empty && inRun) {
        Box b;
        for (std::size_t j = 0; j < last; ++j) {
          b.lo.push_back(grid[j][idx[j]]);
          b.hi.push_back(grid[j][idx[j] + 1]);
        }
        b.lo.push_back(grid[last][run]);
        b.hi.push_back(grid[last][k]);
        out.push_back(std::move(b));
        inRun = false;
      }
    }
    std::size_t j = last;
    while (j > 0) {
      --j;
      if (++idx[j] < cellsPer[j]) break;
      idx[j] = 0;
      if (j == 0) return out;
    }
    if (last == 0) return out;
  }
}

std::size_t depth_at(const std::vector<Box>& boxes, const Point& p) {
  std::size_t n = 0;
  for (const auto& b : boxes) n += box_contains(b, p) ? 1 : 0;
  return n;
}

}  // namespace hut
