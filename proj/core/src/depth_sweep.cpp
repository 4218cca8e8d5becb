#include "hut/depth_sweep.hpp"

#include <algorithm>

#include "hut/errors.hpp"

namespace hut {

DepthSweepTree::DepthSweepTree(std::size_t slots) : n_(slots), mx_(4 * std::max<std::size_t>(slots, 1)), add_(mx_.size()) {}

void DepthSweepTree::add(std::size_t lo, std::size_t hi, int v) {
  if (lo > hi || hi >= n_) throw InvalidParameter("DepthSweepTree::add: bad range");
  add(1, 0, n_ - 1, lo, hi, v);
}

void DepthSweepTree::add(std::size_t node, std::size_t l, std::size_t r, std::size_t lo,
                         std::size_t hi, int v) {
  if (hi < l || r < lo) return;
  if (lo <= l && r <= hi) {
    add_[node] += v;
    mx_[node] += v;
    return;
  }
  std::size_t mid = (l + r) / 2;
  add(2 * node, l, mid, lo, hi, v);
  add(2 * node + 1, mid + 1, r, lo, hi, v);
  mx_[node] = add_[node] + std::max(mx_[2 * node], mx_[2 * node + 1]);
}

std::size_t DepthSweepTree::argmax() const {
  std::size_t node = 1, l = 0, r = n_ - 1;
  while (l < r) {
    int rest = mx_[node] - add_[node];
    std::size_t mid = (l + r) / 2;
    if (mx_[2 * node] == rest) {
      node = 2 * node;
      r = mid;
    } else {
      node = 2 * node + 1;
      l = mid + 1;
    }
  }
  return l;
}

std::vector<std::pair<std::size_t, std::size_t>> DepthSweepTree::runs_at_least(int target) const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (n_) collect(1, 0, n_ - 1, 0, target, out);
  return out;
}

void DepthSweepTree::collect(std::size_t node, std::size_t l, std::size_t r, int offset,
                             int target, std::vector<std::pair<std::size_t, std::size_t>>& out) const {
  if (offset + mx_[node] < target) return;
  if (l == r) {
    if (!out.empty() && out.back().second + 1 == l) {
      out.back().second = l;
    } else {
      out.emplace_back(l, l);
    }
    return;
  }
  std::size_t mid = (l + r) / 2;
  collect(2 * node, l, mid, offset + add_[node], target, out);
  collect(2 * node + 1, mid + 1, r, offset + add_[node], target, out);
}

namespace {

// Visits x slots in order; at each slot the tree holds the depth profile over y.
template <class Visit>
void sweep(const std::vector<SlotRect>& rects, std::size_t nx, std::size_t ny, Visit&& visit) {
  if (nx == 0 || ny == 0) return;
  std::vector<std::vector<std::size_t>> starts(nx), ends(nx);
  for (std::size_t i = 0; i < rects.size(); ++i) {
    const auto& r = rects[i];
    if (r.x1 >= nx || r.y1 >= ny || r.x0 > r.x1 || r.y0 > r.y1) {
      throw InvalidParameter("slot rectangle out of range");
    }
    starts[r.x0].push_back(i);
    ends[r.x1].push_back(i);
  }
  DepthSweepTree tree(ny);
  for (std::size_t x = 0; x < nx; ++x) {
    for (auto i : starts[x]) tree.add(rects[i].y0, rects[i].y1, 1);
    if (visit(x, tree)) return;
    for (auto i : ends[x]) tree.add(rects[i].y0, rects[i].y1, -1);
  }
}

}  // namespace

SlotCell max_depth_slots(const std::vector<SlotRect>& rects, std::size_t nx, std::size_t ny) {
  SlotCell best;
  sweep(rects, nx, ny, [&](std::size_t x, const DepthSweepTree& t) {
    if (t.max() > best.depth) best = SlotCell{t.max(), x, t.argmax()};
    return false;
  });
  return best;
}

std::optional<SlotCell> first_slot_at_least(const std::vector<SlotRect>& rects, std::size_t nx,
                                            std::size_t ny, int target) {
  std::optional<SlotCell> hit;
  sweep(rects, nx, ny, [&](std::size_t x, const DepthSweepTree& t) {
    if (t.max() < target) return false;
    auto runs = t.runs_at_least(target);
    hit = SlotCell{t.max(), x, runs.front().first};
    return true;
  });
  return hit;
}

std::vector<SlotRect> slots_at_least(const std::vector<SlotRect>& rects, std::size_t nx,
                                     std::size_t ny, int target) {
  std::vector<SlotRect> out;
  std::vector<std::pair<std::size_t, std::size_t>> prev;
  std::vector<std::size_t> open;  // indices into out for runs extending through the previous column
  sweep(rects, nx, ny, [&](std::size_t x, const DepthSweepTree& t) {
    auto runs = t.max() >= target ? t.runs_at_least(target) : decltype(prev){};
    if (runs == prev) {
      for (auto i : open) out[i].x1 = x;
    } else {
      open.clear();
      for (auto [lo, hi] : runs) {
        open.push_back(out.size());
        out.push_back(SlotRect{x, x, lo, hi});
      }
      prev = std::move(runs);
    }
    return false;
  });
  return out;
}

SlotAxis::SlotAxis(std::vector<Scalar> coords) : cs_(std::move(coords)) {
  std::sort(cs_.begin(), cs_.end());
  cs_.erase(std::unique(cs_.begin(), cs_.end()), cs_.end());
}

std::size_t SlotAxis::slot_of(const Scalar& c) const {
  auto it = std::lower_bound(cs_.begin(), cs_.end(), c);
  if (it == cs_.end() || *it != c) throw InvalidParameter("SlotAxis: coordinate not indexed");
  return 2 * static_cast<std::size_t>(it - cs_.begin());
}

Scalar SlotAxis::value(std::size_t slot) const {
  if (slot % 2 == 0) return cs_[slot / 2];
  return (cs_[slot / 2] + cs_[slot / 2 + 1]) / Scalar(2);
}

DepthResult max_depth_2d(const std::vector<Box>& boxes) {
  if (boxes.empty()) return {};
  std::vector<Scalar> xs, ys;
  for (const auto& b : boxes) {
    if (b.dim() != 2) throw DimensionMismatch("max_depth_2d: boxes must be 2-dimensional");
    if (!b.is_finite()) throw InvalidParameter("max_depth_2d: boxes must be finite");
    xs.push_back(b.lo[0]);
    xs.push_back(b.hi[0]);
    ys.push_back(b.lo[1]);
    ys.push_back(b.hi[1]);
  }
  SlotAxis ax(std::move(xs)), ay(std::move(ys));
  std::vector<SlotRect> rects;
  rects.reserve(boxes.size());
  for (const auto& b : boxes) {
    rects.push_back({ax.slot_of(b.lo[0]), ax.slot_of(b.hi[0]), ay.slot_of(b.lo[1]), ay.slot_of(b.hi[1])});
  }
  SlotCell c = max_depth_slots(rects, ax.slots(), ay.slots());
  return {c.depth, Point{ax.value(c.x), ay.value(c.y)}};
}

}  // namespace hut
