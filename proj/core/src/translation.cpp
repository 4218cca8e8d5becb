#include "hut/translation.hpp"

#include <algorithm>
#include <set>

#include "hut/errors.hpp"

namespace hut {

namespace {

Scalar max_side(const Box& b) {
  Scalar s(0);
  for (std::size_t i = 0; i < b.dim(); ++i) s = max(s, b.side(i));
  return s;
}

Point axis_vector(std::size_t d, const Scalar& x) {
  Point v = Point::zero(d);
  if (d > 0) v[0] = x;
  return v;
}

bool cube_meets_box(const Point& c, const Scalar& delta, const Box& b) {
  for (std::size_t i = 0; i < c.dim(); ++i) {
    if (c[i] + delta < b.lo[i] || b.hi[i] < c[i] - delta) return false;
  }
  return true;
}

// Per-axis range of translations keeping every point of every sub-instance in
// the target box; lo > hi on some axis when no translation does.
std::optional<Box> translation_box(const TpwoInstance& inst) {
  const std::size_t d = inst.dim();
  std::optional<Box> tb;
  for (const auto& s : inst.subs) {
    for (const auto& p : s.P) {
      Box range{std::vector<Scalar>(d), std::vector<Scalar>(d)};
      for (std::size_t i = 0; i < d; ++i) {
        range.lo[i] = inst.targetBox.lo[i] - p[i];
        range.hi[i] = inst.targetBox.hi[i] - p[i];
      }
      if (!tb) {
        tb = range;
        continue;
      }
      for (std::size_t i = 0; i < d; ++i) {
        tb->lo[i] = max(tb->lo[i], range.lo[i]);
        tb->hi[i] = min(tb->hi[i], range.hi[i]);
      }
    }
  }
  return tb;
}

}  // namespace

void TpwcInstance::validate() const {
  if (!P.empty() && !centers.empty()) require_same_dim(P.dim(), centers.dim(), "TpwcInstance");
  if (delta.sign() <= 0) throw InvalidParameter("TpwcInstance: delta must be positive");
}

void TpwbInstance::validate() const {
  for (const auto& b : boxes) {
    if (!P.empty()) require_same_dim(b.dim(), P.dim(), "TpwbInstance");
    if (!b.is_finite()) throw InvalidParameter("TpwbInstance: boxes must be finite");
  }
}

void TpwoInstance::validate() const {
  const std::size_t d = dim();
  if (!targetBox.is_finite()) throw InvalidParameter("TpwoInstance: target box must be finite");
  if (delta0 != max_side(targetBox)) throw InvalidParameter("TpwoInstance: delta0 must be the largest target side");
  if (!(delta0 < delta)) throw InvalidParameter("TpwoInstance: delta must exceed delta0");
  for (const auto& s : subs) {
    if (!s.P.empty()) require_same_dim(s.P.dim(), d, "TpwoInstance points");
    if (!s.centers.empty()) require_same_dim(s.centers.dim(), d, "TpwoInstance centers");
  }
}

void TranslatedShapeInstance::validate() const {
  for (const auto& sh : shapes) {
    for (const auto& b : sh) require_same_dim(b.dim(), dim, "TranslatedShapeInstance box");
  }
  for (const auto& o : objects) {
    require_same_dim(o.offset.dim(), dim, "TranslatedShapeInstance offset");
    if (o.shape >= shapes.size()) throw InvalidParameter("TranslatedShapeInstance: shape id out of range");
  }
}

bool TranslatedShapeInstance::is_orthant_variant() const {
  for (const auto& sh : shapes) {
    for (const auto& b : sh) {
      for (std::size_t i = 0; i < b.dim(); ++i) {
        if (b.lo[i].is_finite() && b.hi[i].is_finite()) return false;
      }
    }
  }
  return true;
}

TpwcInstance hut_to_tpwc(const HutInstance& inst) {
  if (!inst.delta) throw InvalidParameter("hut_to_tpwc: delta is missing");
  if (inst.mode != Mode::Continuous || inst.variant != Variant::Directed) {
    throw InvalidParameter("hut_to_tpwc: continuous directed instance required");
  }
  TpwcInstance out{inst.P, inst.Q, *inst.delta};
  out.validate();
  return out;
}

HutInstance tpwc_to_hut(const TpwcInstance& inst) {
  inst.validate();
  HutInstance h;
  h.P = inst.P;
  h.Q = inst.centers;
  h.delta = inst.delta;
  return h;
}

TpwcInstance tpwo_to_tpwc(const TpwoInstance& inst) {
  inst.validate();
  const std::size_t d = inst.dim();
  const Scalar& delta = inst.delta;
  TpwcInstance out{PointSet(d), PointSet(d), delta};
  auto tb = translation_box(inst);
  if (!tb) return out;  // no points: every translation works

  // Gadget 0 sits left of every sub-instance and gadget 1 right of them, so a
  // shift by whole separation steps strands one of the gadget points.
  Point dv = Point(std::vector<Scalar>(d, delta));
  auto gadget = [&](std::size_t slot, bool upper) {
    Point x = axis_vector(d, Scalar(static_cast<std::int64_t>(9 * slot)) * delta) + inst.targetBox.lower_corner();
    // x + tau in [tb.lo + x, tb.lo + x + 2 delta] or [tb.hi + x - 2 delta, tb.hi + x].
    out.P.push_back(x);
    out.centers.push_back(upper ? x + Point(tb->hi) - dv : x + Point(tb->lo) + dv);
  };
  gadget(0, false);
  std::size_t j = 0;
  for (const auto& s : inst.subs) {
    ++j;
    Point u = axis_vector(d, Scalar(static_cast<std::int64_t>(9 * j)) * delta);
    for (const auto& p : s.P) out.P.push_back(p + u);
    for (const auto& c : s.centers) {
      if (cube_meets_box(c, delta, inst.targetBox)) out.centers.push_back(c + u);
    }
  }
  gadget(j + 1, true);
  return out;
}

TpwbInstance shapes_to_tpwb(const TranslatedShapeInstance& inst) {
  inst.validate();
  const std::size_t d = inst.dim;
  std::vector<std::size_t> used;
  for (const auto& o : inst.objects) used.push_back(o.shape);
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  for (auto z : used) {
    for (const auto& b : inst.shapes[z]) {
      if (!b.is_finite()) throw InvalidParameter("shapes_to_tpwb: unbounded boxes need orthant_shapes_to_tpwo");
    }
  }
  TpwbInstance out{PointSet(d), {}};
  if (inst.objects.empty()) return out;

  // Affine rescaling placing every used box and every offset in [0, 1/2]^d.
  std::vector<Scalar> oz(d), ot(d);
  bool haveBox = false;
  for (auto z : used) {
    for (const auto& b : inst.shapes[z]) {
      for (std::size_t i = 0; i < d; ++i) oz[i] = haveBox ? min(oz[i], b.lo[i]) : b.lo[i];
      haveBox = true;
    }
  }
  for (std::size_t k = 0; k < inst.objects.size(); ++k) {
    for (std::size_t i = 0; i < d; ++i) {
      ot[i] = k ? min(ot[i], inst.objects[k].offset[i]) : inst.objects[k].offset[i];
    }
  }
  Scalar extent(0);
  for (auto z : used) {
    for (const auto& b : inst.shapes[z]) {
      for (std::size_t i = 0; i < d; ++i) extent = max(extent, b.hi[i] - oz[i]);
    }
  }
  for (const auto& o : inst.objects) {
    for (std::size_t i = 0; i < d; ++i) extent = max(extent, o.offset[i] - ot[i]);
  }
  const Scalar scale = extent.sign() > 0 ? Scalar(1) / (Scalar(2) * extent) : Scalar(1);

  std::vector<std::size_t> rank(inst.shapes.size(), 0);
  for (std::size_t i = 0; i < used.size(); ++i) rank[used[i]] = i + 1;
  for (auto z : used) {
    Point u = axis_vector(d, Scalar(static_cast<std::int64_t>(10 * rank[z])));
    for (const auto& b : inst.shapes[z]) {
      Box nb{b.lo, b.hi};
      for (std::size_t i = 0; i < d; ++i) {
        nb.lo[i] = (b.lo[i] - oz[i]) * scale + u[i];
        nb.hi[i] = (b.hi[i] - oz[i]) * scale + u[i];
      }
      out.boxes.push_back(std::move(nb));
    }
  }
  for (const auto& o : inst.objects) {
    Point u = axis_vector(d, Scalar(static_cast<std::int64_t>(10 * rank[o.shape])));
    std::vector<Scalar> t(d);
    for (std::size_t i = 0; i < d; ++i) t[i] = (o.offset[i] - ot[i]) * scale;
    out.P.push_back(u - Point(std::move(t)));
  }
  return out;
}

TpwoInstance orthant_shapes_to_tpwo(const TranslatedShapeInstance& inst, const Box& bounding) {
  inst.validate();
  if (!inst.is_orthant_variant()) throw InvalidParameter("orthant_shapes_to_tpwo: every box must be an orthant");
  if (!bounding.is_finite()) throw InvalidParameter("orthant_shapes_to_tpwo: bounding box must be finite");
  const std::size_t d = inst.dim;
  require_same_dim(bounding.dim(), d, "orthant_shapes_to_tpwo");

  // Sub-instance per used shape with points -t; tau - t must stay in the target
  // box, which pins tau to exactly `bounding`.
  Box target = bounding;
  for (std::size_t k = 0; k < inst.objects.size(); ++k) {
    const Point& t = inst.objects[k].offset;
    for (std::size_t i = 0; i < d; ++i) {
      Scalar lo = bounding.lo[i] - t[i], hi = bounding.hi[i] - t[i];
      target.lo[i] = k ? min(target.lo[i], lo) : lo;
      target.hi[i] = k ? max(target.hi[i], hi) : hi;
    }
  }
  TpwoInstance out;
  out.targetBox = target;
  out.delta0 = max_side(target);
  // Cube side 3 * delta0, i.e. radius 3/2 delta0 (at least 1).
  out.delta = out.delta0.sign() > 0 ? Scalar(3, 2) * out.delta0 : Scalar(1);
  const Scalar& r = out.delta;

  std::vector<std::size_t> subOf(inst.shapes.size(), SIZE_MAX);
  for (const auto& o : inst.objects) {
    if (subOf[o.shape] == SIZE_MAX) {
      subOf[o.shape] = out.subs.size();
      TpwcSub s{PointSet(d), PointSet(d)};
      for (const auto& b : inst.shapes[o.shape]) {
        // Clip the orthant to the target box, then extend to a radius-r cube.
        std::vector<Scalar> c(d);
        for (std::size_t i = 0; i < d; ++i) {
          if (b.lo[i].is_finite()) {
            c[i] = max(b.lo[i], target.lo[i]) + r;
          } else if (b.hi[i].is_finite()) {
            c[i] = min(b.hi[i], target.hi[i]) - r;
          } else {
            c[i] = (target.lo[i] + target.hi[i]) / Scalar(2);
          }
        }
        s.centers.push_back(Point(std::move(c)));
      }
      out.subs.push_back(std::move(s));
    }
    out.subs[subOf[o.shape]].P.push_back(-o.offset);
  }
  return out;
}

TranslatedShapeInstance compose(const TranslatedShapeInstance& a, const TranslatedShapeInstance& b) {
  if (a.shapes.empty() && a.objects.empty()) return b;
  if (b.shapes.empty() && b.objects.empty()) return a;
  require_same_dim(a.dim, b.dim, "compose");
  TranslatedShapeInstance out = a;
  const std::size_t base = a.shapes.size();
  out.shapes.insert(out.shapes.end(), b.shapes.begin(), b.shapes.end());
  for (const auto& o : b.objects) out.objects.push_back(ShapeObject{o.offset, o.shape + base});
  return out;
}

TpwoInstance tpwb_to_tpwo_double_dim(const TpwbInstance& inst) {
  inst.validate();
  const std::size_t d = inst.P.empty() ? (inst.boxes.empty() ? 0 : inst.boxes[0].dim()) : inst.P.dim();
  const std::size_t D = 2 * d;
  TpwoInstance out;
  // Target: bounding box of the boxes, repeated on both coordinates of each pair.
  std::vector<Scalar> lo(D), hi(D);
  for (std::size_t k = 0; k < inst.boxes.size(); ++k) {
    const Box& b = inst.boxes[k];
    for (std::size_t i = 0; i < d; ++i) {
      Scalar l = k ? min(lo[2 * i], b.lo[i]) : b.lo[i];
      Scalar h = k ? max(hi[2 * i], b.hi[i]) : b.hi[i];
      lo[2 * i] = lo[2 * i + 1] = l;
      hi[2 * i] = hi[2 * i + 1] = h;
    }
  }
  out.targetBox = Box{lo, hi};
  out.delta0 = max_side(out.targetBox);
  out.delta = out.delta0 + Scalar(1);
  const Scalar& r = out.delta;

  PointSet fp(D);
  for (const auto& p : inst.P) {
    std::vector<Scalar> c(D);
    for (std::size_t i = 0; i < d; ++i) c[2 * i] = c[2 * i + 1] = p[i];
    fp.push_back(Point(std::move(c)));
  }
  // Pattern bit i clear: [a, inf) x (-inf, b]; set: (-inf, b] x [a, inf).
  for (std::size_t pattern = 0; pattern < (std::size_t{1} << d); ++pattern) {
    TpwcSub s{fp, PointSet(D)};
    for (const auto& b : inst.boxes) {
      std::vector<Scalar> c(D);
      for (std::size_t i = 0; i < d; ++i) {
        Scalar up = b.lo[i] + r, down = b.hi[i] - r;
        bool mirrored = (pattern >> i) & 1u;
        c[2 * i] = mirrored ? down : up;
        c[2 * i + 1] = mirrored ? up : down;
      }
      s.centers.push_back(Point(std::move(c)));
    }
    out.subs.push_back(std::move(s));
  }
  return out;
}

HutInstance tpwo_to_uhut(const TpwoInstance& inst) {
  inst.validate();
  const std::size_t d = inst.dim();
  HutInstance h;
  h.variant = Variant::Undirected;
  h.P = PointSet(d);
  h.Q = PointSet(d);
  h.meta["reduction"] = "tpwo->uhut";

  auto tb = translation_box(inst);
  const Box& B = inst.targetBox;
  // New radius r = 3 delta0 gives |tau - tau0| <= r/3 and B within b +- 2r/3.
  const Scalar r = inst.delta0.sign() > 0 ? Scalar(3) * inst.delta0 : Scalar(1);
  h.delta = r;
  h.meta["delta"] = r.to_string();
  if (!tb) {
    // No points to place: a single matched pair is a YES-instance.
    h.P.push_back(Point::zero(d));
    h.Q.push_back(Point::zero(d));
    return h;
  }
  Point tau0 = Point::zero(d);
  Point b = Point::zero(d);
  for (std::size_t i = 0; i < d; ++i) {
    tau0[i] = tb->lo[i];
    b[i] = (B.lo[i] + B.hi[i]) / Scalar(2);
  }

  const Scalar third = r / Scalar(3);
  std::size_t slot = 0;
  auto shift = [&]() { return axis_vector(d, Scalar(static_cast<std::int64_t>(9 * slot++)) * r); };
  // Translation gadgets, one at each end: pairs (x, y) with y - x = r and
  // y - x = width - r in shifted translation coordinates.
  auto gadget = [&](bool upper) {
    Point x = shift() + b;
    Point y = x;
    for (std::size_t i = 0; i < d; ++i) y[i] += upper ? (tb->hi[i] - tb->lo[i]) - r : r;
    h.P.push_back(x);
    h.Q.push_back(y);
  };
  gadget(false);

  for (const auto& s : inst.subs) {
    // Cubes clipped to B are orthants there; re-extend them to radius r.
    std::vector<Point> Q;
    for (const auto& c : s.centers) {
      if (!cube_meets_box(c, inst.delta, B)) continue;
      std::vector<Scalar> nc(d);
      for (std::size_t i = 0; i < d; ++i) {
        bool coversLo = !(B.lo[i] < c[i] - inst.delta);
        bool coversHi = !(c[i] + inst.delta < B.hi[i]);
        if (coversLo && coversHi) nc[i] = b[i];
        else if (coversLo) nc[i] = c[i] + inst.delta - r;
        else nc[i] = c[i] - inst.delta + r;
      }
      Q.emplace_back(std::move(nc));
    }
    // Translations are tau0 + t with t in [0, tb.hi - tb.lo]; points move by tau0.
    std::vector<Point> P;
    for (const auto& p : s.P) P.push_back(p + tau0);

    std::vector<Point> kept;
    bool trivial = false;
    for (const auto& q : Q) {
      bool near = true, core = true;
      for (std::size_t i = 0; i < d; ++i) {
        Scalar off = (q[i] - b[i]).abs();
        if (Scalar(5) * third < off) near = false;
        if (third < off) core = false;
      }
      if (core) trivial = true;
      if (near) kept.push_back(q);
    }
    Point u = shift();
    if (trivial) {
      h.P.push_back(b + u);
      h.Q.push_back(b + u);
      continue;
    }
    // Anchors b + 3c/2 for the c in {-2r/3, 0, 2r/3}^d nearest to each kept center.
    std::set<Point> anchors;
    for (const auto& q : kept) {
      std::vector<Scalar> a(d);
      for (std::size_t i = 0; i < d; ++i) {
        Scalar best;
        Scalar bestDist;
        for (int k = -1; k <= 1; ++k) {
          Scalar cand = Scalar(2 * k) * third;
          Scalar dist = (q[i] - b[i] - cand).abs();
          if (k == -1 || dist < bestDist) {
            best = cand;
            bestDist = dist;
          }
        }
        a[i] = b[i] + Scalar(3, 2) * best;
      }
      anchors.insert(Point(std::move(a)));
    }
    for (const auto& p : P) h.P.push_back(p + u);
    for (const auto& a : anchors) h.P.push_back(a + u);
    for (const auto& q : kept) h.Q.push_back(q + u);
  }
  gadget(true);
  h.meta["tau0"] = tau0.to_string();
  return h;
}

}  // namespace hut
