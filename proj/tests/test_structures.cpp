#include <doctest.h>

#include <algorithm>

#include "hut/depth_sweep.hpp"
#include "hut/envelope.hpp"
#include "hut/range_tree.hpp"
#include "hut/union_ops.hpp"
#include "support.hpp"

using namespace hut;
using namespace hut::test;

namespace {

Box random_box(Rng& rng, std::size_t d, std::int64_t range, std::int64_t maxDen) {
  std::vector<Scalar> lo, hi;
  for (std::size_t i = 0; i < d; ++i) {
    Scalar a = rational(rng, -range, range, maxDen), b = rational(rng, -range, range, maxDen);
    lo.push_back(min(a, b));
    hi.push_back(max(a, b));
  }
  return Box(lo, hi);
}

int naive_depth(const std::vector<Box>& boxes, const Point& p) {
  int c = 0;
  for (const auto& b : boxes) {
    bool in = true;
    for (std::size_t i = 0; i < p.dim(); ++i) in = in && b.lo[i] <= p[i] && p[i] <= b.hi[i];
    c += in;
  }
  return c;
}

// max |p + tau - q| over the nearest q, maximized over p.
Scalar directed_loop(const PointSet& P, const PointSet& Q, const Scalar& tau) {
  Scalar worst(0);
  for (const auto& p : P) {
    std::optional<Scalar> best;
    for (const auto& q : Q) {
      Scalar d = (p[0] + tau - q[0]).abs();
      if (!best || d < *best) best = d;
    }
    worst = max(worst, *best);
  }
  return worst;
}

}  // namespace

TEST_CASE("range tree: small cases") {
  RangeTree empty = rt_build(PointSet(2));
  CHECK_FALSE(rt_query_witness(empty, Box({-100, -100}, {100, 100})).has_value());
  RangeTree one = rt_build(PointSet{Point{0, 0}});
  CHECK(rt_query_witness(one, Box({-1, -1}, {1, 1})) == Point{0, 0});
  CHECK_FALSE(rt_query_witness(one, Box({1, -1}, {2, 1})).has_value());
}

TEST_CASE("range tree: witness existence equals a linear scan") {
  Rng rng(201);
  for (std::size_t d = 1; d <= 4; ++d) {
    for (int rep = 0; rep < 5; ++rep) {
      PointSet ps = random_set(rng, 100, d, -10, 10, 2);
      RangeTree rt = rt_build(ps);
      for (int q = 0; q < 100; ++q) {
        Box b = random_box(rng, d, 10, 2);
        bool any = std::any_of(ps.begin(), ps.end(), [&](const Point& p) { return box_contains(b, p); });
        auto w = rt_query_witness(rt, b);
        CHECK(w.has_value() == any);
        if (w) CHECK(box_contains(b, *w));
      }
    }
  }
}

TEST_CASE("depth sweep tree: range add and max against an array") {
  Rng rng(202);
  for (int rep = 0; rep < 50; ++rep) {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 40));
    DepthSweepTree t(n);
    std::vector<int> a(n, 0);
    for (int op = 0; op < 60; ++op) {
      std::size_t lo = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1));
      std::size_t hi = static_cast<std::size_t>(uniform(rng, static_cast<std::int64_t>(lo), static_cast<std::int64_t>(n) - 1));
      int v = static_cast<int>(uniform(rng, -2, 3));
      t.add(lo, hi, v);
      for (std::size_t i = lo; i <= hi; ++i) a[i] += v;
      const int mx = *std::max_element(a.begin(), a.end());
      CHECK(t.max() == mx);
      CHECK(t.argmax() == static_cast<std::size_t>(std::max_element(a.begin(), a.end()) - a.begin()));
      const int target = static_cast<int>(uniform(rng, -3, mx));
      std::vector<std::pair<std::size_t, std::size_t>> runs;
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] < target) continue;
        if (!runs.empty() && runs.back().second + 1 == i) {
          runs.back().second = i;
        } else {
          runs.emplace_back(i, i);
        }
      }
      CHECK(t.runs_at_least(target) == runs);
    }
  }
}

TEST_CASE("max_depth_2d: small cases") {
  CHECK(max_depth_2d({Box({0, 0}, {1, 1})}).depth == 1);
  DepthResult r = max_depth_2d({Box({0, 0}, {2, 2}), Box({1, 1}, {3, 3})});
  CHECK(r.depth == 2);
  REQUIRE(r.witness);
  CHECK(box_contains(Box({1, 1}, {2, 2}), *r.witness));
  CHECK(max_depth_2d({}).depth == 0);
}

TEST_CASE("max_depth_2d equals brute force over the endpoint grid") {
  Rng rng(203);
  for (int rep = 0; rep < 300; ++rep) {
    std::vector<Box> boxes;
    const int count = static_cast<int>(uniform(rng, 1, 12));
    for (int i = 0; i < count; ++i) boxes.push_back(random_box(rng, 2, 6, 2));
    std::vector<Scalar> xs, ys;
    for (const auto& b : boxes) {
      xs.insert(xs.end(), {b.lo[0], b.hi[0]});
      ys.insert(ys.end(), {b.lo[1], b.hi[1]});
    }
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    int best = -1;
    Point at;
    for (const auto& x : xs) {
      for (const auto& y : ys) {
        int dep = naive_depth(boxes, Point{x, y});
        if (dep > best) {
          best = dep;
          at = Point{x, y};
        }
      }
    }
    DepthResult r = max_depth_2d(boxes);
    CAPTURE(rep);
    CHECK(r.depth == best);
    REQUIRE(r.witness);
    CHECK(*r.witness == at);
    CHECK(depth_at(boxes, *r.witness) == static_cast<std::size_t>(best));
  }
}

TEST_CASE("envelope_1d: small cases") {
  PointSet zero{Point{0}};
  PiecewiseLinearFn f = envelope_1d(zero, zero, Variant::Directed);
  for (int t = -5; t <= 5; ++t) CHECK(f.eval(Scalar(t)) == Scalar(std::abs(t)));
  CHECK(f.eval(Scalar(-7, 3)) == Scalar(7, 3));

  PointSet P{Point{0}, Point{4}}, Q{Point{1}, Point{3}};
  PiecewiseLinearFn g = envelope_1d(P, Q, Variant::Directed);
  CHECK(g.eval(Scalar(0)) == Scalar(1));
  CHECK(g.minimum() == std::pair{Scalar(1), Scalar(0)});

  Optimum o = solve_1d_opt(zero, zero, Variant::Directed);
  CHECK(o.delta == Scalar(0));
  CHECK(o.tau == Point{0});
  o = solve_1d_opt(P, Q, Variant::Directed);
  CHECK(o.delta == Scalar(1));
  CHECK(o.tau == Point{0});
  o = solve_1d_opt(zero, PointSet{Point{7}}, Variant::Undirected);
  CHECK(o.delta == Scalar(0));
  CHECK(o.tau == Point{7});
}

TEST_CASE("envelope_1d agrees pointwise with the max-min loop") {
  Rng rng(204);
  for (int rep = 0; rep < 300; ++rep) {
    auto P = random_set(rng, static_cast<std::size_t>(uniform(rng, 1, 8)), 1, -20, 20, 4);
    auto Q = random_set(rng, static_cast<std::size_t>(uniform(rng, 1, 8)), 1, -20, 20, 4);
    const Variant v = rep % 2 ? Variant::Directed : Variant::Undirected;
    PiecewiseLinearFn f = envelope_1d(P, Q, v);
    std::vector<Scalar> taus = f.breaks;
    for (int i = 0; i < 50; ++i) taus.push_back(rational(rng, -45, 45, 6));
    for (const auto& tau : taus) {
      Scalar want = directed_loop(P, Q, tau);
      if (v == Variant::Undirected) want = max(want, directed_loop(Q, P, -tau));
      CHECK(f.eval(tau) == want);
    }
    // Leftmost minimizer: no smaller breakpoint reaches the minimum.
    auto [value, at] = f.minimum();
    for (const auto& b : f.breaks) {
      if (b < at) CHECK(f.eval(b) > value);
    }
    CHECK(f.leftmost_at_most(value) == at);
  }
}

TEST_CASE("piecewise linear building blocks") {
  PiecewiseLinearFn d = PiecewiseLinearFn::distance_to_set({Scalar(0), Scalar(4)});
  CHECK(d.eval(Scalar(2)) == Scalar(2));
  CHECK(d.eval(Scalar(5)) == Scalar(1));
  CHECK(d.eval(Scalar(-1)) == Scalar(1));
  PiecewiseLinearFn e = PiecewiseLinearFn::distance_to_set({Scalar(3)});
  PiecewiseLinearFn u = PiecewiseLinearFn::upper_envelope(d, e);
  Rng rng(205);
  for (int i = 0; i < 200; ++i) {
    Scalar t = rational(rng, -10, 10, 7);
    CHECK(u.eval(t) == max(d.eval(t), e.eval(t)));
  }
  CHECK_THROWS_AS(PiecewiseLinearFn::distance_to_set({}), InvalidParameter);
}
