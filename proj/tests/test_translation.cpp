#include <doctest.h>

#include "hut/continuous.hpp"
#include "hut/oracles.hpp"
#include "hut/translation.hpp"
#include "support.hpp"

using namespace hut;
using namespace hut::test;

namespace {

Box random_box(Rng& rng, std::size_t d, std::int64_t range, std::int64_t maxSide) {
  std::vector<Scalar> lo(d), hi(d);
  for (std::size_t i = 0; i < d; ++i) {
    lo[i] = rational(rng, -range, range, 2);
    hi[i] = lo[i] + rational(rng, 0, maxSide, 2);
  }
  return Box{lo, hi};
}

TpwbInstance random_tpwb(Rng& rng, std::size_t d) {
  TpwbInstance inst{random_set(rng, static_cast<std::size_t>(uniform(rng, 1, 4)), d, -6, 6, 2), {}};
  Point tau = random_point(rng, d, -3, 3, 2);
  auto m = static_cast<std::size_t>(uniform(rng, 1, 5));
  for (std::size_t k = 0; k < m; ++k) {
    if (uniform(rng, 0, 1)) {
      // A box around some translated point.
      const Point& p = inst.P[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(inst.P.size()) - 1))];
      Point x = p + tau;
      std::vector<Scalar> lo(d), hi(d);
      for (std::size_t i = 0; i < d; ++i) {
        lo[i] = x[i] - rational(rng, 0, 2, 2);
        hi[i] = x[i] + rational(rng, 0, 2, 2);
      }
      inst.boxes.push_back(Box{lo, hi});
    } else {
      inst.boxes.push_back(random_box(rng, d, 8, 4));
    }
  }
  return inst;
}

TpwoInstance random_tpwo(Rng& rng, std::size_t d, std::size_t maxSubs, std::size_t maxPts) {
  TpwoInstance inst;
  std::vector<Scalar> lo(d), hi(d);
  for (std::size_t i = 0; i < d; ++i) {
    lo[i] = rational(rng, -4, 4, 2);
    hi[i] = lo[i] + rational(rng, 1, 4, 2);
  }
  inst.targetBox = Box{lo, hi};
  inst.delta0 = Scalar(0);
  for (std::size_t i = 0; i < d; ++i) inst.delta0 = max(inst.delta0, inst.targetBox.side(i));
  inst.delta = inst.delta0 + rational(rng, 0, 3, 2) + Scalar(1, 4);
  auto subs = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(maxSubs)));
  for (std::size_t s = 0; s < subs; ++s) {
    TpwcSub sub{random_set(rng, static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(maxPts))), d, -2, 2, 2),
                PointSet(d)};
    auto m = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(maxPts)));
    for (std::size_t k = 0; k < m; ++k) {
      // Centers at cube-radius offsets from the target box so that the facets cut it.
      Point c = random_point(rng, d, -4, 4, 2);
      for (std::size_t i = 0; i < d; ++i) {
        auto side = uniform(rng, 0, 2);
        if (side == 0) c[i] = inst.targetBox.lo[i] + rational(rng, 0, 3, 2) - inst.delta;
        if (side == 1) c[i] = inst.targetBox.hi[i] - rational(rng, 0, 3, 2) + inst.delta;
      }
      sub.centers.push_back(c);
    }
    inst.subs.push_back(std::move(sub));
  }
  return inst;
}

TranslatedShapeInstance random_shapes(Rng& rng, std::size_t d, bool orthants) {
  TranslatedShapeInstance inst;
  inst.dim = d;
  auto shapes = static_cast<std::size_t>(uniform(rng, 1, 4));
  for (std::size_t s = 0; s < shapes; ++s) {
    std::vector<Box> sh;
    auto m = static_cast<std::size_t>(uniform(rng, 1, orthants ? 2 : 5));
    for (std::size_t k = 0; k < m; ++k) {
      Box b = random_box(rng, d, 4, 6);
      if (orthants) {
        for (std::size_t i = 0; i < d; ++i) {
          auto mode = uniform(rng, 0, 9);
          if (mode <= 4) b.lo[i] = Scalar::neg_inf();
          else if (mode <= 8) b.hi[i] = Scalar::pos_inf();
          else b.lo[i] = Scalar::neg_inf(), b.hi[i] = Scalar::pos_inf();
        }
      }
      sh.push_back(b);
    }
    inst.shapes.push_back(std::move(sh));
  }
  auto objs = static_cast<std::size_t>(uniform(rng, 1, 5));
  const std::int64_t spread = orthants ? 8 : 3;
  for (std::size_t k = 0; k < objs; ++k) {
    inst.objects.push_back(ShapeObject{random_point(rng, d, -spread, spread, 2),
                                       static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(shapes) - 1))});
  }
  return inst;
}

// Box spanning every finite facet coordinate of the translated shapes.
Box facet_span(const TranslatedShapeInstance& inst) {
  std::vector<Scalar> lo(inst.dim, Scalar(0)), hi(inst.dim, Scalar(0));
  for (const auto& o : inst.objects) {
    for (const auto& b : inst.shapes[o.shape]) {
      for (std::size_t i = 0; i < inst.dim; ++i) {
        for (const Scalar* v : {&b.lo[i], &b.hi[i]}) {
          if (!v->is_finite()) continue;
          lo[i] = min(lo[i], *v + o.offset[i]);
          hi[i] = max(hi[i], *v + o.offset[i]);
        }
      }
    }
  }
  return Box{lo, hi};
}

}  // namespace

TEST_CASE("hut and tpwc round-trip") {
  Rng rng(11);
  int yes = 0;
  for (int t = 0; t < 200; ++t) {
    auto d = static_cast<std::size_t>(uniform(rng, 1, 2));
    auto [P, Q] = related_sets(rng, static_cast<std::size_t>(uniform(rng, 1, 5)),
                               static_cast<std::size_t>(uniform(rng, 1, 5)), d, 10, 2);
    HutInstance h;
    h.P = P;
    h.Q = Q;
    h.delta = rational(rng, 1, 4, 2);
    TpwcInstance c = hut_to_tpwc(h);
    CHECK(tpwc_to_hut(c) == h);
    auto a = brute_tpwc(c);
    auto b = brute_hut_decide(P, Q, *h.delta, Variant::Directed);
    REQUIRE(a.has_value() == b.has_value());
    yes += a.has_value();
  }
  CHECK(yes > 20);
  CHECK(yes < 180);
}

TEST_CASE("P = Q is feasible at the identity") {
  PointSet P{Point{0, 0}, Point{3, 1}};
  HutInstance h;
  h.P = P;
  h.Q = P;
  h.delta = Scalar(1);
  auto t = brute_tpwc(hut_to_tpwc(h));
  REQUIRE(t);
  CHECK(t->dim() == 2);
  CHECK(hut_to_tpwc(h).centers == P);
}

TEST_CASE("hut_to_tpwc requires delta") {
  HutInstance h;
  h.P = PointSet{Point{0}};
  h.Q = PointSet{Point{0}};
  CHECK_THROWS_AS(hut_to_tpwc(h), InvalidParameter);
}

TEST_CASE("tpwo_to_tpwc preserves feasibility") {
  Rng rng(12);
  int yes = 0;
  for (int t = 0; t < 200; ++t) {
    auto inst = random_tpwo(rng, static_cast<std::size_t>(uniform(rng, 1, 2)), 3, 3);
    auto out = tpwo_to_tpwc(inst);
    auto a = brute_tpwo(inst);
    auto b = brute_tpwc(out);
    CAPTURE(t);
    if (a.has_value() != b.has_value()) {
      std::string dump = "box " + inst.targetBox.to_string() + " delta " + inst.delta.to_string();
      for (auto& s : inst.subs) {
        dump += "\n sub P:";
        for (auto& p : s.P) dump += " " + p.to_string();
        dump += " C:";
        for (auto& c : s.centers) dump += " " + c.to_string();
      }
      dump += "\n out P:";
      for (auto& p : out.P) dump += " " + p.to_string();
      dump += " C:";
      for (auto& c : out.centers) dump += " " + c.to_string();
      if (b) dump += "\n tau " + b->to_string();
      MESSAGE(dump);
    }
    REQUIRE(a.has_value() == b.has_value());
    yes += a.has_value();
  }
  MESSAGE("tpwo feasible: " << yes);
  CHECK(yes > 20);
  CHECK(yes < 180);
}

TEST_CASE("tpwo_to_tpwc small cases") {
  TpwoInstance inst;
  inst.targetBox = Box{{Scalar(0)}, {Scalar(1)}};
  inst.delta0 = Scalar(1);
  inst.delta = Scalar(2);
  inst.subs.push_back(TpwcSub{PointSet{Point{Scalar(1, 2)}}, PointSet{Point{Scalar(1, 2)}}});
  CHECK(brute_tpwc(tpwo_to_tpwc(inst)).has_value());

  // The only cube is out of reach of the target box and is pruned.
  inst.subs[0].centers = PointSet{Point{Scalar(10)}};
  auto out = tpwo_to_tpwc(inst);
  CHECK(out.centers.size() == 2);
  CHECK_FALSE(brute_tpwc(out).has_value());

  inst.delta = Scalar(1);
  CHECK_THROWS_AS(tpwo_to_tpwc(inst), InvalidParameter);
}

TEST_CASE("shapes_to_tpwb preserves feasibility") {
  Rng rng(13);
  int yes = 0;
  for (int t = 0; t < 200; ++t) {
    auto inst = random_shapes(rng, static_cast<std::size_t>(uniform(rng, 1, 2)), false);
    auto out = shapes_to_tpwb(inst);
    CHECK(out.P.size() == inst.objects.size());
    auto a = brute_shapes(inst);
    auto b = brute_tpwb(out);
    CAPTURE(t);
    REQUIRE(a.has_value() == b.has_value());
    yes += a.has_value();
  }
  MESSAGE("shapes feasible: " << yes);
  CHECK(yes > 20);
  CHECK(yes < 180);
}

TEST_CASE("shapes_to_tpwb small cases") {
  TranslatedShapeInstance inst;
  inst.dim = 1;
  inst.shapes = {{Box{{Scalar(-1)}, {Scalar(1)}}}};
  inst.objects = {ShapeObject{Point{Scalar(0)}, 0}};
  CHECK(brute_tpwb(shapes_to_tpwb(inst)).has_value());
  inst.objects.push_back(ShapeObject{Point{Scalar(5)}, 0});
  CHECK_FALSE(brute_tpwb(shapes_to_tpwb(inst)).has_value());
  inst.shapes[0][0].hi[0] = Scalar::pos_inf();
  CHECK_THROWS_AS(shapes_to_tpwb(inst), InvalidParameter);
}

TEST_CASE("orthant_shapes_to_tpwo preserves feasibility") {
  Rng rng(14);
  int yes = 0;
  for (int t = 0; t < 200; ++t) {
    auto inst = random_shapes(rng, static_cast<std::size_t>(uniform(rng, 1, 2)), true);
    REQUIRE(inst.is_orthant_variant());
    auto out = orthant_shapes_to_tpwo(inst, facet_span(inst));
    auto a = brute_shapes(inst);
    auto b = brute_tpwo(out);
    CAPTURE(t);
    REQUIRE(a.has_value() == b.has_value());
    yes += a.has_value();
  }
  MESSAGE("orthant shapes feasible: " << yes);
  CHECK(yes > 20);
  CHECK(yes < 180);
}

TEST_CASE("orthant_shapes_to_tpwo small cases") {
  TranslatedShapeInstance inst;
  inst.dim = 1;
  inst.shapes = {{Box{{Scalar(0)}, {Scalar::pos_inf()}}}};
  inst.objects = {ShapeObject{Point{Scalar(0)}, 0}};
  CHECK(brute_tpwo(orthant_shapes_to_tpwo(inst, Box{{Scalar(1)}, {Scalar(2)}})).has_value());
  CHECK_FALSE(brute_tpwo(orthant_shapes_to_tpwo(inst, Box{{Scalar(-3)}, {Scalar(-1)}})).has_value());
}

TEST_CASE("compose intersects solution sets") {
  Rng rng(15);
  for (int t = 0; t < 100; ++t) {
    auto a = random_shapes(rng, 2, false);
    auto b = random_shapes(rng, 2, false);
    auto c = compose(a, b);
    CHECK(compose(a, TranslatedShapeInstance{}) == a);
    auto inside = [](const TranslatedShapeInstance& s, const Point& x) {
      for (const auto& o : s.objects) {
        bool hit = false;
        for (const auto& box : s.shapes[o.shape]) hit = hit || box_contains(box, x - o.offset);
        if (!hit) return false;
      }
      return true;
    };
    for (int k = 0; k < 50; ++k) {
      Point x = random_point(rng, 2, -8, 8, 2);
      CHECK(inside(c, x) == (inside(a, x) && inside(b, x)));
      CHECK(inside(compose(b, a), x) == inside(c, x));
    }
  }
  TranslatedShapeInstance one;
  one.dim = 1;
  one.shapes = {{Box{{Scalar(0)}, {Scalar(4)}}}};
  one.objects = {ShapeObject{Point{Scalar(0)}, 0}};
  TranslatedShapeInstance two = one;
  two.objects[0].offset = Point{Scalar(2)};
  auto hit = brute_shapes(compose(one, two));
  REQUIRE(hit);
  CHECK(*hit == Point{Scalar(2)});
}

TEST_CASE("tpwb_to_tpwo_double_dim preserves feasibility") {
  Rng rng(16);
  int yes = 0;
  for (int t = 0; t < 200; ++t) {
    auto d = static_cast<std::size_t>(uniform(rng, 1, 2));
    auto inst = random_tpwb(rng, d);
    auto out = tpwb_to_tpwo_double_dim(inst);
    CHECK(out.dim() == 2 * d);
    CHECK(out.subs.size() == (std::size_t{1} << d));
    std::size_t pts = 0, cubes = 0;
    for (const auto& s : out.subs) pts += s.P.size(), cubes += s.centers.size();
    CHECK(pts == (std::size_t{1} << d) * inst.P.size());
    CHECK(cubes == (std::size_t{1} << d) * inst.boxes.size());
    auto a = brute_tpwb(inst);
    auto b = brute_tpwo(out, std::size_t{20000000});
    CAPTURE(t);
    REQUIRE(a.has_value() == b.has_value());
    yes += a.has_value();
  }
  MESSAGE("tpwb feasible: " << yes);
  CHECK(yes > 20);
  CHECK(yes < 180);
}

TEST_CASE("tpwb_to_tpwo_double_dim on a 1-D interval") {
  TpwbInstance inst{PointSet{Point{Scalar(1)}}, {Box{{Scalar(0)}, {Scalar(2)}}}};
  auto out = tpwb_to_tpwo_double_dim(inst);
  auto t = brute_tpwo(out);
  REQUIRE(t);
  // Feasible diagonal translations are exactly [-1, 1] x [-1, 1] restricted to the diagonal.
  CHECK(box_contains(Box{{Scalar(-1), Scalar(-1)}, {Scalar(1), Scalar(1)}}, *t));

  TpwbInstance bad{PointSet{Point{Scalar(0)}, Point{Scalar(10)}}, {Box{{Scalar(0)}, {Scalar(1)}}}};
  CHECK_FALSE(brute_tpwo(tpwb_to_tpwo_double_dim(bad)).has_value());
}

TEST_CASE("tpwo_to_uhut preserves feasibility") {
  Rng rng(17);
  int yes = 0;
  for (int t = 0; t < 200; ++t) {
    auto d = static_cast<std::size_t>(uniform(rng, 1, 2));
    auto inst = random_tpwo(rng, d, d == 1 ? 3 : 2, d == 1 ? 3 : 2);
    auto h = tpwo_to_uhut(inst);
    CHECK(h.variant == Variant::Undirected);
    auto a = brute_tpwo(inst);
    auto b = brute_hut_decide(h.P, h.Q, *h.delta, Variant::Undirected, std::size_t{20000000});
    CAPTURE(t);
    REQUIRE(a.has_value() == b.has_value());
    yes += a.has_value();
  }
  MESSAGE("tpwo->uhut feasible: " << yes);
  CHECK(yes > 20);
  CHECK(yes < 180);
}

TEST_CASE("tpwo_to_uhut small cases") {
  TpwoInstance inst;
  inst.targetBox = Box{{Scalar(0)}, {Scalar(1)}};
  inst.delta0 = Scalar(1);
  inst.delta = Scalar(2);
  inst.subs.push_back(TpwcSub{PointSet{Point{Scalar(1, 2)}}, PointSet{Point{Scalar(1, 2)}}});
  auto h = tpwo_to_uhut(inst);
  CHECK(brute_hut_decide(h.P, h.Q, *h.delta, Variant::Undirected).has_value());
  // The cube around the target centre is replaced by a single matched pair.
  CHECK(h.P.size() == 3);
  CHECK(h.Q.size() == 3);
}
