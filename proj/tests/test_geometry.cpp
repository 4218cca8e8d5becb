#include <doctest.h>

#include <climits>

#include "hut/geometry.hpp"
#include "support.hpp"

using namespace hut;
using namespace hut::test;

namespace {

Box box1(Scalar lo, Scalar hi) { return Box({lo}, {hi}); }

}  // namespace

TEST_CASE("scalar text encoding round-trips") {
  CHECK(Scalar::parse("-3/4") == Scalar(-3, 4));
  CHECK(Scalar::parse("6/8").to_string() == "3/4");
  CHECK(Scalar::parse("+5").to_string() == "5");
  CHECK(Scalar::parse("-0").to_string() == "0");
  CHECK(Scalar::parse("+inf").is_pos_inf());
  CHECK(Scalar::parse("inf").is_pos_inf());
  CHECK(Scalar::parse("-inf").to_string() == "-inf");
  CHECK(Scalar::pos_inf().to_string() == "+inf");
  for (const char* bad : {"", "1/0", "4/-2", "abc", "1/", "/2", "1.5", "2//3", "1 /2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Scalar::parse(bad), FormatError);
  }
  Rng rng(101);
  for (int i = 0; i < 2000; ++i) {
    Scalar x = rational(rng, -1000000, 1000000, 1000);
    if (i % 3 == 0) x = x * Scalar(INT64_MAX) * x;  // big values
    CHECK(Scalar::parse(x.to_string()) == x);
  }
}

TEST_CASE("scalar arithmetic is exact across the int64 boundary") {
  const Scalar big(INT64_MAX);
  const Scalar sum = big + big;
  CHECK(sum.to_string() == "18446744073709551614");
  CHECK(sum - big == big);
  CHECK((sum / Scalar(2)).to_int64() == INT64_MAX);
  CHECK(Scalar(INT64_MIN).abs().to_string() == "9223372036854775808");
  CHECK(-Scalar(INT64_MIN) > big);
  CHECK(Scalar(1, 3) + Scalar(1, 6) == Scalar(1, 2));
  CHECK(Scalar(7, 2).floor() == Scalar(3));
  CHECK(Scalar(-7, 2).floor() == Scalar(-4));
  CHECK(Scalar(-7, 2).ceil() == Scalar(-3));
  CHECK(Scalar(5).is_integer());
  CHECK_FALSE(Scalar(5, 2).is_integer());
  CHECK_THROWS_AS(Scalar(5, 2).to_int64(), InvalidParameter);
  CHECK_THROWS_AS((big + big).to_int64(), InvalidParameter);
  CHECK_THROWS_AS(Scalar(1, 0), InvalidParameter);
  CHECK_THROWS_AS(Scalar::pos_inf() + Scalar::neg_inf(), InvalidParameter);
  CHECK(Scalar::neg_inf() < Scalar(INT64_MIN));
  CHECK(Scalar::pos_inf() + Scalar(3) == Scalar::pos_inf());

  // Field identities on random big and small values, checked against GMP directly.
  Rng rng(102);
  for (int i = 0; i < 2000; ++i) {
    Scalar a = rational(rng, -50, 50, 9), b = rational(rng, -50, 50, 9);
    if (i % 2) a = a * Scalar(INT64_MAX);
    const mpq_class qa = a.to_mpq(), qb = b.to_mpq();
    CHECK((a + b).to_mpq() == qa + qb);
    CHECK((a - b).to_mpq() == qa - qb);
    CHECK((a * b).to_mpq() == qa * qb);
    if (!b.is_zero()) CHECK((a / b).to_mpq() == qa / qb);
    CHECK(((a < b) == (qa < qb)));
    CHECK((a == b) == (qa == qb));
    CHECK((a.hash() == Scalar(a.to_mpq()).hash()));
  }
}

TEST_CASE("linf_distance") {
  CHECK(linf_distance(Point{0, 0}, Point{0, 0}) == Scalar(0));
  CHECK(linf_distance(Point{1, -2}, Point{4, 0}) == Scalar(3));
  CHECK(linf_distance(Point{Scalar(1, 2)}, Point{Scalar(-1, 3)}) == Scalar(5, 6));
  CHECK_THROWS_AS(linf_distance(Point{0}, Point{0, 0}), DimensionMismatch);

  Rng rng(103);
  for (int i = 0; i < 500; ++i) {
    const std::size_t d = static_cast<std::size_t>(uniform(rng, 1, 4));
    Point p = random_point(rng, d, -20, 20, 4), q = random_point(rng, d, -20, 20, 4),
          r = random_point(rng, d, -20, 20, 4);
    CHECK(linf_distance(p, q) == linf_distance(q, p));
    CHECK((linf_distance(p, q).is_zero() == (p == q)));
    CHECK(linf_distance(p, r) <= linf_distance(p, q) + linf_distance(q, r));
  }
}

TEST_CASE("box_contains and minkowski_cube") {
  const Box unit({0, 0}, {1, 1});
  CHECK(box_contains(unit, Point{1, 1}));
  CHECK_FALSE(box_contains(unit, Point{Scalar(1), Scalar(1001, 1000)}));
  const Box orthant({0, Scalar::neg_inf()}, {Scalar::pos_inf(), 2});
  CHECK(box_contains(orthant, Point{100, 2}));
  CHECK(orthant.is_orthant());
  CHECK_FALSE(unit.is_orthant());

  CHECK(minkowski_cube(Point{0, 0}, Scalar(1)) == Box({-1, -1}, {1, 1}));
  CHECK(minkowski_cube(Point{3}, Scalar(1, 2)) == box1(Scalar(5, 2), Scalar(7, 2)));
  CHECK_THROWS_AS(minkowski_cube(Point{0}, Scalar(0)), InvalidParameter);
  CHECK_THROWS_AS(minkowski_cube(Point{0}, Scalar(-1)), InvalidParameter);

  Rng rng(104);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t d = static_cast<std::size_t>(uniform(rng, 1, 3));
    Point p = random_point(rng, d, -5, 5, 2), q = random_point(rng, d, -5, 5, 2);
    Scalar delta = rational(rng, 1, 6, 2);
    CHECK(box_contains(minkowski_cube(q, delta), p) == (linf_distance(p, q) <= delta));
  }
}

TEST_CASE("box_intersect") {
  CHECK(box_intersect(box1(0, 2), box1(1, 3)) == box1(1, 2));
  CHECK_FALSE(box_intersect(box1(0, 1), box1(2, 3)).has_value());
  CHECK(box_intersect(box1(0, Scalar::pos_inf()), box1(Scalar::neg_inf(), 0)) == box1(0, 0));
  CHECK_THROWS_AS(box_intersect(box1(0, 1), Box({0, 0}, {1, 1})), DimensionMismatch);
  CHECK_FALSE(boxes_overlap_open(box1(0, 1), box1(1, 2)));
  CHECK(boxes_overlap_open(box1(0, 2), box1(1, 3)));

  // Membership in the intersection is membership in both.
  Rng rng(105);
  for (int i = 0; i < 500; ++i) {
    auto rnd_box = [&] {
      Point a = random_point(rng, 2, -4, 4, 2), b = random_point(rng, 2, -4, 4, 2);
      return Box({min(a[0], b[0]), min(a[1], b[1])}, {max(a[0], b[0]), max(a[1], b[1])});
    };
    Box a = rnd_box(), b = rnd_box();
    auto c = box_intersect(a, b);
    for (int k = 0; k < 10; ++k) {
      Point p = random_point(rng, 2, -4, 4, 2);
      CHECK((c && box_contains(*c, p)) == (box_contains(a, p) && box_contains(b, p)));
    }
  }
}

TEST_CASE("point sets") {
  PointSet s{Point{1, 2}, Point{3, 4}};
  CHECK(s.dim() == 2);
  CHECK(s.translated(Point{1, 1})[1] == Point{4, 5});
  CHECK(s.scaled(Scalar(1, 2))[0] == Point{Scalar(1, 2), 1});
  CHECK(s.concat(s).size() == 4);
  PointSet e(3);
  CHECK_THROWS_AS(e.push_back(Point{1}), DimensionMismatch);
}
