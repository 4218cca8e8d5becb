#include <doctest.h>

#include <algorithm>

#include "hut/continuous.hpp"
#include "hut/discrete.hpp"
#include "hut/oracles.hpp"
#include "hut/reductions.hpp"
#include "support.hpp"

using namespace hut;
using namespace hut::test;

namespace {

std::vector<std::int64_t> ints(Rng& rng, std::size_t n, std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> v(n);
  for (auto& x : v) x = uniform(rng, lo, hi);
  return v;
}

std::vector<Scalar> sorted_rationals(Rng& rng, std::size_t n, std::int64_t lo, std::int64_t hi, std::int64_t den) {
  std::vector<Scalar> v(n);
  for (auto& x : v) x = rational(rng, lo, hi, den);
  std::sort(v.begin(), v.end());
  return v;
}

// Rationals in [0, 1) with denominator up to 8.
std::vector<Scalar> unit_rationals(Rng& rng, std::size_t n) {
  std::vector<Scalar> v(n);
  for (auto& x : v) {
    std::int64_t den = uniform(rng, 1, 8);
    x = Scalar(uniform(rng, 0, den - 1), den);
  }
  std::sort(v.begin(), v.end());
  return v;
}

Scalar alignment_value(const LinearAlignmentInstance& la, std::size_t s, const Scalar& c) {
  Scalar worst(0);
  for (std::size_t i = 0; i < la.A.size(); ++i) worst = max(worst, (la.A[i] + c - la.B[i + s]).abs());
  return worst;
}

FopzAeeFormula random_formula(Rng& rng) {
  FopzAeeFormula f;
  for (auto* set : {&f.A, &f.B, &f.C}) {
    auto n = static_cast<std::size_t>(uniform(rng, 1, 5));
    for (std::size_t i = 0; i < n; ++i) set->push_back({uniform(rng, -8, 8)});
  }
  auto h = static_cast<std::size_t>(uniform(rng, 1, 3));
  for (std::size_t i = 0; i < h; ++i) {
    f.atoms.push_back(LinearAtom{{uniform(rng, -2, 2)}, {uniform(rng, -2, 2)}, {uniform(rng, -2, 2)}, uniform(rng, -6, 6)});
  }
  auto clauses = static_cast<std::size_t>(uniform(rng, 1, 3));
  for (std::size_t c = 0; c < clauses; ++c) {
    std::vector<Literal> clause;
    auto lits = static_cast<std::size_t>(uniform(rng, 1, 3));
    for (std::size_t l = 0; l < lits; ++l) {
      clause.push_back(Literal{static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(h) - 1)),
                               uniform(rng, 0, 1) == 1});
    }
    f.dnf.push_back(std::move(clause));
  }
  return f;
}

}  // namespace

TEST_CASE("undirected_to_directed preserves the optimum") {
  Rng rng(21);
  for (int t = 0; t < 300; ++t) {
    auto d = static_cast<std::size_t>(uniform(rng, 1, 2));
    auto maxSize = d == 1 ? 5 : 3;
    auto [P, Q] = related_sets(rng, static_cast<std::size_t>(uniform(rng, 1, maxSize)),
                               static_cast<std::size_t>(uniform(rng, 1, maxSize)), d, 10, 2);
    auto red = undirected_to_directed(P, Q);
    CHECK(red.P.size() == P.size() + Q.size());
    CHECK(red.Q.size() == P.size() + Q.size());
    Optimum u = brute_hut_optimize(P, Q, Variant::Undirected);
    Optimum dd = brute_hut_optimize(red.P, red.Q, Variant::Directed);
    CAPTURE(t);
    CHECK(u.delta == dd.delta);
    CHECK(u.tau == dd.tau);
  }
  PointSet one{Point{Scalar(3)}};
  auto red = undirected_to_directed(one, one);
  CHECK(optimize(red.P, red.Q, Variant::Directed).delta == Scalar(0));
}

TEST_CASE("linear alignment reduces to 1-D optimization") {
  Rng rng(22);
  for (int t = 0; t < 300; ++t) {
    auto n = static_cast<std::size_t>(uniform(rng, 1, 5));
    auto m = static_cast<std::size_t>(uniform(rng, static_cast<std::int64_t>(n), 8));
    LinearAlignmentInstance la{sorted_rationals(rng, n, -10, 10, 4), sorted_rationals(rng, m, -10, 10, 4)};
    auto h = linear_alignment_to_hut1d(la);
    Optimum got = optimize(h.P, h.Q, Variant::Directed);
    AlignmentResult want = brute_linear_alignment(la);
    CAPTURE(t);
    CHECK(got.delta == want.value);
    auto [s, c] = alignment_from_translation(got.tau[0], Scalar::parse(h.meta.at("M")));
    REQUIRE(s + n <= m);
    CHECK(alignment_value(la, s, c) == want.value);
  }
  LinearAlignmentInstance zero{{Scalar(0)}, {Scalar(0)}};
  auto h = linear_alignment_to_hut1d(zero);
  Optimum o = optimize(h.P, h.Q, Variant::Directed);
  CHECK(o.delta == Scalar(0));
  CHECK(alignment_from_translation(o.tau[0], Scalar::parse(h.meta.at("M"))) == std::pair<std::size_t, Scalar>{0, Scalar(0)});
  LinearAlignmentInstance half{{Scalar(0)}, {Scalar(1, 2)}};
  h = linear_alignment_to_hut1d(half);
  o = optimize(h.P, h.Q, Variant::Directed);
  CHECK(o.delta == Scalar(0));
  CHECK(alignment_from_translation(o.tau[0], Scalar::parse(h.meta.at("M"))).second == Scalar(1, 2));
  CHECK_THROWS_AS(linear_alignment_to_hut1d(LinearAlignmentInstance{{Scalar(0), Scalar(1)}, {Scalar(0)}}),
                  InvalidParameter);
}

TEST_CASE("necklace chain preserves the optimum") {
  Rng rng(23);
  for (int t = 0; t < 200; ++t) {
    auto n = static_cast<std::size_t>(uniform(rng, 1, 6));
    NecklaceInstance nk{unit_rationals(rng, n), unit_rationals(rng, n)};
    auto la = necklace_to_linear_alignment(nk);
    CHECK(la.B.size() == 2 * n);
    auto h = linear_alignment_to_hut1d(la);
    Optimum got = optimize(h.P, h.Q, Variant::Directed);
    AlignmentResult want = brute_necklace(nk);
    CAPTURE(t);
    CHECK(got.delta == want.value);
    CHECK(brute_linear_alignment(la).value == want.value);
  }
  NecklaceInstance same{{Scalar(0), Scalar(1, 3)}, {Scalar(0), Scalar(1, 3)}};
  CHECK(brute_necklace(same).value == Scalar(0));
  NecklaceInstance single{{Scalar(1, 5)}, {Scalar(3, 4)}};
  CHECK(brute_necklace(single).value == Scalar(0));
}

TEST_CASE("maxconvlb reduction flips the answer") {
  Rng rng(24);
  int yes = 0;
  for (int t = 0; t < 500; ++t) {
    auto n = static_cast<std::size_t>(uniform(rng, 1, 6));
    MaxConvLbInstance mc{ints(rng, n, 1, 10), ints(rng, n, 1, 10), ints(rng, n, 1, 20)};
    auto h = maxconvlb_to_dischut1d(mc);
    CHECK(h.P.size() == n);
    CHECK(h.Q.size() == 2 * n + 1);
    CHECK(h.T->size() == n - 1);
    bool src = brute_maxconvlb(mc);
    yes += src;
    CAPTURE(t);
    CHECK(brute_dischut(*h.T, h.P, h.Q, *h.delta, Variant::Directed).has_value() == !src);
    CHECK(solve_discrete(*h.T, h.P, h.Q, *h.delta, Variant::Directed).has_value() == !src);
  }
  CHECK(yes > 50);
  CHECK(yes < 450);

  MaxConvLbInstance a{{1, 1}, {1, 1}, {5, 2}};
  auto h = maxconvlb_to_dischut1d(a);
  CHECK(brute_maxconvlb(a));
  CHECK_FALSE(brute_dischut(*h.T, h.P, h.Q, *h.delta, Variant::Directed).has_value());
  MaxConvLbInstance b{{1, 1}, {1, 1}, {5, 3}};
  h = maxconvlb_to_dischut1d(b);
  CHECK_FALSE(brute_maxconvlb(b));
  CHECK(brute_dischut(*h.T, h.P, h.Q, *h.delta, Variant::Directed).has_value());
  CHECK_THROWS_AS(maxconvlb_to_dischut1d(MaxConvLbInstance{{0}, {1}, {1}}), InvalidParameter);
}

TEST_CASE("maxconvlb: letting T range over k = 1 makes every instance YES") {
  Rng rng(25);
  for (int t = 0; t < 200; ++t) {
    auto n = static_cast<std::size_t>(uniform(rng, 1, 6));
    MaxConvLbInstance mc{ints(rng, n, 1, 10), ints(rng, n, 1, 10), ints(rng, n, 1, 20)};
    auto h = maxconvlb_to_dischut1d(mc);
    const std::int64_t M = std::stoll(h.meta.at("M"));
    PointSet T = *h.T;
    T.push_back(Point{Scalar(-(M + mc.C[0]))});
    CHECK(brute_dischut(T, h.P, h.Q, *h.delta, Variant::Directed).has_value());
  }
}

TEST_CASE("dischut_to_boxcover flips the answer") {
  Rng rng(26);
  int yes = 0;
  for (int t = 0; t < 300; ++t) {
    auto d = static_cast<std::size_t>(uniform(rng, 1, 3));
    auto T = random_set(rng, static_cast<std::size_t>(uniform(rng, 1, 8)), d, -6, 6, 1);
    auto [P, Q] = related_sets(rng, static_cast<std::size_t>(uniform(rng, 1, 8)),
                               static_cast<std::size_t>(uniform(rng, 1, 8)), d, 8, 1);
    Scalar delta = rational(rng, 0, 4, 2);
    bool src = brute_dischut(T, P, Q, delta, Variant::Directed).has_value();
    yes += src;
    CAPTURE(t);
    CHECK(boxcover_decide(dischut_to_boxcover(T, P, Q, delta)) == !src);
  }
  CHECK(yes > 20);
  CHECK(yes < 280);

  PointSet zero{Point{Scalar(0)}};
  CHECK_FALSE(boxcover_decide(dischut_to_boxcover(zero, zero, zero, Scalar(1))));
  CHECK(boxcover_decide(dischut_to_boxcover(zero, zero, PointSet{Point{Scalar(40)}}, Scalar(1))));
  PointSet four(4);
  four.push_back(Point{0, 0, 0, 0});
  CHECK_THROWS_AS(dischut_to_boxcover(four, four, four, Scalar(1)), DimensionMismatch);
}

TEST_CASE("fopz formulas reduce to discrete instances") {
  Rng rng(27);
  int truths = 0;
  for (int t = 0; t < 200; ++t) {
    auto f = random_formula(rng);
    auto h = fopz_aee_to_dischut(f);
    CHECK(h.dim() == 2 * f.atoms.size());
    bool src = brute_fopz(f);
    truths += src;
    CAPTURE(t);
    CHECK(brute_dischut(*h.T, h.P, h.Q, *h.delta, Variant::Directed).has_value() == !src);
    CHECK(solve_discrete(*h.T, h.P, h.Q, *h.delta, Variant::Directed).has_value() == !src);
  }
  MESSAGE("true formulas: " << truths);
  CHECK(truths > 20);
  CHECK(truths < 180);

  // a - b <= c over A = B = C = {0}
  FopzAeeFormula f;
  f.A = f.B = f.C = {{0}};
  f.atoms = {LinearAtom{{1}, {-1}, {1}, 0}};
  f.dnf = {{Literal{0, false}}};
  auto h = fopz_aee_to_dischut(f);
  CHECK(brute_fopz(f));
  CHECK_FALSE(brute_dischut(*h.T, h.P, h.Q, *h.delta, Variant::Directed).has_value());
  // a <= c with A = {5}, C = {0}
  f.A = {{5}};
  f.atoms = {LinearAtom{{1}, {0}, {1}, 0}};
  h = fopz_aee_to_dischut(f);
  CHECK_FALSE(brute_fopz(f));
  CHECK(brute_dischut(*h.T, h.P, h.Q, *h.delta, Variant::Directed).has_value());
  f.atoms.assign(4, f.atoms[0]);
  CHECK_THROWS_AS(fopz_aee_to_dischut(f), InvalidParameter);
}
