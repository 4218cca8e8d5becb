#include "hut/continuous.hpp"

#include <algorithm>
#include <stdexcept>

#include "hut/depth_sweep.hpp"
#include "hut/errors.hpp"
#include "hut/range_tree.hpp"
#include "hut/union_ops.hpp"

namespace hut {

namespace detail {

Box closed_cube(const Point& center, const Scalar& delta) {
  Box b;
  b.lo.reserve(center.dim());
  b.hi.reserve(center.dim());
  for (const auto& c : center.coords) {
    b.lo.push_back(c - delta);
    b.hi.push_back(c + delta);
  }
  return b;
}

}  // namespace detail

namespace {

void require_inputs(const PointSet& P, const PointSet& Q, std::size_t dim, const char* what) {
  if (P.empty() || Q.empty()) throw UndefinedDistance(std::string(what) + ": empty point set");
  require_same_dim(P.dim(), Q.dim(), what);
  if (dim && P.dim() != dim) {
    throw DimensionMismatch(std::string(what) + ": requires dimension " + std::to_string(dim));
  }
}

void require_positive(const Scalar& delta, const char* what) {
  if (delta.sign() <= 0) throw InvalidParameter(std::string(what) + ": delta must be positive");
}

std::optional<std::size_t> first_within(const Point& a, const PointSet& S, const Scalar& delta) {
  for (std::size_t j = 0; j < S.size(); ++j) {
    if (!(delta < linf_distance(a, S[j]))) return j;
  }
  return std::nullopt;
}

FeasibleTranslation must_certify(const PointSet& P, const PointSet& Q, const Scalar& delta,
                                 Variant variant, const Point& tau) {
  auto ft = certify(P, Q, delta, variant, tau);
  if (!ft) throw std::logic_error("solver produced an infeasible witness " + tau.to_string());
  return *std::move(ft);
}

}  // namespace

std::optional<FeasibleTranslation> certify(const PointSet& P, const PointSet& Q, const Scalar& delta,
                                           Variant variant, const Point& tau) {
  FeasibleTranslation ft{tau, {}, {}};
  for (const auto& p : P) {
    auto j = first_within(p + tau, Q, delta);
    if (!j) return std::nullopt;
    ft.match.push_back(*j);
  }
  if (variant == Variant::Undirected) {
    PointSet moved = P.translated(tau);
    for (const auto& q : Q) {
      auto i = first_within(q, moved, delta);
      if (!i) return std::nullopt;
      ft.reverse_match.push_back(*i);
    }
  }
  return ft;
}

bool check_certificate(const PointSet& P, const PointSet& Q, const Scalar& delta, Variant variant,
                       const FeasibleTranslation& ft) {
  if (ft.match.size() != P.size()) return false;
  for (std::size_t i = 0; i < P.size(); ++i) {
    if (ft.match[i] >= Q.size() || delta < linf_distance(P[i] + ft.tau, Q[ft.match[i]])) return false;
  }
  if (variant == Variant::Undirected) {
    if (ft.reverse_match.size() != Q.size()) return false;
    for (std::size_t j = 0; j < Q.size(); ++j) {
      if (ft.reverse_match[j] >= P.size() ||
          delta < linf_distance(P[ft.reverse_match[j]] + ft.tau, Q[j])) {
        return false;
      }
    }
  }
  return true;
}

// ---- 1-D -------------------------------------------------------------------

std::optional<FeasibleTranslation> detail::decide_1d_closed(const PointSet& P, const PointSet& Q,
                                                            const Scalar& delta, Variant variant) {
  auto t = envelope_1d(P, Q, variant).leftmost_at_most(delta);
  if (!t) return std::nullopt;
  return must_certify(P, Q, delta, variant, Point{*t});
}

std::optional<FeasibleTranslation> decide_1d(const PointSet& P, const PointSet& Q, const Scalar& delta,
                                             Variant variant) {
  require_positive(delta, "decide_1d");
  return detail::decide_1d_closed(P, Q, delta, variant);
}

// ---- 2-D -------------------------------------------------------------------

namespace {

// Disjoint global slot rectangles covering the union of one layer's squares.
std::vector<SlotRect> layer_pieces(const std::vector<Box>& squares, const SlotAxis& gx, const SlotAxis& gy) {
  std::vector<Scalar> xs, ys;
  for (const auto& b : squares) {
    xs.push_back(b.lo[0]);
    xs.push_back(b.hi[0]);
    ys.push_back(b.lo[1]);
    ys.push_back(b.hi[1]);
  }
  SlotAxis lx(std::move(xs)), ly(std::move(ys));
  std::vector<SlotRect> local;
  for (const auto& b : squares) {
    local.push_back({lx.slot_of(b.lo[0]), lx.slot_of(b.hi[0]), ly.slot_of(b.lo[1]), ly.slot_of(b.hi[1])});
  }
  auto first = [](const SlotAxis& l, const SlotAxis& g, std::size_t s) {
    return g.slot_of(l.coords()[s / 2]) + (s % 2);
  };
  auto last = [](const SlotAxis& l, const SlotAxis& g, std::size_t s) {
    return s % 2 == 0 ? g.slot_of(l.coords()[s / 2]) : g.slot_of(l.coords()[s / 2 + 1]) - 1;
  };
  std::vector<SlotRect> out;
  for (const auto& r : slots_at_least(local, lx.slots(), ly.slots(), 1)) {
    out.push_back({first(lx, gx, r.x0), last(lx, gx, r.x1), first(ly, gy, r.y0), last(ly, gy, r.y1)});
  }
  return out;
}

}  // namespace

std::optional<FeasibleTranslation> detail::decide_2d_closed(const PointSet& P, const PointSet& Q,
                                                            const Scalar& delta, Variant variant) {
  require_inputs(P, Q, 2, "decide_2d");
  const std::size_t n = P.size(), m = Q.size();
  std::vector<std::vector<Box>> cube(n, std::vector<Box>(m));
  std::vector<Scalar> xs, ys;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      cube[i][j] = closed_cube(Q[j] - P[i], delta);
      xs.push_back(cube[i][j].lo[0]);
      xs.push_back(cube[i][j].hi[0]);
      ys.push_back(cube[i][j].lo[1]);
      ys.push_back(cube[i][j].hi[1]);
    }
  }
  SlotAxis ax(std::move(xs)), ay(std::move(ys));
  const std::size_t nx = ax.slots(), ny = ay.slots();

  std::vector<SlotRect> pieces;
  for (std::size_t i = 0; i < n; ++i) {
    auto r = layer_pieces(cube[i], ax, ay);
    pieces.insert(pieces.end(), r.begin(), r.end());
  }

  std::optional<SlotCell> cell;
  if (variant == Variant::Directed) {
    cell = first_slot_at_least(pieces, nx, ny, static_cast<int>(n));
  } else {
    // Second pass with the roles of P and Q switched; the first pass's
    // full-depth region is one extra layer, so the target is m + 1.
    std::vector<SlotRect> second = slots_at_least(pieces, nx, ny, static_cast<int>(n));
    if (second.empty()) return std::nullopt;
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<Box> layer(n);
      for (std::size_t i = 0; i < n; ++i) layer[i] = cube[i][j];
      auto r = layer_pieces(layer, ax, ay);
      second.insert(second.end(), r.begin(), r.end());
    }
    cell = first_slot_at_least(second, nx, ny, static_cast<int>(m) + 1);
  }
  if (!cell) return std::nullopt;
  return must_certify(P, Q, delta, variant, Point{ax.value(cell->x), ay.value(cell->y)});
}

std::optional<FeasibleTranslation> decide_2d(const PointSet& P, const PointSet& Q, const Scalar& delta,
                                             Variant variant) {
  require_positive(delta, "decide_2d");
  return detail::decide_2d_closed(P, Q, delta, variant);
}

// ---- 3-D -------------------------------------------------------------------

std::optional<FeasibleTranslation> detail::decide_3d_closed(const PointSet& P, const PointSet& Q,
                                                            const Scalar& delta) {
  require_inputs(P, Q, 3, "decide_3d_lopsided");
  const std::size_t n = P.size(), m = Q.size();
  std::vector<std::vector<Box>> layer(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& q : Q) layer[i].push_back(closed_cube(q - P[i], delta));
  }

  // A cube that misses every cube of some other layer holds no feasible translation.
  std::vector<std::vector<Box>> alive(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& c : layer[i]) {
      bool ok = true;
      for (std::size_t k = 0; k < n && ok; ++k) {
        if (k == i) continue;
        ok = std::any_of(layer[k].begin(), layer[k].end(),
                         [&](const Box& o) { return box_intersect(c, o).has_value(); });
      }
      if (ok) alive[i].push_back(c);
    }
    if (alive[i].empty()) return std::nullopt;
  }

  std::vector<Point> cand;
  auto visit = [&](const std::vector<std::size_t>& subset) {
    std::vector<Box> cubes;
    std::vector<std::uint8_t> group;
    for (std::size_t g = 0; g < subset.size(); ++g) {
      for (const auto& c : alive[subset[g]]) {
        cubes.push_back(c);
        group.push_back(static_cast<std::uint8_t>(g));
      }
    }
    auto v = union_lower_corners_3d(cubes, group, (1u << subset.size()) - 1);
    cand.insert(cand.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
  };
  for (std::size_t a = 0; a < n; ++a) {
    visit({a});
    for (std::size_t b = a + 1; b < n; ++b) {
      visit({a, b});
      for (std::size_t c = b + 1; c < n; ++c) visit({a, b, c});
    }
  }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

  std::vector<RangeTree> rt;
  rt.reserve(n);
  for (std::size_t i = 0; i < n; ++i) rt.emplace_back(Q.translated(-P[i]));

  for (const auto& v : cand) {
    Box probe = closed_cube(v, delta);
    FeasibleTranslation ft{v, {}, {}};
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      auto hit = rt[i].query_index(probe);
      ok = hit.has_value();
      if (ok) ft.match.push_back(*hit);
    }
    if (ok) return ft;
  }
  (void)m;
  return std::nullopt;
}

std::optional<FeasibleTranslation> decide_3d_lopsided(const PointSet& P, const PointSet& Q,
                                                      const Scalar& delta) {
  require_positive(delta, "decide_3d_lopsided");
  return detail::decide_3d_closed(P, Q, delta);
}

// ---- optimization ----------------------------------------------------------

std::vector<Scalar> candidate_deltas(const PointSet& P, const PointSet& Q) {
  require_inputs(P, Q, 0, "candidate_deltas");
  std::vector<Scalar> out{Scalar(0)};
  for (std::size_t i = 0; i < P.dim(); ++i) {
    std::vector<Scalar> off;
    for (const auto& p : P) {
      for (const auto& q : Q) off.push_back(q[i] - p[i]);
    }
    std::sort(off.begin(), off.end());
    off.erase(std::unique(off.begin(), off.end()), off.end());
    for (std::size_t a = 0; a < off.size(); ++a) {
      for (std::size_t b = a + 1; b < off.size(); ++b) out.push_back((off[b] - off[a]) / Scalar(2));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Optimum optimize_with(const PointSet& P, const PointSet& Q, Variant variant, const DecideFn& decide) {
  std::vector<Scalar> cand = candidate_deltas(P, Q);
  auto top = decide(P, Q, cand.back(), variant);
  if (!top) throw std::logic_error("optimize: largest candidate threshold infeasible");
  std::size_t lo = 0, hi = cand.size() - 1;
  FeasibleTranslation best = *std::move(top);
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (auto r = decide(P, Q, cand[mid], variant)) {
      hi = mid;
      best = *std::move(r);
    } else {
      lo = mid + 1;
    }
  }
  return {cand[lo], best.tau};
}

Optimum optimize(const PointSet& P, const PointSet& Q, Variant variant) {
  require_inputs(P, Q, 0, "optimize");
  switch (P.dim()) {
    case 1: return optimize_with(P, Q, variant, detail::decide_1d_closed);
    case 2: return optimize_with(P, Q, variant, detail::decide_2d_closed);
    case 3:
      if (variant != Variant::Directed) {
        throw Unsupported("optimize: 3-D continuous solver is directed only");
      }
      return optimize_with(P, Q, variant, [](const PointSet& a, const PointSet& b, const Scalar& d, Variant) {
        return detail::decide_3d_closed(a, b, d);
      });
    default: throw Unsupported("optimize: continuous solvers cover dimensions 1 to 3");
  }
}

}  // namespace hut
