#include "hut/gadgets.hpp"

#include <algorithm>
#include <stdexcept>

#include "hut/errors.hpp"

namespace hut {

namespace {

std::int64_t checked_pow(std::size_t n, std::size_t e) {
  std::int64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (__builtin_mul_overflow(r, static_cast<std::int64_t>(n), &r)) {
      throw InvalidParameter("gadgets: hypercube side overflows");
    }
  }
  return r;
}

std::size_t digit_of(std::int64_t x, std::size_t n, std::size_t digits, std::size_t pos) {
  return static_cast<std::size_t>((x / checked_pow(n, digits - 1 - pos)) % static_cast<std::int64_t>(n));
}

const Scalar kHalf(1, 2);

Scalar closed_hi(std::int64_t end) { return Scalar(end) - kHalf; }

void require_lambda(const Scalar& lambda, const Scalar& lo, const char* what) {
  if (lambda < lo || Scalar(1) < lambda) throw InvalidParameter(std::string(what) + ": lambda out of range");
}

// Maximal half-open runs of [from, to) whose cells satisfy pred.
template <class Pred>
std::vector<std::pair<std::int64_t, std::int64_t>> runs_where(std::int64_t from, std::int64_t to, Pred&& pred) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t x = from; x < to; ++x) {
    if (!pred(x)) continue;
    if (!out.empty() && out.back().second == x) {
      out.back().second = x + 1;
    } else {
      out.emplace_back(x, x + 1);
    }
  }
  return out;
}

// Per-axis (position, value) pairs fixed by a non-edge.
std::vector<std::vector<std::pair<std::size_t, std::size_t>>> fixed_digits(const KPartiteHypergraph& H,
                                                                          const std::vector<std::size_t>& e,
                                                                          std::size_t d) {
  const std::size_t b = H.k / d;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> out(d);
  for (auto v : e) {
    std::size_t cls = H.class_of(v);
    out[cls / b].emplace_back(cls % b, H.index_of(v));
  }
  return out;
}

void require_nonedge(const KPartiteHypergraph& H, const std::vector<std::size_t>& e) {
  if (e.size() != H.u) throw InvalidParameter("gadgets: non-edge must have u vertices");
  std::vector<std::size_t> classes;
  for (auto v : e) {
    if (v >= H.k * H.n) throw InvalidParameter("gadgets: vertex out of range");
    classes.push_back(H.class_of(v));
  }
  std::sort(classes.begin(), classes.end());
  if (std::adjacent_find(classes.begin(), classes.end()) != classes.end()) {
    throw InvalidParameter("gadgets: non-edge vertices must lie in distinct classes");
  }
  if (H.has_edge(e)) throw InvalidParameter("gadgets: expected a non-edge, got an edge");
}

Box full_box(std::size_t d, const Scalar& lo, const Scalar& hi) {
  return Box{std::vector<Scalar>(d, lo), std::vector<Scalar>(d, hi)};
}

}  // namespace

std::int64_t positional_index(const std::vector<std::size_t>& digits, std::size_t n) {
  std::int64_t r = 0;
  for (auto x : digits) {
    if (x >= n) throw InvalidParameter("positional_index: digit out of range");
    if (__builtin_mul_overflow(r, static_cast<std::int64_t>(n), &r)) {
      throw InvalidParameter("positional_index: overflow");
    }
    r += static_cast<std::int64_t>(x);
  }
  return r;
}

std::vector<std::size_t> positional_digits(std::int64_t index, std::size_t n, std::size_t count) {
  if (n == 0 || index < 0 || index >= checked_pow(n, count)) {
    throw InvalidParameter("positional_digits: index out of range");
  }
  std::vector<std::size_t> out(count);
  for (std::size_t i = count; i-- > 0;) {
    out[i] = static_cast<std::size_t>(index % static_cast<std::int64_t>(n));
    index /= static_cast<std::int64_t>(n);
  }
  return out;
}

std::int64_t hypercube_side(const KPartiteHypergraph& H, std::size_t d) {
  if (d == 0 || H.k % d != 0) throw InvalidParameter("gadgets: d must divide k");
  return checked_pow(H.n, H.k / d);
}

Point encode_cell(const KPartiteHypergraph& H, const std::vector<std::size_t>& tuple, std::size_t d) {
  hypercube_side(H, d);
  if (tuple.size() != H.k) throw InvalidParameter("encode_cell: tuple must have k entries");
  const std::size_t b = H.k / d;
  Point out = Point::zero(d);
  for (std::size_t r = 0; r < d; ++r) {
    std::vector<std::size_t> dig(tuple.begin() + static_cast<std::ptrdiff_t>(r * b),
                                 tuple.begin() + static_cast<std::ptrdiff_t>((r + 1) * b));
    out[r] = Scalar(positional_index(dig, H.n));
  }
  return out;
}

std::vector<std::size_t> decode_cell(const KPartiteHypergraph& H, const Point& cell, std::size_t d) {
  hypercube_side(H, d);
  if (cell.dim() != d) throw DimensionMismatch("decode_cell: cell dimension");
  const std::size_t b = H.k / d;
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < d; ++r) {
    if (!cell[r].is_integer()) throw InvalidParameter("decode_cell: cell origin must be integral");
    auto dig = positional_digits(cell[r].to_int64(), H.n, b);
    out.insert(out.end(), dig.begin(), dig.end());
  }
  return out;
}

std::vector<Box> cover_feasible_region(const KPartiteHypergraph& H, const std::vector<std::size_t>& nonedge,
                                       std::size_t d) {
  const std::int64_t N = hypercube_side(H, d);
  H.validate();
  require_nonedge(H, nonedge);
  const std::size_t b = H.k / d;
  auto fixed = fixed_digits(H, nonedge, d);
  std::vector<Box> out;
  for (std::size_t r = 0; r < d; ++r) {
    if (fixed[r].empty()) continue;
    auto feasible = runs_where(0, N, [&](std::int64_t x) {
      for (auto [pos, val] : fixed[r]) {
        if (digit_of(x, H.n, b, pos) != val) return true;
      }
      return false;
    });
    for (auto [a, e] : feasible) {
      Box box = full_box(d, Scalar(0), closed_hi(N));
      box.lo[r] = Scalar(a);
      box.hi[r] = closed_hi(e);
      out.push_back(std::move(box));
    }
  }
  return out;
}

SliceDecomposition slice_axis(std::size_t n, std::size_t digits, const std::vector<std::size_t>& fixed,
                              const Scalar& lambda) {
  require_lambda(lambda, Scalar(0), "slice_axis");
  if (n == 0) throw InvalidParameter("slice_axis: n must be positive");
  std::vector<std::size_t> J;
  for (std::size_t t = 0; t < digits; ++t) {
    if (std::find(fixed.begin(), fixed.end(), t) == fixed.end()) J.push_back(t);
  }
  const auto want = static_cast<std::size_t>((lambda * Scalar(static_cast<std::int64_t>(digits))).floor().to_int64());
  J.resize(std::min(J.size(), want));

  SliceDecomposition sd;
  sd.side = checked_pow(n, digits);
  sd.runs = runs_where(0, sd.side, [&](std::int64_t x) {
    for (auto t : J) {
      if (digit_of(x, n, digits, t) != 0) return false;
    }
    return true;
  });
  const std::int64_t count = checked_pow(n, J.size());
  for (std::int64_t c = 0; c < count; ++c) {
    auto vals = positional_digits(c, n, J.size());
    std::int64_t off = 0;
    for (std::size_t i = 0; i < J.size(); ++i) {
      off += static_cast<std::int64_t>(vals[i]) * checked_pow(n, digits - 1 - J[i]);
    }
    sd.offsets.push_back(off);
  }
  std::sort(sd.offsets.begin(), sd.offsets.end());
  return sd;
}

TranslatedShapeInstance build_translated_shape(const KPartiteHypergraph& H, const Scalar& lambda,
                                               std::size_t d) {
  require_lambda(lambda, Scalar(0), "build_translated_shape");
  const std::int64_t N = hypercube_side(H, d);
  H.validate();
  const std::size_t b = H.k / d;
  const Scalar frameLo(-N), frameHi = closed_hi(2 * N);

  TranslatedShapeInstance inst;
  inst.dim = d;
  inst.shapes.push_back({full_box(d, Scalar(0), closed_hi(N))});
  inst.objects.push_back(ShapeObject{Point::zero(d), 0});

  for (const auto& e : H.non_edges()) {
    auto fixed = fixed_digits(H, e, d);
    std::vector<Box> shape;
    Box bbox = full_box(d, Scalar(0), closed_hi(N));
    std::vector<std::vector<std::int64_t>> offsets(d, std::vector<std::int64_t>{0});
    for (std::size_t r = 0; r < d; ++r) {
      if (fixed[r].empty()) continue;
      std::vector<std::size_t> pos;
      for (auto [p, v] : fixed[r]) pos.push_back(p);
      SliceDecomposition sd = slice_axis(H.n, b, pos, lambda);
      offsets[r] = sd.offsets;
      bbox.lo[r] = Scalar(sd.runs.front().first);
      bbox.hi[r] = closed_hi(sd.runs.back().second);
      // Complement of the prototype slice within the frame [-N, 2N).
      std::int64_t at = -N;
      auto gap = [&](std::int64_t a, std::int64_t z) {
        if (a >= z) return;
        Box g = full_box(d, frameLo, frameHi);
        g.lo[r] = Scalar(a);
        g.hi[r] = closed_hi(z);
        shape.push_back(std::move(g));
      };
      for (auto [a, z] : sd.runs) {
        gap(at, a);
        at = z;
      }
      gap(at, 2 * N);
    }
    for (const auto& c : cover_feasible_region(H, e, d)) {
      if (auto clipped = box_intersect(c, bbox)) shape.push_back(std::move(*clipped));
    }

    TranslatedShapeInstance part;
    part.dim = d;
    part.shapes.push_back(std::move(shape));
    std::vector<std::size_t> idx(d, 0);
    while (true) {
      Point off = Point::zero(d);
      for (std::size_t r = 0; r < d; ++r) off[r] = Scalar(offsets[r][idx[r]]);
      part.objects.push_back(ShapeObject{std::move(off), 0});
      std::size_t r = d;
      while (r > 0 && ++idx[r - 1] == offsets[r - 1].size()) idx[--r] = 0;
      if (r == 0) break;
    }
    inst = compose(inst, part);
  }
  return inst;
}

HutInstance lb_pipeline_lopsided(const KPartiteHypergraph& H, const Scalar& lambda, std::size_t d) {
  if (d % 2 == 1) --d;
  if (d < 2) throw InvalidParameter("lb_pipeline_lopsided: dimension must be at least 2");
  const std::size_t h = d / 2;
  TranslatedShapeInstance shapes = build_translated_shape(H, lambda, h);
  HutInstance out = tpwc_to_hut(tpwo_to_tpwc(tpwb_to_tpwo_double_dim(shapes_to_tpwb(shapes))));
  out.meta["pipeline"] = "lopsided";
  out.meta["lambda"] = lambda.to_string();
  out.meta["shape_dim"] = std::to_string(h);
  out.meta["shapes"] = std::to_string(shapes.shapes.size());
  out.meta["objects"] = std::to_string(shapes.objects.size());
  return out;
}

std::string PrefixCoveringSequences::label(std::size_t cls) const {
  const std::size_t t = k / 3;
  if (t == 0 || cls >= k) throw InvalidParameter("PrefixCoveringSequences::label: class out of range");
  return std::string(1, "xyz"[cls / t]) + std::to_string(cls % t + 1);
}

PrefixCoveringSequences prefix_covering_sequences(std::size_t k) {
  if (k == 0 || k % 9 != 0) throw InvalidParameter("prefix_covering_sequences: k must be a positive multiple of 9");
  const std::size_t t = k / 3, tail = 2 * k / 9;
  PrefixCoveringSequences s;
  s.k = k;
  for (std::size_t a = 0; a < 3; ++a) {
    const std::size_t own = a * t, next = ((a + 1) % 3) * t;
    for (std::size_t i = 0; i < t; ++i) s.seq[a].push_back(own + i);
    for (std::size_t i = t; i > tail; --i) s.seq[a].push_back(next + i - 1);
  }
  return s;
}

std::optional<std::array<std::size_t, 3>> prefix_cover(const PrefixCoveringSequences& s,
                                                       const std::vector<std::size_t>& classes) {
  const std::size_t L = s.length(), k = s.k;
  for (std::size_t i = 0; i <= L; ++i) {
    for (std::size_t j = 0; j <= L; ++j) {
      for (std::size_t l = 0; l <= L; ++l) {
        const std::size_t mn = std::min({i, j, l}), mx = std::max({i, j, l});
        if (9 * (mn + mx) > 4 * k || 3 * (i + j + l) > 2 * k + 3) continue;
        const std::array<std::size_t, 3> len{i, j, l};
        bool all = true;
        for (auto c : classes) {
          bool in = false;
          for (std::size_t a = 0; a < 3 && !in; ++a) {
            in = std::find(s.seq[a].begin(), s.seq[a].begin() + static_cast<std::ptrdiff_t>(len[a]), c) !=
                 s.seq[a].begin() + static_cast<std::ptrdiff_t>(len[a]);
          }
          all = all && in;
        }
        if (all) return len;
      }
    }
  }
  return std::nullopt;
}

std::int64_t ForbiddenPattern::side() const { return checked_pow(n, digits); }

bool ForbiddenPattern::contains(const std::array<std::int64_t, 3>& cell) const {
  for (const auto& c : constraints) {
    if (digit_of(cell[c.axis], n, digits, c.position) != c.value) return false;
  }
  return true;
}

namespace {

struct AxisBlocks {
  std::vector<std::size_t> positions;  // ascending
  std::int64_t blockLen = 0;
  std::vector<std::int64_t> starts;    // ascending
  std::size_t innerExp = 0;            // innermost uniform run has n^innerExp blocks
};

}  // namespace

QuasiDiagonalDecomposition quasi_diagonal_decompose(const ForbiddenPattern& f, const Scalar& lambda,
                                                    std::size_t k) {
  require_lambda(lambda, Scalar(2, 3), "quasi_diagonal_decompose");
  if (f.n == 0) throw InvalidParameter("quasi_diagonal_decompose: n must be positive");
  if (f.constraints.empty()) throw InvalidParameter("quasi_diagonal_decompose: no constraints");
  const auto& e = f.prefix;
  const std::size_t mn = std::min({e[0], e[1], e[2]}), mx = std::max({e[0], e[1], e[2]});
  if (9 * (mn + mx) > 4 * k || 3 * (e[0] + e[1] + e[2]) > 2 * k + 3) {
    throw InvalidParameter("quasi_diagonal_decompose: prefix exponents violate the balance bounds");
  }
  std::array<AxisBlocks, 3> ax;
  for (const auto& c : f.constraints) {
    if (c.axis >= 3 || c.position >= f.digits || c.value >= f.n) {
      throw InvalidParameter("quasi_diagonal_decompose: constraint out of range");
    }
    if (c.position >= e[c.axis]) throw InvalidParameter("quasi_diagonal_decompose: constraint outside prefix");
    for (const auto& o : f.constraints) {
      if (o.axis == c.axis && o.position == c.position && o.value != c.value) {
        throw InvalidParameter("quasi_diagonal_decompose: contradictory constraints");
      }
    }
    auto& pos = ax[c.axis].positions;
    if (std::find(pos.begin(), pos.end(), c.position) == pos.end()) pos.push_back(c.position);
  }
  const std::int64_t N = f.side();
  std::vector<std::size_t> used;
  for (std::size_t r = 0; r < 3; ++r) {
    auto& a = ax[r];
    if (a.positions.empty()) continue;
    used.push_back(r);
    std::sort(a.positions.begin(), a.positions.end());
    const std::size_t last = a.positions.back();
    a.blockLen = checked_pow(f.n, f.digits - 1 - last);
    a.innerExp = a.positions.size() == 1 ? last : last - a.positions[a.positions.size() - 2] - 1;
    for (std::int64_t x = 0; x < N; x += a.blockLen) {
      bool ok = true;
      for (const auto& c : f.constraints) {
        if (c.axis == r && digit_of(x, f.n, f.digits, c.position) != c.value) ok = false;
      }
      if (ok) a.starts.push_back(x);
    }
  }

  QuasiDiagonalDecomposition qd;
  auto element = [&](const std::vector<std::pair<std::size_t, std::int64_t>>& at) {
    Box b = full_box(3, Scalar::neg_inf(), Scalar::pos_inf());
    for (auto [r, s] : at) {
      b.lo[r] = Scalar(s);
      b.hi[r] = closed_hi(s + ax[r].blockLen);
    }
    return b;
  };
  auto offset = [](const std::vector<std::pair<std::size_t, std::int64_t>>& at) {
    Point p = Point::zero(3);
    for (auto [r, s] : at) p[r] = Scalar(s);
    return p;
  };

  if (used.size() == 1) {
    const std::size_t r = used[0];
    qd.chainAxis = r;
    qd.prototype.push_back(element({{r, ax[r].starts[0]}}));
    for (auto s : ax[r].starts) qd.offsets.push_back(offset({{r, s - ax[r].starts[0]}}));
    return qd;
  }

  std::vector<std::size_t> plane = used;
  if (used.size() == 3) {
    std::size_t s = used[0];
    for (auto r : used) {
      if (ax[r].starts.size() < ax[s].starts.size()) s = r;
    }
    qd.slabAxis = s;
    plane.erase(std::find(plane.begin(), plane.end(), s));
  }
  std::size_t c = plane[0], p = plane[1];
  if (ax[p].positions.size() > 1 ||
      (ax[c].positions.size() == 1 && ax[p].starts.size() < ax[c].starts.size())) {
    std::swap(c, p);
  }
  if (ax[p].positions.size() != 1) throw std::logic_error("quasi_diagonal_decompose: partner axis not uniform");
  qd.chainAxis = c;
  qd.partnerAxis = p;

  const Scalar cap = (Scalar(1) - lambda) * Scalar(static_cast<std::int64_t>(2 * k / 3 + 1));
  const auto qexp = static_cast<std::size_t>(cap.floor().to_int64());
  const std::size_t len = static_cast<std::size_t>(checked_pow(f.n, std::min(ax[c].innerExp, qexp)));
  const std::int64_t stride = checked_pow(f.n, f.digits - ax[p].positions[0]);
  const std::int64_t p0 = ax[p].starts[0];
  const auto pcount = static_cast<std::int64_t>(ax[p].starts.size());
  const auto back = static_cast<std::int64_t>(len) - 1;

  std::vector<std::int64_t> slabStarts{0};
  if (qd.slabAxis) slabStarts = ax[*qd.slabAxis].starts;
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<std::pair<std::size_t, std::int64_t>> at{{c, ax[c].starts[i]},
                                                         {p, p0 + (static_cast<std::int64_t>(i) - back) * stride}};
    if (qd.slabAxis) at.emplace_back(*qd.slabAxis, slabStarts[0]);
    qd.prototype.push_back(element(at));
  }
  for (auto s : slabStarts) {
    for (std::size_t seg = 0; seg < ax[c].starts.size(); seg += len) {
      for (std::int64_t bidx = -back; bidx < pcount; ++bidx) {
        std::vector<std::pair<std::size_t, std::int64_t>> at{{c, ax[c].starts[seg] - ax[c].starts[0]},
                                                             {p, (bidx + back) * stride}};
        if (qd.slabAxis) at.emplace_back(*qd.slabAxis, s - slabStarts[0]);
        qd.offsets.push_back(offset(at));
      }
    }
  }
  return qd;
}

std::vector<Box> quasi_diagonal_complement(const QuasiDiagonalDecomposition& qd) {
  if (qd.prototype.empty() || !qd.chainAxis) throw InvalidParameter("quasi_diagonal_complement: empty decomposition");
  const std::size_t d = qd.prototype[0].dim();
  std::vector<Box> out;
  // Orthant bounded above by `hi` on axis a and below by `lo` on axis b (either optional).
  auto orthant = [&](std::optional<std::pair<std::size_t, Scalar>> below,
                     std::optional<std::pair<std::size_t, Scalar>> above) {
    Box o = full_box(d, Scalar::neg_inf(), Scalar::pos_inf());
    if (below) o.hi[below->first] = below->second;
    if (above) o.lo[above->first] = above->second;
    out.push_back(std::move(o));
  };
  // On every axis an element spans cells [lo, end).
  auto lo = [&](std::size_t i, std::size_t a) { return qd.prototype[i].lo[a]; };
  auto end = [&](std::size_t i, std::size_t a) { return qd.prototype[i].hi[a] + kHalf; };
  const std::size_t c = *qd.chainAxis, last = qd.prototype.size() - 1;

  orthant(std::pair{c, lo(0, c) - kHalf}, std::nullopt);
  orthant(std::nullopt, std::pair{c, end(last, c)});
  if (qd.partnerAxis) {
    const std::size_t p = *qd.partnerAxis;
    orthant(std::pair{p, lo(0, p) - kHalf}, std::nullopt);
    orthant(std::nullopt, std::pair{p, end(last, p)});
    for (std::size_t i = 0; i < last; ++i) {
      orthant(std::pair{c, lo(i + 1, c) - kHalf}, std::pair{p, end(i, p)});
      orthant(std::pair{p, lo(i + 1, p) - kHalf}, std::pair{c, end(i, c)});
    }
  }
  if (qd.slabAxis) {
    const std::size_t s = *qd.slabAxis;
    orthant(std::pair{s, lo(0, s) - kHalf}, std::nullopt);
    orthant(std::nullopt, std::pair{s, end(0, s)});
  }
  return out;
}

TranslatedShapeInstance pcd_orthant_shapes(const KPartiteHypergraph& H, const Scalar& lambda) {
  require_lambda(lambda, Scalar(2, 3), "pcd_orthant_shapes");
  if (H.u != 3) throw InvalidParameter("pcd_orthant_shapes: hypergraph must be 3-uniform");
  H.validate();
  const PrefixCoveringSequences seqs = prefix_covering_sequences(H.k);
  const std::size_t L = seqs.length();

  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> occ(H.k);
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t t = 0; t < L; ++t) occ[seqs.seq[a][t]].emplace_back(a, t);
  }

  TranslatedShapeInstance inst;
  inst.dim = 3;
  auto add = [&](const ForbiddenPattern& f) {
    QuasiDiagonalDecomposition qd = quasi_diagonal_decompose(f, lambda, H.k);
    TranslatedShapeInstance part;
    part.dim = 3;
    part.shapes.push_back(quasi_diagonal_complement(qd));
    for (auto& o : qd.offsets) part.objects.push_back(ShapeObject{std::move(o), 0});
    inst = compose(inst, part);
  };

  for (const auto& e : H.non_edges()) {
    std::vector<std::size_t> classes;
    for (auto v : e) classes.push_back(H.class_of(v));
    auto cover = prefix_cover(seqs, classes);
    if (!cover) throw std::logic_error("pcd_orthant_shapes: uncovered triple");
    ForbiddenPattern f{H.n, L, *cover, {}};
    for (auto v : e) {
      for (auto [a, t] : occ[H.class_of(v)]) {
        if (t < (*cover)[a]) {
          f.constraints.push_back({a, t, H.index_of(v)});
          break;
        }
      }
    }
    add(f);
  }
  // A repeated class must carry the same vertex in both of its digits.
  for (std::size_t cls = 0; cls < H.k; ++cls) {
    if (occ[cls].size() != 2) continue;
    auto [a1, t1] = occ[cls][0];
    auto [a2, t2] = occ[cls][1];
    for (std::size_t x = 0; x < H.n; ++x) {
      for (std::size_t y = 0; y < H.n; ++y) {
        if (x == y) continue;
        ForbiddenPattern f{H.n, L, {}, {{a1, t1, x}, {a2, t2, y}}};
        f.prefix[a1] = t1 + 1;
        f.prefix[a2] = t2 + 1;
        add(f);
      }
    }
  }
  return inst;
}

HutInstance pcd_pipeline_3d(const KPartiteHypergraph& H, const Scalar& lambda) {
  TranslatedShapeInstance shapes = pcd_orthant_shapes(H, lambda);
  const std::int64_t N = checked_pow(H.n, prefix_covering_sequences(H.k).length());
  HutInstance out;
  if (shapes.objects.empty()) {
    // Nothing constrains the hypercube, so every cell is a clique.
    out.P = PointSet{Point::zero(3)};
    out.Q = PointSet{Point::zero(3)};
    out.delta = Scalar(1);
  } else {
    out = tpwc_to_hut(tpwo_to_tpwc(orthant_shapes_to_tpwo(shapes, full_box(3, Scalar(0), closed_hi(N)))));
  }
  out.meta["pipeline"] = "pcd3d";
  out.meta["lambda"] = lambda.to_string();
  out.meta["shapes"] = std::to_string(shapes.shapes.size());
  out.meta["objects"] = std::to_string(shapes.objects.size());
  return out;
}

}  // namespace hut
