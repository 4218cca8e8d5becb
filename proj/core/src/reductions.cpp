#include "hut/reductions.hpp"

#include <algorithm>

#include "hut/errors.hpp"
#include "hut/union_ops.hpp"

namespace hut {

namespace {

Scalar max_abs(const PointSet& s) {
  Scalar m(0);
  for (const auto& p : s) {
    for (const auto& c : p.coords) m = max(m, c.abs());
  }
  return m;
}

Point pt1(const Scalar& x) { return Point{x}; }

std::int64_t dot(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

DirectedPair undirected_to_directed(const PointSet& P, const PointSet& Q) {
  if (P.empty() || Q.empty()) throw InvalidParameter("undirected_to_directed: sets must be nonempty");
  require_same_dim(P.dim(), Q.dim(), "undirected_to_directed");
  const std::size_t d = P.dim();
  Scalar M = Scalar(10) * (Scalar(1) + max(max_abs(P), max_abs(Q)).ceil()) *
             Scalar(static_cast<std::int64_t>(P.size() + Q.size()));
  Point sigma = Point::zero(d);
  sigma[0] = M;
  DirectedPair out{P, Q, M};
  for (const auto& q : Q) out.P.push_back(sigma - q);
  for (const auto& p : P) out.Q.push_back(sigma - p);
  return out;
}

HutInstance linear_alignment_to_hut1d(const LinearAlignmentInstance& inst) {
  const std::size_t n = inst.A.size(), m = inst.B.size();
  if (n == 0 || m < n) throw InvalidParameter("linear_alignment_to_hut1d: need 1 <= n <= m");
  if (!std::is_sorted(inst.A.begin(), inst.A.end()) || !std::is_sorted(inst.B.begin(), inst.B.end())) {
    throw InvalidParameter("linear_alignment_to_hut1d: arrays must be sorted");
  }
  Scalar big(1);
  for (const auto& x : inst.A) big = max(big, x.abs());
  for (const auto& x : inst.B) big = max(big, x.abs());
  Scalar M = Scalar(10) * Scalar(static_cast<std::int64_t>(n * m)) * big;

  HutInstance h;
  h.P = PointSet(1);
  h.Q = PointSet(1);
  for (std::size_t i = 0; i < n; ++i) h.P.push_back(pt1(inst.A[i] + Scalar(static_cast<std::int64_t>(i)) * M));
  for (std::size_t i = 0; i < m; ++i) h.Q.push_back(pt1(inst.B[i] + Scalar(static_cast<std::int64_t>(i)) * M));
  h.meta["reduction"] = "linearalign->hut1d";
  h.meta["M"] = M.to_string();
  return h;
}

std::pair<std::size_t, Scalar> alignment_from_translation(const Scalar& tau, const Scalar& M) {
  Scalar s = (tau / M + Scalar(1, 2)).floor();
  if (s.sign() < 0) throw InvalidParameter("alignment_from_translation: negative shift");
  return {static_cast<std::size_t>(std::stoull(s.to_string())), tau - s * M};
}

LinearAlignmentInstance necklace_to_linear_alignment(const NecklaceInstance& inst) {
  const std::size_t n = inst.A.size();
  if (n == 0 || inst.B.size() != n) throw InvalidParameter("necklace: arrays must have equal positive length");
  for (const auto* arr : {&inst.A, &inst.B}) {
    for (const auto& x : *arr) {
      if (x.sign() < 0 || !(x < Scalar(1))) throw InvalidParameter("necklace: entries must lie in [0,1)");
    }
  }
  if (!std::is_sorted(inst.A.begin(), inst.A.end()) || !std::is_sorted(inst.B.begin(), inst.B.end())) {
    throw InvalidParameter("necklace: arrays must be sorted");
  }
  LinearAlignmentInstance out{inst.A, inst.B};
  for (const auto& x : inst.B) out.B.push_back(x + Scalar(1));
  return out;
}

HutInstance maxconvlb_to_dischut1d(const MaxConvLbInstance& inst) {
  const std::size_t n = inst.A.size();
  if (n == 0 || inst.B.size() != n || inst.C.size() != n) {
    throw InvalidParameter("maxconvlb: arrays must have equal positive length");
  }
  for (const auto* arr : {&inst.A, &inst.B, &inst.C}) {
    for (auto x : *arr) {
      if (x <= 0) throw InvalidParameter("maxconvlb: entries must be positive");
    }
  }
  const std::int64_t S = *std::max_element(inst.A.begin(), inst.A.end()) + *std::max_element(inst.B.begin(), inst.B.end()) +
      *std::max_element(inst.C.begin(), inst.C.end());
  // M/4 = S + 1 keeps every coordinate integral and delta = M/4 - 1 = S.
  const std::int64_t M = 4 * (S + 1);
  const std::int64_t quarter = M / 4;

  HutInstance h;
  h.mode = Mode::Discrete;
  h.variant = Variant::Directed;
  h.P = PointSet(1);
  h.Q = PointSet(1);
  h.T = PointSet(1);
  // 1-indexed i, j, k as in the definition.
  for (std::size_t k = 2; k <= n; ++k) {
    h.T->push_back(pt1(Scalar(-(static_cast<std::int64_t>(k) * M + inst.C[k - 1]))));
  }
  for (std::size_t i = 1; i <= n; ++i) {
    h.P.push_back(pt1(Scalar(static_cast<std::int64_t>(i) * M + inst.A[i - 1] + quarter)));
  }
  for (std::int64_t z = -static_cast<std::int64_t>(n); z <= 0; ++z) h.Q.push_back(pt1(Scalar(-z * M + quarter)));
  for (std::size_t j = 1; j <= n; ++j) {
    h.Q.push_back(pt1(Scalar(-(static_cast<std::int64_t>(j) * M + inst.B[j - 1]))));
  }
  h.delta = Scalar(quarter - 1);
  h.meta["reduction"] = "maxconvlb->dischut1d";
  h.meta["M"] = std::to_string(M);
  h.meta["answer_flipped"] = "true";
  return h;
}

BoxCoverInstance dischut_to_boxcover(const PointSet& T, const PointSet& P, const PointSet& Q,
                                     const Scalar& delta) {
  BoxCoverInstance out{T, P, {}};
  if (delta.sign() < 0) throw InvalidParameter("dischut_to_boxcover: delta must be >= 0");
  std::size_t d = !T.empty() ? T.dim() : !P.empty() ? P.dim() : Q.dim();
  if (d > 3) throw DimensionMismatch("dischut_to_boxcover: dimension must be at most 3");
  for (const auto* s : {&T, &P, &Q}) {
    if (!s->empty()) require_same_dim(s->dim(), d, "dischut_to_boxcover");
    for (const auto& p : *s) {
      for (const auto& c : p.coords) {
        if (!c.is_integer()) throw FormatError("dischut_to_boxcover: integer coordinates required");
      }
    }
  }
  if (T.empty() || P.empty()) return out;

  // For integer x: |x - q| <= delta iff x lies in q +- (floor(delta) + 1/2). With
  // half-integral facets no integer point sits on a cell boundary.
  const Scalar r = delta.floor() + Scalar(1, 2);
  Box bounding{std::vector<Scalar>(d), std::vector<Scalar>(d)};
  bool first = true;
  for (const auto& t : T) {
    for (const auto& p : P) {
      Point x = t + p;
      for (std::size_t i = 0; i < d; ++i) {
        if (first || x[i] < bounding.lo[i]) bounding.lo[i] = x[i];
        if (first || bounding.hi[i] < x[i]) bounding.hi[i] = x[i];
      }
      first = false;
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    bounding.lo[i] -= Scalar(1, 2);
    bounding.hi[i] += Scalar(1, 2);
  }
  std::vector<Box> cubes;
  for (const auto& q : Q) cubes.push_back(minkowski_cube(q, r));
  out.boxes = complement_decompose(cubes, bounding);
  return out;
}

bool boxcover_decide(const BoxCoverInstance& inst) {
  for (const auto& t : inst.T) {
    bool covered = false;
    for (const auto& p : inst.P) {
      Point x = t + p;
      for (const auto& b : inst.boxes) {
        if (box_contains(b, x)) {
          covered = true;
          break;
        }
      }
      if (covered) break;
    }
    if (!covered) return false;
  }
  return true;
}

HutInstance fopz_aee_to_dischut(const FopzAeeFormula& f) {
  f.validate();
  const std::size_t h = f.atoms.size();
  if (h == 0) throw InvalidParameter("fopz_aee_to_dischut: at least one atom is required");

  using IVec = std::vector<std::int64_t>;
  std::vector<IVec> Ap, Bp, Cp;
  for (const auto& a : f.A) {
    IVec v;
    for (const auto& at : f.atoms) v.push_back(dot(at.alpha, a));
    Ap.push_back(v);
  }
  for (const auto& b : f.B) {
    IVec v;
    for (const auto& at : f.atoms) v.push_back(dot(at.beta, b));
    Bp.push_back(v);
  }
  for (const auto& c : f.C) {
    IVec v;
    for (const auto& at : f.atoms) v.push_back(dot(at.gamma, c) + at.S);
    Cp.push_back(v);
  }

  // Every attainable a' + b' lies strictly inside [-R, R]^h.
  std::int64_t R = 1;
  for (const auto& a : Ap) {
    for (const auto& b : Bp) {
      for (std::size_t k = 0; k < h; ++k) R = std::max(R, 1 + std::abs(a[k] + b[k]));
    }
  }
  std::int64_t maxC = 0;
  for (const auto& c : Cp) {
    for (auto x : c) maxC = std::max(maxC, std::abs(x));
  }
  const std::int64_t L = 2 * (R + maxC + 1);  // side of the capping cubes

  // The orthant of clause V at c': x_k <= c'_k for positive, x_k >= c'_k + 1 for
  // negated literals. Capped to side-L cubes, then inflated by 1/2 so the
  // complement boxes have half-integral facets.
  const Scalar half(1, 2);
  std::vector<Box> cubes;
  for (const auto& clause : f.dnf) {
    std::vector<int> sign(h, 0);
    bool contradictory = false;
    for (const auto& lit : clause) {
      int s = lit.negated ? -1 : 1;
      if (sign[lit.atom] == -s) contradictory = true;
      sign[lit.atom] = s;
    }
    if (contradictory) continue;
    for (const auto& c : Cp) {
      Box b{std::vector<Scalar>(h), std::vector<Scalar>(h)};
      for (std::size_t k = 0; k < h; ++k) {
        std::int64_t lo = 0, hi = 0;
        if (sign[k] > 0) {
          lo = c[k] - L;
          hi = c[k];
        } else if (sign[k] < 0) {
          lo = c[k] + 1;
          hi = c[k] + 1 + L;
        } else {
          lo = -L / 2;
          hi = L / 2;
        }
        b.lo[k] = Scalar(lo) - half;
        b.hi[k] = Scalar(hi) + half;
      }
      cubes.push_back(std::move(b));
    }
  }
  Box bounding(std::vector<Scalar>(h, Scalar(-R) - half), std::vector<Scalar>(h, Scalar(R) + half));
  std::vector<Box> holes = complement_decompose(cubes, bounding);

  // x in [r-, r+] iff y = (x, -x) <= u = (r+, -r-); the orthant below u is capped
  // to a cube of radius W whose lower facets lie below every attainable y.
  // Coordinates are doubled to make them integral.
  const std::int64_t W = 2 * R + 2;
  auto doubled = [&](const IVec& v) {
    std::vector<Scalar> y(2 * h);
    for (std::size_t k = 0; k < h; ++k) {
      y[k] = Scalar(2 * v[k]);
      y[h + k] = Scalar(-2 * v[k]);
    }
    return Point(std::move(y));
  };
  HutInstance out;
  out.mode = Mode::Discrete;
  out.variant = Variant::Directed;
  out.T = PointSet(2 * h);
  out.P = PointSet(2 * h);
  out.Q = PointSet(2 * h);
  for (const auto& a : Ap) out.T->push_back(doubled(a));
  for (const auto& b : Bp) out.P.push_back(doubled(b));
  for (const auto& box : holes) {
    std::vector<Scalar> q(2 * h);
    for (std::size_t k = 0; k < h; ++k) {
      q[k] = Scalar(2) * (box.hi[k] - Scalar(W));
      q[h + k] = Scalar(2) * (-box.lo[k] - Scalar(W));
    }
    out.Q.push_back(Point(std::move(q)));
  }
  out.delta = Scalar(2 * W);
  out.meta["reduction"] = "fopz->dischut";
  out.meta["R"] = std::to_string(R);
  out.meta["L"] = std::to_string(L);
  out.meta["W"] = std::to_string(W);
  out.meta["answer_flipped"] = "true";
  return out;
}

}  // namespace hut
