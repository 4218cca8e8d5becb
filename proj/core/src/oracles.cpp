#include "hut/oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>

#include "hut/errors.hpp"

namespace hut {

namespace {

void require_nonempty(const PointSet& P, const PointSet& Q, const char* what) {
  if (P.empty() || Q.empty()) throw InvalidParameter(std::string(what) + ": P and Q must be nonempty");
  require_same_dim(P.dim(), Q.dim(), what);
}

bool within(const Point& a, const Point& b, const Scalar& delta) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (delta < (a[i] - b[i]).abs()) return false;
  }
  return true;
}

// forall p exists q |p + tau - q| <= delta, plus the reverse direction if undirected.
bool feasible(const PointSet& P, const PointSet& Q, const Scalar& delta, Variant variant, const Point& tau) {
  for (const auto& p : P) {
    Point moved = p + tau;
    bool found = false;
    for (const auto& q : Q) {
      if (within(moved, q, delta)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  if (variant == Variant::Undirected) {
    for (const auto& q : Q) {
      bool found = false;
      for (const auto& p : P) {
        if (within(p + tau, q, delta)) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

// Lexicographic odometer over the product of sorted, deduplicated axes.
template <class Pred>
std::optional<Point> grid_search(std::vector<std::vector<Scalar>> axis, std::size_t limit, const char* what,
                                 Pred&& ok) {
  double total = 1;
  for (auto& a : axis) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    if (a.empty()) a.push_back(Scalar(0));
    total *= static_cast<double>(a.size());
  }
  if (total > static_cast<double>(limit)) {
    throw SizeGuardExceeded(std::string(what) + ": " + std::to_string(static_cast<long long>(total)) +
                            " candidates exceed the cap of " + std::to_string(limit));
  }
  const std::size_t d = axis.size();
  std::vector<std::size_t> idx(d, 0);
  Point tau = Point::zero(d);
  while (true) {
    for (std::size_t i = 0; i < d; ++i) tau[i] = axis[i][idx[i]];
    if (ok(tau)) return tau;
    std::size_t i = d;
    while (i > 0 && ++idx[i - 1] == axis[i - 1].size()) idx[--i] = 0;
    if (i == 0) return std::nullopt;
  }
}

Scalar frac(const Scalar& x) { return x - x.floor(); }

Scalar circular(const Scalar& a, const Scalar& b) {
  Scalar d = (a - b).abs();
  return std::min(d, Scalar(1) - d);
}

}  // namespace

std::size_t oracle_cap() {
  if (const char* env = std::getenv("HUT_MAX_ORACLE")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw InvalidParameter("HUT_MAX_ORACLE must be a non-negative integer");
    }
  }
  return 1000000;
}

std::optional<Point> brute_hut_decide(const PointSet& P, const PointSet& Q, const Scalar& delta,
                                      Variant variant, std::optional<std::size_t> cap) {
  require_nonempty(P, Q, "brute_hut_decide");
  if (delta.sign() < 0 || !delta.is_finite()) throw InvalidParameter("brute_hut_decide: delta must be >= 0");
  const std::size_t d = P.dim();
  if (d == 0 || d > 4) throw DimensionMismatch("brute_hut_decide: dimension must be 1..4");
  const std::size_t limit = cap ? *cap : oracle_cap();

  std::vector<std::vector<Scalar>> axis(d);
  double total = 1;
  for (std::size_t i = 0; i < d; ++i) {
    for (const auto& p : P) {
      for (const auto& q : Q) {
        axis[i].push_back(q[i] - p[i] - delta);
        axis[i].push_back(q[i] - p[i] + delta);
      }
    }
    std::sort(axis[i].begin(), axis[i].end());
    axis[i].erase(std::unique(axis[i].begin(), axis[i].end()), axis[i].end());
    total *= static_cast<double>(axis[i].size());
  }
  if (total > static_cast<double>(limit)) {
    throw SizeGuardExceeded("brute_hut_decide: " + std::to_string(static_cast<long long>(total)) +
                            " candidates exceed the cap of " + std::to_string(limit));
  }

  std::vector<std::size_t> idx(d, 0);
  Point tau = Point::zero(d);
  while (true) {
    for (std::size_t i = 0; i < d; ++i) tau[i] = axis[i][idx[i]];
    if (feasible(P, Q, delta, variant, tau)) return tau;
    std::size_t i = d;
    while (i > 0 && ++idx[i - 1] == axis[i - 1].size()) idx[--i] = 0;
    if (i == 0) return std::nullopt;
  }
}

Optimum brute_hut_optimize(const PointSet& P, const PointSet& Q, Variant variant,
                           std::optional<std::size_t> cap) {
  require_nonempty(P, Q, "brute_hut_optimize");
  std::vector<Scalar> cand{Scalar(0)};
  for (std::size_t i = 0; i < P.dim(); ++i) {
    for (const auto& p : P) {
      for (const auto& q : Q) {
        for (const auto& p2 : P) {
          for (const auto& q2 : Q) {
            cand.push_back(((q[i] - p[i]) - (q2[i] - p2[i])).abs() / Scalar(2));
          }
        }
      }
    }
  }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

  std::size_t lo = 0, hi = cand.size() - 1;
  auto best = brute_hut_decide(P, Q, cand[hi], variant, cap);
  if (!best) throw std::logic_error("brute_hut_optimize: largest candidate infeasible");
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (auto t = brute_hut_decide(P, Q, cand[mid], variant, cap)) {
      hi = mid;
      best = std::move(t);
    } else {
      lo = mid + 1;
    }
  }
  if (auto t = brute_hut_decide(P, Q, cand[lo], variant, cap)) best = std::move(t);
  return Optimum{cand[lo], *best};
}

std::optional<Point> brute_dischut(const PointSet& T, const PointSet& P, const PointSet& Q,
                                   const Scalar& delta, Variant variant) {
  std::vector<Point> ts(T.begin(), T.end());
  std::sort(ts.begin(), ts.end());
  for (const auto& tau : ts) {
    if (feasible(P, Q, delta, variant, tau)) return tau;
  }
  return std::nullopt;
}

bool brute_maxconvlb(const MaxConvLbInstance& inst) {
  const std::size_t n = inst.A.size();
  // 1-indexed k in 2..n and i + j = k with i, j >= 1; in 0-indexed terms i0 + j0 = k0 - 1.
  for (std::size_t k = 1; k < n; ++k) {
    bool ok = false;
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t j = k - 1 - i;
      if (inst.C[k] <= inst.A[i] + inst.B[j]) ok = true;
    }
    if (!ok) return false;
  }
  return true;
}

std::vector<bool> brute_allints3sum(const AllInts3SumInstance& inst) {
  std::vector<bool> out;
  for (auto a : inst.A) {
    bool hit = false;
    for (auto b : inst.B) {
      for (auto c : inst.C) {
        if (a + b + c == 0) hit = true;
      }
    }
    out.push_back(hit);
  }
  return out;
}

AlignmentResult brute_linear_alignment(const LinearAlignmentInstance& inst) {
  const std::size_t n = inst.A.size(), m = inst.B.size();
  if (n == 0 || m < n) throw InvalidParameter("brute_linear_alignment: need 1 <= n <= m");
  std::optional<AlignmentResult> best;
  for (std::size_t s = 0; s + n <= m; ++s) {
    Scalar lo = inst.B[s] - inst.A[0], hi = lo;
    for (std::size_t i = 0; i < n; ++i) {
      Scalar D = inst.B[i + s] - inst.A[i];
      lo = std::min(lo, D);
      hi = std::max(hi, D);
    }
    Scalar value = (hi - lo) / Scalar(2);
    if (!best || value < best->value) best = AlignmentResult{value, s, (hi + lo) / Scalar(2)};
  }
  return *best;
}

AlignmentResult brute_necklace(const NecklaceInstance& inst) {
  const std::size_t n = inst.A.size();
  if (n == 0 || inst.B.size() != n) throw InvalidParameter("brute_necklace: arrays must have equal positive length");
  std::optional<AlignmentResult> best;
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<Scalar> D(n);
    for (std::size_t i = 0; i < n; ++i) D[i] = inst.B[(i + s) % n] - inst.A[i];
    std::vector<Scalar> cs;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Scalar mid = (D[i] + D[j]) / Scalar(2);
        cs.push_back(frac(mid));
        cs.push_back(frac(mid + Scalar(1, 2)));
      }
    }
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    for (const auto& c : cs) {
      Scalar worst(0);
      for (std::size_t i = 0; i < n; ++i) {
        worst = std::max(worst, circular(frac(inst.A[i] + c), inst.B[(i + s) % n]));
      }
      if (!best || worst < best->value) best = AlignmentResult{worst, s, c};
    }
  }
  return *best;
}

std::optional<std::vector<std::size_t>> brute_hyperclique(const KPartiteHypergraph& H) {
  if (H.k == 0) return std::vector<std::size_t>{};
  std::vector<std::size_t> t(H.k, 0);
  while (true) {
    if (H.is_colorful_clique(t)) return t;
    std::size_t i = H.k;
    while (i > 0 && ++t[i - 1] == H.n) t[--i] = 0;
    if (i == 0) return std::nullopt;
  }
}

bool brute_fopz(const FopzAeeFormula& f) {
  f.validate();
  for (const auto& a : f.A) {
    bool exists = false;
    for (const auto& b : f.B) {
      for (const auto& c : f.C) {
        for (const auto& clause : f.dnf) {
          bool all = true;
          for (const auto& lit : clause) {
            if (f.eval_atom(lit.atom, a, b, c) == lit.negated) {
              all = false;
              break;
            }
          }
          if (all) exists = true;
        }
      }
    }
    if (!exists) return false;
  }
  return true;
}

std::optional<Point> brute_tpwc(const TpwcInstance& inst, std::optional<std::size_t> cap) {
  const std::size_t d = inst.P.empty() ? inst.centers.dim() : inst.P.dim();
  std::vector<std::vector<Scalar>> axis(d);
  for (const auto& p : inst.P) {
    for (const auto& c : inst.centers) {
      for (std::size_t i = 0; i < d; ++i) {
        axis[i].push_back(c[i] - p[i] - inst.delta);
        axis[i].push_back(c[i] - p[i] + inst.delta);
      }
    }
  }
  return grid_search(std::move(axis), cap ? *cap : oracle_cap(), "brute_tpwc", [&](const Point& tau) {
    for (const auto& p : inst.P) {
      bool hit = false;
      for (const auto& c : inst.centers) {
        if (within(p + tau, c, inst.delta)) {
          hit = true;
          break;
        }
      }
      if (!hit) return false;
    }
    return true;
  });
}

std::optional<Point> brute_tpwb(const TpwbInstance& inst, std::optional<std::size_t> cap) {
  const std::size_t d = inst.P.empty() ? (inst.boxes.empty() ? 0 : inst.boxes[0].dim()) : inst.P.dim();
  std::vector<std::vector<Scalar>> axis(d);
  for (const auto& p : inst.P) {
    for (const auto& b : inst.boxes) {
      for (std::size_t i = 0; i < d; ++i) {
        axis[i].push_back(b.lo[i] - p[i]);
        axis[i].push_back(b.hi[i] - p[i]);
      }
    }
  }
  return grid_search(std::move(axis), cap ? *cap : oracle_cap(), "brute_tpwb", [&](const Point& tau) {
    for (const auto& p : inst.P) {
      bool hit = false;
      for (const auto& b : inst.boxes) {
        if (box_contains(b, p + tau)) {
          hit = true;
          break;
        }
      }
      if (!hit) return false;
    }
    return true;
  });
}

std::optional<Point> brute_tpwo(const TpwoInstance& inst, std::optional<std::size_t> cap) {
  const std::size_t d = inst.dim();
  const Box& B = inst.targetBox;
  std::vector<std::vector<Scalar>> axis(d);
  for (const auto& s : inst.subs) {
    for (const auto& p : s.P) {
      for (std::size_t i = 0; i < d; ++i) {
        axis[i].push_back(B.lo[i] - p[i]);
        axis[i].push_back(B.hi[i] - p[i]);
      }
      for (const auto& c : s.centers) {
        for (std::size_t i = 0; i < d; ++i) {
          axis[i].push_back(c[i] - p[i] - inst.delta);
          axis[i].push_back(c[i] - p[i] + inst.delta);
        }
      }
    }
  }
  return grid_search(std::move(axis), cap ? *cap : oracle_cap(), "brute_tpwo", [&](const Point& tau) {
    for (const auto& s : inst.subs) {
      for (const auto& p : s.P) {
        Point x = p + tau;
        if (!box_contains(B, x)) return false;
        bool hit = false;
        for (const auto& c : s.centers) {
          if (within(x, c, inst.delta)) {
            hit = true;
            break;
          }
        }
        if (!hit) return false;
      }
    }
    return true;
  });
}

std::optional<Point> brute_shapes(const TranslatedShapeInstance& inst, std::optional<std::size_t> cap) {
  const std::size_t d = inst.dim;
  std::vector<std::vector<Scalar>> axis(d);
  for (const auto& o : inst.objects) {
    for (const auto& b : inst.shapes[o.shape]) {
      for (std::size_t i = 0; i < d; ++i) {
        if (b.lo[i].is_finite()) axis[i].push_back(b.lo[i] + o.offset[i]);
        if (b.hi[i].is_finite()) axis[i].push_back(b.hi[i] + o.offset[i]);
      }
    }
  }
  return grid_search(std::move(axis), cap ? *cap : oracle_cap(), "brute_shapes", [&](const Point& x) {
    for (const auto& o : inst.objects) {
      bool hit = false;
      for (const auto& b : inst.shapes[o.shape]) {
        if (box_contains(b, x - o.offset)) {
          hit = true;
          break;
        }
      }
      if (!hit) return false;
    }
    return true;
  });
}

}  // namespace hut

namespace hut {

namespace {

class RegionSearch {
 public:
  RegionSearch(const PointSet& P, const PointSet& Q, const Scalar& delta) : P_(P), Q_(Q), delta_(delta) {
    order_.resize(Q.size());
    for (std::size_t j = 0; j < Q.size(); ++j) order_[j] = j;
    std::sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) { return Q[a][0] < Q[b][0]; });
    for (auto j : order_) key_.push_back(Q[j][0]);
  }

  std::optional<Point> run() {
    const std::size_t d = P_.dim();
    Box R{std::vector<Scalar>(d), std::vector<Scalar>(d)};
    for (std::size_t j = 0; j < Q_.size(); ++j) {
      for (std::size_t t = 0; t < d; ++t) {
        Scalar lo = Q_[j][t] - P_[0][t] - delta_, hi = Q_[j][t] - P_[0][t] + delta_;
        R.lo[t] = j ? min(R.lo[t], lo) : lo;
        R.hi[t] = j ? max(R.hi[t], hi) : hi;
      }
    }
    return search(std::move(R));
  }

 private:
  // Cubes of point i clipped to R; `covers` is set when one of them contains R.
  void reachable(std::size_t i, const Box& R, std::vector<Box>& out, bool& covers) const {
    out.clear();
    covers = false;
    const Point& p = P_[i];
    const std::size_t d = p.dim();
    auto first = std::lower_bound(key_.begin(), key_.end(), R.lo[0] + p[0] - delta_);
    auto last = std::upper_bound(key_.begin(), key_.end(), R.hi[0] + p[0] + delta_);
    for (auto it = first; it != last; ++it) {
      const Point& q = Q_[order_[static_cast<std::size_t>(it - key_.begin())]];
      Box c{std::vector<Scalar>(d), std::vector<Scalar>(d)};
      bool meets = true, contains = true;
      for (std::size_t t = 0; t < d && meets; ++t) {
        c.lo[t] = q[t] - p[t] - delta_;
        c.hi[t] = q[t] - p[t] + delta_;
        meets = !(R.hi[t] < c.lo[t]) && !(c.hi[t] < R.lo[t]);
        contains = contains && !(R.lo[t] < c.lo[t]) && !(c.hi[t] < R.hi[t]);
      }
      if (!meets) continue;
      if (contains) covers = true;
      for (std::size_t t = 0; t < d; ++t) {
        c.lo[t] = max(c.lo[t], R.lo[t]);
        c.hi[t] = min(c.hi[t], R.hi[t]);
      }
      out.push_back(std::move(c));
    }
  }

  static std::vector<Scalar> memo_key(const Box& R) {
    std::vector<Scalar> k = R.lo;
    k.insert(k.end(), R.hi.begin(), R.hi.end());
    return k;
  }

  std::optional<Point> search(Box R) {
    const Box entry = R;
    if (failed_.count(memo_key(entry))) return std::nullopt;
    const std::size_t n = P_.size(), d = P_.dim();
    std::vector<std::vector<Box>> boxes(n);
    std::vector<char> covered(n);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < n; ++i) {
        bool cov = false;
        reachable(i, R, boxes[i], cov);
        covered[i] = cov;
        if (boxes[i].empty()) {
          failed_.insert(memo_key(entry));
          return std::nullopt;
        }
        if (cov) continue;
        Box hull = boxes[i][0];
        for (const auto& b : boxes[i]) {
          for (std::size_t t = 0; t < d; ++t) {
            hull.lo[t] = min(hull.lo[t], b.lo[t]);
            hull.hi[t] = max(hull.hi[t], b.hi[t]);
          }
        }
        if (!(hull == R)) {
          R = std::move(hull);
          changed = true;
        }
      }
    }
    std::size_t pick = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!covered[i] && (pick == n || boxes[i].size() < boxes[pick].size())) pick = i;
    }
    if (pick == n) return R.lower_corner();
    std::vector<Box> branch = std::move(boxes[pick]);
    std::sort(branch.begin(), branch.end(), [](const Box& a, const Box& b) { return memo_key(a) < memo_key(b); });
    for (auto& b : branch) {
      if (auto tau = search(std::move(b))) return tau;
    }
    failed_.insert(memo_key(entry));
    failed_.insert(memo_key(R));
    return std::nullopt;
  }

  const PointSet& P_;
  const PointSet& Q_;
  Scalar delta_;
  std::vector<std::size_t> order_;
  std::vector<Scalar> key_;
  std::set<std::vector<Scalar>> failed_;
};

}  // namespace

std::optional<Point> region_search_decide(const PointSet& P, const PointSet& Q, const Scalar& delta) {
  require_nonempty(P, Q, "region_search_decide");
  if (delta.sign() < 0) throw InvalidParameter("region_search_decide: delta must be nonnegative");
  return RegionSearch(P, Q, delta).run();
}

}  // namespace hut
