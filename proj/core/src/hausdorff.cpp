#include "hut/hausdorff.hpp"

#include <algorithm>

#include "hut/errors.hpp"
#include "hut/range_tree.hpp"

namespace hut {

const char* to_string(Variant v) { return v == Variant::Directed ? "directed" : "undirected"; }
const char* to_string(Mode m) { return m == Mode::Continuous ? "continuous" : "discrete"; }

void HutInstance::validate() const {
  if (!P.empty() && !Q.empty()) require_same_dim(P.dim(), Q.dim(), "HutInstance P/Q");
  if (delta && delta->sign() <= 0) throw InvalidParameter("HutInstance: delta must be positive");
  if (mode == Mode::Discrete) {
    if (!T) throw InvalidParameter("HutInstance: discrete mode requires T");
    if (!T->empty()) require_same_dim(T->dim(), dim(), "HutInstance T");
    auto integral = [](const PointSet& s) {
      for (const auto& p : s) {
        for (const auto& c : p.coords) {
          if (!c.is_integer()) return false;
        }
      }
      return true;
    };
    if (!integral(P) || !integral(Q) || !integral(*T)) {
      throw FormatError("HutInstance: discrete mode requires integer coordinates");
    }
  } else if (T) {
    throw InvalidParameter("HutInstance: T given in continuous mode");
  }
}

Scalar directed_hausdorff(const PointSet& P, const PointSet& Q) {
  if (Q.empty()) throw UndefinedDistance("directed_hausdorff: Q is empty");
  if (!P.empty()) require_same_dim(P.dim(), Q.dim(), "directed_hausdorff");
  Scalar worst(0);
  for (const auto& p : P) {
    Scalar best = linf_distance(p, Q[0]);
    for (std::size_t j = 1; j < Q.size(); ++j) best = min(best, linf_distance(p, Q[j]));
    worst = max(worst, best);
  }
  return worst;
}

Scalar undirected_hausdorff(const PointSet& P, const PointSet& Q) {
  if (P.empty() || Q.empty()) throw UndefinedDistance("undirected_hausdorff: empty set");
  return max(directed_hausdorff(P, Q), directed_hausdorff(Q, P));
}

Scalar directed_hausdorff_rt(const PointSet& P, const PointSet& Q) {
  if (Q.empty()) throw UndefinedDistance("directed_hausdorff_rt: Q is empty");
  if (!P.empty()) require_same_dim(P.dim(), Q.dim(), "directed_hausdorff_rt");
  RangeTree rt(Q);
  Scalar worst(0);
  for (const auto& p : P) {
    std::vector<Scalar> cand;
    for (const auto& q : Q) {
      for (std::size_t i = 0; i < p.dim(); ++i) cand.push_back((p[i] - q[i]).abs());
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    auto hit = [&](const Scalar& r) {
      Box b;
      for (const auto& c : p.coords) {
        b.lo.push_back(c - r);
        b.hi.push_back(c + r);
      }
      return rt.query_index(b).has_value();
    };
    std::size_t lo = 0, hi = cand.size() - 1;  // the largest candidate always hits
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (hit(cand[mid])) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    worst = max(worst, cand[lo]);
  }
  return worst;
}

bool within_directed(const PointSet& P, const PointSet& Q, const Scalar& delta) {
  for (const auto& p : P) {
    bool ok = false;
    for (const auto& q : Q) {
      if (!(delta < linf_distance(p, q))) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

}  // namespace hut
