#include "hut/envelope.hpp"

#include <algorithm>

#include "hut/errors.hpp"

namespace hut {

Scalar PiecewiseLinearFn::eval(const Scalar& t) const {
  auto k = static_cast<std::size_t>(std::upper_bound(breaks.begin(), breaks.end(), t) - breaks.begin());
  return slopes[k] * t + intercepts[k];
}

PiecewiseLinearFn PiecewiseLinearFn::distance_to_set(std::vector<Scalar> c) {
  if (c.empty()) throw InvalidParameter("distance_to_set: no centers");
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  PiecewiseLinearFn f;
  f.slopes.push_back(Scalar(-1));
  f.intercepts.push_back(c[0]);
  for (std::size_t i = 0; i < c.size(); ++i) {
    f.breaks.push_back(c[i]);
    f.slopes.push_back(Scalar(1));
    f.intercepts.push_back(-c[i]);
    if (i + 1 < c.size()) {
      f.breaks.push_back((c[i] + c[i + 1]) / Scalar(2));
      f.slopes.push_back(Scalar(-1));
      f.intercepts.push_back(c[i + 1]);
    }
  }
  return f;
}

namespace {

struct Builder {
  PiecewiseLinearFn f;

  // Appends a piece that ends at `end` (nullopt for the last, unbounded piece).
  void piece(const Scalar& s, const Scalar& c, const std::optional<Scalar>& end) {
    if (!f.slopes.empty() && f.slopes.back() == s && f.intercepts.back() == c) {
      f.breaks.pop_back();
    } else {
      f.slopes.push_back(s);
      f.intercepts.push_back(c);
    }
    if (end) f.breaks.push_back(*end);
  }
};

}  // namespace

PiecewiseLinearFn PiecewiseLinearFn::upper_envelope(const PiecewiseLinearFn& a,
                                                    const PiecewiseLinearFn& b) {
  std::vector<Scalar> B;
  B.reserve(a.breaks.size() + b.breaks.size());
  std::merge(a.breaks.begin(), a.breaks.end(), b.breaks.begin(), b.breaks.end(), std::back_inserter(B));
  B.erase(std::unique(B.begin(), B.end()), B.end());

  Builder out;
  std::size_t ia = 0, ib = 0;
  for (std::size_t k = 0; k <= B.size(); ++k) {
    // Interval (B[k-1], B[k]) with open ends at infinity.
    if (k > 0) {
      while (ia < a.breaks.size() && a.breaks[ia] <= B[k - 1]) ++ia;
      while (ib < b.breaks.size() && b.breaks[ib] <= B[k - 1]) ++ib;
    }
    const Scalar &sa = a.slopes[ia], &ca = a.intercepts[ia];
    const Scalar &sb = b.slopes[ib], &cb = b.intercepts[ib];
    std::optional<Scalar> end = k < B.size() ? std::optional<Scalar>(B[k]) : std::nullopt;
    if (sa == sb) {
      bool useA = !(ca < cb);
      out.piece(sa, useA ? ca : cb, end);
      continue;
    }
    Scalar cross = (cb - ca) / (sa - sb);
    bool inside = (k == 0 || B[k - 1] < cross) && (k == B.size() || cross < B[k]);
    if (inside) {
      // Left of the crossing the smaller slope dominates.
      bool aLeft = sa < sb;
      out.piece(aLeft ? sa : sb, aLeft ? ca : cb, cross);
      out.piece(aLeft ? sb : sa, aLeft ? cb : ca, end);
    } else {
      Scalar t = k == 0 ? B[0] - Scalar(1)
                        : (k == B.size() ? B[k - 1] + Scalar(1) : (B[k - 1] + B[k]) / Scalar(2));
      bool useA = !(sa * t + ca < sb * t + cb);
      out.piece(useA ? sa : sb, useA ? ca : cb, end);
    }
  }
  return out.f;
}

std::pair<Scalar, Scalar> PiecewiseLinearFn::minimum() const {
  if (breaks.empty() || !(slopes.front() < Scalar(0)) || !(Scalar(0) < slopes.back())) {
    throw InvalidParameter("PiecewiseLinearFn::minimum: no attained leftmost minimum");
  }
  Scalar best = eval(breaks[0]), arg = breaks[0];
  for (std::size_t i = 1; i < breaks.size(); ++i) {
    Scalar v = eval(breaks[i]);
    if (v < best) {
      best = v;
      arg = breaks[i];
    }
  }
  return {best, arg};
}

std::optional<Scalar> PiecewiseLinearFn::leftmost_at_most(const Scalar& v) const {
  for (std::size_t k = 0; k < pieces(); ++k) {
    const Scalar& s = slopes[k];
    const Scalar& c = intercepts[k];
    if (k > 0) {
      const Scalar& left = breaks[k - 1];
      if (!(v < s * left + c)) return left;
    }
    bool hasRight = k < breaks.size();
    if (s.sign() < 0) {
      Scalar t = (v - c) / s;  // where this piece reaches v
      if (!hasRight || !(breaks[k] < t)) return t;
    } else if (k == 0 && s.sign() == 0 && !(v < c)) {
      throw InvalidParameter("leftmost_at_most: unbounded to the left");
    } else if (k == 0 && s.sign() > 0) {
      throw InvalidParameter("leftmost_at_most: unbounded to the left");
    }
  }
  return std::nullopt;
}

namespace {

PiecewiseLinearFn envelope_range(const std::vector<PiecewiseLinearFn>& fs, std::size_t l, std::size_t r) {
  if (r - l == 1) return fs[l];
  std::size_t mid = (l + r) / 2;
  return PiecewiseLinearFn::upper_envelope(envelope_range(fs, l, mid), envelope_range(fs, mid, r));
}

void require_1d(const PointSet& P, const PointSet& Q, const char* what) {
  if (P.empty() || Q.empty()) throw UndefinedDistance(std::string(what) + ": empty point set");
  require_same_dim(P.dim(), Q.dim(), what);
  if (P.dim() != 1) throw DimensionMismatch(std::string(what) + ": requires dimension 1");
}

}  // namespace

PiecewiseLinearFn envelope_1d(const PointSet& P, const PointSet& Q, Variant variant) {
  require_1d(P, Q, "envelope_1d");
  std::vector<PiecewiseLinearFn> fs;
  for (const auto& p : P) {
    std::vector<Scalar> c;
    for (const auto& q : Q) c.push_back(q[0] - p[0]);
    fs.push_back(PiecewiseLinearFn::distance_to_set(std::move(c)));
  }
  if (variant == Variant::Undirected) {
    for (const auto& q : Q) {
      std::vector<Scalar> c;
      for (const auto& p : P) c.push_back(q[0] - p[0]);
      fs.push_back(PiecewiseLinearFn::distance_to_set(std::move(c)));
    }
  }
  return envelope_range(fs, 0, fs.size());
}

Optimum solve_1d_opt(const PointSet& P, const PointSet& Q, Variant variant) {
  auto [value, arg] = envelope_1d(P, Q, variant).minimum();
  return {value, Point{arg}};
}

}  // namespace hut
