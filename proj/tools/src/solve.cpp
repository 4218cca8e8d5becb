#include <chrono>
#include <fstream>
#include <ostream>

#include <json.hpp>

#include "commands.hpp"
#include "hut/continuous.hpp"
#include "hut/discrete.hpp"
#include "hut/errors.hpp"
#include "hut/instance_io.hpp"
#include "hut/oracles.hpp"
#include "hut_tools/cli.hpp"

namespace hut::tools {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kRoutes =
    "supported routes:\n"
    "  continuous 1-D directed/undirected: envelope1d, brute\n"
    "  continuous 2-D directed/undirected: sweep2d, brute\n"
    "  continuous 3-D directed: lopsided3d, brute\n"
    "  continuous 3-D undirected: no fast route (the 3-D method is directed only and dimension doubling "
    "does not apply); use --algo brute\n"
    "  continuous 4-D: brute\n"
    "  discrete 1-D: scan1d, rangetree, brute\n"
    "  discrete any dimension: rangetree, brute";

[[noreturn]] void unsupported(const std::string& what) { throw Unsupported(what + "\n" + kRoutes); }

json point_json(const Point& p) {
  json a = json::array();
  for (const auto& c : p.coords) a.push_back(c.to_string());
  return a;
}

struct Outcome {
  std::optional<Point> tau;
  std::optional<Scalar> value;  // optimization only
};

// ---- continuous -------------------------------------------------------------

std::string continuous_route(const std::string& algo, std::size_t d, Variant v) {
  if (algo == "auto") {
    if (d == 1) return "envelope1d";
    if (d == 2) return "sweep2d";
    if (d == 3 && v == Variant::Directed) return "lopsided3d";
    unsupported("no automatic route for continuous " + std::to_string(d) + "-D " + to_string(v));
  }
  const bool ok = (algo == "envelope1d" && d == 1) || (algo == "sweep2d" && d == 2) ||
                  (algo == "lopsided3d" && d == 3 && v == Variant::Directed) || (algo == "brute" && d >= 1 && d <= 4);
  if (!ok) unsupported("algorithm '" + algo + "' does not solve continuous " + std::to_string(d) + "-D " + to_string(v));
  return algo;
}

DecideFn closed_decider(const std::string& algo) {
  if (algo == "envelope1d") return detail::decide_1d_closed;
  if (algo == "sweep2d") return detail::decide_2d_closed;
  return [](const PointSet& P, const PointSet& Q, const Scalar& delta, Variant) {
    return detail::decide_3d_closed(P, Q, delta);
  };
}

Outcome solve_continuous(const HutInstance& h, const std::string& algo, const std::optional<Scalar>& delta) {
  Outcome o;
  if (algo == "brute") {
    if (delta) {
      o.tau = brute_hut_decide(h.P, h.Q, *delta, h.variant);
    } else {
      Optimum best = brute_hut_optimize(h.P, h.Q, h.variant);
      o.tau = best.tau;
      o.value = best.delta;
    }
    return o;
  }
  if (delta) {
    if (auto ft = closed_decider(algo)(h.P, h.Q, *delta, h.variant)) o.tau = ft->tau;
  } else {
    Optimum best = optimize_with(h.P, h.Q, h.variant, closed_decider(algo));
    o.tau = best.tau;
    o.value = best.delta;
  }
  return o;
}

// ---- discrete ---------------------------------------------------------------

std::string discrete_route(const std::string& algo, std::size_t d) {
  if (algo == "auto") return d == 1 ? "scan1d" : "rangetree";
  const bool ok = (algo == "scan1d" && d == 1) || algo == "rangetree" || algo == "brute";
  if (!ok) unsupported("algorithm '" + algo + "' does not solve discrete " + std::to_string(d) + "-D");
  return algo;
}

PointSet translated(const PointSet& P, const Point& tau) {
  PointSet out(P.dim());
  for (const auto& p : P) out.push_back(p + tau);
  return out;
}

Scalar value_at(const HutInstance& h, const Point& tau) {
  PointSet moved = translated(h.P, tau);
  return h.variant == Variant::Directed ? directed_hausdorff(moved, h.Q) : undirected_hausdorff(moved, h.Q);
}

// Every |p_i + tau_i - q_i|; the optimum is one of them.
std::vector<Scalar> discrete_candidates(const HutInstance& h) {
  std::vector<Scalar> c;
  for (const auto& tau : *h.T) {
    for (const auto& p : h.P) {
      for (const auto& q : h.Q) {
        for (std::size_t i = 0; i < h.dim(); ++i) c.push_back((p[i] + tau[i] - q[i]).abs());
      }
    }
  }
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  return c;
}

Outcome solve_discrete_route(const HutInstance& h, const std::string& algo, const std::optional<Scalar>& delta) {
  Outcome o;
  const PointSet& T = *h.T;
  if (T.empty()) {
    if (!delta) throw InvalidParameter("optimization needs a nonempty T");
    return o;
  }
  if (algo == "scan1d") {
    ScanResult r = solve_discrete_1d_scan(T, h.P, h.Q, h.variant);
    if (delta) {
      for (const auto& [tau, f] : r.values) {
        if (f <= *delta) {
          o.tau = Point({tau});
          break;
        }
      }
    } else {
      o.tau = Point({r.best_tau});
      o.value = r.best_value;
    }
    return o;
  }
  if (algo == "brute") {
    if (delta) {
      o.tau = brute_dischut(T, h.P, h.Q, *delta, h.variant);
    } else {
      std::vector<Point> ts(T.begin(), T.end());
      std::sort(ts.begin(), ts.end());
      for (const auto& tau : ts) {
        Scalar f = value_at(h, tau);
        if (!o.value || f < *o.value) {
          o.value = f;
          o.tau = tau;
        }
      }
    }
    return o;
  }
  // range tree
  auto decide = [&](const Scalar& d) -> std::optional<Point> {
    if (auto ft = solve_discrete(T, h.P, h.Q, d, h.variant)) return ft->tau;
    return std::nullopt;
  };
  if (delta) {
    o.tau = decide(*delta);
    return o;
  }
  std::vector<Scalar> cand = discrete_candidates(h);
  if (cand.front().is_zero()) cand.erase(cand.begin());
  if (cand.empty()) {
    // every distance is zero
    o.value = Scalar(0);
    o.tau = *std::min_element(T.begin(), T.end());
    return o;
  }
  std::size_t lo = 0, hi = cand.size() - 1;
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (decide(cand[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  // No distance lies strictly between 0 and cand[0], so feasibility at
  // cand[0] / 2 is feasibility at 0.
  if (lo == 0) {
    if (auto t = decide(cand[0] / Scalar(2))) {
      o.value = Scalar(0);
      o.tau = t;
      return o;
    }
  }
  o.value = cand[lo];
  o.tau = decide(cand[lo]);
  return o;
}

Variant parse_variant(const std::string& s) {
  if (s == "directed") return Variant::Directed;
  if (s == "undirected") return Variant::Undirected;
  throw InvalidParameter("unknown variant '" + s + "'");
}

}  // namespace

int cmd_solve(const SolveOptions& opt, std::ostream& out) {
  InstanceFile file = load_instance(opt.in);
  auto* hp = std::get_if<HutInstance>(&file.instance);
  if (!hp) throw InvalidParameter("solve expects a hut or dischut file, got '" + kind_name(file.instance) + "'");
  HutInstance h = *hp;
  if (!opt.variant.empty()) h.variant = parse_variant(opt.variant);
  if (!opt.mode.empty()) {
    if (opt.mode != "continuous" && opt.mode != "discrete") throw InvalidParameter("unknown mode '" + opt.mode + "'");
    const Mode m = opt.mode == "discrete" ? Mode::Discrete : Mode::Continuous;
    if (m == Mode::Discrete && !h.T) throw InvalidParameter("discrete mode needs a file with T");
    if (m == Mode::Continuous) h.T.reset();
    h.mode = m;
  }
  if (h.P.empty() || h.Q.empty()) throw InvalidParameter("solve needs nonempty P and Q");

  std::optional<Scalar> delta;
  if (opt.delta) {
    delta = Scalar::parse(*opt.delta);
  } else if (!opt.optimize) {
    delta = h.delta;
    if (!delta) throw InvalidParameter("no threshold: pass --delta, --optimize, or a file with delta");
  }
  if (delta && (delta->sign() <= 0 || !delta->is_finite())) throw InvalidParameter("delta must be positive");

  const std::size_t d = h.dim();
  const std::string algo =
      h.mode == Mode::Continuous ? continuous_route(opt.algo, d, h.variant) : discrete_route(opt.algo, d);

  const auto start = std::chrono::steady_clock::now();
  Outcome o = h.mode == Mode::Continuous ? solve_continuous(h, algo, delta) : solve_discrete_route(h, algo, delta);
  const auto wall = std::chrono::steady_clock::now() - start;

  json rep;
  rep["command"] = "solve";
  rep["kind"] = kind_name(h);
  rep["variant"] = to_string(h.variant);
  rep["mode"] = h.mode == Mode::Continuous ? "continuous" : "discrete";
  rep["dim"] = d;
  rep["algo"] = algo;
  rep["sizes"] = {{"n", h.P.size()}, {"m", h.Q.size()}, {"t", h.T ? h.T->size() : 0}};
  if (o.value) {
    rep["task"] = "optimize";
    rep["value"] = o.value->to_string();
  } else {
    rep["task"] = "decide";
    rep["delta"] = delta->to_string();
  }
  rep["verdict"] = o.tau ? "feasible" : "infeasible";
  if (o.tau) {
    rep["tau"] = point_json(*o.tau);
    const Scalar at = o.value ? *o.value : *delta;
    auto cert = certify(h.P, h.Q, at, h.variant, *o.tau);
    json c;
    c["delta"] = at.to_string();
    c["verified"] = cert && check_certificate(h.P, h.Q, at, h.variant, *cert);
    if (cert) {
      c["match"] = cert->match;
      if (h.variant == Variant::Undirected) c["reverse_match"] = cert->reverse_match;
    }
    if (!c["verified"].get<bool>()) throw std::logic_error("solver witness failed certification");
    rep["certificate"] = std::move(c);
  }
  rep["wall_ns"] = std::chrono::duration_cast<std::chrono::nanoseconds>(wall).count();
  emit(rep.dump(2) + "\n", opt.out, out);
  return o.tau ? kFeasible : kInfeasible;
}

}  // namespace hut::tools
