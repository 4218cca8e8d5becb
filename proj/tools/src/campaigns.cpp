#include "hut_tools/campaigns.hpp"

#include <array>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "hut/continuous.hpp"
#include "hut/discrete.hpp"
#include "hut/errors.hpp"
#include "hut/gadgets.hpp"
#include "hut/hausdorff.hpp"
#include "hut/oracles.hpp"
#include "hut/reductions.hpp"

namespace hut::tools {

namespace {

// Grid-oracle candidate cap used by the campaigns.
constexpr std::size_t kOracleCap = 50'000'000;

std::string str(const Point& p) { return p.to_string(); }

std::string str(const std::optional<Point>& p) { return p ? p->to_string() : "none"; }

std::string str(bool b) { return b ? "yes" : "no"; }

TrialOutcome failure(AnyInstance inst, std::string detail) {
  TrialOutcome out;
  out.ok = false;
  out.instance = make_file(std::move(inst));
  out.instance->meta["failure"] = detail;
  out.detail = std::move(detail);
  return out;
}

HutInstance hut_of(PointSet P, PointSet Q, std::optional<Scalar> delta, Variant v) {
  HutInstance h;
  h.P = std::move(P);
  h.Q = std::move(Q);
  h.delta = std::move(delta);
  h.variant = v;
  return h;
}

HutInstance dischut_of(PointSet T, PointSet P, PointSet Q, Scalar delta, Variant v) {
  HutInstance h = hut_of(std::move(P), std::move(Q), std::move(delta), v);
  h.mode = Mode::Discrete;
  h.T = std::move(T);
  return h;
}

// Either a random threshold or a random candidate of the optimization.
Scalar pick_delta(Rng& rng, const PointSet& P, const PointSet& Q) {
  if (uniform(rng, 0, 2) == 0) return rational(rng, 1, 8, 4);
  auto cand = candidate_deltas(P, Q);
  Scalar d = cand[uniform_size(rng, 0, cand.size() - 1)];
  return d.sign() > 0 ? d : Scalar(1, 2);
}

std::optional<FeasibleTranslation> fast_decide(std::size_t d, const PointSet& P, const PointSet& Q,
                                               const Scalar& delta, Variant v) {
  if (d == 1) return decide_1d(P, Q, delta, v);
  if (d == 2) return decide_2d(P, Q, delta, v);
  return decide_3d_lopsided(P, Q, delta);
}

const char* vname(Variant v) { return v == Variant::Directed ? "directed" : "undirected"; }

// ---- solvers ----------------------------------------------------------------

Check decide_check(std::size_t d, Variant v) {
  return {"solvers", "decide-" + std::to_string(d) + "d-" + vname(v), [d, v](Rng& rng, const CampaignConfig& c) {
            auto [P, Q] = related_sets(rng, uniform_size(rng, 1, c.maxSize), uniform_size(rng, 1, c.maxSize), d, 20, 4);
            Scalar delta = pick_delta(rng, P, Q);
            auto got = fast_decide(d, P, Q, delta, v);
            auto want = brute_hut_decide(P, Q, delta, v, kOracleCap);
            TrialOutcome out;
            out.positive = want.has_value();
            std::optional<Point> gotTau;
            if (got) gotTau = got->tau;
            if (gotTau != want) {
              return failure(hut_of(P, Q, delta, v), "solver " + str(gotTau) + " vs oracle " + str(want));
            }
            if (got && !check_certificate(P, Q, delta, v, *got)) {
              return failure(hut_of(P, Q, delta, v), "certificate rejected");
            }
            return out;
          }};
}

Check optimize_check(std::size_t d, Variant v) {
  return {"solvers", "optimize-" + std::to_string(d) + "d-" + vname(v), [d, v](Rng& rng, const CampaignConfig& c) {
            auto [P, Q] = related_sets(rng, uniform_size(rng, 1, c.maxSize), uniform_size(rng, 1, c.maxSize), d, 20, 4);
            Optimum got = optimize(P, Q, v);
            Optimum want = brute_hut_optimize(P, Q, v, kOracleCap);
            TrialOutcome out;
            if (got.delta != want.delta || got.tau != want.tau) {
              return failure(hut_of(P, Q, std::nullopt, v),
                             "solver " + got.delta.to_string() + " at " + str(got.tau) + " vs oracle " +
                                 want.delta.to_string() + " at " + str(want.tau));
            }
            return out;
          }};
}

Check discrete_check(std::size_t d) {
  return {"solvers", "discrete-" + std::to_string(d) + "d", [d](Rng& rng, const CampaignConfig& c) {
            auto [T, P, Q] = discrete_sample(rng, uniform_size(rng, 1, c.maxSize), uniform_size(rng, 1, c.maxSize),
                                             uniform_size(rng, 1, c.maxSize), d, 50);
            const Variant v = uniform(rng, 0, 1) ? Variant::Directed : Variant::Undirected;
            const Scalar delta(uniform(rng, 1, 30));
            auto got = solve_discrete(T, P, Q, delta, v);
            auto want = brute_dischut(T, P, Q, delta, v);
            TrialOutcome out;
            out.positive = want.has_value();
            std::optional<Point> gotTau;
            if (got) gotTau = got->tau;
            if (gotTau != want) {
              return failure(dischut_of(T, P, Q, delta, v), "solver " + str(gotTau) + " vs oracle " + str(want));
            }
            return out;
          }};
}

Check scan_check() {
  return {"solvers", "scan-1d", [](Rng& rng, const CampaignConfig& c) {
            auto [T, P, Q] = discrete_sample(rng, uniform_size(rng, 1, c.maxSize), uniform_size(rng, 1, c.maxSize),
                                             uniform_size(rng, 1, c.maxSize), 1, 50);
            const Variant v = uniform(rng, 0, 1) ? Variant::Directed : Variant::Undirected;
            ScanResult got = solve_discrete_1d_scan(T, P, Q, v);
            // Direct evaluation of every translation, then the decision oracle at the optimum.
            std::optional<Scalar> best;
            for (const auto& tau : T) {
              PointSet moved(1);
              for (const auto& p : P) moved.push_back(p + tau);
              Scalar f = v == Variant::Directed ? directed_hausdorff(moved, Q) : undirected_hausdorff(moved, Q);
              if (!best || f < *best) best = f;
            }
            auto at = brute_dischut(T, P, Q, *best, v);
            if (got.best_value != *best || !at || got.best_tau != (*at)[0]) {
              return failure(dischut_of(T, P, Q, *best, v), "scan " + got.best_value.to_string() + " at " +
                                                                got.best_tau.to_string() + " vs direct " +
                                                                best->to_string() + " at " + str(at));
            }
            // Decision read off the scan: the smallest tau whose value is within delta.
            const Scalar delta(uniform(rng, 1, 30));
            std::optional<Point> first;
            for (const auto& [tau, f] : got.values) {
              if (f <= delta) {
                first = Point{tau};
                break;
              }
            }
            auto want = brute_dischut(T, P, Q, delta, v);
            TrialOutcome out;
            out.positive = want.has_value();
            if (first != want) {
              return failure(dischut_of(T, P, Q, delta, v), "scan decision " + str(first) + " vs oracle " + str(want));
            }
            return out;
          }};
}

// ---- reductions -------------------------------------------------------------

Check maxconv_check() {
  return {"reductions", "maxconvlb-to-dischut1d", [](Rng& rng, const CampaignConfig& c) {
            const std::size_t n = uniform_size(rng, 1, c.maxSize);
            MaxConvLbInstance mc{random_ints(rng, n, 1, 10), random_ints(rng, n, 1, 10), random_ints(rng, n, 1, 20)};
            HutInstance h = c.fault == Fault::MaxConvSignFlip ? maxconvlb_to_dischut1d_sign_flip(mc)
                                                              : maxconvlb_to_dischut1d(mc);
            const bool src = brute_maxconvlb(mc);
            const bool brute = brute_dischut(*h.T, h.P, h.Q, *h.delta, Variant::Directed).has_value();
            const bool fast = solve_discrete(*h.T, h.P, h.Q, *h.delta, Variant::Directed).has_value();
            TrialOutcome out;
            out.positive = src;
            if (brute == src || fast == src) {
              return failure(mc, "source " + str(src) + ", target oracle " + str(brute) + ", target solver " +
                                     str(fast) + " (answers must be flipped)");
            }
            return out;
          }};
}

Check alignment_check() {
  return {"reductions", "linearalign-to-hut1d", [](Rng& rng, const CampaignConfig& c) {
            const std::size_t n = uniform_size(rng, 1, c.maxSize);
            const std::size_t m = uniform_size(rng, n, std::max(n, c.maxSize));
            LinearAlignmentInstance la{sorted_rationals(rng, n, -10, 10, 4), sorted_rationals(rng, m, -10, 10, 4)};
            HutInstance h = linear_alignment_to_hut1d(la);
            Optimum got = optimize(h.P, h.Q, Variant::Directed);
            AlignmentResult want = brute_linear_alignment(la);
            if (got.delta != want.value) {
              return failure(la, "target optimum " + got.delta.to_string() + " vs alignment " + want.value.to_string());
            }
            return TrialOutcome{};
          }};
}

Check necklace_check() {
  return {"reductions", "necklace-to-linearalign-to-hut1d", [](Rng& rng, const CampaignConfig& c) {
            const std::size_t n = uniform_size(rng, 1, c.maxSize);
            NecklaceInstance nk{unit_rationals(rng, n, 8), unit_rationals(rng, n, 8)};
            HutInstance h = linear_alignment_to_hut1d(necklace_to_linear_alignment(nk));
            Optimum got = optimize(h.P, h.Q, Variant::Directed);
            AlignmentResult want = brute_necklace(nk);
            if (got.delta != want.value) {
              return failure(nk, "target optimum " + got.delta.to_string() + " vs necklace " + want.value.to_string());
            }
            return TrialOutcome{};
          }};
}

Check undirected_check() {
  return {"reductions", "undirected-to-directed", [](Rng& rng, const CampaignConfig& c) {
            const std::size_t d = uniform_size(rng, 1, 2);
            auto [P, Q] = related_sets(rng, uniform_size(rng, 1, c.maxSize), uniform_size(rng, 1, c.maxSize), d, 10, 2);
            DirectedPair red = undirected_to_directed(P, Q);
            Optimum want = brute_hut_optimize(P, Q, Variant::Undirected, kOracleCap);
            Optimum got = optimize(red.P, red.Q, Variant::Directed);
            if (got.delta != want.delta) {
              return failure(hut_of(P, Q, std::nullopt, Variant::Undirected),
                             "directed optimum " + got.delta.to_string() + " vs undirected " + want.delta.to_string());
            }
            return TrialOutcome{};
          }};
}

Check boxcover_check() {
  return {"reductions", "dischut-to-boxcover", [](Rng& rng, const CampaignConfig& c) {
            const std::size_t d = uniform_size(rng, 1, 3);
            PointSet T = random_set(rng, uniform_size(rng, 1, c.maxSize), d, -6, 6, 1);
            auto [P, Q] = related_sets(rng, uniform_size(rng, 1, c.maxSize), uniform_size(rng, 1, c.maxSize), d, 8, 1);
            const Scalar delta = rational(rng, 0, 4, 2);
            const bool src = brute_dischut(T, P, Q, delta, Variant::Directed).has_value();
            const bool dst = boxcover_decide(dischut_to_boxcover(T, P, Q, delta));
            TrialOutcome out;
            out.positive = src;
            if (dst == src) {
              return failure(dischut_of(T, P, Q, delta, Variant::Directed),
                             "source " + str(src) + ", box cover " + str(dst) + " (answers must be flipped)");
            }
            return out;
          }};
}

Check fopz_check() {
  return {"reductions", "fopz-to-dischut", [](Rng& rng, const CampaignConfig& c) {
            FopzAeeFormula f = random_formula(rng, c.maxSize);
            HutInstance h = fopz_aee_to_dischut(f);
            const bool src = brute_fopz(f);
            const bool dst = brute_dischut(*h.T, h.P, h.Q, *h.delta, Variant::Directed).has_value();
            TrialOutcome out;
            out.positive = src;
            if (dst == src) {
              return failure(f, "formula " + str(src) + ", discrete instance " + str(dst) + " (answers must be flipped)");
            }
            return out;
          }};
}

// ---- gadgets ----------------------------------------------------------------

bool gadget_verdict(const HutInstance& h, std::string& why) {
  auto tau = region_search_decide(h.P, h.Q, *h.delta);
  if (tau && !certify(h.P, h.Q, *h.delta, Variant::Directed, *tau)) why = "witness fails certification";
  return tau.has_value();
}

Check lopsided_check() {
  return {"gadgets", "lopsided-pipeline", [](Rng& rng, const CampaignConfig& c) {
            const std::size_t u = uniform_size(rng, 2, 3);
            const std::size_t n = uniform_size(rng, 1, std::min<std::size_t>(3, c.maxSize));
            KPartiteHypergraph H = random_hypergraph(rng, u, 4, n, uniform_size(rng, 1, u == 2 ? 14 : 30));
            const Scalar lambda = std::array{Scalar(0), Scalar(1, 2), Scalar(1)}[uniform_size(rng, 0, 2)];
            HutInstance h = lb_pipeline_lopsided(H, lambda, 2);
            const bool src = brute_hyperclique(H).has_value();
            std::string why;
            const bool dst = gadget_verdict(h, why);
            TrialOutcome out;
            out.positive = src;
            if (src != dst || !why.empty()) {
              return failure(H, "lambda " + lambda.to_string() + ": clique " + str(src) + ", instance " + str(dst) + " " + why);
            }
            return out;
          }};
}

Check pcd_check() {
  return {"gadgets", "pcd3d-pipeline", [](Rng& rng, const CampaignConfig&) {
            KPartiteHypergraph H = random_hypergraph(rng, 3, 9, 2, uniform_size(rng, 25, 60));
            const Scalar lambda = uniform(rng, 0, 1) ? Scalar(1) : Scalar(2, 3);
            HutInstance h = pcd_pipeline_3d(H, lambda);
            const bool src = brute_hyperclique(H).has_value();
            std::string why;
            const bool dst = gadget_verdict(h, why);
            TrialOutcome out;
            out.positive = src;
            if (src != dst || !why.empty()) {
              return failure(H, "lambda " + lambda.to_string() + ": clique " + str(src) + ", instance " + str(dst) + " " + why);
            }
            return out;
          }};
}

}  // namespace

HutInstance maxconvlb_to_dischut1d_sign_flip(const MaxConvLbInstance& inst) {
  HutInstance h = maxconvlb_to_dischut1d(inst);
  // Q holds the n + 1 anchor points first, then the B block.
  PointSet Q(1);
  for (std::size_t i = 0; i < h.Q.size(); ++i) Q.push_back(i <= inst.A.size() ? h.Q[i] : -h.Q[i]);
  h.Q = std::move(Q);
  h.meta["reduction"] = "maxconvlb->dischut1d (sign-flip mutant)";
  return h;
}

std::vector<Check> suite_checks(const std::string& suite) {
  std::vector<Check> out;
  const bool all = suite == "all";
  if (all || suite == "solvers") {
    for (std::size_t d = 1; d <= 3; ++d) {
      for (Variant v : {Variant::Directed, Variant::Undirected}) {
        if (d == 3 && v == Variant::Undirected) continue;
        out.push_back(decide_check(d, v));
        out.push_back(optimize_check(d, v));
      }
    }
    for (std::size_t d = 1; d <= 3; ++d) out.push_back(discrete_check(d));
    out.push_back(scan_check());
  }
  if (all || suite == "reductions") {
    out.push_back(maxconv_check());
    out.push_back(alignment_check());
    out.push_back(necklace_check());
    out.push_back(undirected_check());
    out.push_back(boxcover_check());
    out.push_back(fopz_check());
  }
  if (all || suite == "gadgets") {
    out.push_back(lopsided_check());
    out.push_back(pcd_check());
  }
  if (out.empty()) throw InvalidParameter("unknown suite '" + suite + "' (solvers, reductions, gadgets, all)");
  return out;
}

Rng trial_rng(std::uint64_t seed, const std::string& name, std::size_t trial) {
  std::vector<std::uint32_t> words{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                                   static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  for (unsigned char ch : name) words.push_back(ch);
  std::seed_seq seq(words.begin(), words.end());
  return Rng(seq);
}

CheckReport run_check(const Check& check, const CampaignConfig& config) {
  std::vector<TrialOutcome> results(config.trials);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < config.trials; i = next++) {
      Rng rng = trial_rng(config.seed, check.name, i);
      try {
        results[i] = check.trial(rng, config);
      } catch (const std::exception& e) {
        results[i].ok = false;
        results[i].detail = std::string("exception: ") + e.what();
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(config.trials)));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  CheckReport rep{check.suite, check.name, config.trials};
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    if (r.ok) {
      ++rep.passed;
      rep.positives += r.positive;
    } else if (!rep.failedTrial) {
      rep.failedTrial = i;
      rep.counterexample = r.instance;
      rep.detail = r.detail;
    }
  }
  return rep;
}

}  // namespace hut::tools
