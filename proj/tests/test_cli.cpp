#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "hut/continuous.hpp"
#include "hut/instance_io.hpp"
#include "hut/oracles.hpp"
#include "hut/reductions.hpp"
#include "hut_tools/campaigns.hpp"
#include "hut_tools/cli.hpp"
#include "support.hpp"

using namespace hut;
using namespace hut::test;
using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
  json report() const { return json::parse(out); }
};

Run hut_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "hut");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = hut::tools::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("hut_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string put(const TempDir& dir, const std::string& name, AnyInstance inst) {
  const std::string path = dir.file(name);
  save_instance(path, make_file(std::move(inst)));
  return path;
}

HutInstance hut_of(PointSet P, PointSet Q, std::optional<Scalar> delta = std::nullopt) {
  HutInstance h;
  h.P = std::move(P);
  h.Q = std::move(Q);
  h.delta = std::move(delta);
  return h;
}

PointSet line(std::initializer_list<std::int64_t> xs) {
  PointSet s(1);
  for (auto x : xs) s.push_back(Point{Scalar(x)});
  return s;
}

}  // namespace

TEST_CASE("solve --optimize on P = Q gives 0") {
  TempDir dir;
  Rng rng(801);
  for (std::size_t d = 1; d <= 3; ++d) {
    PointSet P = random_set(rng, 5, d, -20, 20, 4);
    auto path = put(dir, "same.json", hut_of(P, P));
    Run r = hut_cli({"solve", "--in", path, "--optimize"});
    REQUIRE(r.code == 0);
    json rep = r.report();
    CHECK(rep["value"] == "0");
    CHECK(rep["certificate"]["verified"] == true);
  }
}

TEST_CASE("solve: decision just below the optimum is infeasible, at the optimum feasible") {
  TempDir dir;
  Rng rng(802);
  int checked = 0;
  for (int t = 0; t < 30; ++t) {
    const std::size_t d = static_cast<std::size_t>(uniform(rng, 1, 3));
    auto [P, Q] = related_sets(rng, static_cast<std::size_t>(uniform(rng, 1, 5)),
                               static_cast<std::size_t>(uniform(rng, 1, 5)), d, 20, 4);
    auto path = put(dir, "inst.json", hut_of(P, Q));
    Run opt = hut_cli({"solve", "--in", path, "--optimize"});
    REQUIRE(opt.code == 0);
    const Scalar star = Scalar::parse(opt.report()["value"].get<std::string>());
    auto cand = candidate_deltas(P, Q);
    auto it = std::lower_bound(cand.begin(), cand.end(), star);
    REQUIRE(it != cand.end());
    REQUIRE(*it == star);
    if (it == cand.begin()) continue;
    const Scalar below = (*std::prev(it) + star) / Scalar(2);
    CHECK(hut_cli({"solve", "--in", path, "--delta", star.to_string()}).code == 0);
    CHECK(hut_cli({"solve", "--in", path, "--delta", below.to_string()}).code == 1);
    ++checked;
  }
  CHECK(checked > 15);
}

TEST_CASE("solve: --algo brute and --algo auto agree on 100 random files") {
  TempDir dir;
  Rng rng(803);
  for (int t = 0; t < 100; ++t) {
    const std::size_t d = static_cast<std::size_t>(uniform(rng, 1, 3));
    const Variant v = d < 3 && uniform(rng, 0, 1) ? Variant::Undirected : Variant::Directed;
    auto [P, Q] = related_sets(rng, static_cast<std::size_t>(uniform(rng, 1, 5)),
                               static_cast<std::size_t>(uniform(rng, 1, 5)), d, 20, 4);
    HutInstance h = hut_of(P, Q, rational(rng, 1, 6, 4));
    h.variant = v;
    auto path = put(dir, "inst.json", h);
    for (const char* task : {"--optimize", ""}) {
      std::vector<std::string> args{"solve", "--in", path};
      if (*task) args.push_back(task);
      auto withAlgo = [&](const char* algo) {
        auto a = args;
        a.insert(a.end(), {"--algo", algo});
        return hut_cli(a);
      };
      Run fast = withAlgo("auto");
      Run brute = withAlgo("brute");
      CAPTURE(t);
      REQUIRE(fast.code == brute.code);
      json a = fast.report(), b = brute.report();
      CHECK(a["verdict"] == b["verdict"]);
      CHECK(a["value"] == b["value"]);
      CHECK(a["tau"] == b["tau"]);
    }
  }
}

TEST_CASE("solve: discrete routes agree") {
  TempDir dir;
  Rng rng(804);
  for (int t = 0; t < 60; ++t) {
    const std::size_t d = static_cast<std::size_t>(uniform(rng, 1, 2));
    HutInstance h = hut_of(random_set(rng, static_cast<std::size_t>(uniform(rng, 1, 5)), d, -10, 10, 1),
                           random_set(rng, static_cast<std::size_t>(uniform(rng, 1, 5)), d, -10, 10, 1),
                           Scalar(uniform(rng, 1, 6)));
    h.mode = Mode::Discrete;
    h.variant = uniform(rng, 0, 1) ? Variant::Undirected : Variant::Directed;
    h.T = random_set(rng, static_cast<std::size_t>(uniform(rng, 1, 6)), d, -10, 10, 1);
    auto path = put(dir, "disc.json", h);
    std::vector<std::string> algos{"rangetree", "brute"};
    if (d == 1) algos.push_back("scan1d");
    for (const char* task : {"--optimize", "--delta"}) {
      std::optional<json> first;
      for (const auto& algo : algos) {
        std::vector<std::string> args{"solve", "--in", path, "--algo", algo, task};
        if (std::string(task) == "--delta") args.push_back(h.delta->to_string());
        Run r = hut_cli(args);
        REQUIRE(r.code <= 1);
        json rep = r.report();
        CAPTURE(t);
        CAPTURE(algo);
        if (first) {
          CHECK(rep["verdict"] == (*first)["verdict"]);
          CHECK(rep["value"] == (*first)["value"]);
          CHECK(rep["tau"] == (*first)["tau"]);
        } else {
          first = rep;
        }
      }
    }
  }
}

TEST_CASE("solve: capability and usage errors") {
  TempDir dir;
  Rng rng(805);
  auto [P, Q] = related_sets(rng, 3, 3, 3, 10, 1);
  HutInstance h = hut_of(P, Q, Scalar(2));
  h.variant = Variant::Undirected;
  auto path = put(dir, "u3.json", h);
  Run r = hut_cli({"solve", "--in", path});
  CHECK(r.code == 2);
  CHECK(r.err.find("3-D undirected") != std::string::npos);
  CHECK(r.err.find("use --algo brute") != std::string::npos);
  CHECK(hut_cli({"solve", "--in", path, "--algo", "brute"}).code <= 1);
  CHECK(hut_cli({"solve", "--in", path, "--algo", "sweep2d"}).code == 2);
  CHECK(hut_cli({"solve", "--in", path, "--delta", "1", "--optimize"}).code == 2);
  CHECK(hut_cli({"solve", "--in", dir.file("missing.json")}).code == 2);
  CHECK(hut_cli({"solve", "--in", path, "--mode", "discrete"}).code == 2);
  CHECK(hut_cli({"frobnicate"}).code == 2);
  CHECK(hut_cli({}).code == 2);
}

TEST_CASE("reduce: worked examples at file level") {
  TempDir dir;
  auto reduce = [&](const std::string& from, const std::string& to, const std::string& in,
                    std::vector<std::string> extra = {}) {
    const std::string out = dir.file(from + "-" + to + ".json");
    std::vector<std::string> args{"reduce", "--from", from, "--to", to, "--in", in, "--out", out};
    args.insert(args.end(), extra.begin(), extra.end());
    Run r = hut_cli(args);
    REQUIRE_MESSAGE(r.code == 0, r.err);
    return out;
  };

  SUBCASE("maxconvlb: YES source gives an infeasible target, NO source a feasible one") {
    auto yes = reduce("maxconvlb", "dischut", put(dir, "mc.json", MaxConvLbInstance{{1, 1}, {1, 1}, {1, 2}}));
    InstanceFile f = load_instance(yes);
    CHECK(f.meta.at("answer_flipped") == "true");
    CHECK(f.meta.at("reduction") == "maxconvlb->dischut");
    CHECK(f.meta.at("M") == "20");
    CHECK(f.meta.count("source_hash") == 1);
    CHECK(hut_cli({"solve", "--in", yes}).code == 1);
    auto no = reduce("maxconvlb", "dischut", put(dir, "mc.json", MaxConvLbInstance{{1, 1}, {1, 1}, {1, 3}}));
    CHECK(hut_cli({"solve", "--in", no}).code == 0);
  }
  SUBCASE("linear alignment and necklace keep the optimum") {
    auto la = reduce("linearalign", "hut",
                     put(dir, "la.json", LinearAlignmentInstance{{Scalar(0)}, {Scalar(1, 2)}}));
    CHECK(hut_cli({"solve", "--in", la, "--optimize"}).report()["value"] == "0");
    NecklaceInstance nk{{Scalar(0), Scalar(1, 3)}, {Scalar(0), Scalar(1, 3)}};
    auto chain = reduce("necklace", "hut", put(dir, "nk.json", nk));
    CHECK(hut_cli({"solve", "--in", chain, "--optimize"}).report()["value"] == "0");
    auto mid = reduce("necklace", "linearalign", put(dir, "nk.json", nk));
    CHECK(std::get<LinearAlignmentInstance>(load_instance(mid).instance).B.size() == 4);
  }
  SUBCASE("undirected to directed keeps the optimum") {
    HutInstance h = hut_of(line({0, 10}), line({0}));
    h.variant = Variant::Undirected;
    auto out = reduce("undirected", "directed", put(dir, "u.json", h));
    CHECK(hut_cli({"solve", "--in", out, "--optimize"}).report()["value"] ==
          hut_cli({"solve", "--in", put(dir, "u.json", h), "--optimize"}).report()["value"]);
  }
  SUBCASE("dischut to boxcover flips the answer") {
    HutInstance h = hut_of(line({0}), line({0}), Scalar(1));
    h.mode = Mode::Discrete;
    h.T = line({0});
    auto out = reduce("dischut", "boxcover", put(dir, "d.json", h));
    CHECK_FALSE(boxcover_decide(std::get<BoxCoverInstance>(load_instance(out).instance)));
    h.Q = line({40});
    out = reduce("dischut", "boxcover", put(dir, "d.json", h));
    CHECK(boxcover_decide(std::get<BoxCoverInstance>(load_instance(out).instance)));
  }
  SUBCASE("fopz: a true formula gives an infeasible instance") {
    FopzAeeFormula f;
    f.A = f.B = f.C = {{0}};
    f.atoms = {LinearAtom{{1}, {-1}, {1}, 0}};
    f.dnf = {{Literal{0, false}}};
    auto out = reduce("fopz", "dischut", put(dir, "f.json", f));
    CHECK(hut_cli({"solve", "--in", out}).code == 1);
  }
  SUBCASE("hyperclique pipelines") {
    auto complete = put(dir, "h.json", KPartiteHypergraph::complete(2, 4, 2));
    auto lop = reduce("hyperclique", "hut", complete, {"--pipeline", "lopsided", "--lambda", "1/2"});
    InstanceFile f = load_instance(lop);
    CHECK(f.meta.at("pipeline") == "lopsided");
    CHECK(hut_cli({"solve", "--in", lop}).code == 0);

    KPartiteHypergraph edgeless;
    edgeless.u = 2;
    edgeless.k = 4;
    edgeless.n = 2;
    auto none = reduce("hyperclique", "hut", put(dir, "e.json", edgeless), {"--pipeline", "lopsided"});
    auto h = std::get<HutInstance>(load_instance(none).instance);
    CHECK_FALSE(region_search_decide(h.P, h.Q, *h.delta).has_value());

    auto pcd = reduce("hyperclique", "hut", put(dir, "h9.json", KPartiteHypergraph::complete(3, 9, 2)),
                      {"--pipeline", "pcd3d"});
    h = std::get<HutInstance>(load_instance(pcd).instance);
    CHECK(region_search_decide(h.P, h.Q, *h.delta).has_value());

    KPartiteHypergraph one = KPartiteHypergraph::complete(3, 9, 1);
    one.edges.erase(one.edges.begin());
    auto dead = reduce("hyperclique", "hut", put(dir, "h1.json", one), {"--pipeline", "pcd3d"});
    h = std::get<HutInstance>(load_instance(dead).instance);
    CHECK(h.dim() == 3);
    CHECK_FALSE(region_search_decide(h.P, h.Q, *h.delta).has_value());

    CHECK(hut_cli({"reduce", "--from", "hyperclique", "--to", "hut", "--in", complete}).code == 2);
  }
  SUBCASE("unknown edges and wrong kinds are usage errors") {
    auto mc = put(dir, "mc.json", MaxConvLbInstance{{1}, {1}, {1}});
    Run r = hut_cli({"reduce", "--from", "maxconvlb", "--to", "boxcover", "--in", mc});
    CHECK(r.code == 2);
    CHECK(r.err.find("maxconvlb->dischut") != std::string::npos);
    CHECK(hut_cli({"reduce", "--from", "fopz", "--to", "dischut", "--in", mc}).code == 2);
  }
}

TEST_CASE("verify: vacuous, passing, deterministic, and catching the mutant") {
  Run empty = hut_cli({"verify", "--trials", "0"});
  CHECK(empty.code == 0);
  CHECK(empty.report()["status"] == "pass");

  Run a = hut_cli({"verify", "--suite", "reductions", "--trials", "10", "--seed", "9"});
  Run b = hut_cli({"verify", "--suite", "reductions", "--trials", "10", "--seed", "9", "--jobs", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  for (const auto& c : a.report()["checks"]) CHECK(c["passed"] == c["trials"]);

  Run bad = hut_cli({"verify", "--suite", "reductions", "--trials", "20", "--inject-fault", "maxconv-sign-flip"});
  CHECK(bad.code == 3);
  json rep = bad.report();
  CHECK(rep["status"] == "fail");
  CHECK(rep["first_counterexample"]["check"] == "maxconvlb-to-dischut1d");
  // The serialized counterexample reproduces the mismatch.
  InstanceFile f = read_instance(rep["first_counterexample"]["instance"].dump());
  const auto& mc = std::get<MaxConvLbInstance>(f.instance);
  HutInstance mutant = hut::tools::maxconvlb_to_dischut1d_sign_flip(mc);
  CHECK(brute_dischut(*mutant.T, mutant.P, mutant.Q, *mutant.delta, Variant::Directed).has_value() ==
        brute_maxconvlb(mc));
}

TEST_CASE("bench: empty size list and row shape") {
  Run empty = hut_cli({"bench", "--family", "sweep2d", "--sizes", ""});
  CHECK(empty.code == 0);
  CHECK(empty.out == "family,n,m,t,wall_ns,verdict\n");
  Run rows = hut_cli({"bench", "--family", "rangetree", "--sizes", "5,4x6x3"});
  std::istringstream in(rows.out);
  std::string header, r1, r2, extra;
  std::getline(in, header);
  std::getline(in, r1);
  std::getline(in, r2);
  CHECK_FALSE(std::getline(in, extra));
  CHECK(r1.rfind("rangetree,5,5,5,", 0) == 0);
  CHECK(r2.rfind("rangetree,4,6,3,", 0) == 0);
  CHECK(hut_cli({"bench", "--family", "sweep2d", "--sizes", "3x0"}).code == 2);
}
