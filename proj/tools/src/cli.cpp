#include "hut_tools/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "hut/errors.hpp"

namespace hut::tools {

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw FormatError("cannot write '" + path + "'");
  f << text;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hausdorff distance under translation: solvers, reductions and verification campaigns", "hut"};
  app.require_subcommand(1);

  SolveOptions solve;
  auto* s = app.add_subcommand("solve", "Decide or optimize a hut/dischut instance file");
  s->add_option("--in", solve.in, "Instance file")->required();
  s->add_option("--out", solve.out, "Report file (default: stdout)");
  s->add_option("--variant", solve.variant, "Override the file's variant")
      ->check(CLI::IsMember({"directed", "undirected"}));
  s->add_option("--mode", solve.mode, "Override the file's mode")->check(CLI::IsMember({"continuous", "discrete"}));
  s->add_option("--algo", solve.algo, "Algorithm")
      ->check(CLI::IsMember({"auto", "envelope1d", "sweep2d", "lopsided3d", "rangetree", "scan1d", "brute"}));
  auto* deltaOpt = s->add_option("--delta", solve.delta, "Threshold as a rational string");
  auto* optFlag = s->add_flag("--optimize", solve.optimize, "Compute the optimal threshold");
  deltaOpt->excludes(optFlag);

  ReduceOptions reduce;
  auto* r = app.add_subcommand("reduce", "Apply a reduction to an instance file");
  r->add_option("--from", reduce.from, "Source problem")->required();
  r->add_option("--to", reduce.to, "Target problem")->required();
  r->add_option("--pipeline", reduce.pipeline, "Gadget pipeline for hyperclique sources")
      ->check(CLI::IsMember({"lopsided", "pcd3d"}));
  r->add_option("--lambda", reduce.lambda, "Pipeline balance parameter in [0, 1]");
  r->add_option("--dim", reduce.dim, "Output dimension of the lopsided pipeline");
  r->add_option("--in", reduce.in, "Source instance file")->required();
  r->add_option("--out", reduce.out, "Target instance file (default: stdout)");

  VerifyOptions verify;
  auto* v = app.add_subcommand("verify", "Run randomized solver/oracle equivalence campaigns");
  v->add_option("--suite", verify.suite, "Suite")->check(CLI::IsMember({"solvers", "reductions", "gadgets", "all"}));
  v->add_option("--trials", verify.trials, "Trials per check");
  v->add_option("--seed", verify.seed, "Base seed");
  v->add_option("--max-size", verify.maxSize, "Largest point set or array size");
  v->add_option("--jobs", verify.jobs, "Worker threads");
  v->add_option("--inject-fault", verify.fault, "Deliberate defect for mutation testing")
      ->check(CLI::IsMember({"none", "maxconv-sign-flip"}));
  v->add_option("--out", verify.out, "Report file (default: stdout)");

  BenchOptions bench;
  auto* b = app.add_subcommand("bench", "Time a solver family on random instances");
  b->add_option("--family", bench.family, "Solver family")
      ->required()
      ->check(CLI::IsMember({"sweep2d", "lopsided3d", "rangetree"}));
  b->add_option("--sizes", bench.sizes, "Comma-separated sizes N, NxM or NxMxT");
  b->add_option("--seed", bench.seed, "Seed");
  b->add_option("--out", bench.out, "CSV file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (s->parsed()) return cmd_solve(solve, out);
    if (r->parsed()) return cmd_reduce(reduce, out);
    if (v->parsed()) return cmd_verify(verify, out);
    return cmd_bench(bench, out);
  } catch (const Unsupported& e) {
    err << "hut: unsupported: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "hut: error: " << e.what() << "\n";
  }
  return kUsage;
}

}  // namespace hut::tools
