#include <chrono>
#include <ostream>
#include <sstream>

#include "commands.hpp"
#include "hut/continuous.hpp"
#include "hut/discrete.hpp"
#include "hut/errors.hpp"
#include "hut_tools/cli.hpp"
#include "hut_tools/generators.hpp"

namespace hut::tools {

namespace {

struct Size {
  std::size_t n = 0, m = 0, t = 0;
};

// "N", "NxM" or "NxMxT"; missing parts repeat the last one given.
std::vector<Size> parse_sizes(const std::string& list) {
  std::vector<Size> out;
  std::stringstream items(list);
  std::string item;
  while (std::getline(items, item, ',')) {
    if (item.empty()) continue;
    std::vector<std::size_t> parts;
    std::stringstream ps(item);
    std::string part;
    while (std::getline(ps, part, 'x')) {
      std::size_t used = 0;
      unsigned long v = 0;
      try {
        v = std::stoul(part, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != part.size() || v == 0) throw InvalidParameter("bad size '" + item + "'");
      parts.push_back(v);
    }
    if (parts.empty() || parts.size() > 3) throw InvalidParameter("bad size '" + item + "'");
    while (parts.size() < 3) parts.push_back(parts.back());
    out.push_back(Size{parts[0], parts[1], parts[2]});
  }
  return out;
}

}  // namespace

int cmd_bench(const BenchOptions& opt, std::ostream& out) {
  if (opt.family != "sweep2d" && opt.family != "lopsided3d" && opt.family != "rangetree") {
    throw InvalidParameter("unknown family '" + opt.family + "' (sweep2d, lopsided3d, rangetree)");
  }
  const std::vector<Size> sizes = parse_sizes(opt.sizes);
  std::ostringstream csv;
  csv << "family,n,m,t,wall_ns,verdict\n";
  Rng rng(opt.seed);
  const Scalar delta(2);
  for (const Size& s : sizes) {
    bool feasible = false;
    std::chrono::steady_clock::duration wall{};
    std::size_t t = 0;
    if (opt.family == "rangetree") {
      t = s.t;
      auto [P, Q] = related_sets(rng, s.n, s.m, 2, 1000, 1);
      PointSet T = random_set(rng, t, 2, -500, 500, 1);
      const auto start = std::chrono::steady_clock::now();
      feasible = solve_discrete(T, P, Q, Scalar(40), Variant::Directed).has_value();
      wall = std::chrono::steady_clock::now() - start;
    } else {
      const std::size_t d = opt.family == "sweep2d" ? 2 : 3;
      auto [P, Q] = related_sets(rng, s.n, s.m, d, 100, 4);
      const auto start = std::chrono::steady_clock::now();
      feasible = (d == 2 ? decide_2d(P, Q, delta, Variant::Directed) : decide_3d_lopsided(P, Q, delta)).has_value();
      wall = std::chrono::steady_clock::now() - start;
    }
    csv << opt.family << "," << s.n << "," << s.m << "," << t << ","
        << std::chrono::duration_cast<std::chrono::nanoseconds>(wall).count() << ","
        << (feasible ? "feasible" : "infeasible") << "\n";
  }
  emit(csv.str(), opt.out, out);
  return kFeasible;
}

}  // namespace hut::tools
