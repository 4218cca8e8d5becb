#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "commands.hpp"
#include "hut/errors.hpp"
#include "hut/gadgets.hpp"
#include "hut/instance_io.hpp"
#include "hut/reductions.hpp"
#include "hut/translation.hpp"
#include "hut_tools/cli.hpp"

namespace hut::tools {

namespace {

using Meta = std::map<std::string, std::string>;

struct Edge {
  const char* sourceKind;
  bool answerFlipped;
  std::function<AnyInstance(const AnyInstance&, const ReduceOptions&)> apply;
};

template <class T>
const T& as(const AnyInstance& inst) {
  return std::get<T>(inst);
}

HutInstance directed_of(const AnyInstance& inst) {
  const auto& h = as<HutInstance>(inst);
  if (h.mode != Mode::Continuous || h.variant != Variant::Undirected) {
    throw InvalidParameter("undirected -> directed expects a continuous undirected hut file");
  }
  DirectedPair red = undirected_to_directed(h.P, h.Q);
  HutInstance out;
  out.P = red.P;
  out.Q = red.Q;
  out.delta = h.delta;
  out.meta["M"] = red.M.to_string();
  return out;
}

HutInstance discrete_of(const AnyInstance& inst) {
  const auto& h = as<HutInstance>(inst);
  if (h.mode != Mode::Discrete || h.variant != Variant::Directed || !h.delta) {
    throw InvalidParameter("dischut -> boxcover expects a directed dischut file with delta");
  }
  return h;
}

Scalar lambda_of(const ReduceOptions& opt) { return Scalar::parse(opt.lambda); }

// Keyed by "from->to".
const std::map<std::string, Edge>& edges() {
  static const std::map<std::string, Edge> table{
      {"maxconvlb->dischut",
       {"maxconvlb", true, [](const AnyInstance& i, const ReduceOptions&) -> AnyInstance {
          return maxconvlb_to_dischut1d(as<MaxConvLbInstance>(i));
        }}},
      {"linearalign->hut",
       {"linearalign", false, [](const AnyInstance& i, const ReduceOptions&) -> AnyInstance {
          return linear_alignment_to_hut1d(as<LinearAlignmentInstance>(i));
        }}},
      {"necklace->linearalign",
       {"necklace", false, [](const AnyInstance& i, const ReduceOptions&) -> AnyInstance {
          return necklace_to_linear_alignment(as<NecklaceInstance>(i));
        }}},
      {"necklace->hut",
       {"necklace", false, [](const AnyInstance& i, const ReduceOptions&) -> AnyInstance {
          return linear_alignment_to_hut1d(necklace_to_linear_alignment(as<NecklaceInstance>(i)));
        }}},
      {"hyperclique->hut",
       {"hypergraph", false, [](const AnyInstance& i, const ReduceOptions& o) -> AnyInstance {
          const auto& H = as<KPartiteHypergraph>(i);
          if (o.pipeline == "lopsided") return lb_pipeline_lopsided(H, lambda_of(o), o.dim);
          if (o.pipeline == "pcd3d") return pcd_pipeline_3d(H, lambda_of(o));
          throw InvalidParameter("hyperclique -> hut needs --pipeline lopsided or pcd3d");
        }}},
      {"hyperclique->shapes",
       {"hypergraph", false, [](const AnyInstance& i, const ReduceOptions& o) -> AnyInstance {
          const auto& H = as<KPartiteHypergraph>(i);
          if (o.pipeline == "lopsided") return build_translated_shape(H, lambda_of(o), o.dim / 2);
          if (o.pipeline == "pcd3d") return pcd_orthant_shapes(H, lambda_of(o));
          throw InvalidParameter("hyperclique -> shapes needs --pipeline lopsided or pcd3d");
        }}},
      {"shapes->tpwb",
       {"shapes", false, [](const AnyInstance& i, const ReduceOptions&) -> AnyInstance {
          return shapes_to_tpwb(as<TranslatedShapeInstance>(i));
        }}},
      {"tpwb->tpwo",
       {"tpwb", false, [](const AnyInstance& i, const ReduceOptions&) -> AnyInstance {
          return tpwb_to_tpwo_double_dim(as<TpwbInstance>(i));
        }}},
      {"tpwo->tpwc",
       {"tpwo", false, [](const AnyInstance& i, const ReduceOptions&) -> AnyInstance {
          return tpwo_to_tpwc(as<TpwoInstance>(i));
        }}},
      {"tpwo->hut",
       {"tpwo", false, [](const AnyInstance& i, const ReduceOptions&) -> AnyInstance {
          return tpwo_to_uhut(as<TpwoInstance>(i));
        }}},
      {"tpwc->hut",
       {"tpwc", false, [](const AnyInstance& i, const ReduceOptions&) -> AnyInstance {
          return tpwc_to_hut(as<TpwcInstance>(i));
        }}},
      {"hut->tpwc",
       {"hut", false, [](const AnyInstance& i, const ReduceOptions&) -> AnyInstance {
          return hut_to_tpwc(as<HutInstance>(i));
        }}},
      {"undirected->directed",
       {"hut", false, [](const AnyInstance& i, const ReduceOptions&) -> AnyInstance { return directed_of(i); }}},
      {"dischut->boxcover",
       {"dischut", true, [](const AnyInstance& i, const ReduceOptions&) -> AnyInstance {
          HutInstance h = discrete_of(i);
          return dischut_to_boxcover(*h.T, h.P, h.Q, *h.delta);
        }}},
      {"fopz->dischut",
       {"fopz", true, [](const AnyInstance& i, const ReduceOptions&) -> AnyInstance {
          return fopz_aee_to_dischut(as<FopzAeeFormula>(i));
        }}},
  };
  return table;
}

std::string hex(std::size_t v) {
  std::ostringstream os;
  os << std::hex << v;
  return os.str();
}

}  // namespace

int cmd_reduce(const ReduceOptions& opt, std::ostream& out) {
  const std::string key = opt.from + "->" + opt.to;
  auto it = edges().find(key);
  if (it == edges().end()) {
    std::string list;
    for (const auto& [k, e] : edges()) list += "\n  " + k;
    throw Unsupported("no reduction " + key + "; available:" + list);
  }
  const Edge& edge = it->second;

  std::ifstream in(opt.in);
  if (!in) throw FormatError("cannot open '" + opt.in + "'");
  std::stringstream text;
  text << in.rdbuf();
  InstanceFile src = read_instance(text.str());
  if (kind_name(src.instance) != edge.sourceKind) {
    throw InvalidParameter(key + " expects a '" + std::string(edge.sourceKind) + "' file, got '" +
                           kind_name(src.instance) + "'");
  }

  InstanceFile dst = make_file(edge.apply(src.instance, opt));
  dst.meta["reduction"] = key;
  if (!opt.pipeline.empty() && opt.from == "hyperclique") dst.meta["pipeline"] = opt.pipeline;
  dst.meta["source_kind"] = edge.sourceKind;
  dst.meta["source_hash"] = hex(std::hash<std::string>{}(text.str()));
  dst.meta["answer_flipped"] = edge.answerFlipped ? "true" : "false";
  if (auto* h = std::get_if<HutInstance>(&dst.instance)) h->meta = dst.meta;

  const std::string body = write_instance(dst);
  emit(body, opt.out, out);
  if (!opt.out.empty()) {
    nlohmann::ordered_json rep{{"command", "reduce"}, {"reduction", key}, {"kind", kind_name(dst.instance)},
                               {"out", opt.out}};
    out << rep.dump() << "\n";
  }
  return kFeasible;
}

}  // namespace hut::tools
