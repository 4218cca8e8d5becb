#include "hut/instance_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hut/errors.hpp"

namespace hut {

namespace {

using json = nlohmann::ordered_json;

template <class... F>
struct Overload : F... {
  using F::operator()...;
};
template <class... F>
Overload(F...) -> Overload<F...>;

// ---- writing ----------------------------------------------------------------

json scalars(const std::vector<Scalar>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.to_string());
  return a;
}

json ints(const std::vector<std::int64_t>& v) {
  json a = json::array();
  for (auto x : v) a.push_back(std::to_string(x));
  return a;
}

json points(const PointSet& s) {
  json a = json::array();
  for (const auto& p : s) a.push_back(scalars(p.coords));
  return a;
}

json box(const Box& b) { return json{{"lo", scalars(b.lo)}, {"hi", scalars(b.hi)}}; }

json boxes(const std::vector<Box>& bs) {
  json a = json::array();
  for (const auto& b : bs) a.push_back(box(b));
  return a;
}

// ---- reading ----------------------------------------------------------------

[[noreturn]] void fail(const std::string& what) { throw FormatError("instance file: " + what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

Scalar scalar(const json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<std::int64_t>());
  fail("expected a rational string");
}

std::int64_t integer(const json& j) {
  Scalar s = scalar(j);
  if (!s.is_integer()) fail("expected an integer");
  return s.to_int64();
}

std::size_t count(const json& j) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    fail("expected a nonnegative integer");
  }
  return j.get<std::size_t>();
}

const json& array(const json& j) {
  if (!j.is_array()) fail("expected an array");
  return j;
}

std::vector<Scalar> read_scalars(const json& j) {
  std::vector<Scalar> out;
  for (const auto& x : array(j)) out.push_back(scalar(x));
  return out;
}

std::vector<std::int64_t> read_ints(const json& j) {
  std::vector<std::int64_t> out;
  for (const auto& x : array(j)) out.push_back(integer(x));
  return out;
}

std::vector<std::vector<std::int64_t>> read_int_rows(const json& j) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& x : array(j)) out.push_back(read_ints(x));
  return out;
}

PointSet read_points(const json& j, std::size_t dim) {
  PointSet s(dim);
  for (const auto& p : array(j)) {
    Point q(read_scalars(p));
    if (q.dim() != dim) fail("point dimension differs from 'dim'");
    s.push_back(std::move(q));
  }
  return s;
}

Box read_box(const json& j, std::size_t dim) {
  Box b(read_scalars(field(j, "lo")), read_scalars(field(j, "hi")));
  if (b.dim() != dim) fail("box dimension differs from 'dim'");
  return b;
}

std::vector<Box> read_boxes(const json& j, std::size_t dim) {
  std::vector<Box> out;
  for (const auto& b : array(j)) out.push_back(read_box(b, dim));
  return out;
}

Variant read_variant(const json& j) {
  const std::string v = j.contains("variant") ? j.at("variant").get<std::string>() : "directed";
  if (v == "directed") return Variant::Directed;
  if (v == "undirected") return Variant::Undirected;
  fail("unknown variant '" + v + "'");
}

std::size_t dim_of(const AnyInstance& inst) {
  return std::visit(Overload{
                        [](const HutInstance& h) { return h.dim(); },
                        [](const TpwcInstance& t) { return t.P.empty() ? t.centers.dim() : t.P.dim(); },
                        [](const TpwbInstance& t) {
                          return t.P.empty() ? (t.boxes.empty() ? std::size_t{0} : t.boxes[0].dim()) : t.P.dim();
                        },
                        [](const TpwoInstance& t) { return t.dim(); },
                        [](const TranslatedShapeInstance& s) { return s.dim; },
                        [](const BoxCoverInstance& b) { return b.P.empty() ? b.T.dim() : b.P.dim(); },
                        [](const KPartiteHypergraph&) { return std::size_t{0}; },
                        [](const FopzAeeFormula&) { return std::size_t{0}; },
                        [](const auto&) { return std::size_t{1}; },
                    },
                    inst);
}

}  // namespace

InstanceFile make_file(AnyInstance inst) {
  InstanceFile f{std::move(inst), {}};
  if (auto* h = std::get_if<HutInstance>(&f.instance)) f.meta = h->meta;
  return f;
}

std::string kind_name(const AnyInstance& inst) {
  return std::visit(Overload{
                        [](const HutInstance& h) -> std::string {
                          return h.mode == Mode::Discrete ? "dischut" : "hut";
                        },
                        [](const TpwcInstance&) -> std::string { return "tpwc"; },
                        [](const TpwbInstance&) -> std::string { return "tpwb"; },
                        [](const TpwoInstance&) -> std::string { return "tpwo"; },
                        [](const TranslatedShapeInstance&) -> std::string { return "shapes"; },
                        [](const MaxConvLbInstance&) -> std::string { return "maxconvlb"; },
                        [](const LinearAlignmentInstance&) -> std::string { return "linearalign"; },
                        [](const NecklaceInstance&) -> std::string { return "necklace"; },
                        [](const AllInts3SumInstance&) -> std::string { return "allints3sum"; },
                        [](const FopzAeeFormula&) -> std::string { return "fopz"; },
                        [](const KPartiteHypergraph&) -> std::string { return "hypergraph"; },
                        [](const BoxCoverInstance&) -> std::string { return "boxcover"; },
                    },
                    inst);
}

std::string write_instance(const InstanceFile& file) {
  json j;
  j["kind"] = kind_name(file.instance);
  j["dim"] = dim_of(file.instance);
  std::visit(Overload{
                 [&](const HutInstance& h) {
                   j["variant"] = h.variant == Variant::Directed ? "directed" : "undirected";
                   if (h.delta) j["delta"] = h.delta->to_string();
                   j["P"] = points(h.P);
                   j["Q"] = points(h.Q);
                   if (h.T) j["T"] = points(*h.T);
                 },
                 [&](const TpwcInstance& t) {
                   j["delta"] = t.delta.to_string();
                   j["P"] = points(t.P);
                   j["centers"] = points(t.centers);
                 },
                 [&](const TpwbInstance& t) {
                   j["P"] = points(t.P);
                   j["boxes"] = boxes(t.boxes);
                 },
                 [&](const TpwoInstance& t) {
                   j["delta"] = t.delta.to_string();
                   j["delta0"] = t.delta0.to_string();
                   j["target"] = box(t.targetBox);
                   json subs = json::array();
                   for (const auto& s : t.subs) subs.push_back(json{{"P", points(s.P)}, {"centers", points(s.centers)}});
                   j["subs"] = std::move(subs);
                 },
                 [&](const TranslatedShapeInstance& s) {
                   json shapes = json::array();
                   for (const auto& z : s.shapes) shapes.push_back(boxes(z));
                   json objects = json::array();
                   for (const auto& o : s.objects) {
                     objects.push_back(json{{"offset", scalars(o.offset.coords)}, {"shape", o.shape}});
                   }
                   j["shapes"] = std::move(shapes);
                   j["objects"] = std::move(objects);
                 },
                 [&](const MaxConvLbInstance& m) {
                   j["A"] = ints(m.A);
                   j["B"] = ints(m.B);
                   j["C"] = ints(m.C);
                 },
                 [&](const LinearAlignmentInstance& a) {
                   j["A"] = scalars(a.A);
                   j["B"] = scalars(a.B);
                 },
                 [&](const NecklaceInstance& a) {
                   j["A"] = scalars(a.A);
                   j["B"] = scalars(a.B);
                 },
                 [&](const AllInts3SumInstance& a) {
                   j["A"] = ints(a.A);
                   j["B"] = ints(a.B);
                   j["C"] = ints(a.C);
                 },
                 [&](const FopzAeeFormula& f) {
                   j["dimA"] = f.dimA;
                   j["dimB"] = f.dimB;
                   j["dimC"] = f.dimC;
                   for (auto [key, rows] : {std::pair{"A", &f.A}, std::pair{"B", &f.B}, std::pair{"C", &f.C}}) {
                     json a = json::array();
                     for (const auto& r : *rows) a.push_back(ints(r));
                     j[key] = std::move(a);
                   }
                   json atoms = json::array();
                   for (const auto& at : f.atoms) {
                     atoms.push_back(json{{"alpha", ints(at.alpha)},
                                          {"beta", ints(at.beta)},
                                          {"gamma", ints(at.gamma)},
                                          {"S", std::to_string(at.S)}});
                   }
                   j["atoms"] = std::move(atoms);
                   json dnf = json::array();
                   for (const auto& clause : f.dnf) {
                     json c = json::array();
                     for (const auto& l : clause) c.push_back(json{{"atom", l.atom}, {"negated", l.negated}});
                     dnf.push_back(std::move(c));
                   }
                   j["dnf"] = std::move(dnf);
                 },
                 [&](const KPartiteHypergraph& H) {
                   j["u"] = H.u;
                   j["k"] = H.k;
                   j["n"] = H.n;
                   j["edges"] = json(std::vector<std::vector<std::size_t>>(H.edges.begin(), H.edges.end()));
                 },
                 [&](const BoxCoverInstance& b) {
                   j["T"] = points(b.T);
                   j["P"] = points(b.P);
                   j["boxes"] = boxes(b.boxes);
                 },
             },
             file.instance);
  if (!file.meta.empty()) j["meta"] = file.meta;
  return j.dump(2) + "\n";
}

InstanceFile read_instance(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("not valid JSON (") + e.what() + ")");
  }
  try {
    const std::string kind = field(j, "kind").get<std::string>();
    const std::size_t dim = j.contains("dim") ? count(j.at("dim")) : 0;
    std::map<std::string, std::string> meta;
    if (j.contains("meta")) meta = j.at("meta").get<std::map<std::string, std::string>>();

    AnyInstance inst;
    if (kind == "hut" || kind == "dischut") {
      HutInstance h;
      h.variant = read_variant(j);
      h.mode = kind == "dischut" ? Mode::Discrete : Mode::Continuous;
      if (j.contains("delta")) h.delta = scalar(j.at("delta"));
      h.P = read_points(field(j, "P"), dim);
      h.Q = read_points(field(j, "Q"), dim);
      if (kind == "dischut") h.T = read_points(field(j, "T"), dim);
      h.meta = meta;
      h.validate();
      inst = std::move(h);
    } else if (kind == "tpwc") {
      TpwcInstance t{read_points(field(j, "P"), dim), read_points(field(j, "centers"), dim),
                     scalar(field(j, "delta"))};
      t.validate();
      inst = std::move(t);
    } else if (kind == "tpwb") {
      TpwbInstance t{read_points(field(j, "P"), dim), read_boxes(field(j, "boxes"), dim)};
      t.validate();
      inst = std::move(t);
    } else if (kind == "tpwo") {
      TpwoInstance t;
      t.delta = scalar(field(j, "delta"));
      t.delta0 = scalar(field(j, "delta0"));
      t.targetBox = read_box(field(j, "target"), dim);
      for (const auto& s : array(field(j, "subs"))) {
        t.subs.push_back(TpwcSub{read_points(field(s, "P"), dim), read_points(field(s, "centers"), dim)});
      }
      t.validate();
      inst = std::move(t);
    } else if (kind == "shapes") {
      TranslatedShapeInstance s;
      s.dim = dim;
      for (const auto& z : array(field(j, "shapes"))) s.shapes.push_back(read_boxes(z, dim));
      for (const auto& o : array(field(j, "objects"))) {
        Point off(read_scalars(field(o, "offset")));
        if (off.dim() != dim) fail("offset dimension differs from 'dim'");
        s.objects.push_back(ShapeObject{std::move(off), count(field(o, "shape"))});
      }
      s.validate();
      inst = std::move(s);
    } else if (kind == "maxconvlb") {
      inst = MaxConvLbInstance{read_ints(field(j, "A")), read_ints(field(j, "B")), read_ints(field(j, "C"))};
    } else if (kind == "linearalign") {
      inst = LinearAlignmentInstance{read_scalars(field(j, "A")), read_scalars(field(j, "B"))};
    } else if (kind == "necklace") {
      inst = NecklaceInstance{read_scalars(field(j, "A")), read_scalars(field(j, "B"))};
    } else if (kind == "allints3sum") {
      inst = AllInts3SumInstance{read_ints(field(j, "A")), read_ints(field(j, "B")), read_ints(field(j, "C"))};
    } else if (kind == "fopz") {
      FopzAeeFormula f;
      f.dimA = count(field(j, "dimA"));
      f.dimB = count(field(j, "dimB"));
      f.dimC = count(field(j, "dimC"));
      f.A = read_int_rows(field(j, "A"));
      f.B = read_int_rows(field(j, "B"));
      f.C = read_int_rows(field(j, "C"));
      for (const auto& a : array(field(j, "atoms"))) {
        f.atoms.push_back(LinearAtom{read_ints(field(a, "alpha")), read_ints(field(a, "beta")),
                                     read_ints(field(a, "gamma")), integer(field(a, "S"))});
      }
      for (const auto& c : array(field(j, "dnf"))) {
        std::vector<Literal> clause;
        for (const auto& l : array(c)) clause.push_back(Literal{count(field(l, "atom")), field(l, "negated").get<bool>()});
        f.dnf.push_back(std::move(clause));
      }
      f.validate();
      inst = std::move(f);
    } else if (kind == "hypergraph") {
      KPartiteHypergraph H;
      H.u = count(field(j, "u"));
      H.k = count(field(j, "k"));
      H.n = count(field(j, "n"));
      for (const auto& e : array(field(j, "edges"))) H.add_edge(e.get<std::vector<std::size_t>>());
      H.validate();
      inst = std::move(H);
    } else if (kind == "boxcover") {
      inst = BoxCoverInstance{read_points(field(j, "T"), dim), read_points(field(j, "P"), dim),
                              read_boxes(field(j, "boxes"), dim)};
    } else {
      fail("unknown kind '" + kind + "'");
    }
    return InstanceFile{std::move(inst), std::move(meta)};
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("malformed field (") + e.what() + ")");
  } catch (const std::invalid_argument& e) {
    fail(std::string("invalid instance (") + e.what() + ")");
  }
}

InstanceFile load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return read_instance(ss.str());
}

void save_instance(const std::string& path, const InstanceFile& file) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << write_instance(file);
}

}  // namespace hut
