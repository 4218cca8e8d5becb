#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>

#include "hut/additive.hpp"
#include "hut/hausdorff.hpp"
#include "hut/hypergraph.hpp"
#include "hut/translation.hpp"

namespace hut {

using AnyInstance = std::variant<HutInstance, TpwcInstance, TpwbInstance, TpwoInstance, TranslatedShapeInstance,
                                 MaxConvLbInstance, LinearAlignmentInstance, NecklaceInstance,
                                 AllInts3SumInstance, FopzAeeFormula, KPartiteHypergraph, BoxCoverInstance>;

// One instance plus provenance metadata. For HuT instances the metadata is
// also carried by HutInstance::meta; the file-level map wins when both are set.
struct InstanceFile {
  AnyInstance instance;
  std::map<std::string, std::string> meta;
  friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

// Wraps an instance, lifting HutInstance::meta to the file level.
InstanceFile make_file(AnyInstance inst);

// "hut", "dischut", "tpwc", "tpwb", "tpwo", "shapes", "maxconvlb", "linearalign",
// "necklace", "allints3sum", "fopz", "hypergraph" or "boxcover".
std::string kind_name(const AnyInstance& inst);

// JSON text with a `kind` discriminator, `dim`, kind-specific arrays of
// rational strings and an optional `meta` object.
std::string write_instance(const InstanceFile& file);
// Throws FormatError on malformed input.
InstanceFile read_instance(std::string_view text);

InstanceFile load_instance(const std::string& path);
void save_instance(const std::string& path, const InstanceFile& file);

}  // namespace hut
