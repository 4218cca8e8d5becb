#pragma once

#include <map>
#include <optional>
#include <string>

#include "hut/geometry.hpp"

namespace hut {

enum class Variant { Directed, Undirected };
enum class Mode { Continuous, Discrete };

const char* to_string(Variant v);
const char* to_string(Mode m);

// Hausdorff-under-translation instance. T is present iff mode is Discrete.
struct HutInstance {
  PointSet P;
  PointSet Q;
  std::optional<Scalar> delta;
  Variant variant = Variant::Directed;
  Mode mode = Mode::Continuous;
  std::optional<PointSet> T;
  std::map<std::string, std::string> meta;

  std::size_t dim() const { return P.empty() ? Q.dim() : P.dim(); }
  // Throws on violated invariants (dims, integrality in discrete mode, delta > 0).
  void validate() const;

  friend bool operator==(const HutInstance&, const HutInstance&) = default;
};

// Optimal threshold and the translation attaining it.
struct Optimum {
  Scalar delta;
  Point tau;
};

// max_{p in P} min_{q in Q} |p - q|_inf; 0 for empty P.
Scalar directed_hausdorff(const PointSet& P, const PointSet& Q);
Scalar undirected_hausdorff(const PointSet& P, const PointSet& Q);

// Same value as directed_hausdorff, via a range tree over Q and a binary
// search over each point's candidate distances.
Scalar directed_hausdorff_rt(const PointSet& P, const PointSet& Q);

// Every point of P within delta of some point of Q.
bool within_directed(const PointSet& P, const PointSet& Q, const Scalar& delta);

}  // namespace hut
