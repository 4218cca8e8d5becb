#include "hut/additive.hpp"

#include "hut/errors.hpp"

namespace hut {

namespace {

std::int64_t dot(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

void FopzAeeFormula::validate() const {
  auto checkSet = [](const std::vector<std::vector<std::int64_t>>& s, std::size_t d, const char* name) {
    for (const auto& v : s) {
      if (v.size() != d) throw InvalidParameter(std::string("fopz: vector of wrong dimension in ") + name);
    }
  };
  checkSet(A, dimA, "A");
  checkSet(B, dimB, "B");
  checkSet(C, dimC, "C");
  if (atoms.size() > 3) throw InvalidParameter("fopz: at most 3 atoms are supported");
  for (const auto& at : atoms) {
    if (at.alpha.size() != dimA || at.beta.size() != dimB || at.gamma.size() != dimC) {
      throw InvalidParameter("fopz: atom coefficient dimension");
    }
  }
  for (const auto& clause : dnf) {
    for (const auto& lit : clause) {
      if (lit.atom >= atoms.size()) throw InvalidParameter("fopz: literal refers to a missing atom");
    }
  }
}

bool FopzAeeFormula::eval_atom(std::size_t i, const std::vector<std::int64_t>& a,
                               const std::vector<std::int64_t>& b, const std::vector<std::int64_t>& c) const {
  const auto& at = atoms[i];
  return dot(at.alpha, a) + dot(at.beta, b) <= dot(at.gamma, c) + at.S;
}

}  // namespace hut
