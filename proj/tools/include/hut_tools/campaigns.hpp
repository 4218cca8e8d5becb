#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hut/instance_io.hpp"
#include "hut_tools/generators.hpp"

namespace hut::tools {

// Deliberate defects for mutation testing of the campaigns themselves.
enum class Fault { None, MaxConvSignFlip };

struct CampaignConfig {
  std::size_t trials = 20;
  std::uint64_t seed = 1;
  std::size_t maxSize = 8;
  unsigned jobs = 1;
  Fault fault = Fault::None;
};

struct TrialOutcome {
  bool ok = true;
  bool positive = false;  // feasible / YES source instance
  std::optional<InstanceFile> instance;  // set when ok is false
  std::string detail;
};

struct Check {
  std::string suite;
  std::string name;
  std::function<TrialOutcome(Rng&, const CampaignConfig&)> trial;
};

struct CheckReport {
  std::string suite;
  std::string name;
  std::size_t trials = 0;
  std::size_t passed = 0;
  std::size_t positives = 0;
  // Lowest failing trial index with its instance and explanation.
  std::optional<std::size_t> failedTrial;
  std::optional<InstanceFile> counterexample;
  std::string detail;
  bool ok() const { return passed == trials; }
};

// "solvers", "reductions", "gadgets" or "all". Throws InvalidParameter otherwise.
std::vector<Check> suite_checks(const std::string& suite);

// Trial i draws from a generator seeded by (seed, check name, i), so results do
// not depend on the number of jobs.
CheckReport run_check(const Check& check, const CampaignConfig& config);

Rng trial_rng(std::uint64_t seed, const std::string& name, std::size_t trial);

// The maxconv gadget with the sign of the B block flipped.
HutInstance maxconvlb_to_dischut1d_sign_flip(const MaxConvLbInstance& inst);

}  // namespace hut::tools
