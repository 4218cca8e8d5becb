#include <ostream>

#include <json.hpp>

#include "commands.hpp"
#include "hut/errors.hpp"
#include "hut_tools/campaigns.hpp"
#include "hut_tools/cli.hpp"

namespace hut::tools {

int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
  using json = nlohmann::ordered_json;
  CampaignConfig config;
  config.trials = opt.trials;
  config.seed = opt.seed;
  config.maxSize = opt.maxSize;
  config.jobs = opt.jobs;
  if (opt.maxSize == 0) throw InvalidParameter("--max-size must be positive");
  if (opt.fault == "maxconv-sign-flip") {
    config.fault = Fault::MaxConvSignFlip;
  } else if (opt.fault != "none") {
    throw InvalidParameter("unknown fault '" + opt.fault + "'");
  }

  json rep;
  rep["command"] = "verify";
  rep["suite"] = opt.suite;
  rep["trials"] = opt.trials;
  rep["seed"] = opt.seed;
  rep["max_size"] = opt.maxSize;
  if (config.fault != Fault::None) rep["injected_fault"] = opt.fault;
  json checks = json::array();
  json first;
  bool ok = true;
  for (const Check& check : suite_checks(opt.suite)) {
    CheckReport r = run_check(check, config);
    checks.push_back(json{{"suite", r.suite},
                          {"check", r.name},
                          {"trials", r.trials},
                          {"passed", r.passed},
                          {"positives", r.positives}});
    if (!r.ok() && ok) {
      ok = false;
      first = json{{"check", r.name}, {"trial", *r.failedTrial}, {"detail", r.detail}};
      if (r.counterexample) first["instance"] = json::parse(write_instance(*r.counterexample));
    }
  }
  rep["checks"] = std::move(checks);
  rep["status"] = ok ? "pass" : "fail";
  if (!ok) rep["first_counterexample"] = std::move(first);
  emit(rep.dump(2) + "\n", opt.out, out);
  return ok ? kFeasible : kVerificationFailure;
}

}  // namespace hut::tools
