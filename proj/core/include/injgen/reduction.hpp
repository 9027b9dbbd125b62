#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "injgen/build.hpp"

namespace injgen {

// Status of the claim "injectives generate" for a registered algebra.
enum class Status { Established, Conditional, Unknown };
const char* status_name(Status s);
Status status_from_name(const std::string& s);

enum class Check { Verified, Refuted, Inconclusive };
const char* check_name(Check c);
Check check_from_name(const std::string& s);

struct Hypothesis {
  std::string name;
  Check status = Check::Inconclusive;
  Json evidence;
};

struct RuleInfo {
  std::string id;
  std::string citation;
  bool base = false;       // a leaf fact, no premises
  bool heuristic = false;  // caps the result at Conditional
};
// In application order.
const std::vector<RuleInfo>& rules();
const RuleInfo& rule_info(const std::string& id);

// One way of using a rule for a target. `direction` names the implication:
// "iff", "forward" (premises give the target) or "backward".
struct Application {
  std::string rule;
  std::string direction;
  std::vector<Hypothesis> hypotheses;
  std::vector<std::string> premises;  // claim hashes
};

struct DeriveOptions {
  std::size_t max_depth = 8;
  std::size_t pd_cutoff = kDefaultPdCutoff;
  std::size_t nil_cutoff = kDefaultNilCutoff;
};

struct Claim {
  std::string hash;
  std::string label;
};

struct DerivationNode {
  Claim claim;
  Status status = Status::Unknown;
  std::optional<Application> step;  // absent for Unknown
  std::vector<DerivationNode> premises;
  std::string note;
};

class ReductionEngine {
 public:
  ReductionEngine(Registry& reg, DeriveOptions opts);

  // Throws InputError for unregistered targets or non-algebras.
  DerivationNode derive(const std::string& target);
  // Every application of a rule to a target; empty when the rule does not match.
  std::vector<Application> applications(const std::string& rule, const std::string& target);

  const DeriveOptions& options() const { return opts_; }

 private:
  DerivationNode derive(const std::string& target, std::size_t depth, std::set<std::string>& path);
  Hypothesis cached(const std::string& key, const std::function<Hypothesis()>& compute);
  Hypothesis nilpotent(const std::string& bimodule);
  Hypothesis left_perfect(const std::string& bimodule);
  Hypothesis rebuilds(const std::string& target, const Json& provenance);
  Hypothesis strongly_graded(const std::string& algebra);
  Hypothesis positively_graded(const std::string& algebra);
  Hypothesis pd_finite(const std::string& name, const Module& m);
  std::string initial_subring_of(const std::string& algebra);
  std::vector<std::pair<std::string, Json>> produced_by(const std::string& target, const std::string& construction);
  std::vector<std::pair<std::string, Json>> used_in(const std::string& input, const std::string& construction,
                                                    const std::string& role);

  Registry& reg_;
  DeriveOptions opts_;
  std::map<std::string, Hypothesis> cache_;
};

// Status of a step from its hypotheses, premise statuses and rule kind.
Status step_status(const RuleInfo& rule, const std::vector<Hypothesis>& hyps, const std::vector<Status>& premises);

// {"claim", "status", "options", "steps": [{"claim", "rule", "citation", "direction", "status",
//   "hypotheses": [{"name", "status", "evidence"}], "premises": [{"claim", "status", "step"}]}]}
// Steps are in preorder; "step" indexes the premise's own step, or is null.
Json emit_certificate(const DerivationNode& tree, const DeriveOptions& opts);

struct CertificateCheck {
  bool ok = true;
  std::vector<std::string> problems;
};
// Re-runs every hypothesis checker and recomputes every status.
CertificateCheck validate_certificate(Registry& reg, const Json& cert);

}  // namespace injgen
