#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bkn/certificate.hpp"
#include "bkn/criteria.hpp"
#include "bkn/graph.hpp"
#include "bkn/matrix.hpp"

namespace bkn {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Spectral / combinatorial evidence backing a positive verdict.
struct Witness {
  std::string summary;
  std::string matrix;                     // which matrix inertia/kernel refer to
  std::optional<Inertia> inertia;
  std::optional<RatVector> kernel;
  std::vector<std::string> subset;        // principal submatrix support
  std::optional<SignAssignment> epsilon;  // edge signs (E)
};

struct Verdict {
  PropertyId property = PropertyId::Im;
  bool holds = false;
  std::optional<Witness> witness;          // present whenever holds
  std::optional<BknSolution> certificate;  // present for positive F/E verdicts
  std::optional<std::string> caveat;
};

// Theorem-criteria deciders. Im and HI share one criterion, so one call
// answers both.
Verdict decide_im_hi(const LabeledGraph& g);
Verdict decide_f(const LabeledGraph& g);
Verdict decide_e(const LabeledGraph& g, long long exhaustive_limit);
Verdict decide_vf(const LabeledGraph& g);
Verdict decide_ve(const LabeledGraph& g, long long exhaustive_limit);
Verdict decide_npc(const LabeledGraph& g);

struct ClassifyEntry {
  PropertyId property = PropertyId::Im;
  std::optional<Verdict> verdict;  // empty on budget-undecided
  std::string undecided_reason;
};

struct Classification {
  std::vector<ClassifyEntry> entries;  // fixed order Im, HI, F, E, VF, VE, NPC
  std::vector<std::string> implication_violations;
  bool all_decided = true;

  const ClassifyEntry& entry(PropertyId p) const;
};

Classification classify_all(const LabeledGraph& g, long long exhaustive_limit);

// Checks F=>E, F=>VF, E=>VE, VF=>VE, VF=>HI, VE=>Im, NPC=>VF, Im<=>HI.
std::vector<std::string> check_implications(const std::map<PropertyId, bool>& profile);

}  // namespace bkn
