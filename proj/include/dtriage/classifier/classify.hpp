#pragma once

#include <span>
#include <string>
#include <vector>

#include "dtriage/classifier/rules.hpp"

namespace dtriage::classifier {

/// One slot comparison: what the rule required, what the profile carried.
struct SlotTrace {
  std::string slot;
  std::string required;  // "any" or a rendered value set like "{low, medium}"
  std::string actual;
  bool satisfied{true};

  bool operator==(const SlotTrace&) const = default;
};

struct RuleTrace {
  std::string rule_name;
  bool matched{false};
  std::vector<SlotTrace> slots;  // one entry per slot, every rule

  bool operator==(const RuleTrace&) const = default;
};

/// Multi-label outcome: every rule whose slots all accept the profile.
/// An empty matched set is a legal result (unclassified), not an error.
struct ClassificationResult {
  catalog::CosparId cospar_id;
  std::vector<std::string> matched;  // rule-set order
  std::vector<RuleTrace> traces;     // rule-set order, one per rule

  bool unclassified() const noexcept { return matched.empty(); }
};

ClassificationResult classify(const catalog::CosparId& id, const UncooperativenessProfile& profile,
                              std::span<const CaptureRule> rules);

/// Deterministic human-readable rendering: a summary line, then one block per
/// rule with matched rules first. MATCHED blocks list every slot; REJECTED
/// blocks list the violated slots as "required X, found Y".
std::string explain(const ClassificationResult& result);

}  // namespace dtriage::classifier
