#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dtriage/classifier/profile.hpp"

namespace dtriage::classifier {

/// One conjunctive capture-method axiom over the feature partition. Every
/// slot is a set of accepted values; nullopt means "any". An engaged slot is
/// never empty (the loader rejects that, and default_rules never builds one).
struct CaptureRule {
  std::string name;
  std::optional<std::set<catalog::ObjectType>> object_type;
  std::optional<std::set<criticality::Level>> criticality;
  std::optional<bool> passivated;
  std::optional<std::set<AttitudeRegime>> regimes;
  std::optional<bool> grapple;
  std::optional<std::set<catalog::InterfaceMaterial>> material;
  std::optional<std::set<ClearanceClass>> clearance;

  bool operator==(const CaptureRule&) const = default;
};

/// The shipped eight-rule template. Contact methods (manipulator, clamp, net,
/// harpoon) cover stable-to-medium regimes by breakup criticality and grapple
/// availability; contactless methods (plume impingement, ablation,
/// electromagnetic) take the fast tumblers split by object type; No_Solution
/// names the profile nothing current can safely capture.
std::vector<CaptureRule> default_rules();

/// Parses and validates a rules document: top-level `rules` array, each rule
/// a `name` plus optional slot keys; an omitted key means "any".
///
///   object_type: "PL" | "RB"
///   criticality: ["low" | "medium" | "high", ...]
///   passivated / grapple_feature: boolean
///   regimes: ["stable" | "slow" | "medium" | "fast", ...]
///   material: ["isotropic" | "anisotropic", ...]
///   clearance: ["narrow" | "broad", ...]
///
/// Throws Error("SchemaViolation") with the offending path,
/// Error("DuplicateRuleName"), or Error("EmptySlotSet").
std::vector<CaptureRule> load_rules(std::string_view bytes);

/// Same document may carry a sibling `thresholds` object overriding
/// ThresholdConfig fields by name (pn_limits entries are [upper_bound, pn]
/// pairs, with null as the open upper bound). Returns `base` with the
/// overrides applied and validated.
catalog::ThresholdConfig load_thresholds(std::string_view bytes,
                                         const catalog::ThresholdConfig& base);

}  // namespace dtriage::classifier
