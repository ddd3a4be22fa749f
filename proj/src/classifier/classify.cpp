#include "dtriage/classifier/classify.hpp"

#include <algorithm>

namespace dtriage::classifier {

namespace {

// to_string overloads for the slot enums resolve via ADL (catalog,
// criticality, classifier).
template <typename Enum>
std::string render_set(const std::set<Enum>& values) {
  std::string out = "{";
  bool first = true;
  for (const auto& value : values) {
    if (!first) out += ", ";
    out += std::string(to_string(value));
    first = false;
  }
  out += "}";
  return out;
}

std::string render_flag(bool value) { return value ? "true" : "false"; }

template <typename Enum>
SlotTrace trace_set_slot(const char* slot, const std::optional<std::set<Enum>>& required,
                         Enum actual) {
  SlotTrace trace{slot, "any", std::string(to_string(actual)), true};
  if (required) {
    trace.required = render_set(*required);
    trace.satisfied = required->contains(actual);
  }
  return trace;
}

SlotTrace trace_flag_slot(const char* slot, const std::optional<bool>& required, bool actual) {
  SlotTrace trace{slot, "any", render_flag(actual), true};
  if (required) {
    trace.required = render_flag(*required);
    trace.satisfied = (*required == actual);
  }
  return trace;
}

}  // namespace

ClassificationResult classify(const catalog::CosparId& id, const UncooperativenessProfile& profile,
                              std::span<const CaptureRule> rules) {
  ClassificationResult result{id};
  for (const auto& rule : rules) {
    RuleTrace trace{rule.name};
    trace.slots = {
        trace_set_slot("object_type", rule.object_type, profile.object_type),
        trace_set_slot("criticality", rule.criticality, profile.criticality_level),
        trace_flag_slot("passivated", rule.passivated, profile.passivated),
        trace_set_slot("regimes", rule.regimes, profile.regime),
        trace_flag_slot("grapple_feature", rule.grapple, profile.grapple_feature),
        trace_set_slot("material", rule.material, profile.material),
        trace_set_slot("clearance", rule.clearance, profile.clearance),
    };
    trace.matched = std::all_of(trace.slots.begin(), trace.slots.end(),
                                [](const SlotTrace& slot) { return slot.satisfied; });
    if (trace.matched) result.matched.push_back(rule.name);
    result.traces.push_back(std::move(trace));
  }
  // matched is a set; keep its rendering canonical regardless of rule order.
  std::sort(result.matched.begin(), result.matched.end());
  return result;
}

std::string explain(const ClassificationResult& result) {
  std::string text = result.cospar_id.value() + ": ";
  if (result.unclassified()) {
    text += "no rule matched (unclassified)\n";
  } else {
    text += "matched ";
    for (std::size_t i = 0; i < result.matched.size(); ++i) {
      if (i > 0) text += ", ";
      text += result.matched[i];
    }
    text += "\n";
  }

  const auto render_block = [&](const RuleTrace& trace) {
    if (trace.matched) {
      text += "MATCHED " + trace.rule_name + "\n";
      for (const auto& slot : trace.slots) {
        text += "  " + slot.slot + ": required " + slot.required + ", found " + slot.actual + "\n";
      }
    } else {
      text += "REJECTED " + trace.rule_name + "\n";
      for (const auto& slot : trace.slots) {
        if (slot.satisfied) continue;
        text += "  " + slot.slot + ": required " + slot.required + ", found " + slot.actual + "\n";
      }
    }
  };
  for (const auto& trace : result.traces) {
    if (trace.matched) render_block(trace);
  }
  for (const auto& trace : result.traces) {
    if (!trace.matched) render_block(trace);
  }
  return text;
}

}  // namespace dtriage::classifier
