#include "dtriage/survival/cohort.hpp"

#include <algorithm>
#include <map>

#include "dtriage/core/error.hpp"

namespace dtriage::survival {

namespace {

struct Candidate {
  core::Date date;
  int priority;  // lower wins at equal dates: target breakup, other breakup, censoring
  EventKind kind;
};

}  // namespace

std::vector<EventRecord> build_cohort(std::span<const catalog::DebrisObject> objects,
                                      std::span<const RawEvent> events,
                                      const std::set<BreakupClass>& target_classes,
                                      const core::Date& window_end) {
  std::map<catalog::CosparId, const catalog::DebrisObject*> by_id;
  for (const auto& object : objects) by_id.emplace(object.cospar_id, &object);

  std::map<catalog::CosparId, std::vector<Candidate>> breakups;
  std::set<catalog::CosparId> reentry_unknown;
  for (const auto& event : events) {
    if (!by_id.contains(event.subject_id)) {
      throw Error("UnknownSubject", "event references unknown subject " +
                                        event.subject_id.value());
    }
    if (!event.breakup_class) {
      reentry_unknown.insert(event.subject_id);
      continue;
    }
    if (!event.epoch) {
      throw Error("EventAfterWindow",
                  event.subject_id.value() + ": breakup event carries no epoch");
    }
    if (window_end < *event.epoch) {
      throw Error("EventAfterWindow", event.subject_id.value() + ": breakup at " +
                                          event.epoch->to_string() + " is past the window end " +
                                          window_end.to_string());
    }
    const bool is_target = target_classes.contains(*event.breakup_class);
    breakups[event.subject_id].push_back(
        {*event.epoch, is_target ? 0 : 1,
         is_target ? EventKind::breakup(*event.breakup_class)
                   : EventKind::censored(CensorCause::OtherBreakup)});
  }

  std::vector<EventRecord> records;
  records.reserve(objects.size());
  for (const auto& [id, object] : by_id) {
    if (window_end < object->launch_epoch) {
      throw Error("EventAfterWindow",
                  id.value() + ": launched after the window end " + window_end.to_string());
    }

    std::vector<Candidate> candidates;
    if (const auto it = breakups.find(id); it != breakups.end()) {
      candidates = it->second;
    }
    if (object->reentry_epoch && !(window_end < *object->reentry_epoch)) {
      candidates.push_back({*object->reentry_epoch, 2, EventKind::censored(CensorCause::Reentered)});
    }
    const auto window_cause =
        reentry_unknown.contains(id) ? CensorCause::UnknownReentry : CensorCause::WindowEnd;
    candidates.push_back({window_end, 2, EventKind::censored(window_cause)});

    const auto earliest =
        std::min_element(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
          if (a.date != b.date) return a.date < b.date;
          return a.priority < b.priority;
        });
    records.push_back(
        {id, catalog::orbit_age_years(object->launch_epoch, earliest->date), earliest->kind});
  }
  return records;
}

std::string_view to_string(BreakupClass breakup_class) {
  switch (breakup_class) {
    case BreakupClass::Propulsion: return "propulsion";
    case BreakupClass::Anomalous: return "anomalous";
    case BreakupClass::Electrical: return "electrical";
    case BreakupClass::Collision: return "collision";
    case BreakupClass::Unknown: return "unknown";
  }
  return "unknown";
}

std::string_view to_string(CensorCause cause) {
  switch (cause) {
    case CensorCause::Reentered: return "reentered";
    case CensorCause::WindowEnd: return "window_end";
    case CensorCause::UnknownReentry: return "unknown_reentry";
    case CensorCause::OtherBreakup: return "other_breakup";
  }
  return "window_end";
}

std::optional<BreakupClass> breakup_class_from_string(std::string_view text) {
  if (text == "propulsion") return BreakupClass::Propulsion;
  if (text == "anomalous") return BreakupClass::Anomalous;
  if (text == "electrical") return BreakupClass::Electrical;
  if (text == "collision") return BreakupClass::Collision;
  if (text == "unknown") return BreakupClass::Unknown;
  return std::nullopt;
}

}  // namespace dtriage::survival
