#pragma once

#include <optional>
#include <set>
#include <span>
#include <string_view>
#include <vector>

#include "dtriage/catalog/types.hpp"

namespace dtriage::survival {

enum class BreakupClass { Propulsion, Anomalous, Electrical, Collision, Unknown };

enum class CensorCause {
  Reentered,       // the object left orbit before any qualifying breakup
  WindowEnd,       // still on orbit at the end of the observation window
  UnknownReentry,  // known to have reentered, date unrecorded; censored at window end
  OtherBreakup,    // broke up, but not in a class under study
};

/// Terminal observation of one subject: either a breakup of some class or a
/// censoring with its cause.
struct EventKind {
  enum class Tag { Breakup, Censored };

  Tag tag{Tag::Censored};
  BreakupClass breakup_class{BreakupClass::Unknown};  // meaningful when Breakup
  CensorCause censor_cause{CensorCause::WindowEnd};   // meaningful when Censored

  static EventKind breakup(BreakupClass breakup_class) {
    return {Tag::Breakup, breakup_class, CensorCause::WindowEnd};
  }
  static EventKind censored(CensorCause cause) {
    return {Tag::Censored, BreakupClass::Unknown, cause};
  }

  bool is_breakup() const noexcept { return tag == Tag::Breakup; }

  bool operator==(const EventKind&) const = default;
};

struct EventRecord {
  catalog::CosparId subject_id;
  double time_years{0.0};  // orbit age at the event
  EventKind kind;

  bool operator==(const EventRecord&) const = default;
};

/// One raw history entry. `breakup_class` set: a dated breakup. `breakup_class`
/// empty: marker that the subject's reentry date is unknown (the epoch, if
/// any, is ignored for these).
struct RawEvent {
  catalog::CosparId subject_id;
  std::optional<core::Date> epoch;
  std::optional<BreakupClass> breakup_class;
};

/// Reduces each subject's history to exactly one record: the earliest among a
/// breakup of a target class (-> Breakup), a breakup of any other class
/// (-> Censored/OtherBreakup, other breakups must censor the class under
/// study), reentry (-> Censored/Reentered), and the window end
/// (-> Censored/WindowEnd). Subjects flagged reentry-date-unknown censor at
/// the window end under the distinct UnknownReentry cause so the convention
/// stays auditable.
///
/// Reentries dated past the window end censor at the window end. A breakup
/// dated past the window end (or a launch after it) is an input error:
/// Error("EventAfterWindow"). Events naming a subject that is not in
/// `objects` raise Error("UnknownSubject").
std::vector<EventRecord> build_cohort(std::span<const catalog::DebrisObject> objects,
                                      std::span<const RawEvent> events,
                                      const std::set<BreakupClass>& target_classes,
                                      const core::Date& window_end);

std::string_view to_string(BreakupClass breakup_class);
std::string_view to_string(CensorCause cause);
std::optional<BreakupClass> breakup_class_from_string(std::string_view text);

}  // namespace dtriage::survival
