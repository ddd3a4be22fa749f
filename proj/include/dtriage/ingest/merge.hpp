#pragma once

#include <span>
#include <vector>

#include "dtriage/ingest/annotations.hpp"
#include "dtriage/ingest/structured.hpp"

namespace dtriage::ingest {

struct MergeResult {
  std::vector<catalog::DebrisObject> objects;  // sorted by cospar_id
  std::vector<catalog::CosparId> unmatched_structured;
  std::vector<catalog::CosparId> unmatched_annotations;
  std::vector<Diagnostic> diagnostics;
};

/// Inner join on cospar_id: an object is emitted only when both sides are
/// present, because the classifier cannot run without the attitude and
/// interface data that only annotations carry. On overlapping fields the
/// annotation value wins (annotations are curated; structured feeds can be
/// stale) and the override is flagged in diagnostics.
///
/// Permutation-invariant in both inputs. Throws Error("DuplicateId") when
/// either side repeats an id, and Error("ValidationFailed") if a joined
/// record does not validate (inconsistent curated data is a hard error).
MergeResult merge(std::span<const StructuredRecord> structured,
                  std::span<const AnnotationRecord> annotations);

}  // namespace dtriage::ingest
