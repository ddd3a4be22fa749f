#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dtriage/ingest/structured.hpp"

namespace dtriage::ingest {

struct FetchResult {
  std::vector<StructuredRecord> records;
  std::vector<Diagnostic> diagnostics;
  std::size_t pages{0};
};

/// Thin network adapter around parse_structured_document: GETs the collection
/// document at `url` (http://host[:port]/path) and follows `links.next` until
/// the chain ends or `max_pages` is reached. Relative next links resolve
/// against the same host. Authentication is out of scope; everything but the
/// transport is the file-based parser.
///
/// Throws Error("IoFailure") on connection or non-200 responses and
/// Error("MalformedValue") for URLs it cannot split.
FetchResult fetch_structured_pages(const std::string& url, std::size_t max_pages = 32);

}  // namespace dtriage::ingest
