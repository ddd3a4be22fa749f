#pragma once

#include <unistd.h>

#include <atomic>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "dtriage/catalog/types.hpp"
#include "dtriage/cli/formats.hpp"
#include "dtriage/core/io.hpp"
#include "dtriage/ingest/annotations.hpp"
#include "dtriage/ingest/merge.hpp"
#include "dtriage/ingest/structured.hpp"

namespace dtriage::testing {

inline std::filesystem::path fixtures_dir() { return DTRIAGE_FIXTURES_DIR; }

/// Self-cleaning scratch directory for store/CLI tests.
class TempDir {
 public:
  TempDir() {
    static std::atomic<unsigned> counter{0};
    const auto id = counter.fetch_add(1);
    path_ = std::filesystem::temp_directory_path() /
            ("dtriage_test_" + std::to_string(::getpid()) + "_" + std::to_string(id));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

/// The ten fixture objects via the real ingest path (both structured pages
/// merged with the annotation table), sorted by cospar_id.
inline std::vector<catalog::DebrisObject> fixture_objects() {
  std::vector<ingest::StructuredRecord> structured;
  for (const auto* page : {"discos_page1.json", "discos_page2.json"}) {
    auto document = ingest::parse_structured_document(core::read_file(fixtures_dir() / page));
    for (auto& record : document.records) structured.push_back(std::move(record));
  }
  auto annotations = ingest::parse_annotations(core::read_file(fixtures_dir() / "annotations.csv"));
  return ingest::merge(structured, annotations.records).objects;
}

inline std::map<catalog::CosparId, double> fixture_ages() {
  return cli::parse_age_table(core::read_file(fixtures_dir() / "ages.csv"));
}

inline std::map<catalog::CosparId, double> fixture_probabilities() {
  return cli::parse_probability_table(core::read_file(fixtures_dir() / "probabilities.csv"));
}

/// Published matched sets for the ten fixture objects.
inline const std::map<std::string, std::vector<std::string>>& expected_fixture_matches() {
  static const std::map<std::string, std::vector<std::string>> expected = {
      {"1978-018B", {"Electromagnetic_Based"}},
      {"1978-121A", {"Net_Based"}},
      {"1989-001B", {"Plume_Impingement"}},
      {"1990-005H", {"Manipulator_Based", "Net_Based"}},
      {"1990-045A", {"Plume_Impingement"}},
      {"1991-084C", {"Net_Based"}},
      {"1992-052A", {"Ablation_Based", "Plume_Impingement"}},
      {"1993-061A", {"Net_Based"}},
      {"1994-021A", {"Net_Based"}},
      {"1994-021B", {"Net_Based"}},
  };
  return expected;
}

inline catalog::CosparId id(const std::string& text) {
  return *catalog::CosparId::parse(text);
}

inline core::Date date(const std::string& text) { return *core::Date::parse(text); }

}  // namespace dtriage::testing
