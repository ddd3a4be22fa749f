#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "dtriage/catalog/store.hpp"
#include "dtriage/cli/commands.hpp"
#include "dtriage/core/io.hpp"
#include "support/helpers.hpp"

using namespace dtriage;
using testing::TempDir;

namespace {

struct CliRun {
  int exit_code;
  std::string out;
  std::string err;
};

CliRun run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const char* name) {
  return (testing::fixtures_dir() / name).string();
}

// ingest + assess + classify + report against the fixture corpus.
CliRun run_full_pipeline(const TempDir& dir, int batch_size = 50) {
  const auto catalog_path = (dir.path() / "catalog.jsonl").string();
  const auto out_dir = dir.path().string();

  auto ingest = run_cli({"ingest", "--structured", fixture("discos_page1.json"), "--structured",
                         fixture("discos_page2.json"), "--annotations", fixture("annotations.csv"),
                         "--catalog", catalog_path, "--diagnostics",
                         (dir.path() / "diagnostics.json").string()});
  if (ingest.exit_code != 0) return ingest;

  auto assess = run_cli({"assess", "--catalog", catalog_path, "--probabilities",
                         fixture("probabilities.csv"), "--ages", fixture("ages.csv"), "--output",
                         out_dir});
  if (assess.exit_code != 0) return assess;

  auto classify = run_cli({"classify", "--catalog", catalog_path, "--assessments",
                           (dir.path() / "assessments.csv").string(), "--batch-size",
                           std::to_string(batch_size), "--output", out_dir, "--verbose"});
  if (classify.exit_code != 0) return classify;

  return run_cli({"report", "--catalog", catalog_path, "--assessments",
                  (dir.path() / "assessments.csv").string(), "--results",
                  (dir.path() / "results.jsonl").string(), "--output", out_dir, "--format",
                  "csv"});
}

}  // namespace

TEST_CASE("pipeline over the fixtures produces the published classification") {
  TempDir dir;
  const auto final_run = run_full_pipeline(dir);
  REQUIRE(final_run.exit_code == 0);

  const auto results_csv = core::read_file(dir.path() / "results.csv");
  for (const auto& [id, matched] : testing::expected_fixture_matches()) {
    std::string joined;
    for (std::size_t i = 0; i < matched.size(); ++i) {
      if (i > 0) joined += "|";
      joined += matched[i];
    }
    CAPTURE(id);
    CHECK(results_csv.find(id + "," + joined) != std::string::npos);
  }

  // 10 result records: header plus one line per object.
  CHECK(std::count(results_csv.begin(), results_csv.end(), '\n') == 11);

  // Published per-class rows present in the report.
  CHECK(final_run.out.find("Plume_Impingement,3,6,3,2,38.88,29.71") != std::string::npos);
  CHECK(final_run.out.find("Electromagnetic_Based,1,3,3,1,67.8,41.96") != std::string::npos);
  CHECK(final_run.out.find("Ablation_Based,1,6,3,2,32.1,27.48") != std::string::npos);
}

TEST_CASE("two pipeline runs are byte-identical") {
  TempDir first;
  TempDir second;
  REQUIRE(run_full_pipeline(first).exit_code == 0);
  REQUIRE(run_full_pipeline(second).exit_code == 0);

  for (const auto* name :
       {"catalog.jsonl", "assessments.csv", "results.jsonl", "results.csv", "class_summary.csv",
        "by_object_type.csv", "by_criticality_number.csv", "by_attitude_regime.csv",
        "cohort_summary.csv", "diagnostics.json"}) {
    CAPTURE(name);
    CHECK(core::read_file(first.path() / name) == core::read_file(second.path() / name));
  }
}

TEST_CASE("classify batching") {
  TempDir dir;
  SUBCASE("default batch size covers 10 objects in one batch") {
    const auto final_run = run_full_pipeline(dir, 50);
    REQUIRE(final_run.exit_code == 0);
  }
  SUBCASE("batch size 3 over 10 objects gives 4 batches") {
    const auto catalog_path = (dir.path() / "catalog.jsonl").string();
    REQUIRE(run_cli({"ingest", "--structured", fixture("discos_page1.json"), "--structured",
                     fixture("discos_page2.json"), "--annotations", fixture("annotations.csv"),
                     "--catalog", catalog_path})
                .exit_code == 0);
    REQUIRE(run_cli({"assess", "--catalog", catalog_path, "--probabilities",
                     fixture("probabilities.csv"), "--ages", fixture("ages.csv"), "--output",
                     dir.path().string()})
                .exit_code == 0);
    const auto classify = run_cli({"classify", "--catalog", catalog_path, "--assessments",
                                   (dir.path() / "assessments.csv").string(), "--batch-size", "3",
                                   "--output", dir.path().string(), "--verbose"});
    REQUIRE(classify.exit_code == 0);
    CHECK(classify.err.find("batch 1/4 (3 objects)") != std::string::npos);
    CHECK(classify.err.find("batch 4/4 (1 objects)") != std::string::npos);

    // Batched output equals unbatched output.
    TempDir whole;
    const auto baseline = run_full_pipeline(whole);
    REQUIRE(baseline.exit_code == 0);
    CHECK(core::read_file(dir.path() / "results.jsonl") ==
          core::read_file(whole.path() / "results.jsonl"));
  }
}

TEST_CASE("thirty objects fit one default batch") {
  TempDir dir;
  // Ten fixture objects plus twenty clones under fresh ids.
  auto objects = testing::fixture_objects();
  std::string ages_csv = "cospar_id,age_years\n";
  std::string probabilities_csv = "cospar_id,probability\n";
  for (const auto& object : objects) {
    ages_csv += object.cospar_id.value() + ",20\n";
    probabilities_csv += object.cospar_id.value() + ",0.02\n";
  }
  const auto base = objects;
  for (int clone = 0; clone < 20; ++clone) {
    auto object = base[static_cast<std::size_t>(clone) % base.size()];
    char id[16];
    std::snprintf(id, sizeof(id), "2005-%03d%c", clone + 1, 'A');
    object.cospar_id = testing::id(id);
    objects.push_back(object);
    ages_csv += std::string(id) + ",20\n";
    probabilities_csv += std::string(id) + ",0.02\n";
  }
  const auto catalog_path = dir.path() / "catalog.jsonl";
  catalog::store(objects, catalog_path);
  core::write_file_atomic(dir.path() / "ages.csv", ages_csv);
  core::write_file_atomic(dir.path() / "probabilities.csv", probabilities_csv);

  REQUIRE(run_cli({"assess", "--catalog", catalog_path.string(), "--probabilities",
                   (dir.path() / "probabilities.csv").string(), "--ages",
                   (dir.path() / "ages.csv").string(), "--output", dir.path().string()})
              .exit_code == 0);
  const auto classify = run_cli({"classify", "--catalog", catalog_path.string(),
                                 "--assessments", (dir.path() / "assessments.csv").string(),
                                 "--batch-size", "50", "--output", dir.path().string(),
                                 "--verbose"});
  REQUIRE(classify.exit_code == 0);
  CHECK(classify.err.find("batch 1/1 (30 objects)") != std::string::npos);

  // Streaming to stdout as jsonl.
  const auto stream = run_cli({"classify", "--catalog", catalog_path.string(), "--assessments",
                               (dir.path() / "assessments.csv").string(), "--format", "json"});
  REQUIRE(stream.exit_code == 0);
  CHECK(std::count(stream.out.begin(), stream.out.end(), '\n') == 30);
  CHECK(stream.out.rfind("{\"cospar_id\":", 0) == 0);
}

TEST_CASE("empty catalog flows through the pipeline with exit 0") {
  TempDir dir;
  const auto catalog_path = dir.path() / "catalog.jsonl";
  catalog::store({}, catalog_path);
  core::write_file_atomic(dir.path() / "probabilities.csv", "cospar_id,probability\n");

  REQUIRE(run_cli({"assess", "--catalog", catalog_path.string(), "--probabilities",
                   (dir.path() / "probabilities.csv").string(), "--output", dir.path().string()})
              .exit_code == 0);
  REQUIRE(run_cli({"classify", "--catalog", catalog_path.string(), "--assessments",
                   (dir.path() / "assessments.csv").string(), "--output", dir.path().string()})
              .exit_code == 0);
  const auto report = run_cli({"report", "--catalog", catalog_path.string(), "--assessments",
                               (dir.path() / "assessments.csv").string(), "--results",
                               (dir.path() / "results.jsonl").string(), "--format", "csv"});
  CHECK(report.exit_code == 0);
  for (const auto& line : {"Net_Based,0,", "No_Solution,0,"}) {
    CHECK(report.out.find(line) != std::string::npos);
  }
}

TEST_CASE("one config file can carry rules and threshold overrides together") {
  TempDir dir;
  REQUIRE(run_full_pipeline(dir).exit_code == 0);

  // Same rule set, but the fast-tumbling bound pulled below 8.41 deg/s:
  // 1994-021B stops being a net candidate and becomes a plume target.
  auto config = core::read_file(testing::fixtures_dir() / "rules_default.json");
  config.insert(config.rfind('}'),
                R"(, "thresholds": {"medium_max_deg_s": 8.0})");
  const auto config_path = dir.path() / "combined.json";
  core::write_file_atomic(config_path, config);

  const auto classify = run_cli({"classify", "--catalog",
                                 (dir.path() / "catalog.jsonl").string(), "--assessments",
                                 (dir.path() / "assessments.csv").string(), "--rules",
                                 config_path.string()});
  REQUIRE(classify.exit_code == 0);
  CHECK(classify.out.find("1994-021B,Plume_Impingement") != std::string::npos);

  // A dedicated --thresholds file outranks the sibling.
  const auto thresholds_path = dir.path() / "wider.json";
  core::write_file_atomic(thresholds_path, R"({"thresholds": {"medium_max_deg_s": 18.0}})");
  const auto layered = run_cli({"classify", "--catalog",
                                (dir.path() / "catalog.jsonl").string(), "--assessments",
                                (dir.path() / "assessments.csv").string(), "--rules",
                                config_path.string(), "--thresholds",
                                thresholds_path.string()});
  REQUIRE(layered.exit_code == 0);
  CHECK(layered.out.find("1994-021B,Net_Based") != std::string::npos);
}

TEST_CASE("assess fails cleanly when one object lacks a probability") {
  TempDir dir;
  const auto catalog_path = (dir.path() / "catalog.jsonl").string();
  REQUIRE(run_cli({"ingest", "--structured", fixture("discos_page1.json"), "--structured",
                   fixture("discos_page2.json"), "--annotations", fixture("annotations.csv"),
                   "--catalog", catalog_path})
              .exit_code == 0);
  // Table that covers only one object, and no curve to fall back to.
  core::write_file_atomic(dir.path() / "partial.csv",
                          "cospar_id,probability\n1992-052A,0.0305\n");
  const auto assess = run_cli({"assess", "--catalog", catalog_path, "--probabilities",
                               (dir.path() / "partial.csv").string()});
  CHECK(assess.exit_code == cli::kExitValidation);
  CHECK(assess.err.find("\"IdMismatch\"") != std::string::npos);
  CHECK(assess.err.find("1978-018B") != std::string::npos);
}

TEST_CASE("explain emits the trace blocks") {
  TempDir dir;
  REQUIRE(run_full_pipeline(dir).exit_code == 0);
  const auto explain = run_cli({"explain", "1992-052A", "--catalog",
                                (dir.path() / "catalog.jsonl").string(), "--assessments",
                                (dir.path() / "assessments.csv").string()});
  REQUIRE(explain.exit_code == 0);

  std::size_t blocks = 0;
  for (std::size_t pos = explain.out.find("MATCHED"); pos != std::string::npos;
       pos = explain.out.find("MATCHED", pos + 1)) {
    ++blocks;
  }
  CHECK(blocks == 2);
  CHECK(explain.out.find("MATCHED Ablation_Based") != std::string::npos);
  CHECK(explain.out.find("MATCHED Plume_Impingement") != std::string::npos);
  CHECK(explain.out.find("1992-052A: matched Ablation_Based, Plume_Impingement") !=
        std::string::npos);
}

TEST_CASE("survival subcommand emits the curve csv") {
  TempDir dir;
  const auto catalog_path = (dir.path() / "catalog.jsonl").string();
  REQUIRE(run_cli({"ingest", "--structured", fixture("discos_page1.json"), "--structured",
                   fixture("discos_page2.json"), "--annotations", fixture("annotations.csv"),
                   "--catalog", catalog_path})
              .exit_code == 0);

  const auto survival = run_cli({"survival", "--catalog", catalog_path, "--events",
                                 fixture("events.csv"), "--target-classes", "electrical"});
  REQUIRE(survival.exit_code == 0);
  CHECK(survival.out.rfind("time_years,survival,ci_low,ci_high,at_risk,events\n", 0) == 0);
  // One electrical breakup among ten subjects, one earlier other-breakup
  // censoring: S drops to 8/9 at the event time.
  CHECK(survival.out.find(",0.8888888888888888,") != std::string::npos);

  const auto no_events = run_cli({"survival", "--catalog", catalog_path, "--events",
                                  fixture("events.csv"), "--target-classes", "propulsion"});
  REQUIRE(no_events.exit_code == 0);
  CHECK(no_events.out == "time_years,survival,ci_low,ci_high,at_risk,events\n");

  const auto loglog = run_cli({"survival", "--catalog", catalog_path, "--events",
                               fixture("events.csv"), "--target-classes", "electrical",
                               "--ci-method", "loglog"});
  REQUIRE(loglog.exit_code == 0);
  // Transformed upper band stays strictly below 1 (the plain one clamps).
  CHECK(loglog.out.find(",1,9,1") == std::string::npos);
  CHECK(loglog.out.find(",0.8888888888888888,") != std::string::npos);

  const auto bad_method = run_cli({"survival", "--catalog", catalog_path, "--events",
                                   fixture("events.csv"), "--ci-method", "bootstrap"});
  CHECK(bad_method.exit_code == cli::kExitValidation);
}

TEST_CASE("ingest surfaces unmatched ids on stderr") {
  TempDir dir;
  // Annotations for only one object: four page-1 ids stay unmatched.
  const std::string partial =
      "cospar_id,angular_rate_deg_s,passivated,propellant_class,platform_name,"
      "grapple_feature,interface_material,interface_clearance_m2,failure_epoch,failure_kind\n"
      "1978-121A,2,false,hypergolic,Bus,true,isotropic,0.2827,,\n";
  const auto annotations_path = dir.path() / "partial.csv";
  core::write_file_atomic(annotations_path, partial);

  const auto ingest = run_cli({"ingest", "--structured", fixture("discos_page1.json"),
                               "--annotations", annotations_path.string(), "--catalog",
                               (dir.path() / "catalog.jsonl").string()});
  REQUIRE(ingest.exit_code == 0);
  CHECK(ingest.err.find("unmatched structured id 1978-018B") != std::string::npos);
  CHECK(ingest.err.find("unmatched structured id 1990-045A") != std::string::npos);
  CHECK(ingest.out.find("stored 1 objects") != std::string::npos);
}

TEST_CASE("exit codes: validation 1, io 2, schema 3") {
  TempDir dir;
  const auto catalog_path = (dir.path() / "catalog.jsonl").string();
  REQUIRE(run_cli({"ingest", "--structured", fixture("discos_page1.json"), "--structured",
                   fixture("discos_page2.json"), "--annotations", fixture("annotations.csv"),
                   "--catalog", catalog_path})
              .exit_code == 0);

  SUBCASE("missing file is an io failure") {
    const auto missing = run_cli({"assess", "--catalog", (dir.path() / "nope.jsonl").string(),
                                  "--probabilities", fixture("probabilities.csv")});
    CHECK(missing.exit_code == cli::kExitIo);
    CHECK(missing.err.find("\"IoFailure\"") != std::string::npos);
  }
  SUBCASE("bad rules config is a schema failure") {
    const auto rules_path = dir.path() / "bad_rules.json";
    core::write_file_atomic(rules_path, R"({"rules": [{"name": "X", "regimes": []}]})");
    REQUIRE(run_cli({"assess", "--catalog", catalog_path, "--probabilities",
                     fixture("probabilities.csv"), "--ages", fixture("ages.csv"), "--output",
                     dir.path().string()})
                .exit_code == 0);
    const auto classify = run_cli({"classify", "--catalog", catalog_path, "--assessments",
                                   (dir.path() / "assessments.csv").string(), "--rules",
                                   rules_path.string()});
    CHECK(classify.exit_code == cli::kExitSchema);
    CHECK(classify.err.find("\"EmptySlotSet\"") != std::string::npos);
  }
  SUBCASE("missing probability source is a validation failure") {
    const auto assess = run_cli({"assess", "--catalog", catalog_path});
    CHECK(assess.exit_code == cli::kExitValidation);
  }
  SUBCASE("corrupt catalog is an io failure with a line number") {
    auto bytes = core::read_file(catalog_path);
    bytes.resize(bytes.size() / 2);
    const auto corrupt_path = dir.path() / "corrupt.jsonl";
    core::write_file_atomic(corrupt_path, bytes);
    const auto assess = run_cli({"assess", "--catalog", corrupt_path.string(),
                                 "--probabilities", fixture("probabilities.csv")});
    CHECK(assess.exit_code == cli::kExitIo);
    CHECK(assess.err.find("\"CorruptRecord\"") != std::string::npos);
  }
  SUBCASE("unknown flag is reported as a usage error") {
    const auto usage = run_cli({"classify", "--catalog", catalog_path, "--frobnicate"});
    CHECK(usage.exit_code == cli::kExitValidation);
    CHECK(usage.err.find("\"UsageError\"") != std::string::npos);
  }
}

TEST_CASE("failed runs never leave a truncated output file") {
  TempDir dir;
  const auto catalog_path = (dir.path() / "catalog.jsonl").string();
  REQUIRE(run_cli({"ingest", "--structured", fixture("discos_page1.json"), "--structured",
                   fixture("discos_page2.json"), "--annotations", fixture("annotations.csv"),
                   "--catalog", catalog_path})
              .exit_code == 0);
  REQUIRE(run_cli({"assess", "--catalog", catalog_path, "--probabilities",
                   fixture("probabilities.csv"), "--ages", fixture("ages.csv"), "--output",
                   dir.path().string()})
              .exit_code == 0);

  // Valid results file, then a failing rerun pointed at a bad rules config:
  // the previous results must survive untouched.
  REQUIRE(run_cli({"classify", "--catalog", catalog_path, "--assessments",
                   (dir.path() / "assessments.csv").string(), "--output", dir.path().string()})
              .exit_code == 0);
  const auto before = core::read_file(dir.path() / "results.jsonl");

  const auto rules_path = dir.path() / "bad_rules.json";
  core::write_file_atomic(rules_path, R"({"rules": 7})");
  const auto failed = run_cli({"classify", "--catalog", catalog_path, "--assessments",
                               (dir.path() / "assessments.csv").string(), "--rules",
                               rules_path.string(), "--output", dir.path().string()});
  CHECK(failed.exit_code == cli::kExitSchema);
  CHECK(core::read_file(dir.path() / "results.jsonl") == before);
  CHECK_FALSE(std::filesystem::exists(dir.path() / "results.jsonl.tmp"));
}

TEST_CASE("assess verbose rationale and curve fallback") {
  TempDir dir;
  const auto catalog_path = (dir.path() / "catalog.jsonl").string();
  REQUIRE(run_cli({"ingest", "--structured", fixture("discos_page1.json"), "--structured",
                   fixture("discos_page2.json"), "--annotations", fixture("annotations.csv"),
                   "--catalog", catalog_path})
              .exit_code == 0);

  SUBCASE("direct probabilities win over the curve, with a note") {
    // Curve that would give a very different probability.
    const auto curve_path = dir.path() / "curve.csv";
    core::write_file_atomic(curve_path,
                            "time_years,survival,ci_low,ci_high,at_risk,events\n"
                            "1,0.5,0.4,0.6,10,5\n");
    const auto assess =
        run_cli({"assess", "--catalog", catalog_path, "--probabilities",
                 fixture("probabilities.csv"), "--ages", fixture("ages.csv"), "--curve",
                 curve_path.string(), "--verbose"});
    REQUIRE(assess.exit_code == 0);
    CHECK(assess.out.find("1992-052A,27.48,0.0305,2,3,6,medium") != std::string::npos);
    CHECK(assess.err.find("overrides the survival curve") != std::string::npos);
  }
  SUBCASE("curve supplies probabilities when no table is given") {
    const auto curve_path = dir.path() / "curve.csv";
    core::write_file_atomic(curve_path,
                            "time_years,survival,ci_low,ci_high,at_risk,events\n"
                            "1,0.5,0.4,0.6,10,5\n");
    const auto assess = run_cli({"assess", "--catalog", catalog_path, "--ages",
                                 fixture("ages.csv"), "--curve", curve_path.string()});
    REQUIRE(assess.exit_code == 0);
    // All fixture ages exceed t=1, so every object reads P = 1 - 0.5 = 0.5 -> PN 4.
    CHECK(assess.out.find("1992-052A,27.48,0.5,2,4,8,high") != std::string::npos);
  }
  SUBCASE("ages derive from launch epoch without --ages") {
    const auto assess = run_cli({"assess", "--catalog", catalog_path, "--probabilities",
                                 fixture("probabilities.csv")});
    REQUIRE(assess.exit_code == 0);
    // 1992-08-10 to 2019-07-31 is 9851 days = 26.97 julian years.
    CHECK(assess.out.find("1992-052A,26.97") != std::string::npos);
  }
}

TEST_CASE("report json and table formats render") {
  TempDir dir;
  REQUIRE(run_full_pipeline(dir).exit_code == 0);
  const auto args_base = std::vector<std::string>{
      "report", "--catalog", (dir.path() / "catalog.jsonl").string(), "--assessments",
      (dir.path() / "assessments.csv").string(), "--results",
      (dir.path() / "results.jsonl").string()};

  auto table_args = args_base;
  table_args.insert(table_args.end(), {"--format", "table"});
  const auto table = run_cli(table_args);
  REQUIRE(table.exit_code == 0);
  CHECK(table.out.find("interpercentile 25-75") != std::string::npos);
  CHECK(table.out.find("Net_Based") != std::string::npos);

  auto json_args = args_base;
  json_args.insert(json_args.end(), {"--format", "json"});
  const auto json_run = run_cli(json_args);
  REQUIRE(json_run.exit_code == 0);
  CHECK(json_run.out.find("\"per_class\"") != std::string::npos);

  auto percentile_args = args_base;
  percentile_args.insert(percentile_args.end(), {"--percentiles", "10", "90"});
  const auto wide = run_cli(percentile_args);
  REQUIRE(wide.exit_code == 0);
  CHECK(wide.out.find("interpercentile 10-90") != std::string::npos);
}
