#include "dtriage/cli/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <optional>
#include <set>

#include <CLI11.hpp>
#include <json.hpp>

#include "dtriage/catalog/store.hpp"
#include "dtriage/catalog/validate.hpp"
#include "dtriage/classifier/classify.hpp"
#include "dtriage/cli/formats.hpp"
#include "dtriage/core/error.hpp"
#include "dtriage/core/io.hpp"
#include "dtriage/core/text.hpp"
#include "dtriage/criticality/assessment.hpp"
#include "dtriage/ingest/fetch.hpp"
#include "dtriage/ingest/merge.hpp"
#include "dtriage/report/summary.hpp"
#include "dtriage/survival/kaplan_meier.hpp"

namespace dtriage::cli {

namespace {

namespace fs = std::filesystem;

int exit_code_for(const std::string& code) {
  if (code == "IoFailure" || code == "CorruptRecord") return kExitIo;
  if (code == "SchemaViolation" || code == "DuplicateRuleName" || code == "EmptySlotSet" ||
      code == "InvalidThresholds" || code == "MalformedDocument" ||
      code == "UnsupportedVersion" || code == "MissingHeader" || code == "MissingColumn") {
    return kExitSchema;
  }
  return kExitValidation;
}

void report_error(std::ostream& err, const std::string& code, const std::string& message) {
  nlohmann::ordered_json report;
  report["error"]["code"] = code;
  report["error"]["message"] = message;
  err << report.dump() << "\n";
}

struct Options {
  std::string catalog_path;
  std::vector<std::string> structured_paths;
  std::string fetch_url;
  std::string annotations_path;
  std::string diagnostics_path;
  std::string events_path;
  std::string target_classes = "propulsion";
  std::string probabilities_path;
  std::string ages_path;
  std::string curve_path;
  std::string assessments_path;
  std::string results_path;
  std::string rules_path;
  std::string thresholds_path;
  std::string window_end;
  std::string output_dir;
  std::string format = "table";
  std::string subject_id;
  std::vector<double> percentiles{25.0, 75.0};
  std::string ci_method = "plain";
  double alpha = 0.05;
  int batch_size = 50;
  bool verbose = false;
};

// defaults -> thresholds sibling in the rules file -> --thresholds file ->
// --window-end flag, later layers winning.
catalog::ThresholdConfig effective_thresholds(const Options& options) {
  catalog::ThresholdConfig cfg;
  if (!options.rules_path.empty()) {
    cfg = classifier::load_thresholds(core::read_file(options.rules_path), cfg);
  }
  if (!options.thresholds_path.empty()) {
    cfg = classifier::load_thresholds(core::read_file(options.thresholds_path), cfg);
  }
  if (!options.window_end.empty()) {
    const auto date = core::Date::parse(options.window_end);
    if (!date) {
      throw Error("MalformedValue", "--window-end: not a calendar date: " + options.window_end);
    }
    cfg.window_end = *date;
  }
  cfg.validate();
  return cfg;
}

std::vector<classifier::CaptureRule> effective_rules(const Options& options) {
  if (options.rules_path.empty()) return classifier::default_rules();
  return classifier::load_rules(core::read_file(options.rules_path));
}

std::vector<catalog::DebrisObject> load_catalog(const Options& options) {
  if (options.catalog_path.empty()) {
    throw Error("MissingField", "--catalog is required for this command");
  }
  return catalog::load(options.catalog_path);
}

// Assessment rows aligned to the catalog: every object must have exactly one.
std::map<catalog::CosparId, report::AssessmentRow> load_assessments(
    const Options& options, std::span<const catalog::DebrisObject> objects) {
  if (options.assessments_path.empty()) {
    throw Error("MissingField", "--assessments is required for this command");
  }
  const auto rows = parse_assessment_csv(core::read_file(options.assessments_path));
  std::map<catalog::CosparId, report::AssessmentRow> by_id;
  for (const auto& row : rows) {
    if (!by_id.emplace(row.cospar_id, row).second) {
      throw Error("DuplicateId", "assessments repeat " + row.cospar_id.value());
    }
  }
  for (const auto& object : objects) {
    if (!by_id.contains(object.cospar_id)) {
      throw Error("IdMismatch", "no assessment for " + object.cospar_id.value());
    }
  }
  return by_id;
}

classifier::UncooperativenessProfile profile_for(const catalog::DebrisObject& object,
                                                 const report::AssessmentRow& row,
                                                 const catalog::ThresholdConfig& cfg) {
  criticality::CriticalityAssessment assessment;
  assessment.sn = row.sn;
  assessment.pn = row.pn;
  assessment.cn = row.cn;
  assessment.level = row.level;
  return classifier::profile(object, assessment, cfg);
}

int cmd_ingest(const Options& options, std::ostream& out, std::ostream& err) {
  if (options.structured_paths.empty() && options.fetch_url.empty()) {
    throw Error("MissingField", "ingest needs --structured file(s) and/or --fetch <url>");
  }
  std::vector<ingest::StructuredRecord> structured;
  nlohmann::ordered_json diagnostics_doc;
  auto& structured_diags = diagnostics_doc["structured"] = nlohmann::ordered_json::array();
  std::vector<std::string> next_links;
  for (const auto& path : options.structured_paths) {
    auto document = ingest::parse_structured_document(core::read_file(path));
    for (auto& record : document.records) structured.push_back(std::move(record));
    for (const auto& diag : document.diagnostics) {
      structured_diags.push_back({{"file", path}, {"where", diag.where},
                                  {"message", diag.message}});
      err << "ingest: " << path << " " << diag.where << ": " << diag.message << "\n";
    }
    if (document.next_link) next_links.push_back(*document.next_link);
  }
  if (!options.fetch_url.empty()) {
    auto fetched = ingest::fetch_structured_pages(options.fetch_url);
    for (auto& record : fetched.records) structured.push_back(std::move(record));
    for (const auto& diag : fetched.diagnostics) {
      structured_diags.push_back({{"file", options.fetch_url}, {"where", diag.where},
                                  {"message", diag.message}});
      err << "ingest: " << options.fetch_url << " " << diag.where << ": " << diag.message
          << "\n";
    }
    if (options.verbose) {
      err << "ingest: fetched " << fetched.pages << " page(s) from " << options.fetch_url
          << "\n";
    }
  }
  for (const auto& link : next_links) {
    err << "ingest: further page available: " << link << "\n";
  }

  auto annotations = ingest::parse_annotations(core::read_file(options.annotations_path));
  auto& annotation_diags = diagnostics_doc["annotations"] = nlohmann::ordered_json::array();
  for (const auto& diag : annotations.diagnostics) {
    annotation_diags.push_back({{"where", diag.where}, {"message", diag.message}});
    err << "ingest: annotations " << diag.where << ": " << diag.message << "\n";
  }

  const auto merged = ingest::merge(structured, annotations.records);
  for (const auto& id : merged.unmatched_structured) {
    err << "ingest: unmatched structured id " << id.value() << "\n";
  }
  for (const auto& id : merged.unmatched_annotations) {
    err << "ingest: unmatched annotation id " << id.value() << "\n";
  }

  const auto count = catalog::store(merged.objects, options.catalog_path);

  if (!options.diagnostics_path.empty()) {
    auto ids = nlohmann::ordered_json::array();
    for (const auto& id : merged.unmatched_structured) ids.push_back(id.value());
    diagnostics_doc["unmatched_structured"] = std::move(ids);
    ids = nlohmann::ordered_json::array();
    for (const auto& id : merged.unmatched_annotations) ids.push_back(id.value());
    diagnostics_doc["unmatched_annotations"] = std::move(ids);
    diagnostics_doc["next_links"] = next_links;
    core::write_file_atomic(options.diagnostics_path, diagnostics_doc.dump(2) + "\n");
  }

  out << "stored " << count << " objects to " << options.catalog_path << " ("
      << structured.size() << " structured, " << annotations.records.size()
      << " annotated)\n";
  return kExitOk;
}

int cmd_survival(const Options& options, std::ostream& out, std::ostream& err) {
  const auto objects = load_catalog(options);
  const auto events = parse_event_table(core::read_file(options.events_path));

  std::set<survival::BreakupClass> targets;
  for (const auto& token : core::split(options.target_classes, ',')) {
    const auto trimmed = core::trim(token);
    if (trimmed.empty()) continue;
    const auto breakup_class = survival::breakup_class_from_string(trimmed);
    if (!breakup_class) {
      throw Error("UnknownEnumValue", "--target-classes: unknown breakup class \"" +
                                          std::string(trimmed) + "\"");
    }
    targets.insert(*breakup_class);
  }
  if (targets.empty()) {
    throw Error("MissingField", "--target-classes must name at least one breakup class");
  }

  survival::CiMethod method;
  if (options.ci_method == "plain") method = survival::CiMethod::Plain;
  else if (options.ci_method == "loglog") method = survival::CiMethod::LogLog;
  else throw Error("MalformedValue", "--ci-method must be plain or loglog");

  const auto cfg = effective_thresholds(options);
  const auto cohort = survival::build_cohort(objects, events, targets, cfg.window_end);
  const auto curve =
      survival::greenwood_ci(survival::kaplan_meier(cohort), options.alpha, method);
  const auto csv = curve_csv(curve);

  if (options.output_dir.empty()) {
    out << csv;
  } else {
    const auto path = fs::path(options.output_dir) / "survival_curve.csv";
    core::write_file_atomic(path, csv);
    out << "wrote " << path.string() << " (" << curve.steps.size() << " steps, "
        << curve.n_subjects << " subjects)\n";
  }
  if (options.verbose) {
    err << "survival: " << cohort.size() << " subjects, " << curve.steps.size()
        << " breakup times\n";
  }
  return kExitOk;
}

int cmd_assess(const Options& options, std::ostream& out, std::ostream& err) {
  const auto objects = load_catalog(options);
  const auto cfg = effective_thresholds(options);

  std::map<catalog::CosparId, double> probabilities;
  if (!options.probabilities_path.empty()) {
    probabilities = parse_probability_table(core::read_file(options.probabilities_path));
  }
  std::map<catalog::CosparId, double> ages;
  if (!options.ages_path.empty()) {
    ages = parse_age_table(core::read_file(options.ages_path));
  }
  std::optional<survival::SurvivalCurve> curve;
  if (!options.curve_path.empty()) {
    curve = parse_curve_csv(core::read_file(options.curve_path));
  }
  if (options.probabilities_path.empty() && !curve) {
    throw Error("MissingField",
                "assess needs a probability source: --probabilities and/or --curve");
  }

  std::vector<report::AssessmentRow> rows;
  rows.reserve(objects.size());
  std::string rationale_text;
  for (const auto& object : objects) {
    const auto& id = object.cospar_id;
    const double age = ages.contains(id)
                           ? ages.at(id)
                           : catalog::orbit_age_years(object.launch_epoch, cfg.window_end);

    std::optional<double> probability;
    std::string source_note;
    if (const auto it = probabilities.find(id); it != probabilities.end()) {
      probability = it->second;
      if (curve) {
        source_note = "probability source: direct per-object value overrides the survival curve";
      }
    } else if (curve) {
      probability = survival::breakup_probability(*curve, age);
    }
    if (!probability) {
      throw Error("IdMismatch", id.value() + " has no probability (not in the table, no curve)");
    }

    auto assessment = criticality::assess(object, *probability, age, cfg);
    if (!source_note.empty()) assessment.rationale.push_back(source_note);

    rows.push_back({id, age, *probability, assessment.sn, assessment.pn, assessment.cn,
                    assessment.level});
    if (options.verbose) {
      rationale_text += id.value() + "\n";
      for (const auto& line : assessment.rationale) rationale_text += "  " + line + "\n";
    }
  }

  const auto csv = assessment_csv(rows);
  if (options.output_dir.empty()) {
    out << csv;
  } else {
    const auto path = fs::path(options.output_dir) / "assessments.csv";
    core::write_file_atomic(path, csv);
    out << "wrote " << path.string() << " (" << rows.size() << " objects)\n";
  }
  if (options.verbose) err << rationale_text;
  return kExitOk;
}

int cmd_classify(const Options& options, std::ostream& out, std::ostream& err) {
  const auto objects = load_catalog(options);
  const auto cfg = effective_thresholds(options);
  const auto rules = effective_rules(options);
  const auto assessments = load_assessments(options, objects);
  if (options.batch_size < 1) {
    throw Error("MalformedValue", "--batch-size must be at least 1");
  }

  const bool to_files = !options.output_dir.empty();
  std::optional<core::AtomicFileWriter> jsonl_writer;
  std::optional<core::AtomicFileWriter> csv_writer;
  fs::path jsonl_path;
  fs::path csv_path;
  if (to_files) {
    jsonl_path = fs::path(options.output_dir) / "results.jsonl";
    csv_path = fs::path(options.output_dir) / "results.csv";
    jsonl_writer.emplace(jsonl_path);
    csv_writer.emplace(csv_path);
    csv_writer->append(result_csv_header());
  } else if (options.format == "csv" || options.format == "table") {
    out << result_csv_header();
  }

  const auto total = objects.size();
  const auto batch_size = static_cast<std::size_t>(options.batch_size);
  const auto batches = (total + batch_size - 1) / batch_size;
  std::size_t classified = 0;
  for (std::size_t batch = 0; batch < batches; ++batch) {
    const auto begin = batch * batch_size;
    const auto end = std::min(begin + batch_size, total);
    if (options.verbose) {
      err << "classify: batch " << (batch + 1) << "/" << batches << " (" << (end - begin)
          << " objects)\n";
    }
    // Results stream out batch by batch; nothing is held across batches.
    for (std::size_t i = begin; i < end; ++i) {
      const auto& object = objects[i];
      const auto result = classifier::classify(
          object.cospar_id, profile_for(object, assessments.at(object.cospar_id), cfg), rules);
      ++classified;
      if (to_files) {
        jsonl_writer->append(result_jsonl_line(result));
        csv_writer->append(result_csv_line(result));
      } else if (options.format == "json") {
        out << result_jsonl_line(result);
      } else {
        out << result_csv_line(result);
      }
    }
  }

  if (to_files) {
    jsonl_writer->commit();
    csv_writer->commit();
    out << "classified " << classified << " objects; wrote " << jsonl_path.string() << " and "
        << csv_path.string() << "\n";
  } else if (options.verbose) {
    err << "classify: " << classified << " objects\n";
  }
  return kExitOk;
}

int cmd_report(const Options& options, std::ostream& out, std::ostream& err) {
  const auto objects = load_catalog(options);
  const auto cfg = effective_thresholds(options);
  const auto rules = effective_rules(options);
  const auto assessments_by_id = load_assessments(options, objects);
  if (options.results_path.empty()) {
    throw Error("MissingField", "--results is required for report");
  }
  const auto results = parse_result_jsonl(core::read_file(options.results_path));

  std::vector<report::AssessmentRow> assessment_rows;
  assessment_rows.reserve(assessments_by_id.size());
  for (const auto& [id, row] : assessments_by_id) assessment_rows.push_back(row);

  // Class table follows the rule-set order; any names that appear only in the
  // results file (from an older rule set) are appended so they still count.
  std::vector<std::string> class_names;
  std::set<std::string> seen;
  for (const auto& rule : rules) {
    if (seen.insert(rule.name).second) class_names.push_back(rule.name);
  }
  std::set<std::string> extras;
  for (const auto& result : results) {
    for (const auto& name : result.matched) {
      if (!seen.contains(name)) extras.insert(name);
    }
  }
  class_names.insert(class_names.end(), extras.begin(), extras.end());

  if (options.percentiles.size() != 2) {
    throw Error("MalformedValue", "--percentiles expects two values: lo hi");
  }
  const auto summary =
      report::summarize(objects, assessment_rows, results, class_names, cfg,
                        options.percentiles[0], options.percentiles[1]);

  if (!options.output_dir.empty()) {
    const fs::path dir(options.output_dir);
    core::write_file_atomic(dir / "class_summary.csv", report::class_summary_csv(summary));
    core::write_file_atomic(dir / "by_object_type.csv", report::object_type_csv(summary));
    core::write_file_atomic(dir / "by_criticality_number.csv",
                            report::criticality_number_csv(summary));
    core::write_file_atomic(dir / "by_attitude_regime.csv",
                            report::attitude_regime_csv(summary));
    core::write_file_atomic(dir / "cohort_summary.csv", report::cohort_summary_csv(summary));
    if (options.verbose) err << "report: wrote 5 csv files to " << dir.string() << "\n";
  }

  if (options.format == "csv") {
    out << report::class_summary_csv(summary);
  } else if (options.format == "json") {
    out << report::json_report(summary);
  } else {
    out << report::text_report(summary);
  }
  return kExitOk;
}

int cmd_explain(const Options& options, std::ostream& out, std::ostream& err) {
  const auto objects = load_catalog(options);
  const auto cfg = effective_thresholds(options);
  const auto rules = effective_rules(options);
  const auto assessments = load_assessments(options, objects);

  const auto id = catalog::CosparId::parse(options.subject_id);
  if (!id) {
    throw Error("MalformedId", "malformed designator \"" + options.subject_id + "\"");
  }
  const auto object = std::find_if(objects.begin(), objects.end(), [&](const auto& candidate) {
    return candidate.cospar_id == *id;
  });
  if (object == objects.end()) {
    throw Error("IdMismatch", id->value() + " is not in the catalog");
  }

  const auto result = classifier::classify(
      *id, profile_for(*object, assessments.at(*id), cfg), rules);
  out << classifier::explain(result);
  if (options.verbose) {
    err << "explain: " << result.matched.size() << " of " << rules.size()
        << " rules matched\n";
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"debris-triage: derelict-object characterization and capture-method triage"};
  app.require_subcommand(1);
  Options options;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--thresholds", options.thresholds_path,
                    "JSON config with a `thresholds` object");
    cmd->add_option("--window-end", options.window_end,
                    "observation window end, YYYY-MM-DD (default 2019-07-31)");
    cmd->add_flag("--verbose", options.verbose, "diagnostic detail on stderr");
  };

  auto* ingest_cmd = app.add_subcommand("ingest", "parse and merge catalog inputs");
  ingest_cmd->add_option("--structured", options.structured_paths,
                         "structured collection document(s), repeatable");
  ingest_cmd->add_option("--fetch", options.fetch_url,
                         "fetch structured pages from this http url, following links.next");
  ingest_cmd->add_option("--annotations", options.annotations_path, "annotation csv")->required();
  ingest_cmd->add_option("--catalog", options.catalog_path, "catalog store to write")->required();
  ingest_cmd->add_option("--diagnostics", options.diagnostics_path,
                         "write machine-readable diagnostics json here");
  add_common(ingest_cmd);

  auto* survival_cmd = app.add_subcommand("survival", "estimate breakup probability");
  survival_cmd->add_option("--catalog", options.catalog_path, "catalog store")->required();
  survival_cmd->add_option("--events", options.events_path, "event history csv")->required();
  survival_cmd->add_option("--target-classes", options.target_classes,
                           "comma-separated breakup classes under study");
  survival_cmd->add_option("--alpha", options.alpha, "confidence level complement");
  survival_cmd->add_option("--ci-method", options.ci_method,
                           "confidence band transform: plain|loglog (default plain)");
  survival_cmd->add_option("--output", options.output_dir, "directory for survival_curve.csv");
  add_common(survival_cmd);

  auto* assess_cmd = app.add_subcommand("assess", "severity / probability / criticality");
  assess_cmd->add_option("--catalog", options.catalog_path, "catalog store")->required();
  assess_cmd->add_option("--probabilities", options.probabilities_path,
                         "per-object probability csv (wins over --curve)");
  assess_cmd->add_option("--ages", options.ages_path,
                         "per-object age csv (else ages derive from launch epoch)");
  assess_cmd->add_option("--curve", options.curve_path, "survival curve csv");
  assess_cmd->add_option("--output", options.output_dir, "directory for assessments.csv");
  add_common(assess_cmd);

  auto* classify_cmd = app.add_subcommand("classify", "evaluate capture-method rules");
  classify_cmd->add_option("--catalog", options.catalog_path, "catalog store")->required();
  classify_cmd->add_option("--assessments", options.assessments_path, "assess output csv")
      ->required();
  classify_cmd->add_option("--rules", options.rules_path, "rules json (default: built-in set)");
  classify_cmd->add_option("--batch-size", options.batch_size, "objects per batch (default 50)");
  classify_cmd->add_option("--format", options.format, "csv|json when streaming to stdout");
  classify_cmd->add_option("--output", options.output_dir,
                           "directory for results.jsonl + results.csv");
  add_common(classify_cmd);

  auto* report_cmd = app.add_subcommand("report", "summary tables and distributions");
  report_cmd->add_option("--catalog", options.catalog_path, "catalog store")->required();
  report_cmd->add_option("--assessments", options.assessments_path, "assess output csv")
      ->required();
  report_cmd->add_option("--results", options.results_path, "classify output jsonl")->required();
  report_cmd->add_option("--rules", options.rules_path, "rules json (default: built-in set)");
  report_cmd->add_option("--format", options.format, "table|csv|json");
  report_cmd->add_option("--output", options.output_dir, "directory for the csv report files");
  report_cmd->add_option("--percentiles", options.percentiles,
                         "interpercentile bounds (default 25 75)")
      ->expected(2);
  add_common(report_cmd);

  auto* explain_cmd = app.add_subcommand("explain", "per-rule trace for one object");
  explain_cmd->add_option("cospar_id", options.subject_id, "object to explain")->required();
  explain_cmd->add_option("--catalog", options.catalog_path, "catalog store")->required();
  explain_cmd->add_option("--assessments", options.assessments_path, "assess output csv")
      ->required();
  explain_cmd->add_option("--rules", options.rules_path, "rules json (default: built-in set)");
  add_common(explain_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& help) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& parse_error) {
    report_error(err, "UsageError", parse_error.what());
    return kExitValidation;
  }

  try {
    if (ingest_cmd->parsed()) return cmd_ingest(options, out, err);
    if (survival_cmd->parsed()) return cmd_survival(options, out, err);
    if (assess_cmd->parsed()) return cmd_assess(options, out, err);
    if (classify_cmd->parsed()) return cmd_classify(options, out, err);
    if (report_cmd->parsed()) return cmd_report(options, out, err);
    if (explain_cmd->parsed()) return cmd_explain(options, out, err);
    report_error(err, "UsageError", "no subcommand given");
    return kExitValidation;
  } catch (const Error& error) {
    report_error(err, error.code(), error.what());
    return exit_code_for(error.code());
  } catch (const std::exception& unexpected) {
    report_error(err, "InternalError", unexpected.what());
    return kExitValidation;
  }
}

}  // namespace dtriage::cli
