#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sotacheck/decompose.hpp"
#include "sotacheck/ingest.hpp"
#include "sotacheck/stats.hpp"
#include "sotacheck/verdict.hpp"

namespace sotacheck {

inline constexpr std::string_view kReportSchemaVersion = "1";

// Table1: one line with the overall delta and the naive test battery.
// Table2: one row with the outcome breakdown and case-(3) details.
// Full: everything, sectioned.
enum class ReportStyle { Table1, Table2, Full };

struct CaseCounts {
  std::size_t universe_size = 0;
  std::size_t case1 = 0;
  std::size_t a_wins = 0;
  std::size_t b_wins = 0;
  std::size_t case3 = 0;
  std::size_t case3_a_better = 0;
  std::size_t case3_b_better = 0;
  std::size_t case3_tied = 0;

  bool operator==(const CaseCounts&) const = default;
};

// Bonferroni-adjusted companions to the eight reported p-values.
struct AdjustedPValues {
  double naive_wrs = 1.0;
  double naive_wsr = 1.0;
  double naive_t = 1.0;
  double case2_binomial = 1.0;
  double case3_esl_wsr = 1.0;
  double case3_esl_t = 1.0;
  double case3_rr_wsr = 1.0;
  double case3_rr_t = 1.0;

  bool operator==(const AdjustedPValues&) const = default;
};

// The complete result of comparing run B against run A over a shared
// query universe. Case-(3) means are absent when that case is empty.
struct ComparisonReport {
  std::string run_a;
  std::string run_b;
  int k = 100;
  double alpha = 0.05;
  std::size_t family_size = 1;
  double mrr_a = 0.0;
  double mrr_b = 0.0;
  double delta_mrr = 0.0;  // mrr_b - mrr_a
  TestResult naive_wrs;
  TestResult naive_wsr;
  TestResult naive_t;
  CaseCounts breakdown;
  TestResult case2_binomial;
  std::optional<double> mean_esl_a;
  std::optional<double> mean_esl_b;
  std::optional<double> mean_rr_a;
  std::optional<double> mean_rr_b;
  TestResult case3_esl_wsr;
  TestResult case3_esl_t;
  TestResult case3_rr_wsr;
  TestResult case3_rr_t;
  AdjustedPValues adjusted;
  Verdict verdict_strict_esl;
  Verdict verdict_strict_rr;
  Verdict verdict_hippocratic_esl;
  Verdict verdict_hippocratic_rr;

  bool operator==(const ComparisonReport&) const = default;
};

// Deterministic fixed-format text. Percentages are rounded to integers,
// MRR and deltas use 4 decimals, mean search lengths 2 decimals, p-values
// scientific notation below 1e-3 and 6 decimals otherwise.
std::string render_text(const ComparisonReport& report, ReportStyle style);

std::string render_markdown(const ComparisonReport& report, ReportStyle style);

// Lossless JSON document (schema_version "1"), deterministic key order.
std::string render_json(const ComparisonReport& report);

// Inverse of render_json.
ComparisonReport parse_report_json(std::string_view json_text);

// One CSV row per report under a shared header.
std::string render_csv(std::span<const ComparisonReport> reports);

// One leaderboard submission for the effectiveness-over-time view.
struct TimelineEntry {
  std::string name;
  std::string date;  // ISO-8601 calendar date, YYYY-MM-DD
  double mrr = 0.0;
  bool is_sota = false;

  bool operator==(const TimelineEntry&) const = default;
};

// Plot-ready CSV `name,date,mrr,is_sota`, sorted by date then name.
// Throws std::invalid_argument on a malformed date.
std::string timeline_csv(std::vector<TimelineEntry> entries);

// Canonical serializers for runs and qrels; parsing their output yields
// the original structure back.
std::string format_run_trec(const Run& run);
std::string format_run_msmarco(const Run& run);
std::string format_qrels(const Qrels& qrels);

const char* to_string(VerdictOutcome outcome);
const char* to_string(OutcomeCase outcome);

}  // namespace sotacheck
