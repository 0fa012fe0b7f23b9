// sotacheck: decide whether one retrieval run is significantly better than
// another on a single-relevant-document ranking task.

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sotacheck/compare.hpp"
#include "sotacheck/decompose.hpp"
#include "sotacheck/errors.hpp"
#include "sotacheck/ingest.hpp"
#include "sotacheck/metrics.hpp"
#include "sotacheck/report.hpp"
#include "sotacheck/stats.hpp"
#include "sotacheck/verdict.hpp"

namespace {

using namespace sotacheck;

enum class OutputFormat { Text, Markdown, Json, Csv };

struct CliConfig {
  std::string qrels_path;
  std::vector<std::string> run_paths;
  RunFormat format = RunFormat::Auto;
  int k = 100;
  double alpha = 0.05;
  RelevancePolicy policy = RelevancePolicy::Strict;
  std::size_t m = 0;  // 0 = pick per command
  Alternative sided = Alternative::TwoSided;
  VerdictMetric metric = VerdictMetric::Esl;
  VerdictRule rule = VerdictRule::Strict;
  OutputFormat output = OutputFormat::Text;
  ReportStyle style = ReportStyle::Full;
  bool per_query = false;
  bool fail_unless_better = false;
  bool gate_adjusted = false;
  std::uint64_t seed = 0;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return std::move(buf).str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

std::string file_stem(const std::string& path) {
  const auto stem = std::filesystem::path(path).stem().string();
  return stem.empty() ? path : stem;
}

std::string shortest(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

void print_warnings(const IngestDiagnostics& diag) {
  for (const auto& w : diag.warnings) std::cerr << "warning: " << w << "\n";
  for (const auto& issue : diag.malformed_lines)
    std::cerr << "warning: line " << issue.line << ": " << issue.reason << "\n";
  if (diag.duplicate_lines_dropped > 0)
    std::cerr << "warning: dropped " << diag.duplicate_lines_dropped
              << " duplicate line(s)\n";
  if (diag.queries_in_run_not_in_qrels > 0)
    std::cerr << "warning: " << diag.queries_in_run_not_in_qrels
              << " run quer(ies) have no relevance judgment and were ignored\n";
  if (diag.queries_in_qrels_not_in_run > 0)
    std::cerr << "warning: " << diag.queries_in_qrels_not_in_run
              << " judged quer(ies) are missing from a run and count as "
                 "not retrieved\n";
}

struct ScoredInputs {
  Qrels qrels;
  std::vector<Run> runs;
  std::vector<std::string> universe;
  std::vector<ScoreTable> tables;
  IngestDiagnostics diagnostics;
};

ScoredInputs load_and_score(const CliConfig& cfg) {
  ScoredInputs in;
  in.qrels = parse_qrels(read_file(cfg.qrels_path), cfg.policy, &in.diagnostics);
  for (const auto& path : cfg.run_paths)
    in.runs.push_back(parse_run(read_file(path), cfg.format, cfg.k,
                                file_stem(path), &in.diagnostics));
  std::vector<const Run*> run_ptrs;
  for (const auto& r : in.runs) run_ptrs.push_back(&r);
  in.universe = align(in.qrels, run_ptrs, &in.diagnostics);
  for (const auto& r : in.runs)
    in.tables.push_back(score_run(r, in.qrels, in.universe, cfg.k));
  return in;
}

const Verdict& selected_verdict(const ComparisonReport& r,
                                VerdictRule rule, VerdictMetric metric) {
  if (rule == VerdictRule::Strict)
    return metric == VerdictMetric::Esl ? r.verdict_strict_esl
                                        : r.verdict_strict_rr;
  return metric == VerdictMetric::Esl ? r.verdict_hippocratic_esl
                                      : r.verdict_hippocratic_rr;
}

std::string per_query_tsv(const ScoreTable& a, const ScoreTable& b) {
  std::string out = "qid\trank_a\trank_b\tcase\trr_a\trr_b\n";
  auto ia = a.scores.begin();
  auto ib = b.scores.begin();
  const auto rank_cell = [](const std::optional<int>& r) {
    return r ? std::to_string(*r) : std::string("-");
  };
  for (; ia != a.scores.end(); ++ia, ++ib) {
    out += ia->first;
    out += '\t';
    out += rank_cell(ia->second.rank);
    out += '\t';
    out += rank_cell(ib->second.rank);
    out += '\t';
    out += to_string(classify_outcome(ia->second.rank, ib->second.rank));
    out += '\t';
    out += shortest(ia->second.rr);
    out += '\t';
    out += shortest(ib->second.rr);
    out += '\n';
  }
  return out;
}

ComparisonReport make_report(const CliConfig& cfg, const ScoreTable& a,
                             const ScoreTable& b, std::size_t default_m) {
  CompareOptions opts;
  opts.alpha = cfg.alpha;
  opts.family_size = cfg.m > 0 ? cfg.m : std::max<std::size_t>(default_m, 1);
  opts.alternative = cfg.sided;
  opts.gate_adjusted = cfg.gate_adjusted;
  return compare_tables(a, b, opts);
}

int run_score(const CliConfig& cfg) {
  const ScoredInputs in = load_and_score(cfg);
  print_warnings(in.diagnostics);
  const ScoreTable& table = in.tables.front();
  std::size_t answered = 0;
  for (const auto& [qid, s] : table.scores)
    if (s.rank) ++answered;
  const double mrr = mean_rr(table, in.universe);
  std::cout << "run: " << table.run_name << "\n";
  std::cout << "queries: " << in.universe.size() << " (answered " << answered
            << ", unanswered " << in.universe.size() - answered << ")\n";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", mrr);
  std::cout << "MRR@" << cfg.k << " " << buf << "\n";
  if (cfg.per_query) {
    std::cout << "qid\trank\trr\n";
    for (const auto& [qid, s] : table.scores) {
      std::cout << qid << '\t' << (s.rank ? std::to_string(*s.rank) : "-")
                << '\t' << shortest(s.rr) << '\n';
    }
  }
  return 0;
}

void emit_reports(const CliConfig& cfg,
                  const std::vector<ComparisonReport>& reports) {
  switch (cfg.output) {
    case OutputFormat::Text: {
      if (reports.size() == 1 && cfg.style != ReportStyle::Table2) {
        std::cout << render_text(reports.front(), cfg.style);
        break;
      }
      // Multi-report (sweep) text output: one Table2 row per pair.
      bool first = true;
      for (const auto& r : reports) {
        const std::string rows = render_text(r, ReportStyle::Table2);
        if (first) {
          std::cout << rows;
          first = false;
        } else {
          std::cout << rows.substr(rows.find('\n') + 1);
        }
      }
      if (reports.size() > 1) {
        std::cout << "\nverdicts (rule="
                  << (cfg.rule == VerdictRule::Strict ? "strict" : "hippocratic")
                  << ", metric="
                  << (cfg.metric == VerdictMetric::Esl ? "esl" : "rr") << ")\n";
        for (const auto& r : reports)
          std::cout << "  " << r.run_b << ": "
                    << to_string(selected_verdict(r, cfg.rule, cfg.metric).outcome)
                    << "\n";
      }
      break;
    }
    case OutputFormat::Markdown:
      for (const auto& r : reports) std::cout << render_markdown(r, cfg.style);
      break;
    case OutputFormat::Json:
      if (reports.size() == 1) {
        std::cout << render_json(reports.front());
      } else {
        std::cout << "[\n";
        for (std::size_t i = 0; i < reports.size(); ++i) {
          std::string one = render_json(reports[i]);
          if (!one.empty() && one.back() == '\n') one.pop_back();
          std::cout << one << (i + 1 < reports.size() ? ",\n" : "\n");
        }
        std::cout << "]\n";
      }
      break;
    case OutputFormat::Csv:
      std::cout << render_csv(reports);
      break;
  }
}

int run_compare(const CliConfig& cfg) {
  const ScoredInputs in = load_and_score(cfg);
  print_warnings(in.diagnostics);
  const ComparisonReport report =
      make_report(cfg, in.tables[0], in.tables[1], 1);
  emit_reports(cfg, {report});
  if (cfg.per_query) std::cout << per_query_tsv(in.tables[0], in.tables[1]);
  if (!cfg.fail_unless_better) return 0;
  switch (selected_verdict(report, cfg.rule, cfg.metric).outcome) {
    case VerdictOutcome::BSignificantlyBetter: return 0;
    case VerdictOutcome::Inconclusive: return 1;
    case VerdictOutcome::ASignificantlyBetter: return 2;
  }
  return 1;
}

int run_sweep(const CliConfig& cfg) {
  std::set<std::string> unique(cfg.run_paths.begin(), cfg.run_paths.end());
  if (unique.size() != cfg.run_paths.size())
    throw std::invalid_argument("duplicate run paths in sweep");

  const ScoredInputs in = load_and_score(cfg);
  print_warnings(in.diagnostics);
  const std::size_t challengers = in.tables.size() - 1;

  std::vector<std::size_t> order(challengers);
  for (std::size_t i = 0; i < challengers; ++i) order[i] = i + 1;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return in.tables[a].run_name < in.tables[b].run_name;
  });

  std::vector<ComparisonReport> reports;
  reports.reserve(challengers);
  for (const std::size_t idx : order)
    reports.push_back(make_report(cfg, in.tables[0], in.tables[idx], challengers));
  emit_reports(cfg, reports);
  return 0;
}

int run_timeline(const std::string& input_path) {
  const std::string text = read_file(input_path);
  std::vector<TimelineEntry> entries;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (line_no == 1 && line == "name,date,mrr,is_sota") continue;
    std::vector<std::string> cols;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      if (comma == std::string::npos) {
        cols.push_back(line.substr(start));
        break;
      }
      cols.push_back(line.substr(start, comma - start));
      start = comma + 1;
    }
    if (cols.size() != 4)
      throw ParseError(line_no, "timeline row must have 4 columns, got " +
                                    std::to_string(cols.size()));
    TimelineEntry e;
    e.name = cols[0];
    e.date = cols[1];
    try {
      e.mrr = std::stod(cols[2]);
    } catch (const std::exception&) {
      throw ParseError(line_no, "mrr is not a number: '" + cols[2] + "'");
    }
    if (cols[3] == "true" || cols[3] == "1") e.is_sota = true;
    else if (cols[3] == "false" || cols[3] == "0") e.is_sota = false;
    else throw ParseError(line_no, "is_sota must be true/false: '" + cols[3] + "'");
    entries.push_back(std::move(e));
  }
  try {
    std::cout << timeline_csv(std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
  return 0;
}

// Quick signed-rank calibration under random pair swaps; mostly a sanity
// check that the install computes sensible p-values.
int run_selfcheck(std::uint64_t seed, std::size_t trials) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> base(0.5, 0.1);
  std::normal_distribution<double> noise(0.0, 0.05);
  const std::size_t n = 200;
  std::vector<double> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = base(rng);
    y[i] = x[i] + noise(rng);
  }
  std::bernoulli_distribution coin(0.5);
  std::size_t rejections = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    PairedSample pairs;
    for (std::size_t i = 0; i < n; ++i) {
      if (coin(rng)) pairs.add(y[i], x[i]);
      else pairs.add(x[i], y[i]);
    }
    if (wilcoxon_signed_rank(pairs).p_value < 0.05) ++rejections;
  }
  const double rate = static_cast<double>(rejections) / static_cast<double>(trials);
  std::cout << "signed-rank rejection rate at alpha=0.05 over " << trials
            << " null trials: " << shortest(rate) << "\n";
  if (rate < 0.03 || rate > 0.07) {
    std::cerr << "selfcheck failed: rate outside [0.03, 0.07]\n";
    return 1;
  }
  return 0;
}

void add_common_options(CLI::App* cmd, CliConfig& cfg, bool with_stats) {
  cmd->add_option("--qrels", cfg.qrels_path, "relevance judgments file")
      ->required()
      ->envname("SOTACHECK_QRELS");
  const std::map<std::string, RunFormat> formats{
      {"trec", RunFormat::Trec},
      {"msmarco", RunFormat::MsMarcoTsv},
      {"auto", RunFormat::Auto}};
  cmd->add_option("--format", cfg.format, "run file format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->envname("SOTACHECK_FORMAT");
  cmd->add_option("--k", cfg.k, "rank cutoff")
      ->check(CLI::PositiveNumber)
      ->envname("SOTACHECK_K");
  const std::map<std::string, RelevancePolicy> policies{
      {"strict", RelevancePolicy::Strict},
      {"first-relevant", RelevancePolicy::FirstRelevant}};
  cmd->add_option("--policy", cfg.policy, "multi-relevant judgment policy")
      ->transform(CLI::CheckedTransformer(policies, CLI::ignore_case))
      ->envname("SOTACHECK_POLICY");
  if (!with_stats) return;
  cmd->add_option("--alpha", cfg.alpha, "significance level")
      ->check(CLI::Range(1e-12, 1.0 - 1e-12))
      ->envname("SOTACHECK_ALPHA");
  cmd->add_option("--m", cfg.m, "Bonferroni family size")
      ->check(CLI::PositiveNumber)
      ->envname("SOTACHECK_M");
  const std::map<std::string, Alternative> sides{
      {"two-sided", Alternative::TwoSided},
      {"less", Alternative::Less},
      {"greater", Alternative::Greater}};
  cmd->add_option("--sided", cfg.sided, "test sidedness")
      ->transform(CLI::CheckedTransformer(sides, CLI::ignore_case))
      ->envname("SOTACHECK_SIDED");
  const std::map<std::string, VerdictMetric> metrics{
      {"esl", VerdictMetric::Esl}, {"rr", VerdictMetric::Rr}};
  cmd->add_option("--metric", cfg.metric, "case-(3) metric for the verdict")
      ->transform(CLI::CheckedTransformer(metrics, CLI::ignore_case))
      ->envname("SOTACHECK_METRIC");
  const std::map<std::string, VerdictRule> rules{
      {"strict", VerdictRule::Strict},
      {"hippocratic", VerdictRule::Hippocratic}};
  cmd->add_option("--rule", cfg.rule, "verdict rule")
      ->transform(CLI::CheckedTransformer(rules, CLI::ignore_case))
      ->envname("SOTACHECK_RULE");
  const std::map<std::string, OutputFormat> outputs{
      {"text", OutputFormat::Text},
      {"markdown", OutputFormat::Markdown},
      {"json", OutputFormat::Json},
      {"csv", OutputFormat::Csv}};
  cmd->add_option("--output", cfg.output, "output format")
      ->transform(CLI::CheckedTransformer(outputs, CLI::ignore_case))
      ->envname("SOTACHECK_OUTPUT");
  const std::map<std::string, ReportStyle> styles{
      {"table1", ReportStyle::Table1},
      {"table2", ReportStyle::Table2},
      {"full", ReportStyle::Full}};
  cmd->add_option("--style", cfg.style, "text report style")
      ->transform(CLI::CheckedTransformer(styles, CLI::ignore_case))
      ->envname("SOTACHECK_STYLE");
  cmd->add_flag("--gate-adjusted", cfg.gate_adjusted,
                "gate verdicts on Bonferroni-adjusted p-values");
  cmd->add_option("--seed", cfg.seed, "random seed for self-checks")
      ->envname("SOTACHECK_SEED");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "sotacheck: significance-aware comparison of retrieval runs on "
      "single-relevant-document ranking tasks"};
  app.require_subcommand(1);

  CliConfig cfg;
  std::string timeline_input;
  std::uint64_t selfcheck_seed = 0;
  std::size_t selfcheck_trials = 2000;

  CLI::App* score = app.add_subcommand("score", "score one run against qrels");
  score->add_option("run", cfg.run_paths, "run file")->required()->expected(1);
  add_common_options(score, cfg, false);
  score->add_flag("--per-query", cfg.per_query, "emit per-query TSV");

  CLI::App* compare = app.add_subcommand(
      "compare", "compare run B against run A (baseline first)");
  compare->add_option("runs", cfg.run_paths, "run A (baseline) and run B")
      ->required()
      ->expected(2);
  add_common_options(compare, cfg, true);
  compare->add_flag("--per-query", cfg.per_query, "emit per-query TSV");
  compare->add_flag("--fail-unless-better", cfg.fail_unless_better,
                    "exit 0 if B significantly better, 1 if inconclusive, "
                    "2 if worse");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "compare every challenger against one baseline");
  sweep->add_option("runs", cfg.run_paths, "baseline followed by challengers")
      ->required()
      ->expected(-2);
  add_common_options(sweep, cfg, true);

  CLI::App* timeline = app.add_subcommand(
      "timeline", "emit a date-sorted leaderboard timeline CSV");
  timeline->add_option("input", timeline_input,
                       "CSV of name,date,mrr,is_sota rows ('-' for stdin)")
      ->required();

  CLI::App* selfcheck = app.add_subcommand(
      "selfcheck", "run a quick Monte Carlo calibration sanity check");
  selfcheck->add_option("--seed", selfcheck_seed, "random seed")
      ->envname("SOTACHECK_SEED");
  selfcheck->add_option("--trials", selfcheck_trials, "number of null trials")
      ->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (score->parsed()) return run_score(cfg);
    if (compare->parsed()) return run_compare(cfg);
    if (sweep->parsed()) return run_sweep(cfg);
    if (timeline->parsed()) return run_timeline(timeline_input);
    if (selfcheck->parsed()) return run_selfcheck(selfcheck_seed, selfcheck_trials);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const MultiplicityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
