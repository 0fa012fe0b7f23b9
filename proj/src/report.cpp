#include "sotacheck/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace sotacheck {

namespace {

using ojson = nlohmann::ordered_json;

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

// Scientific notation below 1e-3, 6 decimals otherwise.
std::string format_p(double p) {
  char buf[64];
  if (p < 1e-3)
    std::snprintf(buf, sizeof(buf), "%.2E", p);
  else
    std::snprintf(buf, sizeof(buf), "%.6f", p);
  return buf;
}

std::string format_pct(std::size_t count, std::size_t total) {
  const long long pct = std::llround(
      100.0 * static_cast<double>(count) / static_cast<double>(total));
  return std::to_string(pct) + "%";
}

std::string opt_fixed(const std::optional<double>& v, int decimals) {
  return v ? fixed(*v, decimals) : std::string("n/a");
}

// Shortest round-trip representation, for machine-facing CSV cells.
std::string shortest(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

const char* human_outcome(VerdictOutcome o) {
  switch (o) {
    case VerdictOutcome::BSignificantlyBetter: return "B significantly better";
    case VerdictOutcome::ASignificantlyBetter: return "A significantly better";
    case VerdictOutcome::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

const char* to_string(TestName t) {
  switch (t) {
    case TestName::Wrs: return "wrs";
    case TestName::Wsr: return "wsr";
    case TestName::PairedT: return "paired_t";
    case TestName::Binomial: return "binomial";
  }
  return "wrs";
}

TestName test_name_from(std::string_view s) {
  if (s == "wrs") return TestName::Wrs;
  if (s == "wsr") return TestName::Wsr;
  if (s == "paired_t") return TestName::PairedT;
  if (s == "binomial") return TestName::Binomial;
  throw std::invalid_argument("unknown test name: " + std::string(s));
}

const char* to_string(Method m) {
  switch (m) {
    case Method::Exact: return "exact";
    case Method::NormalApprox: return "normal_approx";
    case Method::Analytic: return "analytic";
  }
  return "exact";
}

Method method_from(std::string_view s) {
  if (s == "exact") return Method::Exact;
  if (s == "normal_approx") return Method::NormalApprox;
  if (s == "analytic") return Method::Analytic;
  throw std::invalid_argument("unknown method: " + std::string(s));
}

const char* to_string(VerdictRule r) {
  return r == VerdictRule::Strict ? "strict" : "hippocratic";
}

VerdictRule rule_from(std::string_view s) {
  if (s == "strict") return VerdictRule::Strict;
  if (s == "hippocratic") return VerdictRule::Hippocratic;
  throw std::invalid_argument("unknown verdict rule: " + std::string(s));
}

VerdictOutcome outcome_from(std::string_view s) {
  if (s == "b_significantly_better") return VerdictOutcome::BSignificantlyBetter;
  if (s == "a_significantly_better") return VerdictOutcome::ASignificantlyBetter;
  if (s == "inconclusive") return VerdictOutcome::Inconclusive;
  throw std::invalid_argument("unknown verdict outcome: " + std::string(s));
}

ojson to_json(const TestResult& t) {
  ojson j;
  j["test"] = to_string(t.test_name);
  j["statistic"] = t.statistic;
  j["p_value"] = t.p_value;
  j["n_effective"] = t.n_effective;
  j["method"] = to_string(t.method);
  if (t.degenerate)
    j["degenerate"] = *t.degenerate;
  else
    j["degenerate"] = nullptr;
  return j;
}

TestResult test_from_json(const ojson& j) {
  TestResult t;
  t.test_name = test_name_from(j.at("test").get<std::string>());
  t.statistic = j.at("statistic").get<double>();
  t.p_value = j.at("p_value").get<double>();
  t.n_effective = j.at("n_effective").get<std::size_t>();
  t.method = method_from(j.at("method").get<std::string>());
  if (!j.at("degenerate").is_null())
    t.degenerate = j.at("degenerate").get<std::string>();
  return t;
}

ojson to_json(const Verdict& v) {
  ojson j;
  j["rule"] = to_string(v.rule);
  j["outcome"] = to_string(v.outcome);
  ojson checks = ojson::array();
  for (const auto& c : v.rationale) {
    ojson cj;
    cj["criterion"] = c.criterion;
    cj["satisfied"] = c.satisfied;
    cj["p_value"] = c.p_value;
    checks.push_back(std::move(cj));
  }
  j["rationale"] = std::move(checks);
  return j;
}

Verdict verdict_from_json(const ojson& j) {
  Verdict v;
  v.rule = rule_from(j.at("rule").get<std::string>());
  v.outcome = outcome_from(j.at("outcome").get<std::string>());
  for (const auto& cj : j.at("rationale")) {
    v.rationale.push_back({cj.at("criterion").get<std::string>(),
                           cj.at("satisfied").get<bool>(),
                           cj.at("p_value").get<double>()});
  }
  return v;
}

ojson opt_to_json(const std::optional<double>& v) {
  return v ? ojson(*v) : ojson(nullptr);
}

std::optional<double> opt_from_json(const ojson& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

std::string table1_row(const ComparisonReport& r) {
  return r.run_a + " vs " + r.run_b + ": Δ=" + fixed(r.delta_mrr, 4) +
         ", WRS p=" + format_p(r.naive_wrs.p_value) +
         ", WSR p=" + format_p(r.naive_wsr.p_value) +
         ", t p=" + format_p(r.naive_t.p_value);
}

std::vector<std::string> table2_cells(const ComparisonReport& r) {
  const auto& b = r.breakdown;
  return {
      r.run_a,
      r.run_b,
      fixed(r.delta_mrr, 4),
      format_pct(b.case1, b.universe_size),
      format_pct(b.a_wins, b.universe_size),
      format_pct(b.b_wins, b.universe_size),
      format_pct(b.case3, b.universe_size),
      opt_fixed(r.mean_esl_a, 2),
      opt_fixed(r.mean_esl_b, 2),
      format_p(r.case3_esl_wsr.p_value),
      format_p(r.case3_esl_t.p_value),
      opt_fixed(r.mean_rr_a, 4),
      opt_fixed(r.mean_rr_b, 4),
      format_p(r.case3_rr_wsr.p_value),
      format_p(r.case3_rr_t.p_value),
  };
}

const std::vector<std::string>& table2_header() {
  static const std::vector<std::string> header = {
      "A",     "B",     "Δ",     "(1)",   "(2) A wins",
      "(2) B wins",     "(3)",   "A ESL", "B ESL", "WSR p",
      "t p",   "A RR",  "B RR",  "WSR p", "t p"};
  return header;
}

std::string join_pipes(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += " | ";
    out += cells[i];
  }
  return out;
}

std::string full_text(const ComparisonReport& r) {
  const auto& b = r.breakdown;
  std::ostringstream out;
  out << "comparison: " << r.run_a << " vs " << r.run_b << "\n";
  out << "k=" << r.k << "  queries=" << b.universe_size
      << "  alpha=" << fixed(r.alpha, 2) << "  m=" << r.family_size << "\n";
  out << "MRR@" << r.k << ": A=" << fixed(r.mrr_a, 4)
      << "  B=" << fixed(r.mrr_b, 4) << "  Δ=" << fixed(r.delta_mrr, 4)
      << "\n\n";

  out << "naive tests on per-query RR over all queries\n";
  out << "  WRS     p=" << format_p(r.naive_wrs.p_value) << "\n";
  out << "  WSR     p=" << format_p(r.naive_wsr.p_value) << "\n";
  out << "  t-test  p=" << format_p(r.naive_t.p_value) << "\n\n";

  out << "outcome breakdown\n";
  out << "  (1) neither retrieved  " << b.case1 << "  "
      << format_pct(b.case1, b.universe_size) << "\n";
  out << "  (2) A wins             " << b.a_wins << "  "
      << format_pct(b.a_wins, b.universe_size) << "\n";
  out << "  (2) B wins             " << b.b_wins << "  "
      << format_pct(b.b_wins, b.universe_size) << "\n";
  out << "  (3) both retrieved     " << b.case3 << "  "
      << format_pct(b.case3, b.universe_size) << "  (A better "
      << b.case3_a_better << " / B better " << b.case3_b_better << " / tied "
      << b.case3_tied << ")\n\n";

  out << "case (3), both retrieved\n";
  out << "  mean ESL  A=" << opt_fixed(r.mean_esl_a, 2)
      << "  B=" << opt_fixed(r.mean_esl_b, 2)
      << "  WSR p=" << format_p(r.case3_esl_wsr.p_value)
      << "  t p=" << format_p(r.case3_esl_t.p_value) << "\n";
  out << "  mean RR   A=" << opt_fixed(r.mean_rr_a, 4)
      << "  B=" << opt_fixed(r.mean_rr_b, 4)
      << "  WSR p=" << format_p(r.case3_rr_wsr.p_value)
      << "  t p=" << format_p(r.case3_rr_t.p_value) << "\n\n";

  out << "case (2), discordant retrieval\n";
  out << "  binomial: B wins " << b.b_wins << " of " << (b.a_wins + b.b_wins)
      << ", p=" << format_p(r.case2_binomial.p_value) << "\n\n";

  out << "bonferroni-adjusted p-values (m=" << r.family_size << ")\n";
  out << "  naive: WRS " << format_p(r.adjusted.naive_wrs) << ", WSR "
      << format_p(r.adjusted.naive_wsr) << ", t "
      << format_p(r.adjusted.naive_t) << "\n";
  out << "  case (2) binomial: " << format_p(r.adjusted.case2_binomial) << "\n";
  out << "  case (3): ESL WSR " << format_p(r.adjusted.case3_esl_wsr)
      << ", ESL t " << format_p(r.adjusted.case3_esl_t) << ", RR WSR "
      << format_p(r.adjusted.case3_rr_wsr) << ", RR t "
      << format_p(r.adjusted.case3_rr_t) << "\n\n";

  out << "verdicts (alpha=" << fixed(r.alpha, 2) << ")\n";
  out << "  strict, ESL:       " << human_outcome(r.verdict_strict_esl.outcome)
      << "\n";
  out << "  strict, RR:        " << human_outcome(r.verdict_strict_rr.outcome)
      << "\n";
  out << "  hippocratic, ESL:  "
      << human_outcome(r.verdict_hippocratic_esl.outcome) << "\n";
  out << "  hippocratic, RR:   "
      << human_outcome(r.verdict_hippocratic_rr.outcome) << "\n";
  return std::move(out).str();
}

bool valid_iso_date(std::string_view d) {
  if (d.size() != 10 || d[4] != '-' || d[7] != '-') return false;
  for (const std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u})
    if (d[i] < '0' || d[i] > '9') return false;
  const int month = (d[5] - '0') * 10 + (d[6] - '0');
  const int day = (d[8] - '0') * 10 + (d[9] - '0');
  return month >= 1 && month <= 12 && day >= 1 && day <= 31;
}

}  // namespace

const char* to_string(VerdictOutcome outcome) {
  switch (outcome) {
    case VerdictOutcome::BSignificantlyBetter: return "b_significantly_better";
    case VerdictOutcome::ASignificantlyBetter: return "a_significantly_better";
    case VerdictOutcome::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

const char* to_string(OutcomeCase outcome) {
  switch (outcome) {
    case OutcomeCase::NeitherRetrieved: return "neither";
    case OutcomeCase::AWinsRetrieval: return "a_wins";
    case OutcomeCase::BWinsRetrieval: return "b_wins";
    case OutcomeCase::BothRetrieved: return "both";
  }
  return "neither";
}

std::string render_text(const ComparisonReport& report, ReportStyle style) {
  switch (style) {
    case ReportStyle::Table1:
      return table1_row(report) + "\n";
    case ReportStyle::Table2:
      return join_pipes(table2_header()) + "\n" +
             join_pipes(table2_cells(report)) + "\n";
    case ReportStyle::Full:
      return full_text(report);
  }
  return {};
}

std::string render_markdown(const ComparisonReport& report, ReportStyle style) {
  const auto md_row = [](const std::vector<std::string>& cells) {
    std::string out = "|";
    for (const auto& c : cells) out += " " + c + " |";
    return out + "\n";
  };
  const auto md_sep = [](std::size_t n) {
    std::string out = "|";
    for (std::size_t i = 0; i < n; ++i) out += " --- |";
    return out + "\n";
  };
  switch (style) {
    case ReportStyle::Table1: {
      const std::vector<std::string> header = {"A",     "B",     "Δ",
                                               "WRS p", "WSR p", "t p"};
      const std::vector<std::string> cells = {
          report.run_a,
          report.run_b,
          fixed(report.delta_mrr, 4),
          format_p(report.naive_wrs.p_value),
          format_p(report.naive_wsr.p_value),
          format_p(report.naive_t.p_value)};
      return md_row(header) + md_sep(header.size()) + md_row(cells);
    }
    case ReportStyle::Table2:
      return md_row(table2_header()) + md_sep(table2_header().size()) +
             md_row(table2_cells(report));
    case ReportStyle::Full: {
      std::string out = "## comparison: " + report.run_a + " vs " +
                        report.run_b + "\n\n";
      out += md_row(table2_header()) + md_sep(table2_header().size()) +
             md_row(table2_cells(report));
      out += "\n```\n" + full_text(report) + "```\n";
      return out;
    }
  }
  return {};
}

std::string render_json(const ComparisonReport& r) {
  ojson j;
  j["schema_version"] = std::string(kReportSchemaVersion);
  j["run_a"] = r.run_a;
  j["run_b"] = r.run_b;
  j["k"] = r.k;
  j["alpha"] = r.alpha;
  j["family_size"] = r.family_size;
  j["mrr_a"] = r.mrr_a;
  j["mrr_b"] = r.mrr_b;
  j["delta_mrr"] = r.delta_mrr;

  ojson naive;
  naive["wrs"] = to_json(r.naive_wrs);
  naive["wsr"] = to_json(r.naive_wsr);
  naive["t"] = to_json(r.naive_t);
  j["naive"] = std::move(naive);

  const auto& b = r.breakdown;
  ojson bj;
  bj["universe_size"] = b.universe_size;
  bj["case1"] = b.case1;
  bj["a_wins"] = b.a_wins;
  bj["b_wins"] = b.b_wins;
  bj["case3"] = b.case3;
  bj["case3_a_better"] = b.case3_a_better;
  bj["case3_b_better"] = b.case3_b_better;
  bj["case3_tied"] = b.case3_tied;
  ojson fr;
  const double n = static_cast<double>(b.universe_size);
  fr["case1"] = static_cast<double>(b.case1) / n;
  fr["a_wins"] = static_cast<double>(b.a_wins) / n;
  fr["b_wins"] = static_cast<double>(b.b_wins) / n;
  fr["case3"] = static_cast<double>(b.case3) / n;
  bj["fractions"] = std::move(fr);
  j["breakdown"] = std::move(bj);

  ojson c2;
  c2["binomial"] = to_json(r.case2_binomial);
  j["case2"] = std::move(c2);

  ojson c3;
  c3["mean_esl_a"] = opt_to_json(r.mean_esl_a);
  c3["mean_esl_b"] = opt_to_json(r.mean_esl_b);
  c3["mean_rr_a"] = opt_to_json(r.mean_rr_a);
  c3["mean_rr_b"] = opt_to_json(r.mean_rr_b);
  c3["esl_wsr"] = to_json(r.case3_esl_wsr);
  c3["esl_t"] = to_json(r.case3_esl_t);
  c3["rr_wsr"] = to_json(r.case3_rr_wsr);
  c3["rr_t"] = to_json(r.case3_rr_t);
  j["case3"] = std::move(c3);

  ojson adj;
  adj["naive_wrs"] = r.adjusted.naive_wrs;
  adj["naive_wsr"] = r.adjusted.naive_wsr;
  adj["naive_t"] = r.adjusted.naive_t;
  adj["case2_binomial"] = r.adjusted.case2_binomial;
  adj["case3_esl_wsr"] = r.adjusted.case3_esl_wsr;
  adj["case3_esl_t"] = r.adjusted.case3_esl_t;
  adj["case3_rr_wsr"] = r.adjusted.case3_rr_wsr;
  adj["case3_rr_t"] = r.adjusted.case3_rr_t;
  j["adjusted"] = std::move(adj);

  ojson v;
  v["strict_esl"] = to_json(r.verdict_strict_esl);
  v["strict_rr"] = to_json(r.verdict_strict_rr);
  v["hippocratic_esl"] = to_json(r.verdict_hippocratic_esl);
  v["hippocratic_rr"] = to_json(r.verdict_hippocratic_rr);
  j["verdicts"] = std::move(v);

  return j.dump(2) + "\n";
}

ComparisonReport parse_report_json(std::string_view json_text) {
  const ojson j = ojson::parse(json_text);
  if (j.at("schema_version").get<std::string>() != kReportSchemaVersion)
    throw std::invalid_argument("unsupported report schema version");

  ComparisonReport r;
  r.run_a = j.at("run_a").get<std::string>();
  r.run_b = j.at("run_b").get<std::string>();
  r.k = j.at("k").get<int>();
  r.alpha = j.at("alpha").get<double>();
  r.family_size = j.at("family_size").get<std::size_t>();
  r.mrr_a = j.at("mrr_a").get<double>();
  r.mrr_b = j.at("mrr_b").get<double>();
  r.delta_mrr = j.at("delta_mrr").get<double>();

  r.naive_wrs = test_from_json(j.at("naive").at("wrs"));
  r.naive_wsr = test_from_json(j.at("naive").at("wsr"));
  r.naive_t = test_from_json(j.at("naive").at("t"));

  const auto& bj = j.at("breakdown");
  r.breakdown.universe_size = bj.at("universe_size").get<std::size_t>();
  r.breakdown.case1 = bj.at("case1").get<std::size_t>();
  r.breakdown.a_wins = bj.at("a_wins").get<std::size_t>();
  r.breakdown.b_wins = bj.at("b_wins").get<std::size_t>();
  r.breakdown.case3 = bj.at("case3").get<std::size_t>();
  r.breakdown.case3_a_better = bj.at("case3_a_better").get<std::size_t>();
  r.breakdown.case3_b_better = bj.at("case3_b_better").get<std::size_t>();
  r.breakdown.case3_tied = bj.at("case3_tied").get<std::size_t>();

  r.case2_binomial = test_from_json(j.at("case2").at("binomial"));

  const auto& c3 = j.at("case3");
  r.mean_esl_a = opt_from_json(c3.at("mean_esl_a"));
  r.mean_esl_b = opt_from_json(c3.at("mean_esl_b"));
  r.mean_rr_a = opt_from_json(c3.at("mean_rr_a"));
  r.mean_rr_b = opt_from_json(c3.at("mean_rr_b"));
  r.case3_esl_wsr = test_from_json(c3.at("esl_wsr"));
  r.case3_esl_t = test_from_json(c3.at("esl_t"));
  r.case3_rr_wsr = test_from_json(c3.at("rr_wsr"));
  r.case3_rr_t = test_from_json(c3.at("rr_t"));

  const auto& adj = j.at("adjusted");
  r.adjusted.naive_wrs = adj.at("naive_wrs").get<double>();
  r.adjusted.naive_wsr = adj.at("naive_wsr").get<double>();
  r.adjusted.naive_t = adj.at("naive_t").get<double>();
  r.adjusted.case2_binomial = adj.at("case2_binomial").get<double>();
  r.adjusted.case3_esl_wsr = adj.at("case3_esl_wsr").get<double>();
  r.adjusted.case3_esl_t = adj.at("case3_esl_t").get<double>();
  r.adjusted.case3_rr_wsr = adj.at("case3_rr_wsr").get<double>();
  r.adjusted.case3_rr_t = adj.at("case3_rr_t").get<double>();

  const auto& v = j.at("verdicts");
  r.verdict_strict_esl = verdict_from_json(v.at("strict_esl"));
  r.verdict_strict_rr = verdict_from_json(v.at("strict_rr"));
  r.verdict_hippocratic_esl = verdict_from_json(v.at("hippocratic_esl"));
  r.verdict_hippocratic_rr = verdict_from_json(v.at("hippocratic_rr"));
  return r;
}

std::string render_csv(std::span<const ComparisonReport> reports) {
  std::string out =
      "run_a,run_b,k,universe_size,alpha,m,mrr_a,mrr_b,delta_mrr,"
      "naive_wrs_p,naive_wsr_p,naive_t_p,"
      "case1,a_wins,b_wins,case3,case3_a_better,case3_b_better,case3_tied,"
      "mean_esl_a,mean_esl_b,esl_wsr_p,esl_t_p,"
      "mean_rr_a,mean_rr_b,rr_wsr_p,rr_t_p,binomial_p,"
      "adj_naive_wrs_p,adj_naive_wsr_p,adj_naive_t_p,adj_binomial_p,"
      "adj_esl_wsr_p,adj_esl_t_p,adj_rr_wsr_p,adj_rr_t_p,"
      "verdict_strict_esl,verdict_strict_rr,verdict_hippocratic_esl,"
      "verdict_hippocratic_rr\n";
  const auto opt_cell = [](const std::optional<double>& v) {
    return v ? shortest(*v) : std::string();
  };
  for (const auto& r : reports) {
    const auto& b = r.breakdown;
    std::vector<std::string> cells = {
        csv_field(r.run_a),
        csv_field(r.run_b),
        std::to_string(r.k),
        std::to_string(b.universe_size),
        shortest(r.alpha),
        std::to_string(r.family_size),
        shortest(r.mrr_a),
        shortest(r.mrr_b),
        shortest(r.delta_mrr),
        shortest(r.naive_wrs.p_value),
        shortest(r.naive_wsr.p_value),
        shortest(r.naive_t.p_value),
        std::to_string(b.case1),
        std::to_string(b.a_wins),
        std::to_string(b.b_wins),
        std::to_string(b.case3),
        std::to_string(b.case3_a_better),
        std::to_string(b.case3_b_better),
        std::to_string(b.case3_tied),
        opt_cell(r.mean_esl_a),
        opt_cell(r.mean_esl_b),
        shortest(r.case3_esl_wsr.p_value),
        shortest(r.case3_esl_t.p_value),
        opt_cell(r.mean_rr_a),
        opt_cell(r.mean_rr_b),
        shortest(r.case3_rr_wsr.p_value),
        shortest(r.case3_rr_t.p_value),
        shortest(r.case2_binomial.p_value),
        shortest(r.adjusted.naive_wrs),
        shortest(r.adjusted.naive_wsr),
        shortest(r.adjusted.naive_t),
        shortest(r.adjusted.case2_binomial),
        shortest(r.adjusted.case3_esl_wsr),
        shortest(r.adjusted.case3_esl_t),
        shortest(r.adjusted.case3_rr_wsr),
        shortest(r.adjusted.case3_rr_t),
        to_string(r.verdict_strict_esl.outcome),
        to_string(r.verdict_strict_rr.outcome),
        to_string(r.verdict_hippocratic_esl.outcome),
        to_string(r.verdict_hippocratic_rr.outcome),
    };
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  }
  return out;
}

std::string timeline_csv(std::vector<TimelineEntry> entries) {
  for (const auto& e : entries)
    if (!valid_iso_date(e.date))
      throw std::invalid_argument("malformed date: '" + e.date +
                                  "' (expected YYYY-MM-DD)");
  std::stable_sort(entries.begin(), entries.end(),
                   [](const TimelineEntry& a, const TimelineEntry& b) {
                     if (a.date != b.date) return a.date < b.date;
                     return a.name < b.name;
                   });
  std::string out = "name,date,mrr,is_sota\n";
  for (const auto& e : entries) {
    out += csv_field(e.name);
    out += ',';
    out += e.date;
    out += ',';
    out += fixed(e.mrr, 4);
    out += ',';
    out += e.is_sota ? "true" : "false";
    out += '\n';
  }
  return out;
}

std::string format_run_trec(const Run& run) {
  const std::string tag = run.name.empty() ? "na" : run.name;
  std::string out;
  for (const auto& [qid, docs] : run.rankings) {
    for (std::size_t i = 0; i < docs.size(); ++i) {
      out += qid;
      out += " Q0 ";
      out += docs[i];
      out += ' ';
      out += std::to_string(i + 1);
      out += ' ';
      out += fixed(static_cast<double>(docs.size() - i), 1);
      out += ' ';
      out += tag;
      out += '\n';
    }
  }
  return out;
}

std::string format_run_msmarco(const Run& run) {
  std::string out;
  for (const auto& [qid, docs] : run.rankings) {
    for (std::size_t i = 0; i < docs.size(); ++i) {
      out += qid;
      out += '\t';
      out += docs[i];
      out += '\t';
      out += std::to_string(i + 1);
      out += '\n';
    }
  }
  return out;
}

std::string format_qrels(const Qrels& qrels) {
  std::string out;
  for (const auto& [qid, docs] : qrels.judgments) {
    for (const auto& doc : docs) {
      out += qid;
      out += " 0 ";
      out += doc;
      out += " 1\n";
    }
  }
  return out;
}

}  // namespace sotacheck
