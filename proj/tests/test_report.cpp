#include "sotacheck/report.hpp"

#include <stdexcept>

#include "doctest.h"

using namespace sotacheck;

namespace {

TestResult tr(TestName name, double stat, double p, std::size_t n,
              Method method) {
  return TestResult{name, stat, p, n, method, std::nullopt};
}

// A report shaped like the published-style rows, for render checks only.
ComparisonReport sample_report() {
  ComparisonReport r;
  r.run_a = "R1";
  r.run_b = "R2";
  r.k = 100;
  r.alpha = 0.05;
  r.family_size = 1;
  r.mrr_a = 0.4000;
  r.mrr_b = 0.4027;
  r.delta_mrr = 0.0027;
  r.naive_wrs = tr(TestName::Wrs, 33000000.0, 0.029393, 11586,
                   Method::NormalApprox);
  r.naive_wsr = tr(TestName::Wsr, 1500000.0, 0.519758, 5100,
                   Method::NormalApprox);
  r.naive_t = tr(TestName::PairedT, 0.355, 0.722586, 5793, Method::Analytic);
  r.breakdown = {5793, 116, 521, 927, 4229, 1800, 2000, 429};
  r.case2_binomial =
      tr(TestName::Binomial, 927.0, 1.2e-26, 1448, Method::Exact);
  r.mean_esl_a = 6.99;
  r.mean_esl_b = 9.14;
  r.mean_rr_a = 0.4812;
  r.mean_rr_b = 0.4468;
  r.case3_esl_wsr =
      tr(TestName::Wsr, 900000.0, 3.22e-12, 2900, Method::NormalApprox);
  r.case3_esl_t = tr(TestName::PairedT, 5.2, 1.60e-07, 4229, Method::Analytic);
  r.case3_rr_wsr =
      tr(TestName::Wsr, 910000.0, 6.75e-05, 2900, Method::NormalApprox);
  r.case3_rr_t = tr(TestName::PairedT, 4.2, 2.66e-05, 4229, Method::Analytic);
  r.adjusted = {0.029393, 0.519758, 0.722586, 1.2e-26,
                3.22e-12, 1.60e-07, 6.75e-05, 2.66e-05};
  r.verdict_strict_esl = {VerdictRule::Strict, VerdictOutcome::Inconclusive,
                          {{"case (2) win count favors B", true, 1.2e-26}}};
  r.verdict_strict_rr = {VerdictRule::Strict, VerdictOutcome::Inconclusive, {}};
  r.verdict_hippocratic_esl = {VerdictRule::Hippocratic,
                               VerdictOutcome::BSignificantlyBetter,
                               {{"case (2) significantly favors B", true,
                                 1.2e-26}}};
  r.verdict_hippocratic_rr = {VerdictRule::Hippocratic,
                              VerdictOutcome::Inconclusive, {}};
  return r;
}

}  // namespace

TEST_CASE("render_text table2 follows the row shape") {
  const auto text = render_text(sample_report(), ReportStyle::Table2);
  CHECK(text.find("2% | 9% | 16% | 73% | 6.99 | 9.14") != std::string::npos);
  CHECK(text.find("3.22E-12") != std::string::npos);
  CHECK(text.find("0.4812 | 0.4468") != std::string::npos);
}

TEST_CASE("render_text table1 is the naive one-liner") {
  const auto text = render_text(sample_report(), ReportStyle::Table1);
  CHECK(text.find("Δ=0.0027, WRS p=0.029393") != std::string::npos);
  CHECK(text.find("WSR p=0.519758") != std::string::npos);
  CHECK(text.find("t p=0.722586") != std::string::npos);
}

TEST_CASE("render_text full mentions every section") {
  const auto text = render_text(sample_report(), ReportStyle::Full);
  CHECK(text.find("naive tests") != std::string::npos);
  CHECK(text.find("outcome breakdown") != std::string::npos);
  CHECK(text.find("case (3), both retrieved") != std::string::npos);
  CHECK(text.find("binomial: B wins 927 of 1448") != std::string::npos);
  CHECK(text.find("verdicts") != std::string::npos);
  CHECK(text.find("B significantly better") != std::string::npos);
}

TEST_CASE("empty case (3) renders n/a") {
  auto r = sample_report();
  r.mean_esl_a.reset();
  r.mean_esl_b.reset();
  r.mean_rr_a.reset();
  r.mean_rr_b.reset();
  const auto text = render_text(r, ReportStyle::Table2);
  CHECK(text.find("n/a | n/a") != std::string::npos);
}

TEST_CASE("rendering is deterministic") {
  const auto r = sample_report();
  CHECK(render_text(r, ReportStyle::Full) == render_text(r, ReportStyle::Full));
  CHECK(render_json(r) == render_json(r));
  const std::vector<ComparisonReport> rs{r};
  CHECK(render_csv(rs) == render_csv(rs));
}

TEST_CASE("json round-trip is lossless") {
  const auto r = sample_report();
  const auto text = render_json(r);
  CHECK(text.find("\"schema_version\": \"1\"") != std::string::npos);
  const auto back = parse_report_json(text);
  CHECK(back == r);

  auto partial = r;
  partial.mean_esl_a.reset();
  partial.case3_esl_wsr.degenerate = "no query retrieved by both runs";
  CHECK(parse_report_json(render_json(partial)) == partial);
}

TEST_CASE("json p-values survive down to denormal-adjacent magnitudes") {
  auto r = sample_report();
  r.case2_binomial.p_value = 1e-300;
  const auto back = parse_report_json(render_json(r));
  CHECK(back.case2_binomial.p_value == 1e-300);
}

TEST_CASE("markdown table renders a separator row") {
  const auto md = render_markdown(sample_report(), ReportStyle::Table2);
  CHECK(md.find("| --- |") != std::string::npos);
  CHECK(md.find("| R1 | R2 |") != std::string::npos);
}

TEST_CASE("csv has one row per report") {
  const auto r = sample_report();
  const std::vector<ComparisonReport> rs{r, r};
  const auto csv = render_csv(rs);
  std::size_t lines = 0;
  for (const char c : csv)
    if (c == '\n') ++lines;
  CHECK(lines == 3);  // header + 2 rows
  CHECK(csv.rfind("run_a,run_b,k,universe_size", 0) == 0);
}

TEST_CASE("timeline: single entry, sorting, stability, validation") {
  CHECK(timeline_csv({{"sys", "2020-08-01", 0.4, true}}) ==
        "name,date,mrr,is_sota\nsys,2020-08-01,0.4000,true\n");

  const auto sorted = timeline_csv({{"late", "2021-02-01", 0.45, true},
                                    {"early", "2020-08-15", 0.40, true},
                                    {"mid", "2020-11-01", 0.42, false}});
  CHECK(sorted ==
        "name,date,mrr,is_sota\n"
        "early,2020-08-15,0.4000,true\n"
        "mid,2020-11-01,0.4200,false\n"
        "late,2021-02-01,0.4500,true\n");

  const auto tied = timeline_csv({{"zeta", "2020-08-15", 0.41, false},
                                  {"alpha", "2020-08-15", 0.40, true}});
  CHECK(tied ==
        "name,date,mrr,is_sota\n"
        "alpha,2020-08-15,0.4000,true\n"
        "zeta,2020-08-15,0.4100,false\n");

  CHECK_THROWS_AS(timeline_csv({{"sys", "2020/08/01", 0.4, true}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(timeline_csv({{"sys", "2020-13-01", 0.4, true}}),
                  std::invalid_argument);
}

TEST_CASE("csv quotes fields containing separators") {
  const auto csv = timeline_csv({{"a,b\"c", "2020-01-02", 0.1, false}});
  CHECK(csv.find("\"a,b\"\"c\"") != std::string::npos);
}
