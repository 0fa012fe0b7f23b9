#include "sotacheck/compare.hpp"

#include <cmath>

#include <stdexcept>

#include "doctest.h"
#include "test_util.hpp"

using namespace sotacheck;

TEST_CASE("self-comparison: everything degenerate, verdicts inconclusive") {
  const std::map<std::string, std::optional<int>> ranks{
      {"q1", 1}, {"q2", 5}, {"q3", std::nullopt}, {"q4", 9}};
  const auto pair = testutil::score_pair(ranks, ranks);
  const auto r = compare_tables(pair.a, pair.b);
  CHECK(r.delta_mrr == 0.0);
  CHECK(r.naive_wrs.p_value == 1.0);
  CHECK(r.naive_wsr.p_value == 1.0);
  CHECK(r.naive_t.p_value == 1.0);
  CHECK(r.case2_binomial.p_value == 1.0);
  CHECK(r.case3_esl_wsr.p_value == 1.0);
  CHECK(r.naive_wsr.degenerate.has_value());
  CHECK(r.case2_binomial.degenerate.has_value());
  for (const auto* v :
       {&r.verdict_strict_esl, &r.verdict_strict_rr,
        &r.verdict_hippocratic_esl, &r.verdict_hippocratic_rr})
    CHECK(v->outcome == VerdictOutcome::Inconclusive);
}

TEST_CASE("six case-3 queries improved by one rank reach significance") {
  std::map<std::string, std::optional<int>> ranks_a, ranks_b;
  for (int q = 0; q < 6; ++q) {
    const std::string qid = "q" + std::to_string(q);
    ranks_a[qid] = 3 + q;
    ranks_b[qid] = 2 + q;
  }
  const auto pair = testutil::score_pair(ranks_a, ranks_b);
  const auto r = compare_tables(pair.a, pair.b);
  CHECK(r.case3_esl_wsr.method == Method::Exact);
  CHECK(r.case3_esl_wsr.p_value == doctest::Approx(2.0 / 64.0).epsilon(1e-15));
  CHECK(r.case3_esl_wsr.p_value < 0.05);
  CHECK(r.verdict_hippocratic_esl.outcome ==
        VerdictOutcome::BSignificantlyBetter);
}

TEST_CASE("equal MRR with different decompositions") {
  const auto pair = testutil::score_pair(
      {{"q1", 1}, {"q2", std::nullopt}}, {{"q1", std::nullopt}, {"q2", 1}});
  const auto r = compare_tables(pair.a, pair.b);
  CHECK(r.delta_mrr == 0.0);
  CHECK(r.breakdown.a_wins == 1);
  CHECK(r.breakdown.b_wins == 1);
  CHECK(r.breakdown.case3 == 0);
  CHECK(!r.mean_esl_a.has_value());
  CHECK(r.case3_esl_wsr.degenerate.has_value());
}

TEST_CASE("delta equals the difference of universe means") {
  const auto pair = testutil::score_pair(
      {{"q1", 2}, {"q2", 5}, {"q3", std::nullopt}},
      {{"q1", 1}, {"q2", 7}, {"q3", 4}});
  const auto r = compare_tables(pair.a, pair.b);
  const std::vector<std::string> universe{"q1", "q2", "q3"};
  CHECK(std::abs(r.delta_mrr -
                 (mean_rr(pair.b, universe) - mean_rr(pair.a, universe))) <
        1e-12);
}

TEST_CASE("comparing mismatched universes fails") {
  const auto pair = testutil::score_pair({{"q1", 1}}, {{"q1", 2}});
  const auto other = testutil::score_pair({{"qZ", 1}}, {{"qZ", 2}});
  CHECK_THROWS_AS(compare_tables(pair.a, other.b), std::invalid_argument);
}

TEST_CASE("swapping the runs mirrors the report") {
  const auto pair = testutil::score_pair(
      {{"q1", 2}, {"q2", std::nullopt}, {"q3", 9}, {"q4", 1}},
      {{"q1", 1}, {"q2", 3}, {"q3", std::nullopt}, {"q4", 1}});
  const auto fwd = compare_tables(pair.a, pair.b);
  const auto rev = compare_tables(pair.b, pair.a);
  CHECK(rev.delta_mrr == -fwd.delta_mrr);
  CHECK(rev.breakdown.a_wins == fwd.breakdown.b_wins);
  CHECK(rev.breakdown.b_wins == fwd.breakdown.a_wins);
  CHECK(rev.breakdown.case3_a_better == fwd.breakdown.case3_b_better);
  CHECK(rev.mean_esl_a == fwd.mean_esl_b);
  CHECK(rev.naive_wsr.p_value ==
        doctest::Approx(fwd.naive_wsr.p_value).epsilon(1e-12));
  CHECK(rev.case2_binomial.p_value ==
        doctest::Approx(fwd.case2_binomial.p_value).epsilon(1e-12));
}

TEST_CASE("bonferroni adjustment uses the declared family size") {
  std::map<std::string, std::optional<int>> ranks_a, ranks_b;
  for (int q = 0; q < 8; ++q) {
    const std::string qid = "q" + std::to_string(q);
    ranks_a[qid] = 4;
    ranks_b[qid] = q < 4 ? 3 : 5;
  }
  const auto pair = testutil::score_pair(ranks_a, ranks_b);
  CompareOptions opts;
  opts.family_size = 9;
  const auto r = compare_tables(pair.a, pair.b, opts);
  CHECK(r.family_size == 9);
  CHECK(r.adjusted.case3_esl_wsr ==
        doctest::Approx(std::min(1.0, 9.0 * r.case3_esl_wsr.p_value))
            .epsilon(1e-12));
}

TEST_CASE("gating on adjusted p-values flips a borderline verdict") {
  std::map<std::string, std::optional<int>> ranks_a, ranks_b;
  for (int q = 0; q < 6; ++q) {
    const std::string qid = "q" + std::to_string(q);
    ranks_a[qid] = 3 + q;
    ranks_b[qid] = 2 + q;
  }
  const auto pair = testutil::score_pair(ranks_a, ranks_b);
  CompareOptions raw_gate;
  raw_gate.family_size = 20;
  const auto r1 = compare_tables(pair.a, pair.b, raw_gate);
  CHECK(r1.verdict_hippocratic_esl.outcome ==
        VerdictOutcome::BSignificantlyBetter);  // raw p 0.03125 < alpha
  CompareOptions adj_gate = raw_gate;
  adj_gate.gate_adjusted = true;
  const auto r2 = compare_tables(pair.a, pair.b, adj_gate);
  CHECK(r2.adjusted.case3_esl_wsr ==
        doctest::Approx(0.625).epsilon(1e-12));  // 20 * 0.03125
  CHECK(r2.verdict_hippocratic_esl.outcome == VerdictOutcome::Inconclusive);
}

TEST_CASE("ties inside case 3 feed zero differences into the paired tests") {
  const auto pair = testutil::score_pair(
      {{"q1", 4}, {"q2", 4}, {"q3", 4}, {"q4", 7}},
      {{"q1", 4}, {"q2", 4}, {"q3", 3}, {"q4", 6}});
  const auto r = compare_tables(pair.a, pair.b);
  CHECK(r.breakdown.case3 == 4);
  CHECK(r.breakdown.case3_tied == 2);
  CHECK(r.case3_esl_wsr.n_effective == 2);  // zeros dropped inside the test
}
