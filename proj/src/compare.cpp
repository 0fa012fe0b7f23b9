#include "sotacheck/compare.hpp"

#include <array>
#include <vector>

#include "sotacheck/decompose.hpp"

namespace sotacheck {

ComparisonReport compare_tables(const ScoreTable& table_a,
                                const ScoreTable& table_b,
                                const CompareOptions& options) {
  const Decomposition d = decompose(table_a, table_b);  // validates universes

  std::vector<std::string> universe;
  universe.reserve(table_a.scores.size());
  for (const auto& [qid, score] : table_a.scores) universe.push_back(qid);

  ComparisonReport r;
  r.run_a = table_a.run_name;
  r.run_b = table_b.run_name;
  r.k = table_a.k;
  r.alpha = options.alpha;
  r.family_size = options.family_size;
  r.mrr_a = mean_rr(table_a, universe);
  r.mrr_b = mean_rr(table_b, universe);
  r.delta_mrr = r.mrr_b - r.mrr_a;

  const RankTestOptions rank_options{options.alternative, MethodChoice::Auto};

  // Naive mode: the official per-query metric over every query, with the
  // rank-sum test deliberately ignoring the pairing.
  std::vector<double> rr_a, rr_b;
  rr_a.reserve(universe.size());
  rr_b.reserve(universe.size());
  PairedSample rr_pairs;
  for (const auto& qid : universe) {
    const double a = table_a.scores.at(qid).rr;
    const double b = table_b.scores.at(qid).rr;
    rr_a.push_back(a);
    rr_b.push_back(b);
    rr_pairs.add(a, b);
  }
  r.naive_wrs = wilcoxon_rank_sum(rr_a, rr_b, rank_options);
  r.naive_wsr = wilcoxon_signed_rank(rr_pairs, rank_options);
  r.naive_t = paired_t_test(rr_pairs, options.alternative);

  r.breakdown = {d.universe_size(), d.case1.size(),    d.a_wins.size(),
                 d.b_wins.size(),   d.case3.size(),    d.a_better.size(),
                 d.b_better.size(), d.tied.size()};

  r.case2_binomial =
      binomial_sign_test(d.b_wins.size(), d.a_wins.size() + d.b_wins.size(),
                         options.binomial_convention, options.alternative);

  // Case (3): paired ESL and RR over queries both runs answered. Tied
  // queries stay in the samples and contribute zero differences.
  PairedSample esl_pairs, case3_rr_pairs;
  for (const auto& qid : d.case3) {
    esl_pairs.add(static_cast<double>(*table_a.scores.at(qid).esl),
                  static_cast<double>(*table_b.scores.at(qid).esl));
    case3_rr_pairs.add(table_a.scores.at(qid).rr, table_b.scores.at(qid).rr);
  }
  if (!d.case3.empty()) {
    r.mean_esl_a = mean_esl(table_a, d.case3);
    r.mean_esl_b = mean_esl(table_b, d.case3);
    r.mean_rr_a = mean_rr(table_a, d.case3);
    r.mean_rr_b = mean_rr(table_b, d.case3);
    r.case3_esl_wsr = wilcoxon_signed_rank(esl_pairs, rank_options);
    r.case3_esl_t = paired_t_test(esl_pairs, options.alternative);
    r.case3_rr_wsr = wilcoxon_signed_rank(case3_rr_pairs, rank_options);
    r.case3_rr_t = paired_t_test(case3_rr_pairs, options.alternative);
  } else {
    const auto degenerate = [](TestName name, Method method) {
      TestResult t;
      t.test_name = name;
      t.method = method;
      t.degenerate = "no query retrieved by both runs";
      return t;
    };
    r.case3_esl_wsr = degenerate(TestName::Wsr, Method::Exact);
    r.case3_esl_t = degenerate(TestName::PairedT, Method::Analytic);
    r.case3_rr_wsr = degenerate(TestName::Wsr, Method::Exact);
    r.case3_rr_t = degenerate(TestName::PairedT, Method::Analytic);
  }

  const std::array<double, 8> raw = {
      r.naive_wrs.p_value,     r.naive_wsr.p_value,   r.naive_t.p_value,
      r.case2_binomial.p_value, r.case3_esl_wsr.p_value, r.case3_esl_t.p_value,
      r.case3_rr_wsr.p_value,  r.case3_rr_t.p_value};
  const auto adj = bonferroni(raw, options.family_size);
  r.adjusted = {adj[0], adj[1], adj[2], adj[3], adj[4], adj[5], adj[6], adj[7]};

  ComparisonStats stats;
  stats.decomposition = d;
  stats.case2_binomial = r.case2_binomial;
  stats.case3_esl_wsr = r.case3_esl_wsr;
  stats.case3_esl_t = r.case3_esl_t;
  stats.case3_rr_wsr = r.case3_rr_wsr;
  stats.case3_rr_t = r.case3_rr_t;
  stats.mean_esl_a = r.mean_esl_a;
  stats.mean_esl_b = r.mean_esl_b;
  stats.mean_rr_a = r.mean_rr_a;
  stats.mean_rr_b = r.mean_rr_b;
  stats.alpha = options.alpha;
  stats.gate = options.gate;
  if (options.gate_adjusted) {
    stats.case2_binomial.p_value = r.adjusted.case2_binomial;
    stats.case3_esl_wsr.p_value = r.adjusted.case3_esl_wsr;
    stats.case3_esl_t.p_value = r.adjusted.case3_esl_t;
    stats.case3_rr_wsr.p_value = r.adjusted.case3_rr_wsr;
    stats.case3_rr_t.p_value = r.adjusted.case3_rr_t;
  }

  r.verdict_strict_esl = strict_verdict(stats, VerdictMetric::Esl);
  r.verdict_strict_rr = strict_verdict(stats, VerdictMetric::Rr);
  r.verdict_hippocratic_esl = hippocratic_verdict(stats, VerdictMetric::Esl);
  r.verdict_hippocratic_rr = hippocratic_verdict(stats, VerdictMetric::Rr);
  return r;
}

}  // namespace sotacheck
