#include "sotacheck/verdict.hpp"

#include <stdexcept>

namespace sotacheck {

namespace {

struct Facets {
  bool counts_favor_a = false;
  bool counts_favor_b = false;
  bool case2_significant = false;
  bool direction_favors_a = false;
  bool direction_favors_b = false;
  bool case3_significant = false;
  double case2_p = 1.0;
  double case3_p = 1.0;
  const char* metric_label = "";
};

Facets evaluate_facets(const ComparisonStats& s, VerdictMetric metric) {
  if (s.alpha <= 0.0 || s.alpha >= 1.0)
    throw std::invalid_argument("alpha must lie in (0, 1)");
  Facets f;
  const std::size_t a = s.decomposition.a_wins.size();
  const std::size_t b = s.decomposition.b_wins.size();
  f.counts_favor_a = a > b;
  f.counts_favor_b = b > a;
  f.case2_p = s.case2_binomial.p_value;
  f.case2_significant = f.case2_p < s.alpha;

  const TestResult& gate =
      metric == VerdictMetric::Esl
          ? (s.gate == GateTest::Wsr ? s.case3_esl_wsr : s.case3_esl_t)
          : (s.gate == GateTest::Wsr ? s.case3_rr_wsr : s.case3_rr_t);
  f.case3_p = gate.p_value;
  f.case3_significant = f.case3_p < s.alpha;
  if (metric == VerdictMetric::Esl) {
    f.metric_label = "ESL";
    if (s.mean_esl_a && s.mean_esl_b) {
      f.direction_favors_a = *s.mean_esl_a < *s.mean_esl_b;
      f.direction_favors_b = *s.mean_esl_b < *s.mean_esl_a;
    }
  } else {
    f.metric_label = "RR";
    if (s.mean_rr_a && s.mean_rr_b) {
      f.direction_favors_a = *s.mean_rr_a > *s.mean_rr_b;
      f.direction_favors_b = *s.mean_rr_b > *s.mean_rr_a;
    }
  }
  return f;
}

std::string label(const Facets& f, const char* what) {
  return std::string(what) + " (" + f.metric_label + ")";
}

}  // namespace

Verdict strict_verdict(const ComparisonStats& stats, VerdictMetric metric) {
  const Facets f = evaluate_facets(stats, metric);
  Verdict v;
  v.rule = VerdictRule::Strict;
  v.rationale = {
      {"case (2) win count favors B", f.counts_favor_b, f.case2_p},
      {"case (2) win count favors A", f.counts_favor_a, f.case2_p},
      {"case (2) binomial significant", f.case2_significant, f.case2_p},
      {label(f, "case (3) direction favors B"), f.direction_favors_b, f.case3_p},
      {label(f, "case (3) direction favors A"), f.direction_favors_a, f.case3_p},
      {label(f, "case (3) significant"), f.case3_significant, f.case3_p},
  };
  const bool b_better = f.counts_favor_b && f.case2_significant &&
                        f.direction_favors_b && f.case3_significant;
  const bool a_better = f.counts_favor_a && f.case2_significant &&
                        f.direction_favors_a && f.case3_significant;
  v.outcome = b_better
                  ? VerdictOutcome::BSignificantlyBetter
                  : (a_better ? VerdictOutcome::ASignificantlyBetter
                              : VerdictOutcome::Inconclusive);
  return v;
}

Verdict hippocratic_verdict(const ComparisonStats& stats, VerdictMetric metric) {
  const Facets f = evaluate_facets(stats, metric);
  const bool sig2_b = f.counts_favor_b && f.case2_significant;
  const bool sig2_a = f.counts_favor_a && f.case2_significant;
  const bool sig3_b = f.direction_favors_b && f.case3_significant;
  const bool sig3_a = f.direction_favors_a && f.case3_significant;

  Verdict v;
  v.rule = VerdictRule::Hippocratic;
  v.rationale = {
      {"case (2) significantly favors B", sig2_b, f.case2_p},
      {"case (2) significantly favors A", sig2_a, f.case2_p},
      {label(f, "case (3) significantly favors B"), sig3_b, f.case3_p},
      {label(f, "case (3) significantly favors A"), sig3_a, f.case3_p},
  };
  const bool b_better = (sig2_b && !sig3_a) || (sig3_b && !sig2_a);
  const bool a_better = (sig2_a && !sig3_b) || (sig3_a && !sig2_b);
  v.outcome = b_better
                  ? VerdictOutcome::BSignificantlyBetter
                  : (a_better ? VerdictOutcome::ASignificantlyBetter
                              : VerdictOutcome::Inconclusive);
  return v;
}

}  // namespace sotacheck
