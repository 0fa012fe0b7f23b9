#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sotacheck/decompose.hpp"
#include "sotacheck/stats.hpp"

namespace sotacheck {

enum class VerdictRule { Strict, Hippocratic };

enum class VerdictOutcome {
  BSignificantlyBetter,
  ASignificantlyBetter,
  Inconclusive,
};

// Which case-(3) quantity drives the verdict: search length (lower is
// better) or reciprocal rank (higher is better).
enum class VerdictMetric { Esl, Rr };

// Which paired test gates case-(3) significance. The signed-rank test is
// the default; the t-test result is reported alongside either way.
enum class GateTest { Wsr, TTest };

// Everything a verdict rule looks at. Case-(3) means are absent when no
// query was retrieved by both runs.
struct ComparisonStats {
  Decomposition decomposition;
  TestResult case2_binomial;
  TestResult case3_esl_wsr;
  TestResult case3_esl_t;
  TestResult case3_rr_wsr;
  TestResult case3_rr_t;
  std::optional<double> mean_esl_a;
  std::optional<double> mean_esl_b;
  std::optional<double> mean_rr_a;
  std::optional<double> mean_rr_b;
  double alpha = 0.05;
  GateTest gate = GateTest::Wsr;

  bool operator==(const ComparisonStats&) const = default;
};

struct CriterionCheck {
  std::string criterion;
  bool satisfied = false;
  double p_value = 1.0;

  bool operator==(const CriterionCheck&) const = default;
};

struct Verdict {
  VerdictRule rule = VerdictRule::Strict;
  VerdictOutcome outcome = VerdictOutcome::Inconclusive;
  std::vector<CriterionCheck> rationale;

  bool operator==(const Verdict&) const = default;
};

// A side is significantly better iff it wins case (2) (larger win count
// and a significant binomial test) AND the case-(3) metric favors it
// significantly. Anything else is Inconclusive.
Verdict strict_verdict(const ComparisonStats& stats, VerdictMetric metric);

// Do-no-harm rule: a side is significantly better iff one facet (case (2)
// retrieval wins, or the case-(3) metric) is significantly in its favor
// and the other facet is not significantly in the opponent's favor.
Verdict hippocratic_verdict(const ComparisonStats& stats, VerdictMetric metric);

}  // namespace sotacheck
