#pragma once

#include <cstddef>

#include "sotacheck/metrics.hpp"
#include "sotacheck/report.hpp"
#include "sotacheck/stats.hpp"
#include "sotacheck/verdict.hpp"

namespace sotacheck {

struct CompareOptions {
  double alpha = 0.05;
  std::size_t family_size = 1;  // Bonferroni m, declared by the caller
  Alternative alternative = Alternative::TwoSided;
  BinomialConvention binomial_convention = BinomialConvention::MinLike;
  GateTest gate = GateTest::Wsr;
  bool gate_adjusted = false;  // gate verdicts on adjusted instead of raw p
};

// Runs the whole battery for run B against run A: naive tests on per-query
// RR over the full universe, the outcome decomposition, case-(2) binomial
// and case-(3) paired tests, Bonferroni adjustment, and all four verdicts.
// Both tables must share the same universe and cutoff.
ComparisonReport compare_tables(const ScoreTable& table_a,
                                const ScoreTable& table_b,
                                const CompareOptions& options = {});

}  // namespace sotacheck
