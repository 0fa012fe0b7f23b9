#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sotacheck {

enum class TestName { Wrs, Wsr, PairedT, Binomial };

enum class Method { Exact, NormalApprox, Analytic };

enum class Alternative { TwoSided, Less, Greater };

// Two-sided convention for the binomial sign test. MinLike sums every
// outcome whose probability does not exceed the observed one; DoubleTail
// doubles the smaller tail.
enum class BinomialConvention { MinLike, DoubleTail };

// Auto picks Exact whenever the enumeration is small enough; the forced
// choices exist for cross-checking the two paths against each other.
enum class MethodChoice { Auto, ForceExact, ForceApprox };

struct TestResult {
  TestName test_name = TestName::Wrs;
  double statistic = 0.0;
  double p_value = 1.0;
  std::size_t n_effective = 0;
  Method method = Method::Exact;
  std::optional<std::string> degenerate;  // reason, when the test carries no evidence

  bool operator==(const TestResult&) const = default;
};

// Per-query value pairs over a shared query subset; equal lengths by
// construction.
class PairedSample {
 public:
  PairedSample() = default;
  PairedSample(std::vector<double> x, std::vector<double> y);

  void add(double x, double y);
  std::size_t size() const noexcept { return x_.size(); }
  bool empty() const noexcept { return x_.empty(); }
  const std::vector<double>& x() const noexcept { return x_; }
  const std::vector<double>& y() const noexcept { return y_; }

 private:
  std::vector<double> x_;
  std::vector<double> y_;
};

struct RankTestOptions {
  Alternative alternative = Alternative::TwoSided;
  MethodChoice method = MethodChoice::Auto;
};

// Wilcoxon rank-sum (Mann-Whitney) test treating x and y as independent
// samples. The statistic is the rank sum of x over the pooled sample with
// average ranks for ties. Exact enumeration is used when the pooled sample
// is tie-free and C(|x|+|y|, |x|) <= 1e6; otherwise a normal approximation
// with tie-corrected variance and continuity correction.
TestResult wilcoxon_rank_sum(std::span<const double> x,
                             std::span<const double> y,
                             const RankTestOptions& options = {});

// Wilcoxon signed-rank test on differences d_i = y_i - x_i. Zero
// differences are discarded (classic treatment) and reported via
// n_effective; the statistic is min(W+, W-). Exact sign-vector enumeration
// when the nonzero count is <= 20, else normal approximation with tie
// correction and continuity correction. All differences zero yields a
// degenerate result with p = 1.
TestResult wilcoxon_signed_rank(const PairedSample& pairs,
                                const RankTestOptions& options = {});

// Student's paired t-test on d_i = y_i - x_i; p-values come from the
// t-distribution CDF (regularized incomplete beta). Zero variance is
// flagged degenerate: p = 1 when the mean difference is zero, else 0.
TestResult paired_t_test(const PairedSample& pairs,
                         Alternative alternative = Alternative::TwoSided);

// Exact sign test: b_wins successes out of n_discordant trials against
// Binomial(n, 1/2). n_discordant == 0 yields a degenerate p = 1.
TestResult binomial_sign_test(
    std::size_t b_wins, std::size_t n_discordant,
    BinomialConvention convention = BinomialConvention::MinLike,
    Alternative alternative = Alternative::TwoSided);

// min(1, m * p) for every entry; m is the caller-declared family size and
// may exceed the list length.
std::vector<double> bonferroni(std::span<const double> p_values, std::size_t m);

// Standard normal CDF.
double normal_cdf(double z);

// Student's t CDF with df > 0 degrees of freedom.
double student_t_cdf(double t, double df);

}  // namespace sotacheck
