#include "sotacheck/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace sotacheck {

namespace {

double clamp01(double p) { return std::clamp(p, 0.0, 1.0); }

// Ranks 1..n over v with average ranks for ties; tie_sizes records the
// size of every group of equal values (singletons included).
std::vector<double> average_ranks(std::span<const double> v,
                                  std::vector<std::size_t>& tie_sizes) {
  const std::size_t n = v.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    while (j < n && v[order[j]] == v[order[i]]) ++j;
    const double avg = 0.5 * static_cast<double>(i + 1 + j);
    for (std::size_t t = i; t < j; ++t) ranks[order[t]] = avg;
    tie_sizes.push_back(j - i);
    i = j;
  }
  return ranks;
}

double tie_correction_sum(const std::vector<std::size_t>& tie_sizes) {
  double sum = 0.0;
  for (const std::size_t t : tie_sizes) {
    const double td = static_cast<double>(t);
    sum += td * td * td - td;
  }
  return sum;
}

// C(n, k) in floating point, good enough for threshold checks.
double choose_approx(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  k = std::min(k, n - k);
  double c = 1.0;
  for (std::size_t i = 1; i <= k; ++i) {
    c *= static_cast<double>(n - k + i) / static_cast<double>(i);
    if (c > 1e18) return c;
  }
  return c;
}

std::uint64_t choose_u64(std::size_t n, std::size_t k) {
  k = std::min(k, n - k);
  std::uint64_t c = 1;
  for (std::size_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

struct TailCounts {
  std::uint64_t le = 0;
  std::uint64_t ge = 0;
};

// Enumerates all size-n subsets of ranks {1..n_total} and counts how many
// have a rank sum <= / >= target.
void rank_sum_dfs(int next, int left, long long sum, long long target,
                  int n_total, TailCounts& tails) {
  if (left == 0) {
    if (sum <= target) ++tails.le;
    if (sum >= target) ++tails.ge;
    return;
  }
  for (int r = next; r <= n_total - left + 1; ++r)
    rank_sum_dfs(r + 1, left - 1, sum + r, target, n_total, tails);
}

double tails_to_p(const TailCounts& tails, std::uint64_t total,
                  Alternative alternative) {
  switch (alternative) {
    case Alternative::TwoSided:
      return clamp01(2.0 * static_cast<double>(std::min(tails.le, tails.ge)) /
                     static_cast<double>(total));
    case Alternative::Greater:
      return clamp01(static_cast<double>(tails.ge) / static_cast<double>(total));
    case Alternative::Less:
      return clamp01(static_cast<double>(tails.le) / static_cast<double>(total));
  }
  return 1.0;
}

// Normal approximation with a continuity correction of 0.5 on the
// statistic scale.
double normal_p(double stat, double mean, double sd, Alternative alternative) {
  switch (alternative) {
    case Alternative::TwoSided: {
      const double num = std::max(std::abs(stat - mean) - 0.5, 0.0);
      return clamp01(2.0 * (1.0 - normal_cdf(num / sd)));
    }
    case Alternative::Greater:
      return clamp01(1.0 - normal_cdf((stat - mean - 0.5) / sd));
    case Alternative::Less:
      return clamp01(normal_cdf((stat - mean + 0.5) / sd));
  }
  return 1.0;
}

// Continued fraction for the regularized incomplete beta (Lentz's method).
double beta_cf(double a, double b, double x) {
  constexpr int kMaxIter = 10000;
  constexpr double kEps = 1e-15;
  constexpr double kTiny = 1e-300;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) break;
  }
  return h;
}

// Regularized incomplete beta I_x(a, b).
double reg_inc_beta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double ln_pre = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                        a * std::log(x) + b * std::log1p(-x);
  const double pre = std::exp(ln_pre);
  if (x < (a + 1.0) / (a + b + 2.0))
    return clamp01(pre * beta_cf(a, b, x) / a);
  return clamp01(1.0 - pre * beta_cf(b, a, 1.0 - x) / b);
}

}  // namespace

PairedSample::PairedSample(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  if (x_.size() != y_.size())
    throw std::invalid_argument("paired sample sides have different lengths");
}

void PairedSample::add(double x, double y) {
  x_.push_back(x);
  y_.push_back(y);
}

double normal_cdf(double z) {
  return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

double student_t_cdf(double t, double df) {
  if (df <= 0.0) throw std::invalid_argument("degrees of freedom must be > 0");
  const double p_both = reg_inc_beta(0.5 * df, 0.5, df / (df + t * t));
  return t >= 0.0 ? 1.0 - 0.5 * p_both : 0.5 * p_both;
}

TestResult wilcoxon_rank_sum(std::span<const double> x,
                             std::span<const double> y,
                             const RankTestOptions& options) {
  if (x.empty() || y.empty())
    throw std::invalid_argument("rank-sum test requires two non-empty samples");
  const std::size_t n = x.size();
  const std::size_t m = y.size();
  const std::size_t n_total = n + m;

  std::vector<double> pooled;
  pooled.reserve(n_total);
  pooled.insert(pooled.end(), x.begin(), x.end());
  pooled.insert(pooled.end(), y.begin(), y.end());
  std::vector<std::size_t> tie_sizes;
  const auto ranks = average_ranks(pooled, tie_sizes);
  double w = 0.0;
  for (std::size_t i = 0; i < n; ++i) w += ranks[i];

  TestResult result{TestName::Wrs, w, 1.0, n_total, Method::Exact, std::nullopt};

  const bool has_ties =
      std::any_of(tie_sizes.begin(), tie_sizes.end(),
                  [](std::size_t t) { return t > 1; });
  bool use_exact = false;
  switch (options.method) {
    case MethodChoice::Auto:
      use_exact = !has_ties && choose_approx(n_total, n) <= 1e6;
      break;
    case MethodChoice::ForceExact:
      if (has_ties)
        throw std::invalid_argument(
            "exact rank-sum enumeration is only defined for tie-free samples");
      if (choose_approx(n_total, n) > 2e7)
        throw std::invalid_argument("exact rank-sum enumeration infeasible");
      use_exact = true;
      break;
    case MethodChoice::ForceApprox:
      break;
  }

  if (use_exact) {
    TailCounts tails;
    rank_sum_dfs(1, static_cast<int>(n), 0, std::llround(w),
                 static_cast<int>(n_total), tails);
    result.p_value = tails_to_p(tails, choose_u64(n_total, n),
                                options.alternative);
    result.method = Method::Exact;
    return result;
  }

  result.method = Method::NormalApprox;
  const double nd = static_cast<double>(n);
  const double md = static_cast<double>(m);
  const double total = static_cast<double>(n_total);
  const double mean = nd * (total + 1.0) / 2.0;
  const double variance =
      (nd * md / 12.0) *
      ((total + 1.0) - tie_correction_sum(tie_sizes) / (total * (total - 1.0)));
  if (variance <= 0.0) {
    result.degenerate = "all pooled values are identical";
    result.p_value = 1.0;
    return result;
  }
  result.p_value = normal_p(w, mean, std::sqrt(variance), options.alternative);
  return result;
}

TestResult wilcoxon_signed_rank(const PairedSample& pairs,
                                const RankTestOptions& options) {
  if (pairs.empty())
    throw std::invalid_argument("signed-rank test requires at least one pair");

  std::vector<double> abs_d;
  std::vector<bool> positive;
  abs_d.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const double d = pairs.y()[i] - pairs.x()[i];
    if (d == 0.0) continue;  // classic zero handling: discard
    abs_d.push_back(std::abs(d));
    positive.push_back(d > 0.0);
  }
  const std::size_t n = abs_d.size();

  TestResult result{TestName::Wsr, 0.0, 1.0, n, Method::Exact, std::nullopt};
  if (n == 0) {
    result.degenerate = "all differences are zero";
    return result;
  }

  std::vector<std::size_t> tie_sizes;
  const auto ranks = average_ranks(abs_d, tie_sizes);
  double w_plus = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    if (positive[i]) w_plus += ranks[i];
  const double w_total = static_cast<double>(n) * (n + 1) / 2.0;
  result.statistic = std::min(w_plus, w_total - w_plus);

  bool use_exact = false;
  switch (options.method) {
    case MethodChoice::Auto:
      use_exact = n <= 20;
      break;
    case MethodChoice::ForceExact:
      if (n > 62)
        throw std::invalid_argument(
            "exact sign-vector enumeration infeasible beyond 62 pairs");
      use_exact = true;
      break;
    case MethodChoice::ForceApprox:
      break;
  }

  if (use_exact) {
    // Ranks are multiples of 1/2; scale by 2 and count achievable W+ sums
    // over all 2^n sign vectors by subset-sum DP.
    std::vector<long long> scaled(n);
    long long scaled_total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      scaled[i] = std::llround(2.0 * ranks[i]);
      scaled_total += scaled[i];
    }
    std::vector<std::uint64_t> dp(static_cast<std::size_t>(scaled_total) + 1, 0);
    dp[0] = 1;
    for (const long long sr : scaled)
      for (long long s = scaled_total; s >= sr; --s)
        dp[static_cast<std::size_t>(s)] += dp[static_cast<std::size_t>(s - sr)];
    const long long observed = std::llround(2.0 * w_plus);
    TailCounts tails;
    for (long long s = 0; s <= scaled_total; ++s) {
      if (s <= observed) tails.le += dp[static_cast<std::size_t>(s)];
      if (s >= observed) tails.ge += dp[static_cast<std::size_t>(s)];
    }
    result.p_value =
        tails_to_p(tails, std::uint64_t{1} << n, options.alternative);
    result.method = Method::Exact;
    return result;
  }

  result.method = Method::NormalApprox;
  const double nd = static_cast<double>(n);
  const double mean = nd * (nd + 1.0) / 4.0;
  const double variance = nd * (nd + 1.0) * (2.0 * nd + 1.0) / 24.0 -
                          tie_correction_sum(tie_sizes) / 48.0;
  if (variance <= 0.0) {
    result.degenerate = "zero variance of signed ranks";
    result.p_value = 1.0;
    return result;
  }
  result.p_value =
      normal_p(w_plus, mean, std::sqrt(variance), options.alternative);
  return result;
}

TestResult paired_t_test(const PairedSample& pairs, Alternative alternative) {
  const std::size_t n = pairs.size();
  if (n < 2)
    throw std::invalid_argument("paired t-test requires at least two pairs");

  double mean = 0.0;
  double d_min = pairs.y()[0] - pairs.x()[0];
  double d_max = d_min;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = pairs.y()[i] - pairs.x()[i];
    mean += d;
    d_min = std::min(d_min, d);
    d_max = std::max(d_max, d);
  }
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = pairs.y()[i] - pairs.x()[i] - mean;
    ss += d * d;
  }
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));

  TestResult result{TestName::PairedT, 0.0, 1.0, n, Method::Analytic,
                    std::nullopt};
  // Constant differences are the robust face of zero variance; the naive
  // sd == 0 check can miss them once the accumulated mean rounds.
  if (d_min == d_max) {
    result.degenerate = "zero variance of differences";
    const double d = d_min;
    if (d == 0.0) {
      result.p_value = 1.0;
    } else {
      switch (alternative) {
        case Alternative::TwoSided:
          result.p_value = 0.0;
          break;
        case Alternative::Greater:
          result.p_value = d > 0.0 ? 0.0 : 1.0;
          break;
        case Alternative::Less:
          result.p_value = d < 0.0 ? 0.0 : 1.0;
          break;
      }
    }
    return result;
  }
  if (sd == 0.0) {
    result.degenerate = "zero variance of differences";
    if (mean == 0.0) {
      result.p_value = 1.0;
    } else {
      switch (alternative) {
        case Alternative::TwoSided:
          result.p_value = 0.0;
          break;
        case Alternative::Greater:
          result.p_value = mean > 0.0 ? 0.0 : 1.0;
          break;
        case Alternative::Less:
          result.p_value = mean < 0.0 ? 0.0 : 1.0;
          break;
      }
    }
    return result;
  }

  const double df = static_cast<double>(n - 1);
  const double t = mean / (sd / std::sqrt(static_cast<double>(n)));
  result.statistic = t;
  switch (alternative) {
    case Alternative::TwoSided:
      result.p_value = clamp01(reg_inc_beta(0.5 * df, 0.5, df / (df + t * t)));
      break;
    case Alternative::Greater:
      result.p_value = clamp01(1.0 - student_t_cdf(t, df));
      break;
    case Alternative::Less:
      result.p_value = clamp01(student_t_cdf(t, df));
      break;
  }
  return result;
}

TestResult binomial_sign_test(std::size_t b_wins, std::size_t n_discordant,
                              BinomialConvention convention,
                              Alternative alternative) {
  if (b_wins > n_discordant)
    throw std::invalid_argument("win count exceeds the discordant count");

  TestResult result{TestName::Binomial, static_cast<double>(b_wins), 1.0,
                    n_discordant, Method::Exact, std::nullopt};
  if (n_discordant == 0) {
    result.degenerate = "no discordant queries";
    return result;
  }

  const double nd = static_cast<double>(n_discordant);
  const double lg_n1 = std::lgamma(nd + 1.0);
  const auto log_pmf = [&](std::size_t k) {
    const double kd = static_cast<double>(k);
    return lg_n1 - std::lgamma(kd + 1.0) - std::lgamma(nd - kd + 1.0) -
           nd * std::numbers::ln2;
  };
  const auto sum_le = [&](std::size_t b) {
    long double acc = 0.0L;
    for (std::size_t k = 0; k <= b; ++k) acc += std::exp(log_pmf(k));
    return static_cast<double>(acc);
  };
  const auto sum_ge = [&](std::size_t b) {
    long double acc = 0.0L;
    for (std::size_t k = b; k <= n_discordant; ++k) acc += std::exp(log_pmf(k));
    return static_cast<double>(acc);
  };

  switch (alternative) {
    case Alternative::Greater:
      result.p_value = clamp01(sum_ge(b_wins));
      return result;
    case Alternative::Less:
      result.p_value = clamp01(sum_le(b_wins));
      return result;
    case Alternative::TwoSided:
      break;
  }

  if (convention == BinomialConvention::DoubleTail) {
    result.p_value =
        clamp01(2.0 * std::min(sum_le(b_wins), sum_ge(b_wins)));
    return result;
  }
  // MinLike: sum every outcome no more likely than the observed one. The
  // relative slack absorbs rounding in the log-space probabilities.
  const double cut = log_pmf(b_wins) + std::log1p(1e-7);
  long double acc = 0.0L;
  for (std::size_t k = 0; k <= n_discordant; ++k)
    if (log_pmf(k) <= cut) acc += std::exp(log_pmf(k));
  result.p_value = clamp01(static_cast<double>(acc));
  return result;
}

std::vector<double> bonferroni(std::span<const double> p_values,
                               std::size_t m) {
  if (m < 1) throw std::invalid_argument("family size must be >= 1");
  std::vector<double> out;
  out.reserve(p_values.size());
  for (const double p : p_values) {
    if (p < 0.0 || p > 1.0)
      throw std::domain_error("p-value outside [0, 1]");
    out.push_back(std::min(1.0, static_cast<double>(m) * p));
  }
  return out;
}

}  // namespace sotacheck
