#pragma once

// Independent reference implementations used to pin expected values.
// These deliberately use different algorithms from the library: explicit
// enumeration instead of dynamic programming, O(n^2) midranks instead of
// sort-based ranking, quadrature instead of the incomplete beta.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

// Midrank of v[i] within v: 1 + #{smaller} + (#{equal} - 1) / 2.
inline std::vector<double> midranks(const std::vector<double>& v) {
  std::vector<double> ranks(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::size_t smaller = 0, equal = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] < v[i]) ++smaller;
      if (v[j] == v[i]) ++equal;
    }
    ranks[i] = 1.0 + static_cast<double>(smaller) +
               0.5 * static_cast<double>(equal - 1);
  }
  return ranks;
}

// Exact two-sided signed-rank p-value by enumerating all 2^n sign vectors
// over the observed |d| midranks (zero differences discarded first).
inline double wsr_exact_two_sided(std::span<const double> x,
                                  std::span<const double> y) {
  std::vector<double> abs_d;
  std::vector<bool> positive;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = y[i] - x[i];
    if (d == 0.0) continue;
    abs_d.push_back(std::abs(d));
    positive.push_back(d > 0.0);
  }
  const std::size_t n = abs_d.size();
  if (n == 0) return 1.0;
  if (n > 24) throw std::invalid_argument("oracle enumeration too large");
  const auto ranks = midranks(abs_d);
  double observed = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    if (positive[i]) observed += ranks[i];

  std::uint64_t le = 0, ge = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    double w_plus = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint64_t{1} << i)) w_plus += ranks[i];
    if (w_plus <= observed) ++le;
    if (w_plus >= observed) ++ge;
  }
  return std::min(1.0, 2.0 * static_cast<double>(std::min(le, ge)) /
                           static_cast<double>(total));
}

// Exact two-sided rank-sum p-value by enumerating every assignment of the
// pooled ranks to the first sample. Requires a tie-free pooled sample and
// |x| + |y| <= 24.
inline double wrs_exact_two_sided(std::span<const double> x,
                                  std::span<const double> y) {
  std::vector<double> pooled(x.begin(), x.end());
  pooled.insert(pooled.end(), y.begin(), y.end());
  const std::size_t n_total = pooled.size();
  if (n_total > 24) throw std::invalid_argument("oracle enumeration too large");
  std::vector<int> rank(n_total);
  for (std::size_t i = 0; i < n_total; ++i) {
    int r = 1;
    for (std::size_t j = 0; j < n_total; ++j) {
      if (pooled[j] < pooled[i]) ++r;
      if (j != i && pooled[j] == pooled[i])
        throw std::invalid_argument("oracle requires tie-free samples");
    }
    rank[i] = r;
  }
  long long observed = 0;
  for (std::size_t i = 0; i < x.size(); ++i) observed += rank[i];

  std::uint64_t le = 0, ge = 0, total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n_total); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != x.size())
      continue;
    long long sum = 0;
    for (std::size_t i = 0; i < n_total; ++i)
      if (mask & (std::uint64_t{1} << i)) sum += i + 1;  // ranks are 1..N
    ++total;
    if (sum <= observed) ++le;
    if (sum >= observed) ++ge;
  }
  return std::min(1.0, 2.0 * static_cast<double>(std::min(le, ge)) /
                           static_cast<double>(total));
}

// Binomial(n, 1/2) pmf table via a multiplicative recurrence in long double.
inline std::vector<long double> binom_half_pmf(std::size_t n) {
  std::vector<long double> pmf(n + 1);
  // pmf[0] = 2^-n
  long double p = 1.0L;
  for (std::size_t i = 0; i < n; ++i) p *= 0.5L;
  pmf[0] = p;
  for (std::size_t k = 0; k + 1 <= n; ++k)
    pmf[k + 1] = pmf[k] * static_cast<long double>(n - k) /
                 static_cast<long double>(k + 1);
  return pmf;
}

// Two-sided binomial sign test by direct summation of outcomes no more
// likely than the observed one.
inline double binomial_two_sided(std::size_t b, std::size_t n) {
  if (n == 0) return 1.0;
  const auto pmf = binom_half_pmf(n);
  const long double cut = pmf[b] * (1.0L + 1e-7L);
  long double acc = 0.0L;
  for (std::size_t k = 0; k <= n; ++k)
    if (pmf[k] <= cut) acc += pmf[k];
  return std::min(1.0, static_cast<double>(acc));
}

// Student's t CDF via composite Simpson quadrature of the density over
// [0, |t|]; accurate to well below 1e-10 for |t| <= 10.
inline double t_cdf_quadrature(double t, double df) {
  const double log_c = std::lgamma(0.5 * (df + 1.0)) - std::lgamma(0.5 * df) -
                       0.5 * std::log(df * 3.14159265358979323846);
  const auto density = [&](double u) {
    return std::exp(log_c - 0.5 * (df + 1.0) * std::log1p(u * u / df));
  };
  const double upper = std::abs(t);
  const std::size_t intervals = 20000;  // even
  const double h = upper / static_cast<double>(intervals);
  double acc = density(0.0) + density(upper);
  for (std::size_t i = 1; i < intervals; ++i)
    acc += density(h * static_cast<double>(i)) * (i % 2 == 1 ? 4.0 : 2.0);
  const double integral = upper == 0.0 ? 0.0 : acc * h / 3.0;
  return t >= 0.0 ? 0.5 + integral : 0.5 - integral;
}

// First position (1-based, <= k) whose document is in the relevant set.
inline int naive_rank(const std::vector<std::string>& ranking,
                      const std::vector<std::string>& relevant, int k) {
  for (int pos = 1; pos <= static_cast<int>(ranking.size()) && pos <= k; ++pos)
    for (const auto& doc : relevant)
      if (ranking[static_cast<std::size_t>(pos - 1)] == doc) return pos;
  return 0;  // not retrieved
}

}  // namespace oracle
