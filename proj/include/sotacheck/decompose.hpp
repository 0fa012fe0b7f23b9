#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sotacheck/metrics.hpp"

namespace sotacheck {

// Paired retrieval outcome for one query: case (1) neither run retrieves
// the relevant document, case (2) exactly one does, case (3) both do.
enum class OutcomeCase {
  NeitherRetrieved,
  AWinsRetrieval,
  BWinsRetrieval,
  BothRetrieved,
};

OutcomeCase classify_outcome(std::optional<int> rank_a,
                             std::optional<int> rank_b);

// Partition of the query universe by paired outcome. case1, a_wins, b_wins
// and case3 are disjoint and cover the universe; a_better, b_better and
// tied partition case3 by rank comparison. All sets are sorted.
struct Decomposition {
  std::vector<std::string> case1;
  std::vector<std::string> a_wins;
  std::vector<std::string> b_wins;
  std::vector<std::string> case3;
  std::vector<std::string> a_better;  // rank_a < rank_b
  std::vector<std::string> b_better;  // rank_b < rank_a
  std::vector<std::string> tied;      // rank_a == rank_b

  std::size_t universe_size() const {
    return case1.size() + a_wins.size() + b_wins.size() + case3.size();
  }

  bool operator==(const Decomposition&) const = default;
};

// Both tables must share the same universe and cutoff.
Decomposition decompose(const ScoreTable& table_a, const ScoreTable& table_b);

// Shares of the four top-level cases. Counts are the exact representation;
// the fraction accessors divide on demand.
struct Breakdown {
  std::size_t universe_size = 0;
  std::size_t case1 = 0;
  std::size_t a_wins = 0;
  std::size_t b_wins = 0;
  std::size_t case3 = 0;

  double frac_case1() const { return ratio(case1); }
  double frac_a_wins() const { return ratio(a_wins); }
  double frac_b_wins() const { return ratio(b_wins); }
  double frac_case3() const { return ratio(case3); }

  bool operator==(const Breakdown&) const = default;

 private:
  double ratio(std::size_t n) const {
    return static_cast<double>(n) / static_cast<double>(universe_size);
  }
};

// Throws std::domain_error on an empty universe.
Breakdown breakdown_percentages(const Decomposition& d);

}  // namespace sotacheck
