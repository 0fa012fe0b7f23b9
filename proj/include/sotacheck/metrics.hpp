#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>

#include "sotacheck/ingest.hpp"

namespace sotacheck {

// Derived scores for one query. rank is the ordinal position (1-based) of
// the best-ranked relevant document within the cutoff; absent means the
// run did not retrieve it in the top k. When rank is present, rr == 1/rank
// and esl == rank; otherwise rr == 0 and esl is undefined.
struct PerQueryScore {
  std::string query_id;
  std::optional<int> rank;
  double rr = 0.0;
  std::optional<int> esl;

  bool operator==(const PerQueryScore&) const = default;
};

// Per-query scores for one run, keyed over the full query universe.
struct ScoreTable {
  std::string run_name;
  int k = 100;
  std::map<std::string, PerQueryScore> scores;

  bool operator==(const ScoreTable&) const = default;
};

// Smallest 1-based position <= k holding any relevant document.
std::optional<int> rank_of_relevant(std::span<const std::string> ranking,
                                    const std::set<std::string>& relevant,
                                    int k);

double reciprocal_rank(std::optional<int> rank);

// Expected search length for a single query: the rank itself, undefined
// when the relevant document was not retrieved.
std::optional<int> esl(std::optional<int> rank);

// Scores a run over the universe; universe queries absent from the run get
// rank absent. Every universe query must appear in the qrels.
ScoreTable score_run(const Run& run, const Qrels& qrels,
                     std::span<const std::string> universe, int k);

// Arithmetic mean of rr over the subset. Throws std::domain_error on an
// empty subset.
double mean_rr(const ScoreTable& table, std::span<const std::string> subset);

// Arithmetic mean of esl over the subset. Every subset query must have a
// defined search length; averaging across retrieved and unretrieved
// queries is refused with std::domain_error.
double mean_esl(const ScoreTable& table, std::span<const std::string> subset);

}  // namespace sotacheck
