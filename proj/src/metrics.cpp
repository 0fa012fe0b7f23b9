#include "sotacheck/metrics.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace sotacheck {

std::optional<int> rank_of_relevant(std::span<const std::string> ranking,
                                    const std::set<std::string>& relevant,
                                    int k) {
  if (relevant.empty()) throw std::invalid_argument("relevant set is empty");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const std::size_t limit =
      std::min(ranking.size(), static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < limit; ++i)
    if (relevant.count(ranking[i])) return static_cast<int>(i + 1);
  return std::nullopt;
}

double reciprocal_rank(std::optional<int> rank) {
  return rank ? 1.0 / *rank : 0.0;
}

std::optional<int> esl(std::optional<int> rank) { return rank; }

ScoreTable score_run(const Run& run, const Qrels& qrels,
                     std::span<const std::string> universe, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  ScoreTable table;
  table.run_name = run.name;
  table.k = k;
  for (const auto& qid : universe) {
    const auto jt = qrels.judgments.find(qid);
    if (jt == qrels.judgments.end())
      throw std::invalid_argument("universe query '" + qid +
                                  "' has no relevance judgment");
    std::optional<int> rank;
    if (const auto rt = run.rankings.find(qid); rt != run.rankings.end())
      rank = rank_of_relevant(rt->second, jt->second, k);
    table.scores.emplace(
        qid, PerQueryScore{qid, rank, reciprocal_rank(rank), esl(rank)});
  }
  return table;
}

double mean_rr(const ScoreTable& table, std::span<const std::string> subset) {
  if (subset.empty())
    throw std::domain_error("mean reciprocal rank over an empty subset");
  double sum = 0.0;
  for (const auto& qid : subset) sum += table.scores.at(qid).rr;
  return sum / static_cast<double>(subset.size());
}

double mean_esl(const ScoreTable& table, std::span<const std::string> subset) {
  if (subset.empty())
    throw std::domain_error("mean search length over an empty subset");
  double sum = 0.0;
  for (const auto& qid : subset) {
    const auto& score = table.scores.at(qid);
    if (!score.esl)
      throw std::domain_error(
          "search length is undefined for query '" + qid +
          "' (relevant document not retrieved); refusing to average");
    sum += static_cast<double>(*score.esl);
  }
  return sum / static_cast<double>(subset.size());
}

}  // namespace sotacheck
