#include "sotacheck/decompose.hpp"

#include <stdexcept>

namespace sotacheck {

OutcomeCase classify_outcome(std::optional<int> rank_a,
                             std::optional<int> rank_b) {
  if (rank_a && rank_b) return OutcomeCase::BothRetrieved;
  if (rank_a) return OutcomeCase::AWinsRetrieval;
  if (rank_b) return OutcomeCase::BWinsRetrieval;
  return OutcomeCase::NeitherRetrieved;
}

Decomposition decompose(const ScoreTable& table_a, const ScoreTable& table_b) {
  if (table_a.k != table_b.k)
    throw std::invalid_argument("score tables disagree on cutoff k");
  if (table_a.scores.size() != table_b.scores.size())
    throw std::invalid_argument("score tables cover different query universes");

  Decomposition d;
  auto ia = table_a.scores.begin();
  auto ib = table_b.scores.begin();
  for (; ia != table_a.scores.end(); ++ia, ++ib) {
    if (ia->first != ib->first)
      throw std::invalid_argument("score tables cover different query universes");
    const auto& qid = ia->first;
    const auto rank_a = ia->second.rank;
    const auto rank_b = ib->second.rank;
    switch (classify_outcome(rank_a, rank_b)) {
      case OutcomeCase::NeitherRetrieved:
        d.case1.push_back(qid);
        break;
      case OutcomeCase::AWinsRetrieval:
        d.a_wins.push_back(qid);
        break;
      case OutcomeCase::BWinsRetrieval:
        d.b_wins.push_back(qid);
        break;
      case OutcomeCase::BothRetrieved:
        d.case3.push_back(qid);
        if (*rank_a < *rank_b)
          d.a_better.push_back(qid);
        else if (*rank_b < *rank_a)
          d.b_better.push_back(qid);
        else
          d.tied.push_back(qid);
        break;
    }
  }
  return d;
}

Breakdown breakdown_percentages(const Decomposition& d) {
  const std::size_t n = d.universe_size();
  if (n == 0) throw std::domain_error("empty query universe");
  return Breakdown{n, d.case1.size(), d.a_wins.size(), d.b_wins.size(),
                   d.case3.size()};
}

}  // namespace sotacheck
