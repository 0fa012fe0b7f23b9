#include "sotacheck/metrics.hpp"

#include <cstdint>
#include <random>

#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace sotacheck;

TEST_CASE("rank_of_relevant: direct lookup, miss, best-ranked") {
  const std::vector<std::string> r1{"d3", "d7", "d9"};
  CHECK(rank_of_relevant(r1, {"d7"}, 100) == 2);
  const std::vector<std::string> r2{"d3", "d7"};
  CHECK(rank_of_relevant(r2, {"d5"}, 100) == std::nullopt);
  const std::vector<std::string> r3{"d5", "d8"};
  CHECK(rank_of_relevant(r3, {"d8", "d5"}, 100) == 1);
}

TEST_CASE("rank_of_relevant: cutoff and preconditions") {
  const std::vector<std::string> r{"d1", "d2", "d3"};
  CHECK(rank_of_relevant(r, {"d3"}, 2) == std::nullopt);
  CHECK_THROWS_AS(rank_of_relevant(r, {}, 10), std::invalid_argument);
}

TEST_CASE("reciprocal_rank: endpoints") {
  CHECK(reciprocal_rank(1) == 1.0);
  CHECK(reciprocal_rank(100) == 0.01);
  CHECK(reciprocal_rank(std::nullopt) == 0.0);
}

TEST_CASE("esl: identity on retrieved, undefined otherwise") {
  CHECK(esl(1) == 1);
  CHECK(esl(2) == 2);
  CHECK(esl(std::nullopt) == std::nullopt);
}

TEST_CASE("score_run: composition over the universe") {
  Qrels qrels;
  qrels.judgments["q1"] = {"d7"};
  qrels.judgments["q2"] = {"d9"};
  Run run;
  run.name = "r";
  run.rankings["q1"] = {"d7"};
  const std::vector<std::string> universe{"q1", "q2"};
  const auto table = score_run(run, qrels, universe, 100);
  CHECK(table.scores.at("q1").rank == 1);
  CHECK(table.scores.at("q1").rr == 1.0);
  CHECK(table.scores.at("q2").rank == std::nullopt);
  CHECK(table.scores.at("q2").rr == 0.0);
}

TEST_CASE("score_run: empty run scores zero everywhere") {
  Qrels qrels;
  qrels.judgments["q1"] = {"d1"};
  qrels.judgments["q2"] = {"d2"};
  const Run run{"none", {}};
  const std::vector<std::string> universe{"q1", "q2"};
  const auto table = score_run(run, qrels, universe, 100);
  for (const auto& [qid, s] : table.scores) CHECK(s.rr == 0.0);
}

TEST_CASE("score_run: relevant document beyond the cutoff scores zero") {
  const auto pair = testutil::score_pair({{"q1", 11}}, {{"q1", 1}}, 10);
  CHECK(pair.a.scores.at("q1").rank == std::nullopt);
  CHECK(pair.a.scores.at("q1").rr == 0.0);
}

TEST_CASE("mean_rr: worked values") {
  const auto pair = testutil::score_pair({{"q1", 1}, {"q2", 9}},
                                         {{"q1", 4}, {"q2", 6}});
  const std::vector<std::string> subset{"q1", "q2"};
  CHECK(mean_rr(pair.a, subset) == doctest::Approx(0.5556).epsilon(1e-4));
  CHECK(mean_rr(pair.b, subset) == doctest::Approx(0.2083).epsilon(1e-4));

  const auto all_top = testutil::score_pair(
      {{"q1", 1}, {"q2", 1}, {"q3", 1}}, {{"q1", 1}, {"q2", 1}, {"q3", 1}});
  CHECK(mean_rr(all_top.a, {std::vector<std::string>{"q1", "q2", "q3"}}) == 1.0);

  CHECK_THROWS_AS(mean_rr(pair.a, {}), std::domain_error);
}

TEST_CASE("mean_esl: worked values and the averaging prohibition") {
  const auto pair = testutil::score_pair({{"q1", 1}, {"q2", 5}},
                                         {{"q1", 1}, {"q2", 9}});
  const std::vector<std::string> subset{"q1", "q2"};
  CHECK(mean_esl(pair.a, subset) == 3.0);

  const auto equal = testutil::score_pair({{"q1", 1}, {"q2", 9}},
                                          {{"q1", 4}, {"q2", 6}});
  CHECK(mean_esl(equal.a, subset) == 5.0);
  CHECK(mean_esl(equal.b, subset) == 5.0);

  const auto with_miss =
      testutil::score_pair({{"q1", 1}, {"q2", std::nullopt}},
                           {{"q1", 1}, {"q2", 1}});
  CHECK_THROWS_AS(mean_esl(with_miss.a, subset), std::domain_error);
  CHECK_THROWS_AS(mean_esl(with_miss.a, {}), std::domain_error);
}

TEST_CASE("invariant: rr * esl == 1 exactly as rationals") {
  for (int rank = 1; rank <= 100; ++rank) {
    const auto e = esl(rank);
    REQUIRE(e.has_value());
    // As a rational, rr is exactly 1/rank, so rr * esl == rank/rank == 1.
    const std::int64_t numerator = 1 * *e;
    const std::int64_t denominator = rank;
    CHECK(numerator == denominator);
    // The stored double is the correctly rounded 1/rank.
    CHECK(reciprocal_rank(rank) == 1.0 / rank);
  }
}

TEST_CASE("invariant: bounds and permutation invariance") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 100; ++iter) {
    std::map<std::string, std::optional<int>> ranks;
    const int n = 2 + static_cast<int>(rng() % 8);
    for (int q = 0; q < n; ++q) {
      const std::string qid = "q" + std::to_string(q);
      if (rng() % 3 == 0)
        ranks[qid] = std::nullopt;
      else
        ranks[qid] = 1 + static_cast<int>(rng() % 10);
    }
    const auto pair = testutil::score_pair(ranks, ranks, 10);
    auto subset = testutil::universe_of(ranks);
    const double m1 = mean_rr(pair.a, subset);
    CHECK(m1 >= 0.0);
    CHECK(m1 <= 1.0);
    std::shuffle(subset.begin(), subset.end(), rng);
    CHECK(mean_rr(pair.a, subset) == doctest::Approx(m1).epsilon(1e-12));
  }
}

TEST_CASE("invariant: improving one rank moves both means strictly") {
  const std::map<std::string, std::optional<int>> base{
      {"q1", 3}, {"q2", 7}, {"q3", 5}};
  std::map<std::string, std::optional<int>> improved = base;
  improved["q2"] = 4;
  const auto before = testutil::score_pair(base, base, 10).a;
  const auto after = testutil::score_pair(improved, improved, 10).a;
  const std::vector<std::string> subset{"q1", "q2", "q3"};
  CHECK(mean_rr(after, subset) > mean_rr(before, subset));
  CHECK(mean_esl(after, subset) < mean_esl(before, subset));
}

TEST_CASE("brute-force equivalence on random small runs") {
  std::mt19937_64 rng(20240818);
  for (int iter = 0; iter < 300; ++iter) {
    const int k = 1 + static_cast<int>(rng() % 10);
    const int nq = 1 + static_cast<int>(rng() % 10);
    Qrels qrels;
    Run run;
    run.name = "r";
    std::vector<std::string> universe;
    for (int q = 0; q < nq; ++q) {
      const std::string qid = "q" + std::to_string(q);
      universe.push_back(qid);
      qrels.judgments[qid] = {"rel_" + qid};
      const int len = static_cast<int>(rng() % (k + 3));
      auto& list = run.rankings[qid];
      for (int i = 0; i < len; ++i) {
        // Sprinkle the relevant document in with some probability.
        if (rng() % 5 == 0 && list.end() == std::find(list.begin(), list.end(),
                                                      "rel_" + qid))
          list.push_back("rel_" + qid);
        else
          list.push_back("f" + std::to_string(q) + "_" + std::to_string(i));
      }
      if (list.empty()) run.rankings.erase(qid);
    }
    const auto table = score_run(run, qrels, universe, k);
    for (const auto& qid : universe) {
      std::vector<std::string> ranking;
      if (const auto it = run.rankings.find(qid); it != run.rankings.end())
        ranking = it->second;
      const int expected = oracle::naive_rank(ranking, {"rel_" + qid}, k);
      const auto& score = table.scores.at(qid);
      if (expected == 0) {
        CHECK(score.rank == std::nullopt);
        CHECK(score.rr == 0.0);
        CHECK(score.esl == std::nullopt);
      } else {
        CHECK(score.rank == expected);
        CHECK(score.rr == 1.0 / expected);
        CHECK(score.esl == expected);
      }
    }
  }
}
