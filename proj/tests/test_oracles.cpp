#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coalrank/fixtures.hpp"
#include "coalrank/oracles.hpp"
#include "test_support.hpp"

using namespace coalrank;

TEST_CASE("swap oracle trivial cases") {
  const auto supported = ranking_best_first(
      {mset({coal({"x"})}), mset({coal({"x", "y"})}), mset({coal({"y"})})});
  CHECK(swap_distance_oracle(supported, ind("x")) == 0);

  const auto one_swap =
      ranking_best_first({mset({coal({"y"})}), mset({coal({"x"})})});
  CHECK(swap_distance_oracle(one_swap, ind("x")) == 1);
  CHECK(swap_distance_oracle(one_swap, ind("y")) == 0);
}

TEST_CASE("swap oracle rejects non-linear and oversized input") {
  const auto fat = ranking_best_first({mset({coal({"x"}), coal({"y"})})});
  CHECK_THROWS_AS(swap_distance_oracle(fat, ind("x")), domain_error);

  std::vector<CoalitionMultiset> many;
  for (int i = 0; i < 13; ++i) {
    many.push_back(CoalitionMultiset::unit(coal({i % 2 == 0 ? "x" : "y"})));
  }
  const CoalitionalRanking big(std::move(many), {});
  CHECK_THROWS_AS(swap_distance_oracle(big, ind("x")), resource_error);
}

TEST_CASE("swap oracle equals the inversion formula on random linear rankings") {
  Rng rng(83);
  for (int trial = 0; trial < 400; ++trial) {
    const auto r = test::random_linear_ranking(rng, 5, 8);
    const auto formula = inversion_score(r);
    for (const auto& x : r.universe()) {
      CAPTURE(trial);
      CHECK(swap_distance_oracle(r, x) == formula.at(x).num());
    }
  }
}

TEST_CASE("characteristic values on the worked example") {
  const auto r = example1_ranking();
  CHECK(characteristic_value(r, 1, coal({"A", "B"})) == 5);
  CHECK(characteristic_value(r, 1, coal({"B", "C"})) == 2);
  CHECK(characteristic_value(r, 1, coal({"C"})) == 1);
  CHECK(characteristic_value(r, 1, coal({"A"})) == 0);
  CHECK(characteristic_value(r, 1, coal({"A", "C"})) == 0);
  CHECK(characteristic_value(r, 1, coal({"A", "B", "C"})) == 0);
  CHECK(characteristic_value(r, 2, coal({"A", "B"})) == 2 * 7 + 1 * 5);
  CHECK(characteristic_value(r, 3, coal({"A", "B"})) == 2 * 7 + 1 * 2);
  CHECK_THROWS_AS(characteristic_value(r, 4, coal({"A"})), domain_error);

  const CharacteristicGame game(r, 1);
  CHECK(game.value(coal({"A", "B"})) == 5);
}

TEST_CASE("scores decompose into coalition values") {
  Rng rng(89);
  for (int trial = 0; trial < 200; ++trial) {
    const auto r = test::random_ranking(rng, 5, 4, 3, 2);
    std::set<Coalition> appearing;
    for (const auto& cls : r.classes()) {
      for (const auto& [c, n] : cls.entries()) appearing.insert(c);
    }
    for (int t = 1; t <= 3; ++t) {
      const ScoreMap scores = t == 1   ? score_b1(r)
                              : t == 2 ? score_b2(r)
                                       : score_b3(r);
      for (const auto& x : r.universe()) {
        std::int64_t sum = 0;
        for (const auto& c : appearing) {
          if (c.contains(x)) sum += characteristic_value(r, t, c);
        }
        CHECK(scores.at(x) == Rational(sum));
      }
    }
  }
}

TEST_CASE("banzhaf values on the worked example") {
  const auto r = example1_ranking();
  CHECK(banzhaf(r, 1, ind("A")) == Rational(1, 2));
  CHECK(banzhaf(r, 1, ind("B")) == Rational(3, 2));
  CHECK(banzhaf(r, 1, ind("C")) == Rational(-1, 2));
  // Difference identity: beta_B - beta_A = (s(B) - s(A)) / 2^(|X|-2).
  CHECK(banzhaf(r, 1, ind("B")) - banzhaf(r, 1, ind("A")) == Rational(2, 2));
}

TEST_CASE("banzhaf is zero when every marginal contribution vanishes") {
  // On a single class all three games are identically zero, so every
  // individual has Banzhaf value zero, declared bystanders included.
  const auto flat = ranking_best_first(
      {mset({coal({"x"}), coal({"y"})})}, {ind("w")});
  for (int t = 1; t <= 3; ++t) {
    CHECK(banzhaf(flat, t, ind("x")) == Rational(0));
    CHECK(banzhaf(flat, t, ind("w")) == Rational(0));
  }

  // A bystander is not automatically null: joining {x} here moves it to a
  // coalition that appears nowhere, losing {x}'s value.
  const auto r = ranking_best_first(
      {mset({coal({"x"})}), mset({coal({"y"})})}, {ind("w")});
  CHECK(banzhaf(r, 1, ind("w")) == Rational(-1, 4));
}

TEST_CASE("banzhaf enforces the universe cap") {
  std::vector<CoalitionMultiset> classes;
  std::vector<Individual> many;
  for (int i = 0; i < 13; ++i) many.push_back(ind(std::string(1, 'a' + i)));
  classes.push_back(CoalitionMultiset::unit(Coalition(many)));
  const CoalitionalRanking r(std::move(classes), {});
  CHECK_THROWS_AS(banzhaf(r, 1, ind("a")), resource_error);
  CHECK_NOTHROW(banzhaf(r, 1, ind("a"), 13));
}

TEST_CASE("banzhaf ranking equals the direct solution on the worked example") {
  const auto r = example1_ranking();
  CHECK(rank_by_banzhaf(r, 1) == evaluate(SolutionId::b1(), r));
  CHECK(rank_by_banzhaf(r, 2) == evaluate(SolutionId::b2(), r));
  CHECK(rank_by_banzhaf(r, 3) == evaluate(SolutionId::b3(), r));

  const auto b3_tiers = tiers(rank_by_banzhaf(r, 3));
  REQUIRE(b3_tiers.transitive());
  CHECK(b3_tiers.tiers ==
        std::vector<std::vector<Individual>>{{ind("A")}, {ind("B")}, {ind("C")}});
}

TEST_CASE("banzhaf ranking equals the direct solution on random instances") {
  Rng rng(97);
  for (int trial = 0; trial < 60; ++trial) {
    const auto r = test::random_ranking(rng, 5, 4, 3, 2);
    for (int t = 1; t <= 3; ++t) {
      const SolutionId id = t == 1   ? SolutionId::b1()
                            : t == 2 ? SolutionId::b2()
                                     : SolutionId::b3();
      CHECK(rank_by_banzhaf(r, t) == evaluate(id, r));
    }
  }
}

TEST_CASE("banzhaf differences follow the score differences") {
  Rng rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    const auto r = test::random_ranking(rng, 5, 4, 3, 2);
    const int n = static_cast<int>(r.universe().size());
    REQUIRE(n >= 2);
    std::int64_t scale = 1;
    for (int i = 2; i < n; ++i) scale *= 2;  // 2^(|X|-2)
    for (int t = 1; t <= 3; ++t) {
      const ScoreMap scores = t == 1   ? score_b1(r)
                              : t == 2 ? score_b2(r)
                                       : score_b3(r);
      const std::vector<Individual> xs(r.universe().begin(), r.universe().end());
      for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
          const Rational lhs = banzhaf(r, t, xs[i]) - banzhaf(r, t, xs[j]);
          const Rational rhs =
              (scores.at(xs[i]) - scores.at(xs[j])) / Rational(scale);
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("single-individual universe gives a trivial relation") {
  const auto r = ranking_best_first({mset({coal({"solo"})})});
  const auto rel = rank_by_banzhaf(r, 1);
  CHECK(rel.ground().size() == 1);
  CHECK(rel.indifferent(ind("solo"), ind("solo")));
}
