#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coalrank/fixtures.hpp"
#include "test_support.hpp"

using namespace coalrank;

namespace {

const Individual kX = ind("x");
const Individual kY = ind("y");

}  // namespace

TEST_CASE("axiom names round trip") {
  const AxiomId all[] = {AxiomId::NT, AxiomId::ECON,       AxiomId::IPP,
                         AxiomId::DCONT, AxiomId::DCONT_STAR, AxiomId::CU,
                         AxiomId::CAN,   AxiomId::MON};
  for (const AxiomId axiom : all) {
    CHECK(parse_axiom(axiom_name(axiom)) == axiom);
  }
  CHECK_THROWS_AS(parse_axiom("nope"), parse_error);
}

TEST_CASE("every counterexample fixture fails its checker") {
  for (int n = 1; n <= 9; ++n) {
    CAPTURE(n);
    const Verdict verdict = replay(fixture_ce(n));
    CHECK_FALSE(verdict.pass);
    REQUIRE(verdict.witness.has_value());
    CHECK_FALSE(replay(*verdict.witness).pass);
  }
}

TEST_CASE("b1 passes on each counterexample instance") {
  for (int n = 1; n <= 9; ++n) {
    CAPTURE(n);
    AxiomInstance inst = fixture_ce(n);
    inst.solution = SolutionId::b1();
    CHECK(replay(inst).pass);
  }
}

TEST_CASE("neutrality holds trivially under the identity permutation") {
  const auto r = example1_ranking();
  const Verdict v = check_nt(SolutionId::b1(), r,
                             Permutation::identity(r.universe()), ind("A"),
                             ind("B"));
  CHECK(v.pass);
}

TEST_CASE("constant solution passes neutrality for any permutation") {
  Rng rng(103);
  for (int trial = 0; trial < 100; ++trial) {
    const auto r = test::random_ranking(rng, 4, 3, 2, 2);
    const auto sigma = test::random_permutation(rng, r.universe());
    const std::vector<Individual> xs(r.universe().begin(), r.universe().end());
    CHECK(check_nt(SolutionId::constant(), r, sigma, xs[0], xs[1]).pass);
  }
}

TEST_CASE("b1 satisfies consistency on the fixture pairs") {
  const AxiomInstance ce = fixture_ce(1);
  CHECK(check_econ(SolutionId::b1(), ce.ranking, *ce.ranking_prime, kX, kY).pass);
  CHECK_THROWS_AS(check_econ(SolutionId::b1(), ce.ranking, example1_ranking(),
                             kX, kY),
                  domain_error);
}

TEST_CASE("perfunctory additions never move b1 verdicts") {
  const auto r = ranking_best_first(
      {mset({coal({"x"}), coal({"y"})}), mset({coal({"y"})})});
  CHECK(check_ipp(SolutionId::b1(), r, coal({"x"}), kX, kY).pass);
  CHECK(check_ipp(SolutionId::b1(), r, coal({"x", "z"}), kX, kY).pass);
  CHECK(check_ipp(SolutionId::constant(), r, coal({"x"}), kX, kY).pass);
  CHECK_THROWS_AS(check_ipp(SolutionId::b1(), r, coal({"y"}), kX, kY),
                  domain_error);
  CHECK_THROWS_AS(check_ipp(SolutionId::b1(), r, coal({"x", "y"}), kX, kY),
                  domain_error);
}

TEST_CASE("dcont checker validates the shift index") {
  const auto r = ranking_best_first({mset({coal({"x"})}), mset({coal({"y"})})});
  CHECK_THROWS_AS(check_dcont(SolutionId::b1(), r, coal({"x"}), 0, kX, kY),
                  domain_error);
  CHECK_THROWS_AS(check_dcont(SolutionId::b1(), r, coal({"x"}), 2, kX, kY),
                  domain_error);
  CHECK(check_dcont(SolutionId::b1(), r, coal({"x"}), 1, kX, kY).pass);
}

TEST_CASE("shifting a coalition shared by the pair changes nothing") {
  const auto r = ranking_best_first(
      {mset({coal({"x", "y"})}), mset({coal({"x"}), coal({"y"})})});
  const Verdict v = check_dcont(SolutionId::b1(), r, coal({"x", "y"}), 1, kX, kY);
  CHECK(v.pass);
}

TEST_CASE("the b1-colon-nwl dcont witness reproduces") {
  // Three classes, so the verdict is the non-worst lexcel one; moving {y}
  // from the middle to the top flips a strict verdict.
  const auto r = ranking_best_first(
      {mset({coal({"x"})}), mset({coal({"y"})}), mset({coal({"x"})})});
  const Verdict v =
      check_dcont(SolutionId::b1_colon_nwl(), r, coal({"y"}), 2, kX, kY);
  CHECK_FALSE(v.pass);
  CHECK(check_dcont(SolutionId::b1(), r, coal({"y"}), 2, kX, kY).pass);
}

TEST_CASE("dcont-star finds splits for b1 whenever the premise holds") {
  // x leads by one; gamma carries three y-coalitions, so shifting gamma up
  // swings the difference negative and some prefix split must balance it.
  const auto r = ranking_best_first(
      {mset({coal({"x"}), coal({"x"})}), mset({coal({"y"})})});
  CoalitionMultiset gamma;
  gamma.add(coal({"y"}), 3);
  const Verdict v = check_dcont_star(SolutionId::b1(), r, gamma, 1, kX, kY);
  CHECK(v.pass);
  CHECK(v.premise_held);
  REQUIRE(v.split.has_value());
  const auto mid = add_to_class(add_to_class(r, v.split->lower, 1),
                                v.split->upper, 2);
  CHECK(evaluate(SolutionId::b1(), mid).indifferent(kX, kY));
}

TEST_CASE("dcont-star passes vacuously without a reversal") {
  const auto r = ranking_best_first(
      {mset({coal({"x"})}), mset({coal({"y"})})});
  const Verdict v = check_dcont_star(SolutionId::b1(), r,
                                     CoalitionMultiset::unit(coal({"z"})), 1,
                                     kX, kY);
  CHECK(v.pass);
  CHECK_FALSE(v.premise_held);
  CHECK_FALSE(v.split.has_value());
}

TEST_CASE("dcont-star on a single coalition mirrors dcont") {
  // The only splits of a singleton are (all, nothing) and (nothing, all),
  // so a strict reversal can never be balanced.
  const auto r = ranking_best_first(
      {mset({coal({"x"})}), mset({coal({"y"})}), mset({coal({"x"})})});
  const Verdict star = check_dcont_star(SolutionId::b1_colon_nwl(), r,
                                        CoalitionMultiset::unit(coal({"y"})), 2,
                                        kX, kY);
  CHECK_FALSE(star.pass);
  CoalitionMultiset big;
  big.add(coal({"x"}), 7);
  CHECK_THROWS_AS(
      check_dcont_star(SolutionId::b1(), r, big, 1, kX, kY), resource_error);
}

TEST_CASE("cu checker enforces its domain") {
  const auto nonlinear = ranking_best_first({mset({coal({"x"}), coal({"y"})})});
  CHECK_THROWS_AS(check_cu(SolutionId::b1(), nonlinear, kX, kY), domain_error);
  const auto asymmetric = ranking_best_first(
      {mset({coal({"x"})}), mset({coal({"x", "y"})})});
  CHECK_THROWS_AS(check_cu(SolutionId::b1(), asymmetric, kX, kY), domain_error);
  const auto fine = ranking_best_first(
      {mset({coal({"x"})}), mset({coal({"y"})})});
  CHECK(check_cu(SolutionId::b1(), fine, kX, kY).pass);
  CHECK(check_cu(SolutionId::bi(), fine, kX, kY).pass);
  CHECK_FALSE(check_cu(SolutionId::constant(), fine, kX, kY).pass);
}

TEST_CASE("can checker validates indices and memberships") {
  const auto r = ranking_best_first(
      {mset({coal({"x", "y"})}), mset({coal({"y"})}), mset({coal({"x"})})});
  CHECK_THROWS_AS(check_can(SolutionId::b1(), r, coal({"x"}), coal({"y"}), 1, 2,
                            kX, kY),
                  domain_error);
  CHECK_THROWS_AS(check_can(SolutionId::b1(), r, coal({"x", "y"}), coal({"y"}),
                            3, 2, kX, kY),
                  domain_error);
  CHECK(check_can(SolutionId::b1(), r, coal({"x"}), coal({"y"}), 3, 2, kX, kY)
            .pass);
  CHECK(check_can(SolutionId::b1(), r, coal({"x"}), coal({"y"}), 2, 2, kX, kY)
            .pass);
}

TEST_CASE("mon checker on the constant-solution fixture") {
  const auto base = ranking_best_first(
      {mset({coal({"x", "y"})}), mset({coal({"y"})})});
  CHECK_FALSE(check_mon(SolutionId::constant(), base, coal({"x"}), 1, kX, kY)
                  .pass);
  CHECK(check_mon(SolutionId::b1(), base, coal({"x"}), 1, kX, kY).pass);
  CHECK_THROWS_AS(check_mon(SolutionId::b1(), base, coal({"x"}), 2, kX, kY),
                  domain_error);
}

TEST_CASE("generated instances are reproducible") {
  GenParams params;
  params.seed = 2024;
  for (const AxiomId axiom :
       {AxiomId::NT, AxiomId::ECON, AxiomId::IPP, AxiomId::DCONT,
        AxiomId::DCONT_STAR, AxiomId::CU, AxiomId::CAN, AxiomId::MON}) {
    for (std::uint64_t iter = 0; iter < 50; ++iter) {
      const auto a = generate_instance(SolutionId::b1(), axiom, params, iter);
      const auto b = generate_instance(SolutionId::b1(), axiom, params, iter);
      CHECK(a.ranking == b.ranking);
      CHECK(a.x == b.x);
      CHECK(a.y == b.y);
    }
  }
}

TEST_CASE("generated cu instances satisfy the cu preconditions") {
  GenParams params;
  params.seed = 77;
  for (std::uint64_t iter = 0; iter < 300; ++iter) {
    const auto inst = generate_instance(SolutionId::b1(), AxiomId::CU, params, iter);
    CHECK(is_linear(inst.ranking));
    CHECK(is_symmetric_pair(inst.ranking, inst.x, inst.y));
  }
}

TEST_CASE("fuzz reports are deterministic including witnesses") {
  GenParams params;
  params.seed = 7;
  const auto a = fuzz(SolutionId::b2(), AxiomId::ECON, params, 1500);
  const auto b = fuzz(SolutionId::b2(), AxiomId::ECON, params, 1500);
  CHECK(a.failures == b.failures);
  CHECK(a.first_failure_iteration == b.first_failure_iteration);
  REQUIRE(a.first_witness.has_value());
  REQUIRE(b.first_witness.has_value());
  CHECK(a.first_witness->ranking == b.first_witness->ranking);
  CHECK(a.first_witness->ranking_prime == b.first_witness->ranking_prime);
  CHECK(a.first_witness->x == b.first_witness->x);
}

TEST_CASE("fuzz finds the documented violations") {
  GenParams params;
  params.seed = 7;
  CHECK(fuzz(SolutionId::b2(), AxiomId::ECON, params, 5000).failures > 0);
  CHECK(fuzz(SolutionId::constant(), AxiomId::MON, params, 100).failures > 0);
  CHECK(fuzz(SolutionId::tilde_b1(), AxiomId::IPP, params, 2000).failures > 0);
}

TEST_CASE("fuzzed b1 never violates any axiom") {
  GenParams params;
  params.seed = 99;
  for (const AxiomId axiom :
       {AxiomId::NT, AxiomId::ECON, AxiomId::IPP, AxiomId::DCONT,
        AxiomId::DCONT_STAR, AxiomId::CU, AxiomId::CAN, AxiomId::MON}) {
    CAPTURE(axiom_name(axiom));
    CHECK(fuzz(SolutionId::b1(), axiom, params, 500).failures == 0);
  }
}

TEST_CASE("fuzz rejects zero iterations and bad params") {
  GenParams params;
  CHECK_THROWS_AS(fuzz(SolutionId::b1(), AxiomId::NT, params, 0), domain_error);
  GenParams bad;
  bad.max_individuals = 9;
  CHECK_THROWS_AS(fuzz(SolutionId::b1(), AxiomId::NT, bad, 10), domain_error);
  GenParams one_class;
  one_class.max_classes = 1;
  CHECK_THROWS_AS(fuzz(SolutionId::b1(), AxiomId::MON, one_class, 10),
                  domain_error);
}

TEST_CASE("minimized witnesses still fail and stay valid") {
  GenParams params;
  params.seed = 7;
  const auto report = fuzz(SolutionId::b2(), AxiomId::ECON, params, 5000);
  REQUIRE(report.first_witness.has_value());
  const AxiomInstance& witness = *report.first_witness;
  CHECK_FALSE(replay(witness).pass);
  // Minimization is idempotent.
  const AxiomInstance again = minimize_witness(witness);
  CHECK(again.ranking == witness.ranking);
  CHECK(again.ranking_prime == witness.ranking_prime);
}

TEST_CASE("witness minimization shrinks a padded instance") {
  // CE-5 with an extra irrelevant coalition added to the worst class.
  AxiomInstance padded = fixture_ce(5);
  padded.ranking = add_to_class(padded.ranking,
                                CoalitionMultiset::unit(coal({"z"})), 1);
  REQUIRE_FALSE(replay(padded).pass);
  const AxiomInstance smaller = minimize_witness(padded);
  CHECK_FALSE(replay(smaller).pass);
  std::int64_t padded_units = 0;
  std::int64_t smaller_units = 0;
  for (const auto& cls : padded.ranking.classes()) padded_units += cls.total();
  for (const auto& cls : smaller.ranking.classes()) smaller_units += cls.total();
  CHECK(smaller_units < padded_units);
}

TEST_CASE("allowing the empty coalition keeps checks meaningful") {
  GenParams params;
  params.seed = 5;
  params.allow_empty_coalition = true;
  CHECK(fuzz(SolutionId::b1(), AxiomId::ECON, params, 300).failures == 0);
  CHECK(fuzz(SolutionId::b1(), AxiomId::MON, params, 300).failures == 0);
}
