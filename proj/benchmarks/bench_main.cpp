#include <benchmark/benchmark.h>

#include "coalrank/axioms.hpp"
#include "coalrank/oracles.hpp"
#include "coalrank/rng.hpp"

namespace {

using namespace coalrank;

CoalitionalRanking synthetic_ranking(int individuals, int classes,
                                     int class_size) {
  Rng rng(99);
  std::vector<Individual> xs;
  for (int i = 0; i < individuals; ++i) {
    xs.push_back(Individual("p" + std::to_string(i)));
  }
  std::vector<CoalitionMultiset> levels;
  for (int k = 0; k < classes; ++k) {
    CoalitionMultiset cls;
    for (int i = 0; i < class_size; ++i) {
      std::vector<Individual> members;
      for (const auto& x : xs) {
        if (rng.coin()) members.push_back(x);
      }
      if (members.empty()) members.push_back(xs[0]);
      cls.add(Coalition(std::move(members)));
    }
    levels.push_back(std::move(cls));
  }
  return CoalitionalRanking(std::move(levels),
                            std::set<Individual>(xs.begin(), xs.end()));
}

CoalitionalRanking linear_ranking(int individuals, int classes) {
  Rng rng(7);
  std::vector<Individual> xs;
  for (int i = 0; i < individuals; ++i) {
    xs.push_back(Individual("p" + std::to_string(i)));
  }
  std::vector<CoalitionMultiset> levels;
  for (int k = 0; k < classes; ++k) {
    std::vector<Individual> members;
    for (const auto& x : xs) {
      if (rng.coin()) members.push_back(x);
    }
    if (members.empty()) members.push_back(xs[0]);
    levels.push_back(CoalitionMultiset::unit(Coalition(std::move(members))));
  }
  return CoalitionalRanking(std::move(levels),
                            std::set<Individual>(xs.begin(), xs.end()));
}

void BM_ScoreB1(benchmark::State& state) {
  const auto r = synthetic_ranking(8, static_cast<int>(state.range(0)), 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(score_b1(r));
  }
}
BENCHMARK(BM_ScoreB1)->Arg(10)->Arg(100)->Arg(1000);

void BM_EvaluateB1(benchmark::State& state) {
  const auto r = synthetic_ranking(static_cast<int>(state.range(0)), 20, 5);
  const auto id = SolutionId::b1();
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate(id, r));
  }
}
BENCHMARK(BM_EvaluateB1)->Arg(4)->Arg(8)->Arg(16);

void BM_Banzhaf(benchmark::State& state) {
  const auto r = synthetic_ranking(static_cast<int>(state.range(0)), 6, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank_by_banzhaf(r, 1));
  }
}
BENCHMARK(BM_Banzhaf)->Arg(6)->Arg(8)->Arg(10);

void BM_SwapOracle(benchmark::State& state) {
  const auto r = linear_ranking(5, static_cast<int>(state.range(0)));
  const Individual x("p0");
  for (auto _ : state) {
    benchmark::DoNotOptimize(swap_distance_oracle(r, x));
  }
}
BENCHMARK(BM_SwapOracle)->Arg(6)->Arg(8)->Arg(10);

void BM_FuzzEconB1(benchmark::State& state) {
  GenParams params;
  params.seed = 5;
  std::uint64_t iter = 0;
  for (auto _ : state) {
    const auto inst =
        generate_instance(SolutionId::b1(), AxiomId::ECON, params, iter++);
    benchmark::DoNotOptimize(replay(inst));
  }
}
BENCHMARK(BM_FuzzEconB1);

}  // namespace

BENCHMARK_MAIN();
