#include <array>
#include <string_view>
#include <tuple>

#include "coalrank/axioms.hpp"
#include "coalrank/rng.hpp"

namespace coalrank {

namespace {

constexpr std::array<std::string_view, 5> kPool = {"a", "b", "c", "d", "e"};

std::vector<Individual> draw_universe(Rng& rng, const GenParams& params) {
  const int n = rng.range(2, params.max_individuals);
  std::vector<Individual> xs;
  xs.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) xs.push_back(ind(kPool[static_cast<std::size_t>(i)]));
  return xs;
}

std::pair<Individual, Individual> draw_pair(Rng& rng,
                                            const std::vector<Individual>& xs) {
  const auto i = rng.below(xs.size());
  auto j = rng.below(xs.size() - 1);
  if (j >= i) ++j;
  return {xs[i], xs[j]};
}

Coalition draw_coalition(Rng& rng, const std::vector<Individual>& xs,
                         bool allow_empty) {
  while (true) {
    std::vector<Individual> members;
    for (const auto& x : xs) {
      if (rng.coin()) members.push_back(x);
    }
    if (members.empty() && !allow_empty) continue;
    return Coalition(std::move(members));
  }
}

Coalition draw_coalition_with(Rng& rng, const std::vector<Individual>& xs,
                              const Individual& in, const Individual& out) {
  std::vector<Individual> members{in};
  for (const auto& x : xs) {
    if (x != in && x != out && rng.coin()) members.push_back(x);
  }
  return Coalition(std::move(members));
}

CoalitionMultiset draw_class(Rng& rng, const std::vector<Individual>& xs,
                             const GenParams& params) {
  const int size = rng.range(1, params.max_class_size);
  CoalitionMultiset m;
  for (int i = 0; i < size; ++i) {
    m.add(draw_coalition(rng, xs, params.allow_empty_coalition),
          rng.range(1, params.max_multiplicity));
  }
  return m;
}

CoalitionalRanking draw_ranking(Rng& rng, const std::vector<Individual>& xs,
                                int num_classes, const GenParams& params) {
  std::vector<CoalitionMultiset> classes;
  classes.reserve(static_cast<std::size_t>(num_classes));
  for (int k = 0; k < num_classes; ++k) classes.push_back(draw_class(rng, xs, params));
  return CoalitionalRanking(std::move(classes),
                            std::set<Individual>(xs.begin(), xs.end()));
}

CoalitionalRanking draw_linear_ranking(Rng& rng,
                                       const std::vector<Individual>& xs,
                                       int num_classes,
                                       const GenParams& params) {
  std::vector<CoalitionMultiset> classes;
  classes.reserve(static_cast<std::size_t>(num_classes));
  for (int k = 0; k < num_classes; ++k) {
    classes.push_back(CoalitionMultiset::unit(
        draw_coalition(rng, xs, params.allow_empty_coalition)));
  }
  return CoalitionalRanking(std::move(classes),
                            std::set<Individual>(xs.begin(), xs.end()));
}

Permutation draw_permutation(Rng& rng, const std::vector<Individual>& xs) {
  std::vector<Individual> image = xs;
  for (std::size_t i = image.size(); i > 1; --i) {
    std::swap(image[i - 1], image[rng.below(i)]);
  }
  std::map<Individual, Individual> mapping;
  for (std::size_t i = 0; i < xs.size(); ++i) mapping.emplace(xs[i], image[i]);
  return Permutation(std::move(mapping));
}

int draw_classes_at_least(Rng& rng, int minimum, const GenParams& params,
                          const char* axiom) {
  if (params.max_classes < minimum) {
    throw domain_error(std::string(axiom) + " fuzzing needs max_classes >= " +
                       std::to_string(minimum));
  }
  return rng.range(minimum, params.max_classes);
}

/// Linear ranking together with a symmetric pair. Rejection-sampled; falls
/// back to a two-class fixture when the draw never produces one.
void draw_cu_instance(Rng& rng, const std::vector<Individual>& xs,
                      const GenParams& params, AxiomInstance& inst) {
  for (int attempt = 0; attempt < 500; ++attempt) {
    const int l = rng.range(1, params.max_classes);
    CoalitionalRanking r = draw_linear_ranking(rng, xs, l, params);
    std::vector<std::pair<Individual, Individual>> symmetric;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = i + 1; j < xs.size(); ++j) {
        if (is_symmetric_pair(r, xs[i], xs[j])) symmetric.emplace_back(xs[i], xs[j]);
      }
    }
    if (symmetric.empty()) continue;
    const auto& [x, y] = symmetric[rng.below(symmetric.size())];
    inst.ranking = std::move(r);
    inst.x = x;
    inst.y = y;
    return;
  }
  inst.ranking = ranking_best_first(
      {CoalitionMultiset::unit(Coalition({xs[0]})),
       CoalitionMultiset::unit(Coalition({xs[1]}))},
      xs);
  inst.x = xs[0];
  inst.y = xs[1];
}

}  // namespace

void GenParams::validate() const {
  if (max_individuals < 2 || max_individuals > 5) {
    throw domain_error("max_individuals must lie in [2, 5]");
  }
  if (max_classes < 1 || max_classes > 5) {
    throw domain_error("max_classes must lie in [1, 5]");
  }
  if (max_class_size < 1 || max_class_size > 3) {
    throw domain_error("max_class_size must lie in [1, 3]");
  }
  if (max_multiplicity < 1 || max_multiplicity > 2) {
    throw domain_error("max_multiplicity must lie in [1, 2]");
  }
}

AxiomInstance generate_instance(const SolutionId& id, AxiomId axiom,
                                const GenParams& params,
                                std::uint64_t iteration) {
  params.validate();
  Rng rng(Rng::substream(params.seed, iteration));
  const std::vector<Individual> xs = draw_universe(rng, params);
  AxiomInstance inst;
  inst.solution = id;
  inst.axiom = axiom;
  std::tie(inst.x, inst.y) = draw_pair(rng, xs);

  switch (axiom) {
    case AxiomId::NT: {
      const int l = rng.range(1, params.max_classes);
      inst.ranking = draw_ranking(rng, xs, l, params);
      inst.sigma = draw_permutation(rng, xs);
      break;
    }
    case AxiomId::ECON: {
      const int l = rng.range(1, params.max_classes);
      inst.ranking = draw_ranking(rng, xs, l, params);
      inst.ranking_prime = draw_ranking(rng, xs, l, params);
      break;
    }
    case AxiomId::IPP: {
      const int l = rng.range(1, params.max_classes);
      inst.ranking = draw_ranking(rng, xs, l, params);
      inst.s = draw_coalition_with(rng, xs, inst.x, inst.y);
      break;
    }
    case AxiomId::DCONT: {
      const int l = draw_classes_at_least(rng, 2, params, "DCONT");
      inst.ranking = draw_ranking(rng, xs, l, params);
      inst.k1 = rng.range(1, l - 1);
      inst.s = draw_coalition(rng, xs, params.allow_empty_coalition);
      break;
    }
    case AxiomId::DCONT_STAR: {
      const int l = draw_classes_at_least(rng, 2, params, "DCONT*");
      inst.ranking = draw_ranking(rng, xs, l, params);
      inst.k1 = rng.range(1, l - 1);
      CoalitionMultiset gamma;
      const int units = rng.range(1, 4);
      for (int i = 0; i < units; ++i) {
        gamma.add(draw_coalition(rng, xs, params.allow_empty_coalition));
      }
      inst.gamma = std::move(gamma);
      break;
    }
    case AxiomId::CU:
      draw_cu_instance(rng, xs, params, inst);
      break;
    case AxiomId::CAN: {
      const int l = draw_classes_at_least(rng, 2, params, "CAN");
      inst.ranking = draw_ranking(rng, xs, l, params);
      inst.k1 = rng.range(2, l);
      inst.k2 = rng.range(2, l);
      inst.s = draw_coalition_with(rng, xs, inst.x, inst.y);
      inst.t = draw_coalition_with(rng, xs, inst.y, inst.x);
      break;
    }
    case AxiomId::MON: {
      const int l = draw_classes_at_least(rng, 2, params, "MON");
      inst.ranking = draw_ranking(rng, xs, l, params);
      inst.k_hat = rng.range(1, l - 1);
      inst.s = draw_coalition_with(rng, xs, inst.x, inst.y);
      break;
    }
  }
  return inst;
}

FuzzReport fuzz(const SolutionId& id, AxiomId axiom, const GenParams& params,
                std::uint64_t iterations) {
  if (iterations < 1) throw domain_error("fuzz needs at least one iteration");
  params.validate();
  FuzzReport report;
  report.iterations = iterations;
  for (std::uint64_t iter = 0; iter < iterations; ++iter) {
    const AxiomInstance inst = generate_instance(id, axiom, params, iter);
    if (replay(inst).pass) {
      ++report.passes;
    } else {
      ++report.failures;
      if (!report.first_failure_iteration.has_value()) {
        report.first_failure_iteration = iter;
        report.first_witness = minimize_witness(inst);
      }
    }
  }
  return report;
}

}  // namespace coalrank
