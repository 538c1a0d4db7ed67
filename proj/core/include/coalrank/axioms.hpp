#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "coalrank/model.hpp"
#include "coalrank/solutions.hpp"

namespace coalrank {

enum class AxiomId { NT, ECON, IPP, DCONT, DCONT_STAR, CU, CAN, MON };

AxiomId parse_axiom(std::string_view text);  // "nt", "econ", ..., "dcont-star"
std::string_view axiom_name(AxiomId axiom);

/// One fully instantiated axiom check: the solution, the pair, the base
/// ranking, and whichever auxiliary objects the axiom quantifies over.
/// A failing instance doubles as the replayable witness.
struct AxiomInstance {
  SolutionId solution = SolutionId::b1();
  AxiomId axiom = AxiomId::NT;
  Individual x{"x"};
  Individual y{"y"};
  CoalitionalRanking ranking{{CoalitionMultiset::unit(Coalition())}};
  std::optional<CoalitionalRanking> ranking_prime;  // ECON
  std::optional<Permutation> sigma;                 // NT
  std::optional<Coalition> s;                       // IPP/DCONT/CAN/MON
  std::optional<Coalition> t;                       // CAN
  std::optional<CoalitionMultiset> gamma;           // DCONT*
  std::optional<int> k1;                            // DCONT/DCONT*/CAN
  std::optional<int> k2;                            // CAN
  std::optional<int> k_hat;                         // MON
};

/// The split found by a DCONT* check: lower stays in class k1, upper moves
/// to class k1 + 1, and the pair is indifferent there.
struct SplitWitness {
  CoalitionMultiset lower;
  CoalitionMultiset upper;
};

struct Verdict {
  bool pass = true;
  /// Whether the axiom's premise held on this instance (implication-style
  /// checks pass vacuously when it does not).
  bool premise_held = false;
  std::optional<SplitWitness> split;       // DCONT* detail
  std::optional<AxiomInstance> witness;    // present iff !pass
};

Verdict check_nt(const SolutionId& id, const CoalitionalRanking& r,
                 const Permutation& sigma, const Individual& x,
                 const Individual& y);
Verdict check_econ(const SolutionId& id, const CoalitionalRanking& r,
                   const CoalitionalRanking& r_prime, const Individual& x,
                   const Individual& y);
Verdict check_ipp(const SolutionId& id, const CoalitionalRanking& r,
                  const Coalition& s, const Individual& x, const Individual& y);
Verdict check_dcont(const SolutionId& id, const CoalitionalRanking& r,
                    const Coalition& s, int k1, const Individual& x,
                    const Individual& y);
Verdict check_dcont_star(const SolutionId& id, const CoalitionalRanking& r,
                         const CoalitionMultiset& gamma, int k1,
                         const Individual& x, const Individual& y);
Verdict check_cu(const SolutionId& id, const CoalitionalRanking& r,
                 const Individual& x, const Individual& y);
Verdict check_can(const SolutionId& id, const CoalitionalRanking& r,
                  const Coalition& s, const Coalition& t, int k1, int k2,
                  const Individual& x, const Individual& y);
Verdict check_mon(const SolutionId& id, const CoalitionalRanking& r,
                  const Coalition& s, int k_hat, const Individual& x,
                  const Individual& y);

/// Re-runs the checker an instance belongs to.
Verdict replay(const AxiomInstance& instance);

/// Greedily drops classes and multiplicity units while the instance keeps
/// failing and keeps satisfying its axiom's preconditions. Deterministic.
AxiomInstance minimize_witness(const AxiomInstance& instance);

/// Bounds for the deterministic instance generator. Identical params and
/// seed reproduce the identical instance sequence.
struct GenParams {
  std::uint64_t seed = 0;
  int max_individuals = 4;   // hard cap 5
  int max_classes = 4;       // hard cap 5
  int max_class_size = 3;    // hard cap 3
  int max_multiplicity = 2;  // hard cap 2
  bool allow_empty_coalition = false;

  void validate() const;
};

AxiomInstance generate_instance(const SolutionId& id, AxiomId axiom,
                                const GenParams& params, std::uint64_t iteration);

struct FuzzReport {
  std::uint64_t iterations = 0;
  std::uint64_t passes = 0;
  std::uint64_t failures = 0;
  std::optional<std::uint64_t> first_failure_iteration;
  std::optional<AxiomInstance> first_witness;  // minimized
};

FuzzReport fuzz(const SolutionId& id, AxiomId axiom, const GenParams& params,
                std::uint64_t iterations);

}  // namespace coalrank
