#pragma once

#include <cstdint>

#include "coalrank/model.hpp"
#include "coalrank/rational.hpp"
#include "coalrank/relation.hpp"

namespace coalrank {

inline constexpr int kSwapOracleMaxClasses = 12;
inline constexpr int kBanzhafDefaultMaxUniverse = 12;

/// Minimum number of adjacent-class swaps after which every coalition
/// containing x sits strictly above every coalition without x. Linear
/// rankings only; computed by breadth-first search over the sequences
/// reachable by adjacent transpositions, independent of the closed-form
/// inversion count it is used to cross-check.
std::int64_t swap_distance_oracle(const CoalitionalRanking& r,
                                  const Individual& x);

/// v^Bt(S): the coalition-level score a single copy of S earns in r, or 0
/// when S appears in no class. t selects which Borda summand is used.
std::int64_t characteristic_value(const CoalitionalRanking& r, int t,
                                  const Coalition& s);

/// The |X|-person game (X, v^Bt) read off a coalitional ranking.
struct CharacteristicGame {
  CharacteristicGame(CoalitionalRanking ranking, int t);
  std::int64_t value(const Coalition& s) const;

  CoalitionalRanking ranking;
  int t;
};

/// Banzhaf value of x in (X, v^Bt): the average marginal contribution over
/// all coalitions not containing x, an exact rational with denominator
/// 2^(|X|-1).
Rational banzhaf(const CoalitionalRanking& r, int t, const Individual& x,
                 int max_universe = kBanzhafDefaultMaxUniverse);

/// x weakly above y iff banzhaf(x) >= banzhaf(y).
PairwiseRelation rank_by_banzhaf(const CoalitionalRanking& r, int t,
                                 int max_universe = kBanzhafDefaultMaxUniverse);

}  // namespace coalrank
