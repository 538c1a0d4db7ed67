#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "coalrank/model.hpp"

namespace coalrank {

enum class PairVerdict { FirstStrict, SecondStrict, Indifferent };

/// A complete reflexive relation over a finite ground set, stored one verdict
/// per unordered pair. Transitivity is not guaranteed; hybrid solutions may
/// produce cycles, so the tier view is gated behind a transitivity check.
class PairwiseRelation {
 public:
  using Comparator =
      std::function<PairVerdict(const Individual&, const Individual&)>;

  PairwiseRelation(const std::set<Individual>& ground, const Comparator& cmp);

  const std::vector<Individual>& ground() const { return ground_; }
  bool in_ground(const Individual& x) const;

  /// Verdict for the unordered pair; (x, x) is indifferent.
  PairVerdict verdict(const Individual& x, const Individual& y) const;
  bool weakly_above(const Individual& x, const Individual& y) const;    // xRy
  bool strictly_above(const Individual& x, const Individual& y) const;  // xPy
  bool indifferent(const Individual& x, const Individual& y) const;

  bool operator==(const PairwiseRelation&) const = default;

 private:
  std::vector<Individual> ground_;  // sorted
  std::map<std::pair<Individual, Individual>, PairVerdict> table_;  // a < b
};

struct TiersResult {
  /// Best tier first; individuals sorted inside each tier. Only meaningful
  /// when transitive() holds.
  std::vector<std::vector<Individual>> tiers;
  /// (a, b, c) with aRb, bRc and not aRc; present iff the relation is not
  /// transitive.
  std::optional<std::array<Individual, 3>> witness;

  bool transitive() const { return !witness.has_value(); }
};

TiersResult tiers(const PairwiseRelation& rel);

}  // namespace coalrank
