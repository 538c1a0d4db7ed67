#include "coalrank/relation.hpp"

#include <algorithm>

namespace coalrank {

PairwiseRelation::PairwiseRelation(const std::set<Individual>& ground,
                                   const Comparator& cmp)
    : ground_(ground.begin(), ground.end()) {
  for (std::size_t i = 0; i < ground_.size(); ++i) {
    for (std::size_t j = i + 1; j < ground_.size(); ++j) {
      table_.emplace(std::make_pair(ground_[i], ground_[j]),
                     cmp(ground_[i], ground_[j]));
    }
  }
}

bool PairwiseRelation::in_ground(const Individual& x) const {
  return std::binary_search(ground_.begin(), ground_.end(), x);
}

PairVerdict PairwiseRelation::verdict(const Individual& x,
                                      const Individual& y) const {
  if (!in_ground(x) || !in_ground(y)) {
    throw domain_error("individual outside the relation's ground set");
  }
  if (x == y) return PairVerdict::Indifferent;
  if (x < y) return table_.at(std::make_pair(x, y));
  const PairVerdict flipped = table_.at(std::make_pair(y, x));
  switch (flipped) {
    case PairVerdict::FirstStrict:
      return PairVerdict::SecondStrict;
    case PairVerdict::SecondStrict:
      return PairVerdict::FirstStrict;
    case PairVerdict::Indifferent:
      return PairVerdict::Indifferent;
  }
  return PairVerdict::Indifferent;
}

bool PairwiseRelation::weakly_above(const Individual& x,
                                    const Individual& y) const {
  return verdict(x, y) != PairVerdict::SecondStrict;
}

bool PairwiseRelation::strictly_above(const Individual& x,
                                      const Individual& y) const {
  return verdict(x, y) == PairVerdict::FirstStrict;
}

bool PairwiseRelation::indifferent(const Individual& x,
                                   const Individual& y) const {
  return verdict(x, y) == PairVerdict::Indifferent;
}

TiersResult tiers(const PairwiseRelation& rel) {
  TiersResult out;
  const auto& xs = rel.ground();
  for (const auto& a : xs) {
    for (const auto& b : xs) {
      for (const auto& c : xs) {
        if (rel.weakly_above(a, b) && rel.weakly_above(b, c) &&
            !rel.weakly_above(a, c)) {
          out.witness = {a, b, c};
          return out;
        }
      }
    }
  }
  // Transitive: peel off maximal elements tier by tier.
  std::vector<Individual> remaining = xs;
  while (!remaining.empty()) {
    std::vector<Individual> top;
    for (const auto& x : remaining) {
      const bool dominated =
          std::any_of(remaining.begin(), remaining.end(), [&](const auto& w) {
            return rel.strictly_above(w, x);
          });
      if (!dominated) top.push_back(x);
    }
    std::vector<Individual> rest;
    for (const auto& x : remaining) {
      if (!std::binary_search(top.begin(), top.end(), x)) rest.push_back(x);
    }
    out.tiers.push_back(std::move(top));
    remaining = std::move(rest);
  }
  return out;
}

}  // namespace coalrank
