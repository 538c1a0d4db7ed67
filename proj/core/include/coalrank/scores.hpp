#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "coalrank/model.hpp"
#include "coalrank/rational.hpp"

namespace coalrank {

/// Individual -> exact score. Every member of the ranking's universe has an
/// entry; individuals in no coalition score zero under every rule.
class ScoreMap {
 public:
  explicit ScoreMap(std::map<Individual, Rational> values);
  const Rational& at(const Individual& x) const;
  const std::map<Individual, Rational>& values() const { return values_; }
  bool operator==(const ScoreMap&) const = default;

 private:
  std::map<Individual, Rational> values_;
};

/// Each coalition scores the number of classes ranked below it.
ScoreMap score_b1(const CoalitionalRanking& r);
/// Each coalition scores the number of coalitions ranked below it.
ScoreMap score_b2(const CoalitionalRanking& r);
/// Coalitions ranked below minus coalitions ranked above.
ScoreMap score_b3(const CoalitionalRanking& r);
/// Adjacent-swap count to unanimous support; lower is better.
ScoreMap inversion_score(const CoalitionalRanking& r);
/// Like score_b1 with the k-th-worst class worth k instead of k - 1.
ScoreMap score_tilde_b1(const CoalitionalRanking& r);
/// Evenly increasing class weights alpha + (k - 1) * beta, beta > 0.
ScoreMap score_alpha_beta(const CoalitionalRanking& r, const Rational& alpha,
                          const Rational& beta);

/// Per-class appearance counts of one individual, best class first, worst
/// class dropped; empty when the ranking has a single class.
using CountVector = std::vector<std::int64_t>;
CountVector nwl_vector(const CoalitionalRanking& r, const Individual& x);
std::strong_ordering compare_count_vectors(const CountVector& a,
                                           const CountVector& b);

}  // namespace coalrank
