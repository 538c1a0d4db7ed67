#include "coalrank/scores.hpp"

namespace coalrank {

namespace {

/// counts[x][k - 1] = total multiplicity of class-k coalitions containing x.
std::map<Individual, std::vector<std::int64_t>> per_class_counts(
    const CoalitionalRanking& r) {
  std::map<Individual, std::vector<std::int64_t>> counts;
  const auto l = static_cast<std::size_t>(r.num_classes());
  for (const auto& x : r.universe()) {
    counts.emplace(x, std::vector<std::int64_t>(l, 0));
  }
  for (int k = 1; k <= r.num_classes(); ++k) {
    for (const auto& [c, n] : r.class_at(k).entries()) {
      for (const auto& x : c.members()) {
        counts.at(x)[static_cast<std::size_t>(k - 1)] += n;
      }
    }
  }
  return counts;
}

ScoreMap weighted_score(const CoalitionalRanking& r,
                        const std::vector<Rational>& class_weights) {
  const auto counts = per_class_counts(r);
  std::map<Individual, Rational> values;
  for (const auto& [x, per_class] : counts) {
    Rational s = 0;
    for (std::size_t i = 0; i < per_class.size(); ++i) {
      if (per_class[i] != 0) s += class_weights[i] * Rational(per_class[i]);
    }
    values.emplace(x, s);
  }
  return ScoreMap(std::move(values));
}

std::vector<std::int64_t> class_totals(const CoalitionalRanking& r) {
  std::vector<std::int64_t> totals;
  totals.reserve(r.classes().size());
  for (const auto& cls : r.classes()) totals.push_back(cls.total());
  return totals;
}

}  // namespace

ScoreMap::ScoreMap(std::map<Individual, Rational> values)
    : values_(std::move(values)) {}

const Rational& ScoreMap::at(const Individual& x) const {
  const auto it = values_.find(x);
  if (it == values_.end()) {
    throw domain_error("no score for '" + x.id() + "'");
  }
  return it->second;
}

ScoreMap score_b1(const CoalitionalRanking& r) {
  std::vector<Rational> weights;
  for (int k = 1; k <= r.num_classes(); ++k) weights.emplace_back(k - 1);
  return weighted_score(r, weights);
}

ScoreMap score_b2(const CoalitionalRanking& r) {
  const auto totals = class_totals(r);
  std::vector<Rational> weights;
  std::int64_t below = 0;
  for (const std::int64_t t : totals) {
    weights.emplace_back(below);
    below += t;
  }
  return weighted_score(r, weights);
}

ScoreMap score_b3(const CoalitionalRanking& r) {
  const auto totals = class_totals(r);
  std::int64_t below = 0;
  std::int64_t above = 0;
  for (const std::int64_t t : totals) above += t;
  std::vector<Rational> weights;
  for (const std::int64_t t : totals) {
    above -= t;
    weights.emplace_back(below - above);
    below += t;
  }
  return weighted_score(r, weights);
}

ScoreMap inversion_score(const CoalitionalRanking& r) {
  const auto counts = per_class_counts(r);
  const auto totals = class_totals(r);
  const auto l = totals.size();
  std::map<Individual, Rational> values;
  for (const auto& [x, per_class] : counts) {
    // Walk classes best-to-worst; others_above holds the multiplicity of
    // coalitions without x in strictly better classes.
    std::int64_t others_above = 0;
    std::int64_t score = 0;
    for (std::size_t i = l; i-- > 0;) {
      score += per_class[i] * others_above;
      others_above += totals[i] - per_class[i];
    }
    values.emplace(x, Rational(score));
  }
  return ScoreMap(std::move(values));
}

ScoreMap score_tilde_b1(const CoalitionalRanking& r) {
  std::vector<Rational> weights;
  for (int k = 1; k <= r.num_classes(); ++k) weights.emplace_back(k);
  return weighted_score(r, weights);
}

ScoreMap score_alpha_beta(const CoalitionalRanking& r, const Rational& alpha,
                          const Rational& beta) {
  if (!(beta > Rational(0))) {
    throw domain_error("alpha/beta score requires beta > 0");
  }
  std::vector<Rational> weights;
  for (int k = 1; k <= r.num_classes(); ++k) {
    weights.push_back(alpha + Rational(k - 1) * beta);
  }
  return weighted_score(r, weights);
}

CountVector nwl_vector(const CoalitionalRanking& r, const Individual& x) {
  CountVector out;
  for (int k = r.num_classes(); k >= 2; --k) {
    std::int64_t n = 0;
    for (const auto& [c, count] : r.class_at(k).entries()) {
      if (c.contains(x)) n += count;
    }
    out.push_back(n);
  }
  return out;
}

std::strong_ordering compare_count_vectors(const CountVector& a,
                                           const CountVector& b) {
  if (a.size() != b.size()) {
    throw domain_error("count vectors of different lengths are incomparable");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace coalrank
