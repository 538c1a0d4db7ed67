#include "coalrank/solutions.hpp"

#include <algorithm>
#include <map>

namespace coalrank {

namespace {

PairVerdict from_ordering(std::strong_ordering cmp) {
  if (cmp == std::strong_ordering::greater) return PairVerdict::FirstStrict;
  if (cmp == std::strong_ordering::less) return PairVerdict::SecondStrict;
  return PairVerdict::Indifferent;
}

PairwiseRelation from_scores(const std::set<Individual>& ground,
                             const ScoreMap& scores, bool higher_is_better) {
  return PairwiseRelation(ground, [&](const Individual& a, const Individual& b) {
    const auto cmp = scores.at(a) <=> scores.at(b);
    return from_ordering(higher_is_better ? cmp : 0 <=> cmp);
  });
}

/// Position of each individual in the order; smaller index ranks higher.
std::map<Individual, std::size_t> order_ranks(
    const std::vector<Individual>& order,
    const std::set<Individual>& universe) {
  std::map<Individual, std::size_t> ranks;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!ranks.emplace(order[i], i).second) {
      throw domain_error("tie-break order repeats '" + order[i].id() + "'");
    }
  }
  for (const auto& x : universe) {
    if (!ranks.contains(x)) {
      throw domain_error("tie-break order does not cover '" + x.id() + "'");
    }
  }
  return ranks;
}

bool has_solo_in_best_class(const CoalitionalRanking& r, const Individual& in,
                            const Individual& out) {
  for (const auto& [c, n] : r.class_at(r.num_classes()).entries()) {
    if (c.contains(in) && !c.contains(out)) return true;
  }
  return false;
}

}  // namespace

SolutionId SolutionId::alpha_beta(Rational alpha, Rational beta) {
  if (!(beta > Rational(0))) {
    throw domain_error("alpha/beta solution requires beta > 0");
  }
  SolutionId id(Kind::AlphaBeta);
  id.alpha_ = alpha;
  id.beta_ = beta;
  return id;
}

SolutionId SolutionId::b1_tiebreak(std::vector<Individual> order_best_first) {
  if (order_best_first.empty()) throw domain_error("empty tie-break order");
  SolutionId id(Kind::B1TieBreak);
  id.order_ = std::move(order_best_first);
  return id;
}

SolutionId SolutionId::b1_colon(std::vector<Individual> order_best_first) {
  if (order_best_first.empty()) throw domain_error("empty tie-break order");
  SolutionId id(Kind::B1Colon);
  id.order_ = std::move(order_best_first);
  return id;
}

namespace {

std::vector<Individual> parse_order(std::string_view text) {
  std::vector<Individual> order;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view token = text.substr(0, comma);
    if (token.empty()) throw parse_error("empty id in order list");
    order.push_back(ind(token));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (text.empty()) throw parse_error("trailing comma in order list");
  }
  if (order.empty()) throw parse_error("empty order list");
  return order;
}

}  // namespace

SolutionId SolutionId::parse(std::string_view text) {
  if (text == "b1") return b1();
  if (text == "b2") return b2();
  if (text == "b3") return b3();
  if (text == "bi") return bi();
  if (text == "tilde-b1") return tilde_b1();
  if (text == "nwl") return nwl();
  if (text == "const") return constant();
  if (text == "b1-colon-const") return b1_colon_const();
  if (text == "b1-colon-nwl") return b1_colon_nwl();
  if (text.starts_with("ab:")) {
    const std::string_view rest = text.substr(3);
    const auto comma = rest.find(',');
    if (comma == std::string_view::npos) {
      throw parse_error("ab solution needs 'ab:<alpha>,<beta>'");
    }
    const Rational alpha = Rational::parse(rest.substr(0, comma));
    const Rational beta = Rational::parse(rest.substr(comma + 1));
    if (!(beta > Rational(0))) throw parse_error("ab solution needs beta > 0");
    return alpha_beta(alpha, beta);
  }
  if (text.starts_with("b1-tb:")) return b1_tiebreak(parse_order(text.substr(6)));
  if (text.starts_with("b1-colon:")) return b1_colon(parse_order(text.substr(9)));
  throw parse_error("unknown solution '" + std::string(text) + "'");
}

std::string SolutionId::str() const {
  switch (kind_) {
    case Kind::B1:
      return "b1";
    case Kind::B2:
      return "b2";
    case Kind::B3:
      return "b3";
    case Kind::Bi:
      return "bi";
    case Kind::TildeB1:
      return "tilde-b1";
    case Kind::AlphaBeta:
      return "ab:" + alpha_.str() + "," + beta_.str();
    case Kind::Nwl:
      return "nwl";
    case Kind::Const:
      return "const";
    case Kind::B1TieBreak:
    case Kind::B1Colon: {
      std::string s = kind_ == Kind::B1TieBreak ? "b1-tb:" : "b1-colon:";
      for (std::size_t i = 0; i < order_.size(); ++i) {
        if (i > 0) s += ',';
        s += order_[i].id();
      }
      return s;
    }
    case Kind::B1ColonConst:
      return "b1-colon-const";
    case Kind::B1ColonNwl:
      return "b1-colon-nwl";
  }
  return "?";
}

bool is_buddy_pair(const CoalitionalRanking& r, const Individual& x,
                   const Individual& y) {
  if (x == y) throw domain_error("buddy-pair test needs two distinct ids");
  std::int64_t together = 0;
  for (const auto& cls : r.classes()) {
    for (const auto& [c, n] : cls.entries()) {
      if (c.contains(x) && c.contains(y)) together += n;
    }
  }
  return together > r.num_classes();
}

PairwiseRelation evaluate_b1_tiebreak(const CoalitionalRanking& r,
                                      const std::vector<Individual>& order) {
  const auto ranks = order_ranks(order, r.universe());
  const ScoreMap scores = score_b1(r);
  return PairwiseRelation(
      r.universe(), [&](const Individual& a, const Individual& b) {
        const auto cmp = scores.at(a) <=> scores.at(b);
        if (cmp != std::strong_ordering::equal) return from_ordering(cmp);
        return ranks.at(a) < ranks.at(b) ? PairVerdict::FirstStrict
                                         : PairVerdict::SecondStrict;
      });
}

PairwiseRelation evaluate_b1_colon(const CoalitionalRanking& r,
                                   const std::vector<Individual>& order) {
  const auto ranks = order_ranks(order, r.universe());
  if (r.num_classes() != 2) {
    const ScoreMap scores = score_b1(r);
    return from_scores(r.universe(), scores, /*higher_is_better=*/true);
  }
  // Two-class case: with hi the order-higher of the pair, hi is strictly
  // above iff the best class holds a coalition with hi and without lo;
  // otherwise the pair is indifferent.
  return PairwiseRelation(
      r.universe(), [&](const Individual& a, const Individual& b) {
        const bool a_first = ranks.at(a) < ranks.at(b);
        const Individual& hi = a_first ? a : b;
        const Individual& lo = a_first ? b : a;
        if (!has_solo_in_best_class(r, hi, lo)) return PairVerdict::Indifferent;
        return a_first ? PairVerdict::FirstStrict : PairVerdict::SecondStrict;
      });
}

PairwiseRelation evaluate_b1_colon_const(const CoalitionalRanking& r) {
  const ScoreMap scores = score_b1(r);
  return PairwiseRelation(
      r.universe(), [&](const Individual& a, const Individual& b) {
        if (is_buddy_pair(r, a, b)) return PairVerdict::Indifferent;
        return from_ordering(scores.at(a) <=> scores.at(b));
      });
}

PairwiseRelation evaluate_b1_colon_nwl(const CoalitionalRanking& r) {
  if (r.num_classes() == 3) {
    return evaluate(SolutionId::nwl(), r);
  }
  return from_scores(r.universe(), score_b1(r), /*higher_is_better=*/true);
}

PairwiseRelation evaluate(const SolutionId& id, const CoalitionalRanking& r) {
  switch (id.kind()) {
    case SolutionId::Kind::B1:
      return from_scores(r.universe(), score_b1(r), true);
    case SolutionId::Kind::B2:
      return from_scores(r.universe(), score_b2(r), true);
    case SolutionId::Kind::B3:
      return from_scores(r.universe(), score_b3(r), true);
    case SolutionId::Kind::Bi:
      return from_scores(r.universe(), inversion_score(r), false);
    case SolutionId::Kind::TildeB1:
      return from_scores(r.universe(), score_tilde_b1(r), true);
    case SolutionId::Kind::AlphaBeta:
      return from_scores(r.universe(), score_alpha_beta(r, id.alpha(), id.beta()),
                         true);
    case SolutionId::Kind::Nwl:
      return PairwiseRelation(
          r.universe(), [&](const Individual& a, const Individual& b) {
            return from_ordering(
                compare_count_vectors(nwl_vector(r, a), nwl_vector(r, b)));
          });
    case SolutionId::Kind::Const:
      return PairwiseRelation(r.universe(), [](const Individual&,
                                               const Individual&) {
        return PairVerdict::Indifferent;
      });
    case SolutionId::Kind::B1TieBreak:
      return evaluate_b1_tiebreak(r, id.order());
    case SolutionId::Kind::B1Colon:
      return evaluate_b1_colon(r, id.order());
    case SolutionId::Kind::B1ColonConst:
      return evaluate_b1_colon_const(r);
    case SolutionId::Kind::B1ColonNwl:
      return evaluate_b1_colon_nwl(r);
  }
  throw domain_error("unhandled solution kind");
}

}  // namespace coalrank
