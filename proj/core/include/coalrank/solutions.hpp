#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "coalrank/model.hpp"
#include "coalrank/rational.hpp"
#include "coalrank/relation.hpp"
#include "coalrank/scores.hpp"

namespace coalrank {

/// Closed catalog of the implemented social ranking solutions. Order-bearing
/// variants carry a strict total order (best first) that must cover the
/// universe of any ranking they are evaluated on; AlphaBeta carries beta > 0.
class SolutionId {
 public:
  enum class Kind {
    B1,
    B2,
    B3,
    Bi,
    TildeB1,
    AlphaBeta,
    Nwl,
    Const,
    B1TieBreak,
    B1Colon,
    B1ColonConst,
    B1ColonNwl,
  };

  static SolutionId b1() { return SolutionId(Kind::B1); }
  static SolutionId b2() { return SolutionId(Kind::B2); }
  static SolutionId b3() { return SolutionId(Kind::B3); }
  static SolutionId bi() { return SolutionId(Kind::Bi); }
  static SolutionId tilde_b1() { return SolutionId(Kind::TildeB1); }
  static SolutionId nwl() { return SolutionId(Kind::Nwl); }
  static SolutionId constant() { return SolutionId(Kind::Const); }
  static SolutionId b1_colon_const() { return SolutionId(Kind::B1ColonConst); }
  static SolutionId b1_colon_nwl() { return SolutionId(Kind::B1ColonNwl); }
  static SolutionId alpha_beta(Rational alpha, Rational beta);
  static SolutionId b1_tiebreak(std::vector<Individual> order_best_first);
  static SolutionId b1_colon(std::vector<Individual> order_best_first);

  /// CLI syntax: b1, b2, b3, bi, tilde-b1, ab:<alpha>,<beta>, nwl, const,
  /// b1-tb:<id1>,<id2>,..., b1-colon:<id1>,..., b1-colon-const, b1-colon-nwl.
  static SolutionId parse(std::string_view text);
  std::string str() const;

  Kind kind() const { return kind_; }
  const Rational& alpha() const { return alpha_; }
  const Rational& beta() const { return beta_; }
  const std::vector<Individual>& order() const { return order_; }
  bool operator==(const SolutionId&) const = default;

 private:
  explicit SolutionId(Kind kind) : kind_(kind) {}

  Kind kind_;
  Rational alpha_ = 0;
  Rational beta_ = 1;
  std::vector<Individual> order_;
};

/// The pairwise relation the solution induces on the ranking's universe.
PairwiseRelation evaluate(const SolutionId& id, const CoalitionalRanking& r);

/// True when x and y appear together in strictly more coalitions than there
/// are equivalence classes.
bool is_buddy_pair(const CoalitionalRanking& r, const Individual& x,
                   const Individual& y);

PairwiseRelation evaluate_b1_tiebreak(const CoalitionalRanking& r,
                                      const std::vector<Individual>& order);
PairwiseRelation evaluate_b1_colon(const CoalitionalRanking& r,
                                   const std::vector<Individual>& order);
PairwiseRelation evaluate_b1_colon_const(const CoalitionalRanking& r);
PairwiseRelation evaluate_b1_colon_nwl(const CoalitionalRanking& r);

}  // namespace coalrank
