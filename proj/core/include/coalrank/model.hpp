#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "coalrank/errors.hpp"

namespace coalrank {

inline constexpr std::int64_t kMaxMultiplicity = 2147483647;  // 2^31 - 1
inline constexpr int kMaxClasses = 10000;

/// An individual, identified by an opaque non-empty token without whitespace.
class Individual {
 public:
  explicit Individual(std::string id);
  const std::string& id() const { return id_; }
  auto operator<=>(const Individual&) const = default;

 private:
  std::string id_;
};

/// A finite set of individuals; the empty coalition is legal.
/// Members are kept sorted, so equal coalitions compare equal.
class Coalition {
 public:
  Coalition() = default;
  explicit Coalition(std::vector<Individual> members);

  bool contains(const Individual& x) const;
  bool contains_all(const Coalition& other) const;
  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  const std::vector<Individual>& members() const { return members_; }
  std::string str() const;  // "{a,b}" display form
  auto operator<=>(const Coalition&) const = default;

 private:
  std::vector<Individual> members_;
};

/// Coalition -> positive multiplicity. Entries with multiplicity zero are
/// never stored.
class CoalitionMultiset {
 public:
  using Map = std::map<Coalition, std::int64_t>;

  CoalitionMultiset() = default;
  static CoalitionMultiset unit(Coalition c);  // 1_S

  void add(const Coalition& c, std::int64_t count = 1);
  std::int64_t count(const Coalition& c) const;
  bool contains(const Coalition& c) const { return count(c) > 0; }
  std::int64_t total() const { return total_; }  // |m|, with multiplicity
  bool empty() const { return entries_.empty(); }
  const Map& entries() const { return entries_; }

  friend CoalitionMultiset operator+(const CoalitionMultiset& a,
                                     const CoalitionMultiset& b);
  /// Truncated difference: max{0, m(a) - o(a)} pointwise.
  CoalitionMultiset minus(const CoalitionMultiset& o) const;

  bool operator==(const CoalitionMultiset&) const = default;

 private:
  Map entries_;
  std::int64_t total_ = 0;
};

/// A bijection on a finite set of individuals, checked at construction.
class Permutation {
 public:
  explicit Permutation(std::map<Individual, Individual> mapping);
  static Permutation identity(const std::set<Individual>& universe);
  static Permutation transposition(const std::set<Individual>& universe,
                                   const Individual& a, const Individual& b);

  const Individual& apply(const Individual& x) const;
  Coalition apply(const Coalition& c) const;
  Permutation inverse() const;
  bool covers(const std::set<Individual>& universe) const;
  const std::map<Individual, Individual>& mapping() const { return mapping_; }

 private:
  std::map<Individual, Individual> mapping_;
};

/// An ordered sequence of nonempty coalition multisets. Classes are stored
/// worst-first: class_at(1) is the worst, class_at(num_classes()) the best.
/// The universe is the declared individual set extended by every individual
/// appearing in some coalition.
class CoalitionalRanking {
 public:
  CoalitionalRanking(std::vector<CoalitionMultiset> classes_worst_first,
                     std::set<Individual> declared_universe = {});

  int num_classes() const { return static_cast<int>(classes_.size()); }
  const CoalitionMultiset& class_at(int k) const;  // k in [1, l], worst-first
  const std::vector<CoalitionMultiset>& classes() const { return classes_; }
  const std::set<Individual>& universe() const { return universe_; }

  bool operator==(const CoalitionalRanking&) const = default;

 private:
  std::vector<CoalitionMultiset> classes_;
  std::set<Individual> universe_;
};

CoalitionalRanking sum_rankings(const CoalitionalRanking& a,
                                const CoalitionalRanking& b);
CoalitionalRanking add_to_class(const CoalitionalRanking& r,
                                const CoalitionMultiset& m, int k);
CoalitionalRanking apply_permutation(const CoalitionalRanking& r,
                                     const Permutation& sigma);
bool is_linear(const CoalitionalRanking& r);
bool is_symmetric_pair(const CoalitionalRanking& r, const Individual& x,
                       const Individual& y);

/// Total multiplicity of coalitions containing x across all classes.
std::int64_t appearance_count(const CoalitionalRanking& r, const Individual& x);

/// Same classes, universe extended by extra individuals.
CoalitionalRanking with_universe(const CoalitionalRanking& r,
                                 const std::set<Individual>& extra);

// Literal-style builders used by fixtures and tests.
Individual ind(std::string_view id);
Coalition coal(std::initializer_list<std::string_view> ids);
CoalitionMultiset mset(std::initializer_list<Coalition> coalitions);
CoalitionalRanking ranking_best_first(std::vector<CoalitionMultiset> classes,
                                      std::vector<Individual> declared = {});

}  // namespace coalrank
