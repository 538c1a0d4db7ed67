#include "coalrank/model.hpp"

#include <algorithm>
#include <cctype>

namespace coalrank {

Individual::Individual(std::string id) : id_(std::move(id)) {
  if (id_.empty()) throw domain_error("individual id must be non-empty");
  for (unsigned char ch : id_) {
    if (std::isspace(ch)) {
      throw domain_error("individual id '" + id_ + "' contains whitespace");
    }
  }
}

Coalition::Coalition(std::vector<Individual> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  const auto dup = std::adjacent_find(members_.begin(), members_.end());
  if (dup != members_.end()) {
    throw domain_error("duplicate member '" + dup->id() + "' in coalition");
  }
}

bool Coalition::contains(const Individual& x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

bool Coalition::contains_all(const Coalition& other) const {
  return std::includes(members_.begin(), members_.end(),
                       other.members().begin(), other.members().end());
}

std::string Coalition::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i > 0) s += ',';
    s += members_[i].id();
  }
  s += '}';
  return s;
}

CoalitionMultiset CoalitionMultiset::unit(Coalition c) {
  CoalitionMultiset m;
  m.add(c);
  return m;
}

void CoalitionMultiset::add(const Coalition& c, std::int64_t count) {
  if (count < 0) throw domain_error("negative multiplicity");
  if (count == 0) return;
  std::int64_t& slot = entries_[c];
  if (slot > kMaxMultiplicity - count) {
    throw domain_error("multiplicity above cap for coalition " + c.str());
  }
  slot += count;
  total_ += count;
}

std::int64_t CoalitionMultiset::count(const Coalition& c) const {
  const auto it = entries_.find(c);
  return it == entries_.end() ? 0 : it->second;
}

CoalitionMultiset operator+(const CoalitionMultiset& a,
                            const CoalitionMultiset& b) {
  CoalitionMultiset out = a;
  for (const auto& [c, n] : b.entries()) out.add(c, n);
  return out;
}

CoalitionMultiset CoalitionMultiset::minus(const CoalitionMultiset& o) const {
  CoalitionMultiset out;
  for (const auto& [c, n] : entries_) {
    const std::int64_t kept = n - o.count(c);
    if (kept > 0) out.add(c, kept);
  }
  return out;
}

Permutation::Permutation(std::map<Individual, Individual> mapping)
    : mapping_(std::move(mapping)) {
  std::set<Individual> image;
  for (const auto& [from, to] : mapping_) image.insert(to);
  if (image.size() != mapping_.size()) {
    throw domain_error("permutation is not injective");
  }
  for (const auto& [from, to] : mapping_) {
    if (!mapping_.contains(to)) {
      throw domain_error("permutation image leaves its domain at '" +
                         to.id() + "'");
    }
  }
}

Permutation Permutation::identity(const std::set<Individual>& universe) {
  std::map<Individual, Individual> m;
  for (const auto& x : universe) m.emplace(x, x);
  return Permutation(std::move(m));
}

Permutation Permutation::transposition(const std::set<Individual>& universe,
                                       const Individual& a,
                                       const Individual& b) {
  if (!universe.contains(a) || !universe.contains(b)) {
    throw domain_error("transposition endpoints must be in the universe");
  }
  std::map<Individual, Individual> m;
  for (const auto& x : universe) m.emplace(x, x);
  m.at(a) = b;
  m.at(b) = a;
  return Permutation(std::move(m));
}

const Individual& Permutation::apply(const Individual& x) const {
  const auto it = mapping_.find(x);
  if (it == mapping_.end()) {
    throw domain_error("permutation undefined on '" + x.id() + "'");
  }
  return it->second;
}

Coalition Permutation::apply(const Coalition& c) const {
  std::vector<Individual> mapped;
  mapped.reserve(c.size());
  for (const auto& x : c.members()) mapped.push_back(apply(x));
  return Coalition(std::move(mapped));
}

Permutation Permutation::inverse() const {
  std::map<Individual, Individual> m;
  for (const auto& [from, to] : mapping_) m.emplace(to, from);
  return Permutation(std::move(m));
}

bool Permutation::covers(const std::set<Individual>& universe) const {
  for (const auto& x : universe) {
    const auto it = mapping_.find(x);
    if (it == mapping_.end() || !universe.contains(it->second)) return false;
  }
  return true;
}

CoalitionalRanking::CoalitionalRanking(
    std::vector<CoalitionMultiset> classes_worst_first,
    std::set<Individual> declared_universe)
    : classes_(std::move(classes_worst_first)),
      universe_(std::move(declared_universe)) {
  if (classes_.empty()) {
    throw domain_error("a coalitional ranking needs at least one class");
  }
  if (classes_.size() > static_cast<std::size_t>(kMaxClasses)) {
    throw domain_error("class count above cap");
  }
  for (const auto& cls : classes_) {
    if (cls.empty()) throw domain_error("equivalence classes must be nonempty");
    for (const auto& [c, n] : cls.entries()) {
      universe_.insert(c.members().begin(), c.members().end());
    }
  }
}

const CoalitionMultiset& CoalitionalRanking::class_at(int k) const {
  if (k < 1 || k > num_classes()) {
    throw domain_error("class index " + std::to_string(k) + " out of range");
  }
  return classes_[static_cast<std::size_t>(k - 1)];
}

CoalitionalRanking sum_rankings(const CoalitionalRanking& a,
                                const CoalitionalRanking& b) {
  if (a.num_classes() != b.num_classes()) {
    throw domain_error("rankings with different class counts cannot be summed");
  }
  std::vector<CoalitionMultiset> classes;
  classes.reserve(a.classes().size());
  for (int k = 1; k <= a.num_classes(); ++k) {
    classes.push_back(a.class_at(k) + b.class_at(k));
  }
  std::set<Individual> universe = a.universe();
  universe.insert(b.universe().begin(), b.universe().end());
  return CoalitionalRanking(std::move(classes), std::move(universe));
}

CoalitionalRanking add_to_class(const CoalitionalRanking& r,
                                const CoalitionMultiset& m, int k) {
  if (k < 1 || k > r.num_classes()) {
    throw domain_error("class index " + std::to_string(k) + " out of range");
  }
  std::vector<CoalitionMultiset> classes = r.classes();
  classes[static_cast<std::size_t>(k - 1)] =
      classes[static_cast<std::size_t>(k - 1)] + m;
  return CoalitionalRanking(std::move(classes), r.universe());
}

CoalitionalRanking apply_permutation(const CoalitionalRanking& r,
                                     const Permutation& sigma) {
  if (!sigma.covers(r.universe())) {
    throw domain_error("permutation is not a bijection on the universe");
  }
  // m^sigma(S) = m(sigma(S)), so each entry (T, n) lands on sigma^{-1}(T).
  const Permutation inv = sigma.inverse();
  std::vector<CoalitionMultiset> classes;
  classes.reserve(r.classes().size());
  for (const auto& cls : r.classes()) {
    CoalitionMultiset mapped;
    for (const auto& [c, n] : cls.entries()) mapped.add(inv.apply(c), n);
    classes.push_back(std::move(mapped));
  }
  return CoalitionalRanking(std::move(classes), r.universe());
}

bool is_linear(const CoalitionalRanking& r) {
  for (const auto& cls : r.classes()) {
    if (cls.total() != 1) return false;
  }
  return true;
}

std::int64_t appearance_count(const CoalitionalRanking& r,
                              const Individual& x) {
  std::int64_t n = 0;
  for (const auto& cls : r.classes()) {
    for (const auto& [c, count] : cls.entries()) {
      if (c.contains(x)) n += count;
    }
  }
  return n;
}

bool is_symmetric_pair(const CoalitionalRanking& r, const Individual& x,
                       const Individual& y) {
  if (x == y) throw domain_error("symmetric-pair test needs two distinct ids");
  return appearance_count(r, x) == appearance_count(r, y);
}

CoalitionalRanking with_universe(const CoalitionalRanking& r,
                                 const std::set<Individual>& extra) {
  std::set<Individual> universe = r.universe();
  universe.insert(extra.begin(), extra.end());
  return CoalitionalRanking(r.classes(), std::move(universe));
}

Individual ind(std::string_view id) { return Individual(std::string(id)); }

Coalition coal(std::initializer_list<std::string_view> ids) {
  std::vector<Individual> members;
  members.reserve(ids.size());
  for (std::string_view id : ids) members.push_back(ind(id));
  return Coalition(std::move(members));
}

CoalitionMultiset mset(std::initializer_list<Coalition> coalitions) {
  CoalitionMultiset m;
  for (const auto& c : coalitions) m.add(c);
  return m;
}

CoalitionalRanking ranking_best_first(std::vector<CoalitionMultiset> classes,
                                      std::vector<Individual> declared) {
  std::reverse(classes.begin(), classes.end());
  std::set<Individual> universe(declared.begin(), declared.end());
  return CoalitionalRanking(std::move(classes), std::move(universe));
}

}  // namespace coalrank
