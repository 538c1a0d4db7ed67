#include "coalrank/oracles.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_set>
#include <vector>

namespace coalrank {

namespace {

// States are coalition sequences worst-first, packed four bits per position.
// Identical coalitions share an id, so swapping equal neighbors is a no-op.
std::uint64_t pack(const std::vector<std::uint8_t>& seq) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    key |= static_cast<std::uint64_t>(seq[i]) << (4 * i);
  }
  return key;
}

bool unanimously_supported(const std::vector<std::uint8_t>& seq,
                           const std::vector<bool>& has_x) {
  // Worst-first: once an x-coalition is seen, everything better must hold x.
  bool seen_x = false;
  for (const std::uint8_t id : seq) {
    if (has_x[id]) {
      seen_x = true;
    } else if (seen_x) {
      return false;
    }
  }
  return true;
}

void check_t(int t) {
  if (t < 1 || t > 3) throw domain_error("characteristic type must be 1, 2 or 3");
}

std::vector<Individual> sorted_universe(const CoalitionalRanking& r) {
  return {r.universe().begin(), r.universe().end()};
}

}  // namespace

std::int64_t swap_distance_oracle(const CoalitionalRanking& r,
                                  const Individual& x) {
  if (!is_linear(r)) {
    throw domain_error("swap-distance oracle is defined on linear rankings");
  }
  const int l = r.num_classes();
  if (l > kSwapOracleMaxClasses) {
    throw resource_error("swap-distance oracle capped at " +
                         std::to_string(kSwapOracleMaxClasses) + " classes");
  }

  std::map<Coalition, std::uint8_t> ids;
  std::vector<bool> has_x;
  std::vector<std::uint8_t> start;
  for (int k = 1; k <= l; ++k) {
    const Coalition& c = r.class_at(k).entries().begin()->first;
    const auto [it, inserted] =
        ids.emplace(c, static_cast<std::uint8_t>(ids.size()));
    if (inserted) has_x.push_back(c.contains(x));
    start.push_back(it->second);
  }

  if (unanimously_supported(start, has_x)) return 0;
  std::unordered_set<std::uint64_t> visited{pack(start)};
  std::deque<std::pair<std::vector<std::uint8_t>, std::int64_t>> queue;
  queue.emplace_back(start, 0);
  while (!queue.empty()) {
    const auto [seq, dist] = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      std::vector<std::uint8_t> next = seq;
      std::swap(next[i], next[i + 1]);
      if (!visited.insert(pack(next)).second) continue;
      if (unanimously_supported(next, has_x)) return dist + 1;
      queue.emplace_back(std::move(next), dist + 1);
    }
  }
  throw domain_error("swap-distance search exhausted without a goal state");
}

std::int64_t characteristic_value(const CoalitionalRanking& r, int t,
                                  const Coalition& s) {
  check_t(t);
  const int l = r.num_classes();
  std::vector<std::int64_t> totals;
  totals.reserve(static_cast<std::size_t>(l));
  for (const auto& cls : r.classes()) totals.push_back(cls.total());

  std::int64_t value = 0;
  std::int64_t below = 0;
  std::int64_t above = 0;
  for (const std::int64_t n : totals) above += n;
  for (int k = 1; k <= l; ++k) {
    const std::int64_t here = totals[static_cast<std::size_t>(k - 1)];
    above -= here;
    const std::int64_t count = r.class_at(k).count(s);
    if (count > 0) {
      std::int64_t weight = 0;
      switch (t) {
        case 1:
          weight = k - 1;
          break;
        case 2:
          weight = below;
          break;
        case 3:
          weight = below - above;
          break;
      }
      value += count * weight;
    }
    below += here;
  }
  return value;
}

CharacteristicGame::CharacteristicGame(CoalitionalRanking ranking_in, int t_in)
    : ranking(std::move(ranking_in)), t(t_in) {
  check_t(t);
}

std::int64_t CharacteristicGame::value(const Coalition& s) const {
  return characteristic_value(ranking, t, s);
}

Rational banzhaf(const CoalitionalRanking& r, int t, const Individual& x,
                 int max_universe) {
  check_t(t);
  const auto xs = sorted_universe(r);
  const int n = static_cast<int>(xs.size());
  if (n > max_universe) {
    throw resource_error("universe size " + std::to_string(n) +
                         " above Banzhaf cap " + std::to_string(max_universe));
  }
  if (!r.universe().contains(x)) {
    throw domain_error("'" + x.id() + "' is not in the universe");
  }

  std::vector<Individual> others;
  for (const auto& z : xs) {
    if (z != x) others.push_back(z);
  }
  const int m = static_cast<int>(others.size());
  std::int64_t sum = 0;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<Individual> members;
    for (int i = 0; i < m; ++i) {
      if (mask & (1u << i)) members.push_back(others[static_cast<std::size_t>(i)]);
    }
    const Coalition without{std::vector<Individual>(members)};
    members.push_back(x);
    const Coalition with{std::move(members)};
    sum += characteristic_value(r, t, with) - characteristic_value(r, t, without);
  }
  std::int64_t denom = 1;
  for (int i = 1; i < n; ++i) denom *= 2;
  return Rational(sum, denom);
}

PairwiseRelation rank_by_banzhaf(const CoalitionalRanking& r, int t,
                                 int max_universe) {
  std::map<Individual, Rational> values;
  for (const auto& x : r.universe()) {
    values.emplace(x, banzhaf(r, t, x, max_universe));
  }
  return PairwiseRelation(
      r.universe(), [&](const Individual& a, const Individual& b) {
        const auto cmp = values.at(a) <=> values.at(b);
        if (cmp == std::strong_ordering::greater) return PairVerdict::FirstStrict;
        if (cmp == std::strong_ordering::less) return PairVerdict::SecondStrict;
        return PairVerdict::Indifferent;
      });
}

}  // namespace coalrank
