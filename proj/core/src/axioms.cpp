#include "coalrank/axioms.hpp"

namespace coalrank {

namespace {

AxiomInstance base_instance(const SolutionId& id, AxiomId axiom,
                            const CoalitionalRanking& r, const Individual& x,
                            const Individual& y) {
  AxiomInstance inst;
  inst.solution = id;
  inst.axiom = axiom;
  inst.ranking = r;
  inst.x = x;
  inst.y = y;
  return inst;
}

Verdict failed(AxiomInstance witness) {
  Verdict v;
  v.pass = false;
  v.premise_held = true;
  v.witness = std::move(witness);
  return v;
}

void require_discriminating(const Coalition& s, const Individual& in,
                            const Individual& out, const char* name) {
  if (!s.contains(in) || s.contains(out)) {
    throw domain_error(std::string(name) +
                       " must contain the first individual and not the second");
  }
}

/// Enumerates sub-multisets of gamma in a fixed odometer order and returns
/// the first split whose middle ranking leaves the pair indifferent.
std::optional<SplitWitness> find_split(const SolutionId& id,
                                       const CoalitionalRanking& r,
                                       const CoalitionMultiset& gamma, int k1,
                                       const Individual& x,
                                       const Individual& y) {
  std::vector<std::pair<Coalition, std::int64_t>> entries(
      gamma.entries().begin(), gamma.entries().end());
  std::vector<std::int64_t> take(entries.size(), 0);
  while (true) {
    CoalitionMultiset lower;
    CoalitionMultiset upper;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      lower.add(entries[i].first, take[i]);
      upper.add(entries[i].first, entries[i].second - take[i]);
    }
    const CoalitionalRanking mid =
        add_to_class(add_to_class(r, lower, k1), upper, k1 + 1);
    if (evaluate(id, mid).indifferent(x, y)) {
      return SplitWitness{std::move(lower), std::move(upper)};
    }
    std::size_t i = 0;
    for (; i < entries.size(); ++i) {
      if (take[i] < entries[i].second) {
        ++take[i];
        break;
      }
      take[i] = 0;
    }
    if (i == entries.size()) return std::nullopt;
  }
}

}  // namespace

AxiomId parse_axiom(std::string_view text) {
  if (text == "nt") return AxiomId::NT;
  if (text == "econ") return AxiomId::ECON;
  if (text == "ipp") return AxiomId::IPP;
  if (text == "dcont") return AxiomId::DCONT;
  if (text == "dcont-star") return AxiomId::DCONT_STAR;
  if (text == "cu") return AxiomId::CU;
  if (text == "can") return AxiomId::CAN;
  if (text == "mon") return AxiomId::MON;
  throw parse_error("unknown axiom '" + std::string(text) + "'");
}

std::string_view axiom_name(AxiomId axiom) {
  switch (axiom) {
    case AxiomId::NT:
      return "nt";
    case AxiomId::ECON:
      return "econ";
    case AxiomId::IPP:
      return "ipp";
    case AxiomId::DCONT:
      return "dcont";
    case AxiomId::DCONT_STAR:
      return "dcont-star";
    case AxiomId::CU:
      return "cu";
    case AxiomId::CAN:
      return "can";
    case AxiomId::MON:
      return "mon";
  }
  return "?";
}

Verdict check_nt(const SolutionId& id, const CoalitionalRanking& r,
                 const Permutation& sigma, const Individual& x,
                 const Individual& y) {
  const CoalitionalRanking permuted = apply_permutation(r, sigma);
  const PairwiseRelation at_permuted = evaluate(id, permuted);
  const PairwiseRelation at_r = evaluate(id, r);
  const bool forward = !at_permuted.weakly_above(x, y) ||
                       at_r.weakly_above(sigma.apply(x), sigma.apply(y));
  const bool backward = !at_permuted.weakly_above(y, x) ||
                        at_r.weakly_above(sigma.apply(y), sigma.apply(x));
  if (forward && backward) return Verdict{.premise_held = true};
  AxiomInstance w = base_instance(id, AxiomId::NT, r, x, y);
  w.sigma = sigma;
  return failed(std::move(w));
}

Verdict check_econ(const SolutionId& id, const CoalitionalRanking& r,
                   const CoalitionalRanking& r_prime, const Individual& x,
                   const Individual& y) {
  if (r.num_classes() != r_prime.num_classes()) {
    throw domain_error("ECON needs rankings with equal class counts");
  }
  // Both parts live over the shared universe, so a pair can be judged in a
  // ranking where it appears in no coalition.
  const PairwiseRelation rel_a = evaluate(id, with_universe(r, r_prime.universe()));
  const PairwiseRelation rel_b = evaluate(id, with_universe(r_prime, r.universe()));
  const PairwiseRelation rel_sum = evaluate(id, sum_rankings(r, r_prime));
  bool ok = true;
  bool premise = false;
  const std::pair<const Individual*, const Individual*> orientations[2] = {
      {&x, &y}, {&y, &x}};
  for (const auto& [ap, bp] : orientations) {
    const Individual& a = *ap;
    const Individual& b = *bp;
    if (rel_a.weakly_above(a, b) && rel_b.weakly_above(a, b)) {
      premise = true;
      if (!rel_sum.weakly_above(a, b)) ok = false;
      if (rel_a.strictly_above(a, b) && !rel_sum.strictly_above(a, b)) {
        ok = false;
      }
      if (rel_b.strictly_above(a, b) && !rel_sum.strictly_above(a, b)) {
        ok = false;
      }
    }
  }
  if (ok) return Verdict{.premise_held = premise};
  AxiomInstance w = base_instance(id, AxiomId::ECON, r, x, y);
  w.ranking_prime = r_prime;
  return failed(std::move(w));
}

Verdict check_ipp(const SolutionId& id, const CoalitionalRanking& r,
                  const Coalition& s, const Individual& x,
                  const Individual& y) {
  require_discriminating(s, x, y, "IPP coalition");
  const CoalitionalRanking extended =
      add_to_class(r, CoalitionMultiset::unit(s), 1);
  const PairVerdict before = evaluate(id, r).verdict(x, y);
  const PairVerdict after = evaluate(id, extended).verdict(x, y);
  if (before == after) return Verdict{.premise_held = true};
  AxiomInstance w = base_instance(id, AxiomId::IPP, r, x, y);
  w.s = s;
  return failed(std::move(w));
}

Verdict check_dcont(const SolutionId& id, const CoalitionalRanking& r,
                    const Coalition& s, int k1, const Individual& x,
                    const Individual& y) {
  if (k1 < 1 || k1 >= r.num_classes()) {
    throw domain_error("DCONT shift index out of range");
  }
  const CoalitionMultiset unit = CoalitionMultiset::unit(s);
  const PairwiseRelation low = evaluate(id, add_to_class(r, unit, k1));
  const PairwiseRelation high = evaluate(id, add_to_class(r, unit, k1 + 1));
  const bool premise = low.strictly_above(x, y) || low.strictly_above(y, x);
  const bool ok = (!low.strictly_above(x, y) || !high.strictly_above(y, x)) &&
                  (!low.strictly_above(y, x) || !high.strictly_above(x, y));
  if (ok) return Verdict{.premise_held = premise};
  AxiomInstance w = base_instance(id, AxiomId::DCONT, r, x, y);
  w.s = s;
  w.k1 = k1;
  return failed(std::move(w));
}

Verdict check_dcont_star(const SolutionId& id, const CoalitionalRanking& r,
                         const CoalitionMultiset& gamma, int k1,
                         const Individual& x, const Individual& y) {
  if (k1 < 1 || k1 >= r.num_classes()) {
    throw domain_error("DCONT* shift index out of range");
  }
  if (gamma.total() > 6) {
    throw resource_error("DCONT* split enumeration capped at 6 units");
  }
  const PairwiseRelation low = evaluate(id, add_to_class(r, gamma, k1));
  const PairwiseRelation high = evaluate(id, add_to_class(r, gamma, k1 + 1));
  const bool premise = (low.strictly_above(x, y) && high.strictly_above(y, x)) ||
                       (low.strictly_above(y, x) && high.strictly_above(x, y));
  if (!premise) return Verdict{};
  auto split = find_split(id, r, gamma, k1, x, y);
  if (split.has_value()) {
    Verdict v;
    v.premise_held = true;
    v.split = std::move(split);
    return v;
  }
  AxiomInstance w = base_instance(id, AxiomId::DCONT_STAR, r, x, y);
  w.gamma = gamma;
  w.k1 = k1;
  return failed(std::move(w));
}

Verdict check_cu(const SolutionId& id, const CoalitionalRanking& r,
                 const Individual& x, const Individual& y) {
  if (!is_linear(r)) throw domain_error("CU is defined on linear rankings");
  if (!is_symmetric_pair(r, x, y)) {
    throw domain_error("CU needs a symmetric pair");
  }
  const PairVerdict given = evaluate(id, r).verdict(x, y);
  const PairVerdict wanted = evaluate(SolutionId::bi(), r).verdict(x, y);
  if (given == wanted) return Verdict{.premise_held = true};
  return failed(base_instance(id, AxiomId::CU, r, x, y));
}

Verdict check_can(const SolutionId& id, const CoalitionalRanking& r,
                  const Coalition& s, const Coalition& t, int k1, int k2,
                  const Individual& x, const Individual& y) {
  require_discriminating(s, x, y, "CAN coalition S");
  require_discriminating(t, y, x, "CAN coalition T");
  if (k1 < 2 || k1 > r.num_classes() || k2 < 2 || k2 > r.num_classes()) {
    throw domain_error("CAN class indices must lie in [2, l]");
  }
  const CoalitionMultiset us = CoalitionMultiset::unit(s);
  const CoalitionMultiset ut = CoalitionMultiset::unit(t);
  const PairVerdict upper =
      evaluate(id, add_to_class(add_to_class(r, us, k1), ut, k2)).verdict(x, y);
  const PairVerdict lower =
      evaluate(id, add_to_class(add_to_class(r, us, k1 - 1), ut, k2 - 1))
          .verdict(x, y);
  if (upper == lower) return Verdict{.premise_held = true};
  AxiomInstance w = base_instance(id, AxiomId::CAN, r, x, y);
  w.s = s;
  w.t = t;
  w.k1 = k1;
  w.k2 = k2;
  return failed(std::move(w));
}

Verdict check_mon(const SolutionId& id, const CoalitionalRanking& r,
                  const Coalition& s, int k_hat, const Individual& x,
                  const Individual& y) {
  require_discriminating(s, x, y, "MON coalition");
  if (k_hat < 1 || k_hat >= r.num_classes()) {
    throw domain_error("MON class index must lie in [1, l - 1]");
  }
  const CoalitionMultiset unit = CoalitionMultiset::unit(s);
  const PairwiseRelation at_k = evaluate(id, add_to_class(r, unit, k_hat));
  const bool premise = at_k.weakly_above(x, y);
  if (!premise) return Verdict{};
  const PairwiseRelation upgraded =
      evaluate(id, add_to_class(r, unit, k_hat + 1));
  if (upgraded.strictly_above(x, y)) return Verdict{.premise_held = true};
  AxiomInstance w = base_instance(id, AxiomId::MON, r, x, y);
  w.s = s;
  w.k_hat = k_hat;
  return failed(std::move(w));
}

namespace {

template <typename T>
const T& need(const std::optional<T>& field, const char* what) {
  if (!field.has_value()) {
    throw domain_error(std::string("axiom instance is missing ") + what);
  }
  return *field;
}

}  // namespace

Verdict replay(const AxiomInstance& inst) {
  switch (inst.axiom) {
    case AxiomId::NT:
      return check_nt(inst.solution, inst.ranking, need(inst.sigma, "sigma"),
                      inst.x, inst.y);
    case AxiomId::ECON:
      return check_econ(inst.solution, inst.ranking,
                        need(inst.ranking_prime, "the second ranking"), inst.x,
                        inst.y);
    case AxiomId::IPP:
      return check_ipp(inst.solution, inst.ranking, need(inst.s, "S"), inst.x,
                       inst.y);
    case AxiomId::DCONT:
      return check_dcont(inst.solution, inst.ranking, need(inst.s, "S"),
                         need(inst.k1, "k1"), inst.x, inst.y);
    case AxiomId::DCONT_STAR:
      return check_dcont_star(inst.solution, inst.ranking,
                              need(inst.gamma, "gamma"), need(inst.k1, "k1"),
                              inst.x, inst.y);
    case AxiomId::CU:
      return check_cu(inst.solution, inst.ranking, inst.x, inst.y);
    case AxiomId::CAN:
      return check_can(inst.solution, inst.ranking, need(inst.s, "S"),
                       need(inst.t, "T"), need(inst.k1, "k1"),
                       need(inst.k2, "k2"), inst.x, inst.y);
    case AxiomId::MON:
      return check_mon(inst.solution, inst.ranking, need(inst.s, "S"),
                       need(inst.k_hat, "k_hat"), inst.x, inst.y);
  }
  throw domain_error("unhandled axiom");
}

namespace {

bool still_fails(const AxiomInstance& inst) {
  try {
    return !replay(inst).pass;
  } catch (const std::exception&) {
    return false;  // reduction broke a precondition
  }
}

CoalitionalRanking drop_class(const CoalitionalRanking& r, int k) {
  std::vector<CoalitionMultiset> classes;
  for (int i = 1; i <= r.num_classes(); ++i) {
    if (i != k) classes.push_back(r.class_at(i));
  }
  return CoalitionalRanking(std::move(classes), r.universe());
}

CoalitionalRanking drop_unit(const CoalitionalRanking& r, int k,
                             const Coalition& c) {
  std::vector<CoalitionMultiset> classes = r.classes();
  CoalitionMultiset& cls = classes[static_cast<std::size_t>(k - 1)];
  cls = cls.minus(CoalitionMultiset::unit(c));
  return CoalitionalRanking(std::move(classes), r.universe());
}

bool try_class_drops(AxiomInstance& inst) {
  // Only axioms without class-index parameters tolerate changing l.
  const bool droppable = inst.axiom == AxiomId::NT ||
                         inst.axiom == AxiomId::ECON ||
                         inst.axiom == AxiomId::IPP || inst.axiom == AxiomId::CU;
  if (!droppable || inst.ranking.num_classes() <= 1) return false;
  for (int k = 1; k <= inst.ranking.num_classes(); ++k) {
    AxiomInstance candidate = inst;
    candidate.ranking = drop_class(inst.ranking, k);
    if (candidate.ranking_prime.has_value()) {
      candidate.ranking_prime = drop_class(*inst.ranking_prime, k);
    }
    if (still_fails(candidate)) {
      inst = std::move(candidate);
      return true;
    }
  }
  return false;
}

bool try_unit_drops(AxiomInstance& inst) {
  for (int which = 0; which < 2; ++which) {
    const CoalitionalRanking* target =
        which == 0 ? &inst.ranking
                   : (inst.ranking_prime.has_value() ? &*inst.ranking_prime
                                                     : nullptr);
    if (target == nullptr) continue;
    for (int k = 1; k <= target->num_classes(); ++k) {
      if (target->class_at(k).total() <= 1) continue;
      for (const auto& [c, n] : target->class_at(k).entries()) {
        AxiomInstance candidate = inst;
        if (which == 0) {
          candidate.ranking = drop_unit(*target, k, c);
        } else {
          candidate.ranking_prime = drop_unit(*target, k, c);
        }
        if (still_fails(candidate)) {
          inst = std::move(candidate);
          return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

AxiomInstance minimize_witness(const AxiomInstance& instance) {
  AxiomInstance current = instance;
  if (!still_fails(current)) return current;
  while (try_class_drops(current) || try_unit_drops(current)) {
  }
  return current;
}

}  // namespace coalrank
