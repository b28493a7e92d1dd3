#include "primas/decompose.hpp"

#include <algorithm>
#include <random>

#include "primas/error.hpp"

namespace primas {

namespace {

MonomialIdeal intersect_all(const std::vector<PrimaryComponent>& comps) {
  if (comps.empty()) return MonomialIdeal::unit();
  MonomialIdeal r = comps.front().component;
  for (std::size_t i = 1; i < comps.size(); ++i) r = r.intersect(comps[i].component);
  return r;
}

// Raw splitting recursion; emits possibly redundant primary components.
void split_rec(const MonomialIdeal& I, const SplitStrategy& strat, std::mt19937_64* rng,
               std::vector<PrimaryComponent>& out) {
  if (I.is_unit()) return;  // unit branch contributes nothing to an intersection
  if (auto prime = I.is_primary()) {
    out.push_back({I, *prime});
    return;
  }

  // candidate pivots: minimal generators with mixed support
  std::vector<const Monomial*> mixed;
  for (const Monomial& g : I.min_gens())
    if (g.support().size() >= 2) mixed.push_back(&g);
  // is_primary failed, so a mixed generator exists
  if (mixed.empty()) throw UnsupportedInput("split: no mixed generator in non-primary ideal");

  const Monomial* pivot;
  VarId split_var;
  if (rng) {
    pivot = mixed[(*rng)() % mixed.size()];
    auto supp = pivot->support();
    split_var = supp[(*rng)() % supp.size()];
  } else {
    pivot = *std::min_element(mixed.begin(), mixed.end(),
                              [&](const Monomial* a, const Monomial* b) {
                                return strat.order.less(*a, *b);
                              });
    auto supp = pivot->support();
    split_var = *std::min_element(supp.begin(), supp.end(), [&](VarId a, VarId b) {
      return strat.order.less(Monomial::var(a), Monomial::var(b));
    });
  }

  Monomial u = Monomial::var(split_var, pivot->exponent(split_var));
  Monomial v = pivot->div(u);
  split_rec(I.sum(MonomialIdeal::make({u})), strat, rng, out);
  split_rec(I.sum(MonomialIdeal::make({v})), strat, rng, out);
}

}  // namespace

bool DecompositionReport::verify() const {
  if (components.empty()) return false;
  MonomialIdeal meet = intersect_all(components);
  if (!(meet.contains(input) && input.contains(meet))) return false;
  for (std::size_t i = 0; i < components.size(); ++i) {
    auto prime = components[i].component.is_primary();
    if (!prime || *prime != components[i].prime) return false;
  }
  if (normalized) {
    for (std::size_t i = 0; i < components.size(); ++i)
      for (std::size_t j = i + 1; j < components.size(); ++j)
        if (components[i].prime == components[j].prime) return false;
    if (certs.irredundancy_witness.size() != components.size()) return false;
    for (std::size_t i = 0; i < components.size(); ++i) {
      const Monomial& w = certs.irredundancy_witness[i];
      if (components[i].component.contains(w)) return false;
      for (std::size_t j = 0; j < components.size(); ++j)
        if (j != i && !components[j].component.contains(w)) return false;
    }
  }
  return true;
}

std::string DecompositionReport::str() const {
  std::string s;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) s += " ∩ ";
    s += components[i].component.str();
  }
  return s;
}

DecompositionReport normalize_decomposition(std::vector<PrimaryComponent> components,
                                            const MonomialIdeal& ambient) {
  MonomialIdeal meet = intersect_all(components);
  if (!(meet.contains(ambient) && ambient.contains(meet)))
    throw UnsupportedInput("components do not intersect to the ambient ideal");

  // 1. group components with equal primes and intersect them
  std::sort(components.begin(), components.end());
  std::vector<PrimaryComponent> grouped;
  for (const PrimaryComponent& c : components) {
    if (!grouped.empty() && grouped.back().prime == c.prime)
      grouped.back().component = grouped.back().component.intersect(c.component);
    else
      grouped.push_back(c);
  }

  // 2. drop any component containing the intersection of the others;
  //    deterministic sorted scan, restarted until stable
  std::sort(grouped.begin(), grouped.end());
  bool removed = true;
  while (removed && grouped.size() > 1) {
    removed = false;
    for (std::size_t i = 0; i < grouped.size(); ++i) {
      MonomialIdeal others = MonomialIdeal::unit();
      bool first = true;
      for (std::size_t j = 0; j < grouped.size(); ++j) {
        if (j == i) continue;
        others = first ? grouped[j].component : others.intersect(grouped[j].component);
        first = false;
      }
      if (grouped[i].component.contains(others)) {
        grouped.erase(grouped.begin() + static_cast<std::ptrdiff_t>(i));
        removed = true;
        break;
      }
    }
  }

  DecompositionReport rep;
  rep.input = ambient;
  rep.components = std::move(grouped);
  rep.normalized = true;

  rep.certs.intersection_equal = true;  // established below by construction + recheck
  MonomialIdeal final_meet = intersect_all(rep.components);
  rep.certs.intersection_equal =
      final_meet.contains(ambient) && ambient.contains(final_meet);
  for (const PrimaryComponent& c : rep.components) {
    auto prime = c.component.is_primary();
    rep.certs.primary_evidence.push_back(prime ? *prime : MonomialIdeal::unit());
  }
  rep.certs.distinct_primes = true;
  for (std::size_t i = 0; i + 1 < rep.components.size(); ++i)
    if (rep.components[i].prime == rep.components[i + 1].prime)
      rep.certs.distinct_primes = false;

  // irredundancy witnesses: a generator of ∩(others) outside the component
  for (std::size_t i = 0; i < rep.components.size(); ++i) {
    if (rep.components.size() == 1) {
      // single component: witness is vacuous; use 1 ∉ component
      rep.certs.irredundancy_witness.push_back(Monomial::one());
      continue;
    }
    MonomialIdeal others = MonomialIdeal::unit();
    bool first = true;
    for (std::size_t j = 0; j < rep.components.size(); ++j) {
      if (j == i) continue;
      others = first ? rep.components[j].component : others.intersect(rep.components[j].component);
      first = false;
    }
    Monomial witness = Monomial::one();
    bool found = false;
    for (const Monomial& g : others.min_gens())
      if (!rep.components[i].component.contains(g)) {
        witness = g;
        found = true;
        break;
      }
    if (!found) throw UnsupportedInput("irredundancy witness missing after normalization");
    rep.certs.irredundancy_witness.push_back(witness);
  }
  return rep;
}

DecompositionReport primary_decompose_monomial(const MonomialIdeal& I,
                                               const SplitStrategy& strategy) {
  if (I.is_unit()) throw UnsupportedInput("primary decomposition of the unit ideal");
  std::optional<std::mt19937_64> rng;
  if (strategy.shuffle_seed) rng.emplace(*strategy.shuffle_seed);
  std::vector<PrimaryComponent> raw;
  split_rec(I, strategy, rng ? &*rng : nullptr, raw);
  return normalize_decomposition(std::move(raw), I);
}

}  // namespace primas
