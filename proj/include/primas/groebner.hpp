#pragma once

#include <atomic>
#include <memory>
#include <vector>

#include "primas/polynomial.hpp"

namespace primas {

// Process-wide knobs for the engine. The pair budget bounds the number of
// S-pair reductions per Buchberger run; exceeding it raises BudgetExceeded
// rather than hanging on inputs beyond desk scale.
struct EngineConfig {
  static std::atomic<long> pair_budget;   // default 50000
  static std::atomic<bool> cache_enabled; // default true
  static void clear_cache();
};

// Finitely generated polynomial ideal. Generators are kept as given (zero
// generators dropped); the reduced Groebner basis is computed on demand and
// memoized in a process-wide cache keyed by (order, canonical generators).
struct PolyIdeal {
  std::vector<Polynomial> gens;
  TermOrder order;

  PolyIdeal() = default;
  PolyIdeal(std::vector<Polynomial> g, TermOrder ord = TermOrder::grevlex());

  CoeffDomain domain() const;
  bool is_zero_ideal() const { return gens.empty(); }
  std::vector<VarId> support_vars() const;
  std::string str() const;
};

// Reduced Groebner basis: monic elements, no term of any element divisible
// by the leading monomial of another, sorted descending by leading monomial.
struct GroebnerBasis {
  std::vector<Polynomial> elems;
  TermOrder order;

  bool contains_one() const;
  std::string str() const;
};

// Unique reduced basis; deterministic in the input (shuffling the
// generators yields the identical result).
GroebnerBasis buchberger(const PolyIdeal& I);

// Remainder of full division: no term of the result is divisible by any
// leading monomial of G. Zero iff p lies in the ideal spanned by G.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& G);

bool ideal_member(const Polynomial& p, const PolyIdeal& I);

// I with the same generators, equal as an ideal, but basis recomputed under
// another order.
PolyIdeal with_order(const PolyIdeal& I, const TermOrder& ord);

// Elimination ideal I ∩ k[vars \ drop], via a block order with `drop` in
// front.
PolyIdeal eliminate(const PolyIdeal& I, const std::vector<VarId>& drop);

// Equality as ideals (two-sided reduced-basis comparison).
bool ideal_equal(const PolyIdeal& I, const PolyIdeal& J);
bool ideal_contains(const PolyIdeal& I, const Polynomial& p);
bool ideal_contains(const PolyIdeal& I, const PolyIdeal& J);  // I ⊇ J

}  // namespace primas
