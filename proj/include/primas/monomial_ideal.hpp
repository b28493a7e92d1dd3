#pragma once

#include <optional>
#include <string>
#include <vector>

#include "primas/groebner.hpp"
#include "primas/polynomial.hpp"

namespace primas {

// Monomial ideal in minimal-generator normal form: the unique set of
// pairwise non-dividing monomial generators, stored sorted. Membership is
// decidable by divisibility, so all the §1 calculus is exact here.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;  // the zero ideal
  static MonomialIdeal make(std::vector<Monomial> gens);
  static MonomialIdeal unit();
  static MonomialIdeal zero() { return MonomialIdeal(); }
  // Prime generated by a set of variables; the empty set gives (0).
  static MonomialIdeal variable_prime(std::vector<VarId> vs);

  const std::vector<Monomial>& min_gens() const { return gens_; }
  bool is_zero_ideal() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
  bool is_proper() const { return !is_unit(); }

  bool contains(const Monomial& m) const;
  // A polynomial lies in a monomial ideal iff every term does.
  bool contains(const Polynomial& p) const;
  bool contains(const MonomialIdeal& o) const;
  bool operator==(const MonomialIdeal& o) const { return gens_ == o.gens_; }
  bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }
  // Structural order for deterministic scans.
  int cmp(const MonomialIdeal& o) const;
  bool operator<(const MonomialIdeal& o) const { return cmp(o) < 0; }

  std::vector<VarId> support_vars() const;

  MonomialIdeal sum(const MonomialIdeal& o) const;
  MonomialIdeal intersect(const MonomialIdeal& o) const;  // pairwise lcms
  MonomialIdeal quotient(const Monomial& m) const;        // (I : m)
  MonomialIdeal quotient(const MonomialIdeal& o) const;   // (I : J)
  // (I : (v1*...*vk)^inf): strip the given variables from every generator.
  MonomialIdeal saturate_vars(const std::vector<VarId>& vs) const;
  MonomialIdeal saturate(const Monomial& m) const { return saturate_vars(m.support()); }

  // Ideal of the squarefree parts of the generators.
  MonomialIdeal radical() const;
  // True iff generated by distinct single variables (or zero ideal).
  bool is_variable_prime() const;

  // Minimal primes over a proper ideal: minimal variable transversals of
  // the generator supports, sorted deterministically.
  std::vector<MonomialIdeal> minimal_primes() const;

  // The associated prime (the radical) when the ideal is primary, i.e.
  // every variable occurring in a generator occurs as a pure power.
  std::optional<MonomialIdeal> is_primary() const;

  PolyIdeal to_poly_ideal(CoeffDomain dom = CoeffDomain::Q(),
                          TermOrder ord = TermOrder::grevlex()) const;
  std::string str() const;

 private:
  std::vector<Monomial> gens_;  // minimal, sorted by structural key
};

// Recognize a PolyIdeal whose generators are (scalar multiples of)
// monomials.
std::optional<MonomialIdeal> as_monomial_ideal(const PolyIdeal& I);

}  // namespace primas
