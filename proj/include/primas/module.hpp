#pragma once

#include <optional>
#include <string>
#include <vector>

#include "primas/decompose.hpp"
#include "primas/ideal_ops.hpp"
#include "primas/monomial_ideal.hpp"

namespace primas {

// Where a prime in a PrimeSet came from.
enum class Provenance {
  ass0_witness,       // it IS the annihilator of an element
  ass1_minimal_over,  // minimal over the annihilator of an element
  decomposition_prime,
  supp_membership,
};
std::string provenance_str(Provenance p);

struct TaggedPrime {
  MonomialIdeal prime;
  Provenance prov;
};

// Finite set of certified primes. `complete` records whether the search
// space was certified-complete (monomial-cyclic backends) or witness-level.
struct PrimeSet {
  std::vector<TaggedPrime> primes;  // sorted by prime, unique
  bool complete = true;

  void insert(MonomialIdeal p, Provenance prov);
  bool contains(const MonomialIdeal& p) const;
  std::vector<MonomialIdeal> ideals() const;
  bool same_ideals(const PrimeSet& o) const;
  std::string str() const;
};

// Finitely generated module presented as a finite direct sum ⊕ R/I_i.
// Unit summands are zero summands and are dropped on construction.
class FgModule {
 public:
  static FgModule direct_sum(std::vector<PolyIdeal> summands);
  static FgModule cyclic(PolyIdeal I) { return direct_sum({std::move(I)}); }
  static FgModule cyclic(const MonomialIdeal& I);

  const std::vector<PolyIdeal>& summands() const { return summands_; }
  std::size_t summand_count() const { return summands_.size(); }
  CoeffDomain domain() const;
  bool is_zero() const { return summands_.empty(); }
  bool all_monomial() const;
  // Throws unless all summands are monomial.
  std::vector<MonomialIdeal> monomial_summands() const;
  std::vector<VarId> ambient_vars() const;
  // Basis element e_i as a module element.
  struct ModElement generator(std::size_t i) const;
  std::string str() const;

 private:
  std::vector<PolyIdeal> summands_;
};

// Module element: one coset representative per summand.
struct ModElement {
  std::vector<Polynomial> comps;
  bool is_zero_in(const FgModule& M) const;
  std::string str() const;
};

// Ann_R(x) = ∩_i (I_i : x_i), exact.
PolyIdeal annihilator(const ModElement& x, const FgModule& M);

// (N : U) for a submodule N = ⊕ N_i/I_i (one ideal per summand, each
// containing I_i) and U spanned by finitely many elements.
PolyIdeal colon(const std::vector<PolyIdeal>& N, const std::vector<ModElement>& U,
                const FgModule& M);

struct ZeroDivisorWitness {
  bool is_zero_divisor = false;
  std::size_t summand = 0;
  Polynomial witness;  // x ≠ 0 with r·x = 0, placed in `summand`
};
ZeroDivisorWitness is_zero_divisor(const Polynomial& r, const FgModule& M);

// r nilpotent for M iff r ∈ rad(I_i) for every summand: monomial radicals
// where available, the t·r − 1 trick (1 ∈ I + (t·r − 1)) elsewhere.
bool is_nilpotent_for(const Polynomial& r, const FgModule& M);
bool in_radical(const Polynomial& r, const PolyIdeal& I);

// The prime p when M is p-coprimary (monomial backend; equals ass(M)
// being a singleton, cross-checked against the primary test for cyclic
// modules).
std::optional<MonomialIdeal> is_coprimary(const FgModule& M);

// Ass_0: primes that are annihilators of elements. Complete for
// monomial-cyclic sums, where scanning monomial cosets with exponents
// bounded by the summand's maximal generator degree suffices (see
// docs/ass-scan.md); witness-level (complete=false) otherwise.
PrimeSet ass0(const FgModule& M);
// Ass_1: primes minimal over annihilators of elements. Same search space.
PrimeSet ass1(const FgModule& M);
// Ass via normal decompositions of (0) per summand (monomial backend).
PrimeSet ass(const FgModule& M);

// Essential primes of an ideal N in R = ass(R/N).
PrimeSet essential_primes(const MonomialIdeal& N);

// Supp membership: some I_i ⊆ p. The monomial-prime overload is exact for
// every backend whose summand membership in p is decidable.
bool supp_contains(const MonomialIdeal& prime, const FgModule& M);

// r_M((0)) = ∩_i rad(I_i) for monomial-cyclic sums.
MonomialIdeal module_radical(const FgModule& M);

// Membership certificate for p ∈ Ass(M) in the localized-zero-divisor
// sense: per generator of p, explicit (x, s', ν) with s'·p^ν·x = 0 and x
// outside the complement-component of zero. Complete (with refutations)
// on the monomial backend.
struct AssMembershipReport {
  bool member = false;
  bool refuted = false;
  struct GeneratorWitness {
    Monomial generator;
    std::size_t summand = 0;
    Monomial x;
    Monomial s_prime;
    int nu = 1;
  };
  std::vector<GeneratorWitness> witnesses;
  std::string str() const;
};
AssMembershipReport ass_membership_witness(const MonomialIdeal& prime, const FgModule& M);

// The q-saturated instance ⊕ R/S(I_i), S = complement of q: the finite
// stand-in for the localization M_q on the monomial backend.
FgModule saturated_instance(const FgModule& M, const MonomialIdeal& q);

}  // namespace primas
