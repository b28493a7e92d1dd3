#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "primas/error.hpp"

namespace primas {

// Totally ordered value groups: Z^k with lexicographic order, or Q.
struct ValueGroup {
  enum class Kind { zk_lex, rationals };
  Kind kind = Kind::rationals;
  int rank = 1;

  static ValueGroup Zlex(int k) { return {Kind::zk_lex, k}; }
  static ValueGroup Q() { return {Kind::rationals, 1}; }
  bool operator==(const ValueGroup& o) const { return kind == o.kind && rank == o.rank; }
  bool operator!=(const ValueGroup& o) const { return !(*this == o); }
  bool discrete() const { return kind == Kind::zk_lex; }
  std::string str() const;
};

// Group element as a rank-sized tuple (integral entries for Z^k).
using GroupElem = std::vector<mpq_class>;

int lex_cmp(const GroupElem& a, const GroupElem& b);
GroupElem elem_add(const GroupElem& a, const GroupElem& b);
GroupElem elem_sub(const GroupElem& a, const GroupElem& b);
GroupElem elem_scale(const GroupElem& a, long n);
GroupElem zero_elem(const ValueGroup& g);
std::string elem_str(const GroupElem& a);

// A ring element of the valuation ring is represented purely by its value
// ν(z) ≥ 0; every predicate of the calculus factors through ν.
struct ValElement {
  ValueGroup group;
  GroupElem value;  // ≥ 0
  std::string str() const { return elem_str(value); }
};

// Ideal of a valuation ring as an upward-closed value set:
//   closed(γ)  = { z : ν(z) ≥ γ }
//   open(γ)    = { z : ν(z) > γ }       (in Z^k this is closed(γ + e_k))
//   prefix(p)  = { z : first |p| coords of ν(z) ≥_lex p }, |p| < k —
//                the limit cuts such as P_1 = { ν ≥ (1, n) for some n },
//                which no single full-length threshold captures
//   zero, unit
// The ideal lattice of a valuation ring is totally ordered by inclusion.
class CutIdeal {
 public:
  enum class Kind { zero, unit, closed, open, prefix };

  static CutIdeal zero(const ValueGroup& g) { return CutIdeal(g, Kind::zero, {}); }
  static CutIdeal unit(const ValueGroup& g) { return CutIdeal(g, Kind::unit, {}); }
  static CutIdeal closed_at(const ValueGroup& g, GroupElem gamma);
  static CutIdeal open_at(const ValueGroup& g, GroupElem gamma);
  // Limit cut from a strict prefix (zk_lex only).
  static CutIdeal prefix_at(const ValueGroup& g, GroupElem prefix);
  // The maximal ideal { ν > 0 }.
  static CutIdeal maximal(const ValueGroup& g);
  // The prime with first nonzero coordinate at position j (1-based):
  // j = rank gives the maximal ideal, j < rank a limit cut.
  static CutIdeal prime_at_level(const ValueGroup& g, int j);

  const ValueGroup& group() const { return group_; }
  Kind kind() const { return kind_; }
  const GroupElem& threshold() const { return threshold_; }
  bool is_zero() const { return kind_ == Kind::zero; }
  bool is_unit() const { return kind_ == Kind::unit; }
  bool is_proper_nonzero() const { return !is_zero() && !is_unit(); }

  bool member(const GroupElem& v) const;
  bool member(const ValElement& z) const;
  bool subset_of(const CutIdeal& o) const;
  bool operator==(const CutIdeal& o) const;
  bool operator!=(const CutIdeal& o) const { return !(*this == o); }

  std::string str() const;

 private:
  CutIdeal(ValueGroup g, Kind k, GroupElem t)
      : group_(g), kind_(k), threshold_(std::move(t)) {}
  // Threshold length: full rank for closed/open, shorter for prefix.
  std::size_t len() const { return threshold_.size(); }
  friend CutIdeal cut_product(const CutIdeal&, const CutIdeal&);
  friend CutIdeal cut_quotient(const CutIdeal&, const CutIdeal&);
  friend class CutOps;

  ValueGroup group_;
  Kind kind_;
  GroupElem threshold_;
};

// Lattice/arithmetic operations. intersect/sum are max/min in the total
// inclusion order; product adds thresholds; quotient (I : J) solves
// r + S_J ⊆ S_I exactly (the boundary rule is pinned by the value-lattice
// oracle in the tests).
CutIdeal cut_intersect(const CutIdeal& I, const CutIdeal& J);
CutIdeal cut_sum(const CutIdeal& I, const CutIdeal& J);
CutIdeal cut_product(const CutIdeal& I, const CutIdeal& J);
CutIdeal cut_quotient(const CutIdeal& I, const CutIdeal& J);
// Principal ideal of an element value.
CutIdeal principal_cut(const ValueGroup& g, const GroupElem& v);

struct CutClass {
  enum class Kind { prime, primary, neither, unit, zero };
  Kind kind;
  std::optional<CutIdeal> prime;  // for primary: the radical
  std::string str() const;
};

// The radical { r : r^n ∈ I for some n }, always one of (0) ⊂ P_1 ⊂ ... ⊂ P_k.
CutIdeal cut_radical(const CutIdeal& I);
// Prime test including (0) (valuation rings are domains).
bool cut_is_prime(const CutIdeal& I);
CutClass cut_classify(const CutIdeal& I);

// Total-order argument: every cut is indecomposable. The certificate
// records sampled pairs J, K ⊋ I whose meet is one of the two.
struct IndecomposabilityCertificate {
  bool indecomposable = true;
  struct Sample {
    CutIdeal a, b, meet;
  };
  std::vector<Sample> samples;
};
IndecomposabilityCertificate cut_indecomposable(const CutIdeal& I, int n_samples = 8,
                                                std::uint64_t seed = 42);

// Essential primes of a proper nonzero cut ideal a in R: Ass(R/a).
CutIdeal essential_prime_of_cut(const CutIdeal& a);

// The two module shapes the §5 valuation examples need: R/a (elements are
// representative values below the cut) and Quot(R)/R (elements are strictly
// negative value classes; only over Z, rank 1).
class ValModule {
 public:
  enum class Kind { quotient_by_cut, quot_field_mod_ring };

  static ValModule quotient(const CutIdeal& a);
  static ValModule quot_field_mod_ring(const ValueGroup& g);

  Kind kind() const { return kind_; }
  const ValueGroup& group() const { return group_; }
  const CutIdeal& cut() const { return cut_; }

  // Is the given representative value the zero element of the module?
  bool elem_is_zero(const GroupElem& v) const;
  // Ann_R(x) for the class of the element with value v.
  CutIdeal annihilator_of(const GroupElem& v) const;
  bool is_zero_divisor(const GroupElem& r) const;
  bool is_nilpotent_for(const GroupElem& r) const;
  // The prime when zero divisors = nilpotents = a prime cut.
  std::optional<CutIdeal> is_coprimary() const;
  // Does some x have Ann(x) exactly equal to the given prime?
  struct Ass0Witness {
    bool exists = false;
    GroupElem witness;  // element value when exists
  };
  Ass0Witness ass0_witness_exists(const CutIdeal& prime) const;
  // Ann_R(M) as a cut.
  CutIdeal annihilator_of_module() const;

  // Zero-divisor and nilpotent sets as cuts (exact).
  CutIdeal zero_divisor_set() const;
  CutIdeal nilpotent_set() const;

  // Ass(M) on this backend: (0) decomposes in M iff the defining cut is
  // primary (intersections of cuts are trivial in a chain), so Ass is the
  // coprimary prime or nothing. Throws UnsupportedInput when no
  // decomposition exists.
  CutIdeal ass() const;

 private:
  ValModule(Kind k, ValueGroup g, CutIdeal c) : kind_(k), group_(g), cut_(std::move(c)) {}
  Kind kind_;
  ValueGroup group_;
  CutIdeal cut_;
};

}  // namespace primas
