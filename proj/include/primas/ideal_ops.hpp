#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "primas/monomial_ideal.hpp"

namespace primas {

// (I : J) = { r | r·J ⊆ I }, computed generator by generator.
PolyIdeal ideal_quotient(const PolyIdeal& I, const PolyIdeal& J);
PolyIdeal ideal_quotient(const PolyIdeal& I, const Polynomial& f);

// I ∩ J via the t-trick (t·I + (1−t)·J, eliminate t); monomial fast path.
PolyIdeal intersect(const PolyIdeal& I, const PolyIdeal& J);

// (I : f^∞) = { g | f^n·g ∈ I for some n }, via elimination from
// I + (t·f − 1). Equals the S-component for S = powers of f.
PolyIdeal saturate(const PolyIdeal& I, const Polynomial& f);

// Multiplicatively closed subsets S ∋ 1 in the shapes the calculus needs.
class MultSetSpec {
 public:
  enum class Kind {
    powers_of,                    // { f^n }
    finitely_generated,           // multiplicative closure of {f_1..f_k, 1}
    complement_of_monomial_prime, // R \ (variable subset)
    extended,                     // base · { a^n }
  };

  static MultSetSpec powers_of(Polynomial f);
  static MultSetSpec finitely_generated(std::vector<Polynomial> fs);
  static MultSetSpec trivial(CoeffDomain dom);  // S = {1}
  static MultSetSpec complement_of_prime(std::vector<VarId> prime_vars);
  static MultSetSpec extended(MultSetSpec base, Polynomial extra);

  Kind kind() const { return kind_; }
  const std::vector<Polynomial>& elems() const { return elems_; }
  const std::vector<VarId>& prime_vars() const { return prime_vars_; }
  const MultSetSpec& base() const { return *base_; }
  const Polynomial& extra() const { return elems_.front(); }
  std::string str() const;

 private:
  explicit MultSetSpec(Kind k) : kind_(k) {}
  Kind kind_;
  std::vector<Polynomial> elems_;
  std::vector<VarId> prime_vars_;
  std::shared_ptr<const MultSetSpec> base_;
};

// S-component S(I) = { x | s·x ∈ I for some s ∈ S } of an ideal.
// complement_of_monomial_prime requires monomial input (where saturation by
// the outside variables is provably the same thing).
PolyIdeal s_component(const PolyIdeal& I, const MultSetSpec& S);
MonomialIdeal s_component(const MonomialIdeal& I, const MultSetSpec& S);

// Whether S meets the monomial prime (vars): decidable for all four kinds.
bool mult_set_meets_prime(const MultSetSpec& S, const MonomialIdeal& prime);

// Prime avoidance: either a witness element of `a` outside every prime, or
// the index of a prime containing `a`. Exact for monomial data; otherwise a
// bounded search that reports containment only when proved, and throws
// Inconclusive when the budget runs out.
struct AvoidanceResult {
  std::optional<Polynomial> witness;
  std::optional<std::size_t> contained_in;
};
AvoidanceResult prime_avoidance_witness(const PolyIdeal& a,
                                        const std::vector<PolyIdeal>& primes);

}  // namespace primas
