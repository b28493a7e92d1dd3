#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "primas/vars.hpp"

namespace primas {

// Power product with finite support. Exponents are kept sorted by variable
// rank (greatest variable first) and are always strictly positive; two
// monomials are equal iff their exponent maps are equal.
class Monomial {
 public:
  using Entry = std::pair<VarId, int>;

  Monomial() = default;
  static Monomial one() { return Monomial(); }
  static Monomial var(VarId v, int exp = 1);
  // Entries in any order, duplicates combined, zero exponents dropped.
  static Monomial from_entries(std::vector<Entry> entries);

  bool is_one() const { return entries_.empty(); }
  int degree() const;
  int exponent(VarId v) const;
  const std::vector<Entry>& entries() const { return entries_; }
  std::vector<VarId> support() const;

  Monomial times(const Monomial& o) const;
  Monomial pow(int k) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);
  bool divides(const Monomial& o) const;
  // Exact quotient; caller guarantees divisibility.
  Monomial div(const Monomial& o) const;
  // this : o  =  this / gcd(this, o)
  Monomial colon(const Monomial& o) const;
  // Drop all variables in the given (sorted-unique or not) support set.
  Monomial erase_vars(const std::vector<VarId>& vs) const;
  // Product of the support variables (exponents clipped to 1).
  Monomial squarefree_part() const;

  bool operator==(const Monomial& o) const { return entries_ == o.entries_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  // Structural total order used for canonical storage; not a term order.
  int key_cmp(const Monomial& o) const;
  bool key_less(const Monomial& o) const { return key_cmp(o) < 0; }

  std::string str() const;

 private:
  std::vector<Entry> entries_;
};

struct MonomialKeyLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return a.key_less(b); }
};

// Term orders: total, multiplicative, well-founded orders on monomials.
// Block elimination compares the front-variable part first (grevlex within
// each block), so the front block can be eliminated from a basis.
class TermOrder {
 public:
  enum class Kind { lex, grevlex, block_elim };

  TermOrder() : kind_(Kind::grevlex) {}
  static TermOrder lex() { return TermOrder(Kind::lex, {}); }
  static TermOrder grevlex() { return TermOrder(Kind::grevlex, {}); }
  static TermOrder block_elim(std::vector<VarId> front);

  Kind kind() const { return kind_; }
  const std::vector<VarId>& front() const { return front_; }

  // <0, 0, >0 when a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  bool operator==(const TermOrder& o) const { return kind_ == o.kind_ && front_ == o.front_; }
  std::string str() const;

 private:
  TermOrder(Kind k, std::vector<VarId> f) : kind_(k), front_(std::move(f)) {}
  bool in_front(VarId v) const;

  Kind kind_;
  std::vector<VarId> front_;  // sorted by rank
};

}  // namespace primas
