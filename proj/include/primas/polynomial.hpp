#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "primas/coeff.hpp"
#include "primas/monomial.hpp"

namespace primas {

// Exact multivariate polynomial: finite map monomial -> nonzero coefficient
// over Q or F_p. Terms are stored under a structural key order; a TermOrder
// is supplied where leading terms or canonical serialization matter.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, mpq_class, MonomialKeyLess>;

  explicit Polynomial(CoeffDomain dom = CoeffDomain::Q()) : dom_(dom) {}
  static Polynomial zero(CoeffDomain dom) { return Polynomial(dom); }
  static Polynomial constant(const mpq_class& c, CoeffDomain dom);
  static Polynomial monomial(const Monomial& m, CoeffDomain dom, const mpq_class& c = 1);
  static Polynomial variable(VarId v, CoeffDomain dom);

  const CoeffDomain& domain() const { return dom_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t term_count() const { return terms_.size(); }
  int total_degree() const;  // -1 for the zero polynomial
  mpq_class coeff(const Monomial& m) const;
  std::vector<VarId> support_vars() const;
  // The unique monomial when the polynomial is a nonzero monomial times a unit.
  std::optional<Monomial> as_monomial() const;

  Polynomial add(const Polynomial& o) const;
  Polynomial sub(const Polynomial& o) const;
  Polynomial mul(const Polynomial& o) const;
  Polynomial neg() const;
  Polynomial scale(const mpq_class& c) const;
  Polynomial mul_term(const Monomial& m, const mpq_class& c) const;
  Polynomial pow(int k) const;

  bool operator==(const Polynomial& o) const { return dom_ == o.dom_ && terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Largest monomial under the given order (the polynomial must be nonzero).
  const Monomial& leading_monomial(const TermOrder& ord) const;
  mpq_class leading_coeff(const TermOrder& ord) const;
  Polynomial monic(const TermOrder& ord) const;

  // Canonical serialization: terms descending in the given order.
  std::string str(const TermOrder& ord = TermOrder::grevlex()) const;

  void add_term(const Monomial& m, const mpq_class& c);  // accumulate + drop zeros

 private:
  void check_domain(const Polynomial& o) const;

  CoeffDomain dom_;
  TermMap terms_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);

// Parses the expression grammar: variables [a-zA-Z][a-zA-Z0-9]* with
// optional _<index> suffix, operators + - * ^, integer and a/b rational
// literals, parentheses. When `allowed_vars` is given, any other variable
// is rejected (a fixed ambient ring was declared).
Polynomial parse_polynomial(const std::string& text, CoeffDomain dom,
                            const std::vector<VarId>* allowed_vars = nullptr);

}  // namespace primas
