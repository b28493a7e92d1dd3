#pragma once

#include <string>
#include <vector>

#include "primas/polynomial.hpp"

namespace primas {

// Quotient rings by monomial relations, as a confluent rewriting system of
// monomial -> 0 rules. Rules come in two forms:
//   * concrete: a fixed monomial, e.g. x^2*y;
//   * schematic: a template over an index i, e.g. {x_i*y_i} or {y_i^2},
//     standing for one rule per index. This is how a single description
//     covers rings like k[x_1,y_1,x_2,y_2,...]/(x_i*y_i, y_i^2 : all i).
// Monomial -> 0 systems are automatically confluent and terminating, so the
// normal form is unique: delete every term whose monomial some rule divides.
class RewriteSystem {
 public:
  struct SchematicRule {
    // Factors (variable name, exponent); instance at index i multiplies
    // name_i^exp over all factors.
    std::vector<std::pair<std::string, int>> factors;
  };

  RewriteSystem() = default;

  void add_rule(const Monomial& m) { concrete_.push_back(m); }
  void add_schematic(SchematicRule r) { schematic_.push_back(std::move(r)); }

  // The ring k[x_i, y_i : i]/(x_i*y_i, y_i^2 : i).
  static RewriteSystem cyclic_xy();

  bool rewrites_to_zero(const Monomial& m) const;
  Polynomial normal_form(const Polynomial& p) const;

  const std::vector<Monomial>& concrete_rules() const { return concrete_; }
  const std::vector<SchematicRule>& schematic_rules() const { return schematic_; }

 private:
  std::vector<Monomial> concrete_;
  std::vector<SchematicRule> schematic_;
};

}  // namespace primas
