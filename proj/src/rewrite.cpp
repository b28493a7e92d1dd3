#include "primas/rewrite.hpp"

#include <algorithm>

namespace primas {

RewriteSystem RewriteSystem::cyclic_xy() {
  RewriteSystem rs;
  rs.add_schematic({{{"x", 1}, {"y", 1}}});
  rs.add_schematic({{{"y", 2}}});
  return rs;
}

bool RewriteSystem::rewrites_to_zero(const Monomial& m) const {
  for (const Monomial& r : concrete_)
    if (r.divides(m)) return true;
  if (schematic_.empty()) return false;

  std::vector<int> indices;
  for (const auto& [v, e] : m.entries()) {
    int idx = vars::index(v);
    if (idx >= 0) indices.push_back(idx);
  }
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());

  for (int i : indices) {
    for (const auto& rule : schematic_) {
      bool hit = true;
      for (const auto& [name, exp] : rule.factors) {
        if (m.exponent(vars::intern(name, i)) < exp) {
          hit = false;
          break;
        }
      }
      if (hit) return true;
    }
  }
  return false;
}

Polynomial RewriteSystem::normal_form(const Polynomial& p) const {
  Polynomial r(p.domain());
  for (const auto& [m, c] : p.terms())
    if (!rewrites_to_zero(m)) r.add_term(m, c);
  return r;
}

}  // namespace primas
