#include "primas/monomial_ideal.hpp"

#include <algorithm>
#include <set>

#include "primas/error.hpp"

namespace primas {

MonomialIdeal MonomialIdeal::make(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.key_less(b);
  });
  MonomialIdeal I;
  for (const Monomial& g : gens) {
    bool redundant = false;
    for (const Monomial& kept : I.gens_)
      if (kept.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) I.gens_.push_back(g);
  }
  // canonical storage: descending in the default term order
  TermOrder ord = TermOrder::grevlex();
  std::sort(I.gens_.begin(), I.gens_.end(),
            [&](const Monomial& a, const Monomial& b) { return ord.greater(a, b); });
  return I;
}

MonomialIdeal MonomialIdeal::unit() { return make({Monomial::one()}); }

MonomialIdeal MonomialIdeal::variable_prime(std::vector<VarId> vs) {
  std::vector<Monomial> gens;
  gens.reserve(vs.size());
  for (VarId v : vs) gens.push_back(Monomial::var(v));
  return make(std::move(gens));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const Polynomial& p) const {
  for (const auto& [m, c] : p.terms())
    if (!contains(m)) return false;
  return true;
}

bool MonomialIdeal::contains(const MonomialIdeal& o) const {
  return std::all_of(o.gens_.begin(), o.gens_.end(),
                     [&](const Monomial& g) { return contains(g); });
}

int MonomialIdeal::cmp(const MonomialIdeal& o) const {
  std::size_t n = std::min(gens_.size(), o.gens_.size());
  for (std::size_t i = 0; i < n; ++i)
    if (int c = gens_[i].key_cmp(o.gens_[i]); c != 0) return c;
  if (gens_.size() != o.gens_.size()) return gens_.size() < o.gens_.size() ? -1 : 1;
  return 0;
}

std::vector<VarId> MonomialIdeal::support_vars() const {
  std::vector<VarId> s;
  for (const Monomial& g : gens_)
    for (const auto& [v, e] : g.entries()) s.push_back(v);
  std::sort(s.begin(), s.end(), vars::rank_less);
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

MonomialIdeal MonomialIdeal::sum(const MonomialIdeal& o) const {
  std::vector<Monomial> gens = gens_;
  gens.insert(gens.end(), o.gens_.begin(), o.gens_.end());
  return make(std::move(gens));
}

MonomialIdeal MonomialIdeal::intersect(const MonomialIdeal& o) const {
  std::vector<Monomial> gens;
  gens.reserve(gens_.size() * o.gens_.size());
  for (const Monomial& a : gens_)
    for (const Monomial& b : o.gens_) gens.push_back(Monomial::lcm(a, b));
  return make(std::move(gens));
}

MonomialIdeal MonomialIdeal::quotient(const Monomial& m) const {
  std::vector<Monomial> gens;
  gens.reserve(gens_.size());
  for (const Monomial& g : gens_) gens.push_back(g.colon(m));
  return make(std::move(gens));
}

MonomialIdeal MonomialIdeal::quotient(const MonomialIdeal& o) const {
  if (o.is_zero_ideal()) return unit();
  MonomialIdeal r = quotient(o.gens_.front());
  for (std::size_t i = 1; i < o.gens_.size(); ++i) r = r.intersect(quotient(o.gens_[i]));
  return r;
}

MonomialIdeal MonomialIdeal::saturate_vars(const std::vector<VarId>& vs) const {
  std::vector<Monomial> gens;
  gens.reserve(gens_.size());
  for (const Monomial& g : gens_) gens.push_back(g.erase_vars(vs));
  return make(std::move(gens));
}

MonomialIdeal MonomialIdeal::radical() const {
  std::vector<Monomial> gens;
  gens.reserve(gens_.size());
  for (const Monomial& g : gens_) gens.push_back(g.squarefree_part());
  return make(std::move(gens));
}

bool MonomialIdeal::is_variable_prime() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) {
    return g.degree() == 1;
  });
}

std::vector<MonomialIdeal> MonomialIdeal::minimal_primes() const {
  if (is_unit()) throw UnsupportedInput("minimal primes of the unit ideal");
  if (is_zero_ideal()) return {MonomialIdeal::zero()};

  // Minimal transversals of the generator supports by branch-and-collect.
  std::vector<std::vector<VarId>> supports;
  supports.reserve(gens_.size());
  for (const Monomial& g : gens_) supports.push_back(g.support());

  std::set<std::vector<VarId>> covers;
  std::vector<VarId> current;

  auto covered = [&](const std::vector<VarId>& supp) {
    return std::any_of(supp.begin(), supp.end(), [&](VarId v) {
      return std::find(current.begin(), current.end(), v) != current.end();
    });
  };

  std::function<void()> rec = [&]() {
    auto it = std::find_if(supports.begin(), supports.end(),
                           [&](const auto& s) { return !covered(s); });
    if (it == supports.end()) {
      std::vector<VarId> sorted = current;
      std::sort(sorted.begin(), sorted.end(), vars::rank_less);
      covers.insert(sorted);
      return;
    }
    for (VarId v : *it) {
      current.push_back(v);
      rec();
      current.pop_back();
    }
  };
  rec();

  // keep only inclusion-minimal covers
  std::vector<MonomialIdeal> primes;
  for (const auto& c : covers) {
    bool minimal = true;
    for (const auto& d : covers) {
      if (d.size() < c.size() && std::includes(c.begin(), c.end(), d.begin(), d.end(),
                                               vars::rank_less)) {
        minimal = false;
        break;
      }
    }
    if (minimal) primes.push_back(variable_prime(c));
  }
  std::sort(primes.begin(), primes.end());
  return primes;
}

std::optional<MonomialIdeal> MonomialIdeal::is_primary() const {
  if (is_unit()) throw UnsupportedInput("primary test on the unit ideal");
  if (is_zero_ideal()) return MonomialIdeal::zero();  // (0) is prime in k[x...]
  for (VarId v : support_vars()) {
    bool pure = std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) {
      return g.support().size() == 1 && g.exponent(v) > 0;
    });
    if (!pure) return std::nullopt;
  }
  return radical();
}

PolyIdeal MonomialIdeal::to_poly_ideal(CoeffDomain dom, TermOrder ord) const {
  std::vector<Polynomial> gens;
  gens.reserve(gens_.size());
  for (const Monomial& g : gens_) gens.push_back(Polynomial::monomial(g, dom));
  return PolyIdeal(std::move(gens), ord);
}

std::string MonomialIdeal::str() const {
  if (gens_.empty()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].str();
  }
  return s + ")";
}

std::optional<MonomialIdeal> as_monomial_ideal(const PolyIdeal& I) {
  std::vector<Monomial> gens;
  for (const Polynomial& g : I.gens) {
    auto m = g.as_monomial();
    if (!m) return std::nullopt;
    gens.push_back(*m);
  }
  return MonomialIdeal::make(std::move(gens));
}

}  // namespace primas
