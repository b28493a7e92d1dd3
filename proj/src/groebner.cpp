#include "primas/groebner.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>
#include <unordered_map>

#include "primas/error.hpp"

namespace primas {

std::atomic<long> EngineConfig::pair_budget{50000};
std::atomic<bool> EngineConfig::cache_enabled{true};

namespace {

struct BasisCache {
  std::mutex mu;
  std::unordered_map<std::string, std::shared_ptr<const GroebnerBasis>> map;
};

BasisCache& cache() {
  static BasisCache* c = new BasisCache();
  return *c;
}

std::string cache_key(const PolyIdeal& I) {
  std::string key = I.order.str();
  key += "|";
  key += I.domain().str();
  std::vector<std::string> gens;
  gens.reserve(I.gens.size());
  for (const auto& g : I.gens) gens.push_back(g.str(I.order));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (const auto& s : gens) {
    key += s;
    key += ";";
  }
  return key;
}

}  // namespace

void EngineConfig::clear_cache() {
  std::lock_guard lk(cache().mu);
  cache().map.clear();
}

PolyIdeal::PolyIdeal(std::vector<Polynomial> g, TermOrder ord) : order(std::move(ord)) {
  for (auto& p : g)
    if (!p.is_zero()) gens.push_back(std::move(p));
}

CoeffDomain PolyIdeal::domain() const {
  return gens.empty() ? CoeffDomain::Q() : gens.front().domain();
}

std::vector<VarId> PolyIdeal::support_vars() const {
  std::vector<VarId> s;
  for (const auto& g : gens) {
    auto vs = g.support_vars();
    s.insert(s.end(), vs.begin(), vs.end());
  }
  std::sort(s.begin(), s.end(), vars::rank_less);
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::string PolyIdeal::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ", ";
    s += gens[i].str(order);
  }
  if (gens.empty()) s += "0";
  return s + ")";
}

bool GroebnerBasis::contains_one() const {
  return elems.size() == 1 && elems.front().is_constant() && !elems.front().is_zero();
}

std::string GroebnerBasis::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) s += ", ";
    s += elems[i].str(order);
  }
  return s + "}";
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& G) {
  const TermOrder& ord = G.order;
  Polynomial rem(p.domain());
  Polynomial h = p;
  while (!h.is_zero()) {
    const Monomial& lm = h.leading_monomial(ord);
    mpq_class lc = h.terms().at(lm);
    bool reduced = false;
    for (const Polynomial& g : G.elems) {
      const Monomial& glm = g.leading_monomial(ord);
      if (glm.divides(lm)) {
        mpq_class factor = p.domain().div(lc, g.terms().at(glm));
        h = h.sub(g.mul_term(lm.div(glm), factor));
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.add_term(lm, lc);
      h = h.sub(Polynomial::monomial(lm, p.domain(), lc));
    }
  }
  return rem;
}

namespace {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& ord) {
  const Monomial& lf = f.leading_monomial(ord);
  const Monomial& lg = g.leading_monomial(ord);
  Monomial l = Monomial::lcm(lf, lg);
  const CoeffDomain dom = f.domain();
  Polynomial a = f.mul_term(l.div(lf), dom.inv(f.terms().at(lf)));
  Polynomial b = g.mul_term(l.div(lg), dom.inv(g.terms().at(lg)));
  return a.sub(b);
}

// Reduce each element fully against the others; drop redundant leading
// terms first. Produces the unique reduced monic basis, sorted descending.
std::vector<Polynomial> interreduce(std::vector<Polynomial> G, const TermOrder& ord) {
  // minimalize: remove g whose leading monomial another leading monomial divides
  std::vector<Polynomial> minimal;
  std::sort(G.begin(), G.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.less(a.leading_monomial(ord), b.leading_monomial(ord));
  });
  for (std::size_t i = 0; i < G.size(); ++i) {
    const Monomial& lm = G[i].leading_monomial(ord);
    bool redundant = false;
    for (const Polynomial& m : minimal)
      if (m.leading_monomial(ord).divides(lm)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(G[i]);
  }
  // tail-reduce each against the rest
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    GroebnerBasis rest{{}, ord};
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) rest.elems.push_back(minimal[j]);
    Polynomial r = rest.elems.empty() ? minimal[i] : normal_form(minimal[i], rest);
    if (!r.is_zero()) out.push_back(r.monic(ord));
  }
  std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.greater(a.leading_monomial(ord), b.leading_monomial(ord));
  });
  return out;
}

GroebnerBasis buchberger_uncached(const PolyIdeal& I) {
  const TermOrder& ord = I.order;
  GroebnerBasis G{{}, ord};
  if (I.gens.empty()) return G;

  for (const Polynomial& g : I.gens) G.elems.push_back(g.monic(ord));

  // pending pairs keyed by (lcm degree, lcm, i, j): normal selection strategy
  struct Pair {
    Monomial lcm;
    std::size_t i, j;
  };
  auto pair_less = [&](const Pair& a, const Pair& b) {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    if (int c = ord.compare(a.lcm, b.lcm); c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::vector<Pair> pairs;
  auto push_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      const Monomial& a = G.elems[i].leading_monomial(ord);
      const Monomial& b = G.elems[j].leading_monomial(ord);
      // Buchberger's coprime criterion: S-pair reduces to zero.
      if (Monomial::gcd(a, b).is_one()) continue;
      pairs.push_back({Monomial::lcm(a, b), i, j});
    }
  };
  for (std::size_t j = 0; j < G.elems.size(); ++j) push_pairs_for(j);

  long budget = EngineConfig::pair_budget.load();
  long steps = 0;
  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
    Pair p = *it;
    pairs.erase(it);
    if (++steps > budget)
      throw BudgetExceeded("groebner pair budget exceeded (" + std::to_string(budget) + ")");
    Polynomial s = s_polynomial(G.elems[p.i], G.elems[p.j], ord);
    Polynomial r = normal_form(s, G);
    if (!r.is_zero()) {
      G.elems.push_back(r.monic(ord));
      push_pairs_for(G.elems.size() - 1);
    }
  }

  G.elems = interreduce(std::move(G.elems), ord);
  return G;
}

}  // namespace

GroebnerBasis buchberger(const PolyIdeal& I) {
  if (!EngineConfig::cache_enabled.load()) return buchberger_uncached(I);
  std::string key = cache_key(I);
  {
    std::lock_guard lk(cache().mu);
    auto it = cache().map.find(key);
    if (it != cache().map.end()) return *it->second;
  }
  auto basis = std::make_shared<const GroebnerBasis>(buchberger_uncached(I));
  std::lock_guard lk(cache().mu);
  cache().map.emplace(std::move(key), basis);
  return *basis;
}

bool ideal_member(const Polynomial& p, const PolyIdeal& I) {
  if (p.is_zero()) return true;
  if (I.gens.empty()) return false;
  return normal_form(p, buchberger(I)).is_zero();
}

PolyIdeal with_order(const PolyIdeal& I, const TermOrder& ord) {
  PolyIdeal J = I;
  J.order = ord;
  return J;
}

PolyIdeal eliminate(const PolyIdeal& I, const std::vector<VarId>& drop) {
  TermOrder elim = TermOrder::block_elim(drop);
  GroebnerBasis G = buchberger(with_order(I, elim));
  std::vector<Polynomial> kept;
  for (const Polynomial& g : G.elems) {
    auto vs = g.support_vars();
    bool uses_dropped = std::any_of(vs.begin(), vs.end(), [&](VarId v) {
      return std::find(drop.begin(), drop.end(), v) != drop.end();
    });
    if (!uses_dropped) kept.push_back(g);
  }
  return PolyIdeal(std::move(kept), I.order);
}

bool ideal_contains(const PolyIdeal& I, const Polynomial& p) { return ideal_member(p, I); }

bool ideal_contains(const PolyIdeal& I, const PolyIdeal& J) {
  return std::all_of(J.gens.begin(), J.gens.end(),
                     [&](const Polynomial& g) { return ideal_member(g, I); });
}

bool ideal_equal(const PolyIdeal& I, const PolyIdeal& J) {
  return ideal_contains(I, J) && ideal_contains(J, I);
}

}  // namespace primas
