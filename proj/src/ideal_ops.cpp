#include "primas/ideal_ops.hpp"

#include <algorithm>
#include <random>

#include "primas/error.hpp"

namespace primas {

namespace {

VarId fresh_tag_var() { return vars::intern("@t", -1); }

// Exact division g / f in a domain; caller guarantees g ∈ (f).
Polynomial exact_divide(const Polynomial& g, const Polynomial& f, const TermOrder& ord) {
  Polynomial q(g.domain());
  Polynomial h = g;
  const Monomial& lf = f.leading_monomial(ord);
  const mpq_class lc = f.terms().at(lf);
  while (!h.is_zero()) {
    const Monomial& lh = h.leading_monomial(ord);
    if (!lf.divides(lh)) throw UnsupportedInput("exact_divide: not divisible");
    mpq_class c = g.domain().div(h.terms().at(lh), lc);
    Monomial m = lh.div(lf);
    q.add_term(m, c);
    h = h.sub(f.mul_term(m, c));
  }
  return q;
}

}  // namespace

PolyIdeal intersect(const PolyIdeal& I, const PolyIdeal& J) {
  auto mi = as_monomial_ideal(I);
  auto mj = as_monomial_ideal(J);
  if (mi && mj) return mi->intersect(*mj).to_poly_ideal(I.domain(), I.order);

  if (I.is_zero_ideal()) return I;
  if (J.is_zero_ideal()) return J;
  const CoeffDomain dom = I.domain();
  VarId t = fresh_tag_var();
  Polynomial tp = Polynomial::variable(t, dom);
  Polynomial one_minus_t = Polynomial::constant(1, dom).sub(tp);
  std::vector<Polynomial> gens;
  for (const Polynomial& g : I.gens) gens.push_back(tp.mul(g));
  for (const Polynomial& g : J.gens) gens.push_back(one_minus_t.mul(g));
  return eliminate(PolyIdeal(std::move(gens), I.order), {t});
}

PolyIdeal ideal_quotient(const PolyIdeal& I, const Polynomial& f) {
  if (f.is_zero()) return PolyIdeal({Polynomial::constant(1, I.domain())}, I.order);
  auto mi = as_monomial_ideal(I);
  if (mi) {
    if (auto m = f.as_monomial()) return mi->quotient(*m).to_poly_ideal(I.domain(), I.order);
  }
  if (I.is_zero_ideal()) return I;  // domain: (0 : f) = (0) for f != 0
  PolyIdeal meet = intersect(I, PolyIdeal({f}, I.order));
  std::vector<Polynomial> gens;
  gens.reserve(meet.gens.size());
  for (const Polynomial& g : meet.gens) gens.push_back(exact_divide(g, f, I.order));
  return PolyIdeal(std::move(gens), I.order);
}

PolyIdeal ideal_quotient(const PolyIdeal& I, const PolyIdeal& J) {
  if (J.is_zero_ideal()) return PolyIdeal({Polynomial::constant(1, I.domain())}, I.order);
  PolyIdeal r = ideal_quotient(I, J.gens.front());
  for (std::size_t i = 1; i < J.gens.size(); ++i)
    r = intersect(r, ideal_quotient(I, J.gens[i]));
  return r;
}

PolyIdeal saturate(const PolyIdeal& I, const Polynomial& f) {
  if (f.is_zero()) throw UnsupportedInput("saturation by zero");
  auto mi = as_monomial_ideal(I);
  if (mi) {
    if (auto m = f.as_monomial())
      return mi->saturate(*m).to_poly_ideal(I.domain(), I.order);
  }
  if (I.is_zero_ideal()) return I;
  const CoeffDomain dom = I.domain();
  VarId t = fresh_tag_var();
  Polynomial rab =
      Polynomial::variable(t, dom).mul(f).sub(Polynomial::constant(1, dom));
  std::vector<Polynomial> gens = I.gens;
  gens.push_back(rab);
  return eliminate(PolyIdeal(std::move(gens), I.order), {t});
}

MultSetSpec MultSetSpec::powers_of(Polynomial f) {
  MultSetSpec s(Kind::powers_of);
  s.elems_.push_back(std::move(f));
  return s;
}

MultSetSpec MultSetSpec::finitely_generated(std::vector<Polynomial> fs) {
  MultSetSpec s(Kind::finitely_generated);
  s.elems_ = std::move(fs);
  return s;
}

MultSetSpec MultSetSpec::trivial(CoeffDomain dom) {
  return finitely_generated({Polynomial::constant(1, dom)});
}

MultSetSpec MultSetSpec::complement_of_prime(std::vector<VarId> prime_vars) {
  MultSetSpec s(Kind::complement_of_monomial_prime);
  std::sort(prime_vars.begin(), prime_vars.end(), vars::rank_less);
  prime_vars.erase(std::unique(prime_vars.begin(), prime_vars.end()), prime_vars.end());
  s.prime_vars_ = std::move(prime_vars);
  return s;
}

MultSetSpec MultSetSpec::extended(MultSetSpec base, Polynomial extra) {
  MultSetSpec s(Kind::extended);
  s.base_ = std::make_shared<const MultSetSpec>(std::move(base));
  s.elems_.push_back(std::move(extra));
  return s;
}

std::string MultSetSpec::str() const {
  switch (kind_) {
    case Kind::powers_of:
      return "powers(" + elems_.front().str() + ")";
    case Kind::finitely_generated: {
      std::string s = "mult{";
      for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (i) s += ", ";
        s += elems_[i].str();
      }
      return s + "}";
    }
    case Kind::complement_of_monomial_prime: {
      std::string s = "complement(";
      for (std::size_t i = 0; i < prime_vars_.size(); ++i) {
        if (i) s += ", ";
        s += vars::display(prime_vars_[i]);
      }
      return s + ")";
    }
    case Kind::extended:
      return base_->str() + "*powers(" + elems_.front().str() + ")";
  }
  return "?";
}

PolyIdeal s_component(const PolyIdeal& I, const MultSetSpec& S) {
  switch (S.kind()) {
    case MultSetSpec::Kind::powers_of:
      return saturate(I, S.elems().front());
    case MultSetSpec::Kind::finitely_generated: {
      PolyIdeal r = I;
      // saturate by each generator in turn until nothing grows
      bool changed = true;
      while (changed) {
        changed = false;
        for (const Polynomial& f : S.elems()) {
          PolyIdeal next = saturate(r, f);
          if (!ideal_contains(r, next)) {
            r = next;
            changed = true;
          }
        }
      }
      return r;
    }
    case MultSetSpec::Kind::complement_of_monomial_prime: {
      auto mi = as_monomial_ideal(I);
      if (!mi)
        throw UnsupportedInput("complement-of-prime components need monomial data");
      return s_component(*mi, S).to_poly_ideal(I.domain(), I.order);
    }
    case MultSetSpec::Kind::extended: {
      PolyIdeal inner = saturate(I, S.extra());
      return s_component(inner, S.base());
    }
  }
  throw UnsupportedInput("bad MultSetSpec");
}

MonomialIdeal s_component(const MonomialIdeal& I, const MultSetSpec& S) {
  switch (S.kind()) {
    case MultSetSpec::Kind::powers_of: {
      if (auto m = S.elems().front().as_monomial()) return I.saturate(*m);
      break;
    }
    case MultSetSpec::Kind::finitely_generated: {
      bool all_monomial = std::all_of(S.elems().begin(), S.elems().end(),
                                      [](const Polynomial& f) { return f.as_monomial().has_value(); });
      if (all_monomial) {
        Monomial prod;
        for (const Polynomial& f : S.elems()) prod = prod.times(*f.as_monomial());
        return I.saturate(prod);
      }
      break;
    }
    case MultSetSpec::Kind::complement_of_monomial_prime: {
      std::vector<VarId> outside;
      for (VarId v : I.support_vars())
        if (std::find(S.prime_vars().begin(), S.prime_vars().end(), v) == S.prime_vars().end())
          outside.push_back(v);
      return I.saturate_vars(outside);
    }
    case MultSetSpec::Kind::extended: {
      if (auto m = S.extra().as_monomial())
        return s_component(I.saturate(*m), S.base());
      break;
    }
  }
  // general fallback through the polynomial engine
  PolyIdeal r = s_component(I.to_poly_ideal(), S);
  auto mr = as_monomial_ideal(r);
  if (!mr) throw UnsupportedInput("S-component of monomial ideal is not monomial");
  return *mr;
}

bool mult_set_meets_prime(const MultSetSpec& S, const MonomialIdeal& prime) {
  switch (S.kind()) {
    case MultSetSpec::Kind::powers_of:
      // f^n ∈ p for some n >= 1  iff  f ∈ p, p being prime
      return prime.contains(S.elems().front());
    case MultSetSpec::Kind::finitely_generated:
      return std::any_of(S.elems().begin(), S.elems().end(), [&](const Polynomial& f) {
        return !f.is_constant() && prime.contains(f);
      });
    case MultSetSpec::Kind::complement_of_monomial_prime: {
      // R \ (V) meets (W) iff (W) ⊄ (V)
      MonomialIdeal V = MonomialIdeal::variable_prime(
          {S.prime_vars().begin(), S.prime_vars().end()});
      return !V.contains(prime);
    }
    case MultSetSpec::Kind::extended:
      return mult_set_meets_prime(S.base(), prime) || prime.contains(S.extra());
  }
  return false;
}

AvoidanceResult prime_avoidance_witness(const PolyIdeal& a,
                                        const std::vector<PolyIdeal>& primes) {
  if (primes.empty()) throw UnsupportedInput("prime avoidance needs at least one prime");

  // exact containment checks first (these are decidable)
  for (std::size_t i = 0; i < primes.size(); ++i)
    if (ideal_contains(primes[i], a)) return {std::nullopt, i};

  // monomial data: a constructive witness always exists
  auto ma = as_monomial_ideal(a);
  bool all_mono_primes = std::all_of(primes.begin(), primes.end(), [](const PolyIdeal& p) {
    auto mp = as_monomial_ideal(p);
    return mp && mp->is_variable_prime();
  });
  if (ma && all_mono_primes) {
    // single generator outside everything, if available
    for (const Monomial& g : ma->min_gens()) {
      bool outside_all = std::none_of(primes.begin(), primes.end(), [&](const PolyIdeal& p) {
        return as_monomial_ideal(p)->contains(g);
      });
      if (outside_all) return {Polynomial::monomial(g, a.domain()), std::nullopt};
    }
    // otherwise a sum of per-prime escapees: a polynomial over distinct
    // monomials lies in a monomial prime iff all its terms do
    std::vector<Monomial> picks;
    for (const PolyIdeal& p : primes) {
      auto mp = as_monomial_ideal(p);
      for (const Monomial& g : ma->min_gens())
        if (!mp->contains(g)) {
          picks.push_back(g);
          break;
        }
    }
    Polynomial w(a.domain());
    std::sort(picks.begin(), picks.end(), MonomialKeyLess{});
    picks.erase(std::unique(picks.begin(), picks.end()), picks.end());
    for (const Monomial& m : picks) w.add_term(m, 1);
    bool ok = std::none_of(primes.begin(), primes.end(),
                           [&](const PolyIdeal& p) { return ideal_contains(p, w); });
    if (ok) return {w, std::nullopt};
    throw Inconclusive("monomial avoidance witness construction failed");
  }

  // general search: generators, then seeded small combinations
  for (const Polynomial& g : a.gens) {
    bool outside_all = std::none_of(primes.begin(), primes.end(),
                                    [&](const PolyIdeal& p) { return ideal_member(g, p); });
    if (outside_all) return {g, std::nullopt};
  }
  std::mt19937_64 rng(0x5eedbeefULL);
  std::uniform_int_distribution<int> coeff(0, 3);
  for (int tries = 0; tries < 256; ++tries) {
    Polynomial w(a.domain());
    for (const Polynomial& g : a.gens) w = w.add(g.scale(coeff(rng)));
    if (w.is_zero()) continue;
    bool outside_all = std::none_of(primes.begin(), primes.end(),
                                    [&](const PolyIdeal& p) { return ideal_member(w, p); });
    if (outside_all) return {w, std::nullopt};
  }
  throw Inconclusive("prime avoidance witness search budget exhausted");
}

}  // namespace primas
