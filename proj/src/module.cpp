#include "primas/module.hpp"

#include <algorithm>
#include <map>

#include "primas/error.hpp"

namespace primas {

std::string provenance_str(Provenance p) {
  switch (p) {
    case Provenance::ass0_witness:
      return "ass0-witness";
    case Provenance::ass1_minimal_over:
      return "ass1-minimal-over";
    case Provenance::decomposition_prime:
      return "decomposition-prime";
    case Provenance::supp_membership:
      return "supp-membership";
  }
  return "?";
}

void PrimeSet::insert(MonomialIdeal p, Provenance prov) {
  auto it = std::lower_bound(primes.begin(), primes.end(), p,
                             [](const TaggedPrime& a, const MonomialIdeal& b) {
                               return a.prime < b;
                             });
  if (it != primes.end() && it->prime == p) return;
  primes.insert(it, {std::move(p), prov});
}

bool PrimeSet::contains(const MonomialIdeal& p) const {
  return std::any_of(primes.begin(), primes.end(),
                     [&](const TaggedPrime& t) { return t.prime == p; });
}

std::vector<MonomialIdeal> PrimeSet::ideals() const {
  std::vector<MonomialIdeal> v;
  v.reserve(primes.size());
  for (const auto& t : primes) v.push_back(t.prime);
  return v;
}

bool PrimeSet::same_ideals(const PrimeSet& o) const { return ideals() == o.ideals(); }

std::string PrimeSet::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (i) s += ", ";
    s += primes[i].prime.str() + " [" + provenance_str(primes[i].prov) + "]";
  }
  s += "}";
  if (!complete) s += " (witness-level, possibly incomplete)";
  return s;
}

FgModule FgModule::direct_sum(std::vector<PolyIdeal> summands) {
  FgModule m;
  for (auto& I : summands) {
    if (I.gens.empty()) {
      m.summands_.push_back(std::move(I));  // free summand R/(0)
      continue;
    }
    // canonicalize through the reduced basis; this also recognizes monomial
    // ideals presented by non-monomial generators
    GroebnerBasis G = buchberger(I);
    if (G.contains_one()) continue;  // zero summand
    m.summands_.push_back(PolyIdeal(G.elems, I.order));
  }
  return m;
}

FgModule FgModule::cyclic(const MonomialIdeal& I) {
  if (I.is_unit()) return FgModule();
  return direct_sum({I.to_poly_ideal()});
}

CoeffDomain FgModule::domain() const {
  return summands_.empty() ? CoeffDomain::Q() : summands_.front().domain();
}

bool FgModule::all_monomial() const {
  return std::all_of(summands_.begin(), summands_.end(),
                     [](const PolyIdeal& I) { return as_monomial_ideal(I).has_value(); });
}

std::vector<MonomialIdeal> FgModule::monomial_summands() const {
  std::vector<MonomialIdeal> v;
  for (const PolyIdeal& I : summands_) {
    auto m = as_monomial_ideal(I);
    if (!m) throw UnsupportedInput("summand is not a monomial ideal");
    v.push_back(*m);
  }
  return v;
}

std::vector<VarId> FgModule::ambient_vars() const {
  std::vector<VarId> s;
  for (const PolyIdeal& I : summands_) {
    auto vs = I.support_vars();
    s.insert(s.end(), vs.begin(), vs.end());
  }
  std::sort(s.begin(), s.end(), vars::rank_less);
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

ModElement FgModule::generator(std::size_t i) const {
  ModElement x;
  x.comps.assign(summands_.size(), Polynomial::zero(domain()));
  x.comps.at(i) = Polynomial::constant(1, domain());
  return x;
}

std::string FgModule::str() const {
  if (summands_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < summands_.size(); ++i) {
    if (i) s += " (+) ";
    s += "R/" + summands_[i].str();
  }
  return s;
}

bool ModElement::is_zero_in(const FgModule& M) const {
  if (comps.size() != M.summand_count()) throw UnsupportedInput("element arity mismatch");
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (comps[i].is_zero()) continue;
    if (!ideal_member(comps[i], M.summands()[i])) return false;
  }
  return true;
}

std::string ModElement::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i) s += ", ";
    s += comps[i].str();
  }
  return s + ")";
}

PolyIdeal annihilator(const ModElement& x, const FgModule& M) {
  if (x.comps.size() != M.summand_count()) throw UnsupportedInput("element arity mismatch");
  PolyIdeal r({Polynomial::constant(1, M.domain())});
  for (std::size_t i = 0; i < x.comps.size(); ++i) {
    if (x.comps[i].is_zero()) continue;
    r = intersect(r, ideal_quotient(M.summands()[i], x.comps[i]));
  }
  return r;
}

PolyIdeal colon(const std::vector<PolyIdeal>& N, const std::vector<ModElement>& U,
                const FgModule& M) {
  if (N.size() != M.summand_count()) throw UnsupportedInput("submodule arity mismatch");
  PolyIdeal r({Polynomial::constant(1, M.domain())});
  for (const ModElement& u : U) {
    if (u.comps.size() != M.summand_count())
      throw UnsupportedInput("element arity mismatch");
    for (std::size_t i = 0; i < u.comps.size(); ++i) {
      if (u.comps[i].is_zero()) continue;
      r = intersect(r, ideal_quotient(N[i], u.comps[i]));
    }
  }
  return r;
}

ZeroDivisorWitness is_zero_divisor(const Polynomial& r, const FgModule& M) {
  ZeroDivisorWitness w;
  for (std::size_t i = 0; i < M.summand_count(); ++i) {
    const PolyIdeal& I = M.summands()[i];
    PolyIdeal q = ideal_quotient(I, r);
    for (const Polynomial& g : q.gens) {
      if (!ideal_member(g, I)) {
        w.is_zero_divisor = true;
        w.summand = i;
        w.witness = g;
        return w;
      }
    }
  }
  return w;
}

bool in_radical(const Polynomial& r, const PolyIdeal& I) {
  if (auto mi = as_monomial_ideal(I)) return mi->radical().contains(r);
  // Rabinowitsch: r ∈ rad(I) iff 1 ∈ I + (t·r − 1)
  const CoeffDomain dom = I.domain();
  VarId t = vars::intern("@t", -1);
  Polynomial rab = Polynomial::variable(t, dom).mul(r).sub(Polynomial::constant(1, dom));
  std::vector<Polynomial> gens = I.gens;
  gens.push_back(rab);
  return buchberger(PolyIdeal(std::move(gens), I.order)).contains_one();
}

bool is_nilpotent_for(const Polynomial& r, const FgModule& M) {
  return std::all_of(M.summands().begin(), M.summands().end(),
                     [&](const PolyIdeal& I) { return in_radical(r, I); });
}

namespace {

// Candidate monomial cosets of R/I with per-variable exponents bounded by
// the maximal generator degree; (I : m) is invariant under clipping m to
// that box, which is what makes the scan complete.
std::vector<Monomial> coset_candidates(const MonomialIdeal& I, int extra_degree = 0) {
  std::vector<VarId> vs = I.support_vars();
  std::map<VarId, int> bound;
  for (VarId v : vs) {
    int d = 0;
    for (const Monomial& g : I.min_gens()) d = std::max(d, g.exponent(v));
    bound[v] = d + extra_degree;
  }
  std::vector<Monomial> out{Monomial::one()};
  for (VarId v : vs) {
    std::vector<Monomial> next;
    for (const Monomial& m : out)
      for (int e = 0; e <= bound[v]; ++e) next.push_back(m.times(Monomial::var(v, e)));
    out = std::move(next);
  }
  std::erase_if(out, [&](const Monomial& m) { return I.contains(m); });
  return out;
}

}  // namespace

PrimeSet ass0(const FgModule& M) {
  PrimeSet s;
  if (M.is_zero()) return s;
  if (M.all_monomial()) {
    for (const MonomialIdeal& I : M.monomial_summands()) {
      for (const Monomial& m : coset_candidates(I)) {
        MonomialIdeal ann = I.quotient(m);
        if (ann.is_variable_prime() && !ann.is_unit()) s.insert(ann, Provenance::ass0_witness);
      }
    }
    return s;
  }
  // witness-level scan over low-degree cosets of each summand
  s.complete = false;
  for (const PolyIdeal& I : M.summands()) {
    std::vector<Polynomial> probes{Polynomial::constant(1, M.domain())};
    for (const Polynomial& g : I.gens) probes.push_back(g);
    for (const Polynomial& x : probes) {
      if (x.is_zero() || ideal_member(x, I)) continue;
      PolyIdeal ann = ideal_quotient(I, x);
      auto m = as_monomial_ideal(ann);
      if (m && m->is_variable_prime() && !m->is_unit())
        s.insert(*m, Provenance::ass0_witness);
    }
  }
  return s;
}

PrimeSet ass1(const FgModule& M) {
  PrimeSet s;
  if (M.is_zero()) return s;
  if (M.all_monomial()) {
    for (const MonomialIdeal& I : M.monomial_summands()) {
      for (const Monomial& m : coset_candidates(I)) {
        MonomialIdeal ann = I.quotient(m);
        if (ann.is_unit()) continue;
        for (const MonomialIdeal& p : ann.minimal_primes())
          s.insert(p, Provenance::ass1_minimal_over);
      }
    }
    return s;
  }
  s.complete = false;
  for (const PolyIdeal& I : M.summands()) {
    std::vector<Polynomial> probes{Polynomial::constant(1, M.domain())};
    for (const Polynomial& g : I.gens) probes.push_back(g);
    for (const Polynomial& x : probes) {
      if (x.is_zero() || ideal_member(x, I)) continue;
      PolyIdeal ann = ideal_quotient(I, x);
      auto m = as_monomial_ideal(ann);
      if (m && !m->is_unit())
        for (const MonomialIdeal& p : m->minimal_primes())
          s.insert(p, Provenance::ass1_minimal_over);
    }
  }
  return s;
}

PrimeSet ass(const FgModule& M) {
  PrimeSet s;
  if (M.is_zero()) return s;
  if (!M.all_monomial())
    throw UnsupportedInput("ass needs a computable primary decomposition of (0); "
                           "use ass_membership_witness for other backends");
  for (const MonomialIdeal& I : M.monomial_summands()) {
    DecompositionReport rep = primary_decompose_monomial(I);
    for (const PrimaryComponent& c : rep.components)
      s.insert(c.prime, Provenance::decomposition_prime);
  }
  return s;
}

PrimeSet essential_primes(const MonomialIdeal& N) {
  if (N.is_unit()) throw UnsupportedInput("essential primes need a proper submodule");
  return ass(FgModule::cyclic(N));
}

bool supp_contains(const MonomialIdeal& prime, const FgModule& M) {
  // I_i ⊆ p for some summand (Supp of a direct sum is the union)
  for (const PolyIdeal& I : M.summands()) {
    bool inside = std::all_of(I.gens.begin(), I.gens.end(),
                              [&](const Polynomial& g) { return prime.contains(g); });
    if (inside) return true;
  }
  return false;
}

MonomialIdeal module_radical(const FgModule& M) {
  if (M.is_zero()) return MonomialIdeal::unit();
  auto summands = M.monomial_summands();
  MonomialIdeal r = summands.front().radical();
  for (std::size_t i = 1; i < summands.size(); ++i) r = r.intersect(summands[i].radical());
  return r;
}

std::optional<MonomialIdeal> is_coprimary(const FgModule& M) {
  if (M.is_zero()) throw UnsupportedInput("coprimary test on the zero module");
  PrimeSet a = ass(M);
  if (a.primes.size() != 1) return std::nullopt;
  MonomialIdeal p = a.primes.front().prime;
  if (M.summand_count() == 1) {
    // cyclic cross-check: R/I coprimary iff I primary
    auto prime = M.monomial_summands().front().is_primary();
    if (!prime || *prime != p) return std::nullopt;
  }
  return p;
}

std::string AssMembershipReport::str() const {
  if (refuted) return "refuted";
  std::string s = member ? "member" : "inconclusive";
  for (const auto& w : witnesses) {
    s += "; " + w.generator.str() + ": s'=" + w.s_prime.str() + " nu=" +
         std::to_string(w.nu) + " x=" + w.x.str() + " @" + std::to_string(w.summand);
  }
  return s;
}

AssMembershipReport ass_membership_witness(const MonomialIdeal& prime, const FgModule& M) {
  if (!prime.is_variable_prime())
    throw UnsupportedInput("ass membership needs a variable-subset prime");
  AssMembershipReport rep;
  PrimeSet assm = ass(M);
  if (!assm.contains(prime)) {
    rep.refuted = true;  // complete on the monomial backend
    return rep;
  }
  rep.member = true;

  // locate a summand whose decomposition realizes this prime
  auto summands = M.monomial_summands();
  std::size_t host = summands.size();
  for (std::size_t i = 0; i < summands.size(); ++i) {
    DecompositionReport d = primary_decompose_monomial(summands[i]);
    for (const PrimaryComponent& c : d.components)
      if (c.prime == prime) host = i;
    if (host != summands.size()) break;
  }
  const MonomialIdeal& I = summands.at(host);

  MultSetSpec S = MultSetSpec::complement_of_prime(prime.support_vars());
  MonomialIdeal SN = s_component(I, S);
  for (const Monomial& p : prime.min_gens()) {
    // T = S·{p^ν}: T(I) strictly exceeds S(I); pick x there and certify
    MonomialIdeal TN = s_component(I.saturate(p), S);
    AssMembershipReport::GeneratorWitness w;
    w.generator = p;
    w.summand = host;
    bool found = false;
    for (const Monomial& x : TN.min_gens()) {
      if (SN.contains(x)) continue;
      // find ν and s' ∉ prime with s'·p^ν·x ∈ I
      for (int nu = 1; nu <= 64 && !found; ++nu) {
        MonomialIdeal q = I.quotient(x.times(p.pow(nu)));
        for (const Monomial& sp : q.min_gens()) {
          if (!prime.contains(sp)) {
            w.x = x;
            w.s_prime = sp;
            w.nu = nu;
            found = true;
            break;
          }
        }
      }
      if (found) break;
    }
    if (!found) throw Inconclusive("no witness for generator " + p.str());
    rep.witnesses.push_back(w);
  }
  return rep;
}

FgModule saturated_instance(const FgModule& M, const MonomialIdeal& q) {
  MultSetSpec S = MultSetSpec::complement_of_prime(q.support_vars());
  std::vector<PolyIdeal> summands;
  for (const MonomialIdeal& I : M.monomial_summands()) {
    MonomialIdeal sat = s_component(I, S);
    summands.push_back(sat.to_poly_ideal(M.domain()));
  }
  return FgModule::direct_sum(summands);
}

}  // namespace primas
