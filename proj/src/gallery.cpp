#include "primas/gallery.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>

#include "primas/error.hpp"
#include "primas/module.hpp"
#include "primas/rewrite.hpp"
#include "primas/valuation.hpp"
#include "primas/zmodule.hpp"

namespace primas {

namespace {

using nlohmann::json;

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  int uniform(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

// random polynomial with terms over the given variables, every term of
// degree between mindeg and maxdeg, coefficients in 1..3
Polynomial random_poly(Rng& rng, const std::vector<VarId>& vs, int mindeg, int maxdeg,
                       int maxterms, CoeffDomain dom) {
  Polynomial p(dom);
  int nterms = rng.uniform(1, maxterms);
  for (int t = 0; t < nterms; ++t) {
    int deg = rng.uniform(mindeg, maxdeg);
    Monomial m;
    for (int d = 0; d < deg; ++d)
      m = m.times(Monomial::var(vs[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(vs.size()) - 1))]));
    p.add_term(m, rng.uniform(1, 3));
  }
  return p;
}

std::vector<VarId> xvars(int n) {
  std::vector<VarId> vs;
  for (int i = 1; i <= n; ++i) vs.push_back(vars::intern("x", i));
  return vs;
}

ClaimReport claim(const std::string& name, const std::string& anchor, bool pass,
                  const std::string& mode, json witness) {
  return {name, anchor, pass, mode, std::move(witness)};
}

// ---------------------------------------------------------------------------
// rank2-valuation: rank-2 valuation ring, M = R/R·pi1
// ---------------------------------------------------------------------------

std::string is_coprimary_str(const ValModule& M) {
  auto c = M.is_coprimary();
  return c ? "yes: " + c->str() : "no";
}

std::vector<ClaimReport> run_rank2_valuation(const GalleryParams& P) {
  ValueGroup g = ValueGroup::Zlex(2);
  GroupElem pi1{mpq_class(1), mpq_class(0)};
  GroupElem pi2{mpq_class(0), mpq_class(1)};
  CutIdeal I = principal_cut(g, pi1);
  ValModule M = ValModule::quotient(I);
  std::vector<ClaimReport> out;

  auto cert = cut_indecomposable(I, P.samples, P.seed);
  json w1;
  w1["samples"] = cert.samples.size();
  for (const auto& s : cert.samples)
    w1["pairs"].push_back({{"a", s.a.str()}, {"b", s.b.str()}, {"meet", s.meet.str()}});
  out.push_back(claim("indecomposable", "(0) is indecomposable in M = R/R*pi1",
                      cert.indecomposable, "exact", w1));

  GroupElem x{mpq_class(1), mpq_class(-1)};  // nu(pi1/pi2)
  bool x_in_ring = lex_cmp(x, zero_elem(g)) >= 0;
  bool x_nonzero = !M.elem_is_zero(x);
  bool kills = M.cut().member(elem_add(pi2, x));
  bool zd = M.is_zero_divisor(pi2);
  out.push_back(claim("zero-divisor", "pi2 is a zero divisor for M",
                      x_in_ring && x_nonzero && kills && zd, "exact",
                      json{{"witness_value", elem_str(x)},
                           {"pi2*witness", elem_str(elem_add(pi2, x))}}));

  bool not_nilp = !M.is_nilpotent_for(pi2);
  bool powers_ok = true;
  for (int i = 1; i <= P.power_bound; ++i)
    powers_ok = powers_ok && !I.member(elem_scale(pi2, i));
  out.push_back(claim("not-nilpotent", "pi2 is not nilpotent for M", not_nilp && powers_ok,
                      "exact",
                      json{{"checked_powers", P.power_bound},
                           {"coprimary", is_coprimary_str(M)}}));
  return out;
}

// ---------------------------------------------------------------------------
// ass-vs-ass1-directsum: M = ⊕ R/p_i, p_i = (x_1..x_i)
// ---------------------------------------------------------------------------

std::vector<ClaimReport> run_directsum(const GalleryParams& P) {
  const int n = P.truncation;
  CoeffDomain dom = CoeffDomain::Q();
  std::vector<VarId> vs = xvars(n + 1);
  std::vector<MonomialIdeal> primes;
  for (int i = 1; i <= n + 1; ++i)
    primes.push_back(MonomialIdeal::variable_prime({vs.begin(), vs.begin() + i}));
  std::vector<PolyIdeal> summands;
  for (int i = 0; i < n; ++i) summands.push_back(primes[static_cast<std::size_t>(i)].to_poly_ideal(dom));
  FgModule M = FgModule::direct_sum(summands);
  const MonomialIdeal& p_trunc = primes[static_cast<std::size_t>(n)];

  std::vector<ClaimReport> out;

  // each p_i is the annihilator of e_i
  bool gens_ok = true;
  PrimeSet a0 = ass0(M);
  for (int i = 0; i < n; ++i) {
    PolyIdeal ann = annihilator(M.generator(static_cast<std::size_t>(i)), M);
    gens_ok = gens_ok &&
              ideal_equal(ann, primes[static_cast<std::size_t>(i)].to_poly_ideal(dom)) &&
              a0.contains(primes[static_cast<std::size_t>(i)]);
  }
  out.push_back(claim("generators-in-ass0", "p_i = Ann(e_i), so p_i in Ass0(M)", gens_ok,
                      "exact", json{{"ass0", a0.str()}}));

  // sampled annihilators collapse to the first active p_i, never p
  Rng rng(P.seed);
  bool samples_ok = true;
  int done = 0;
  json samples = json::array();
  while (done < P.samples) {
    ModElement y;
    y.comps.assign(static_cast<std::size_t>(n), Polynomial::zero(dom));
    for (int i = 0; i < n; ++i)
      if (rng.uniform(0, 1))
        y.comps[static_cast<std::size_t>(i)] =
            random_poly(rng, vs, 0, 2, 2, dom);
    if (y.is_zero_in(M)) continue;
    ++done;
    int first_active = -1;
    for (int i = 0; i < n && first_active < 0; ++i)
      if (!y.comps[static_cast<std::size_t>(i)].is_zero() &&
          !primes[static_cast<std::size_t>(i)].contains(y.comps[static_cast<std::size_t>(i)]))
        first_active = i;
    PolyIdeal ann = annihilator(y, M);
    bool ok = first_active >= 0 &&
              ideal_equal(ann, primes[static_cast<std::size_t>(first_active)].to_poly_ideal(dom)) &&
              ideal_contains(primes[static_cast<std::size_t>(n - 1)].to_poly_ideal(dom), ann) &&
              !ideal_equal(ann, p_trunc.to_poly_ideal(dom));
    samples_ok = samples_ok && ok;
    if (done <= 5)
      samples.push_back({{"ann", ann.str()}, {"collapses_to_index", first_active + 1}});
  }
  out.push_back(claim("sampled-annihilators",
                      "Ann(y) = p_i0 ⊆ p_n, and never the truncated p", samples_ok,
                      "witness-level", json{{"samples", P.samples}, {"first_few", samples}}));

  // p = ∪ p_i on finite-support elements
  bool union_ok = true;
  json union_witnesses = json::array();
  for (int s = 0; s < P.samples; ++s) {
    Polynomial p = random_poly(rng, {vs.begin(), vs.begin() + n}, 1, P.degree_bound, 3, dom);
    int host = -1;
    for (int i = 0; i < n && host < 0; ++i)
      if (primes[static_cast<std::size_t>(i)].contains(p)) host = i;
    union_ok = union_ok && host >= 0;
    if (s < 5) union_witnesses.push_back({{"p", p.str()}, {"inside", host + 1}});
  }
  out.push_back(claim("union-membership",
                      "every finite-support element of p lies in some p_i", union_ok,
                      "witness-level", json{{"first_few", union_witnesses}}));
  return out;
}

// ---------------------------------------------------------------------------
// ass-vs-ass1-cyclic: R = k[x_i,y_i]/(x_i y_i, y_i^2)
// ---------------------------------------------------------------------------

Monomial random_basis_monomial(Rng& rng, int n, int maxdeg, bool nonunit) {
  // an element of the monomial basis: y-exponents ≤ 1 and never next to an
  // x of the same index
  for (int tries = 0; tries < 64; ++tries) {
    Monomial m;
    int budget = maxdeg;
    for (int i = 1; i <= n && budget > 0; ++i) {
      int choice = rng.uniform(0, 3);
      if (choice == 1) {
        int e = rng.uniform(1, std::min(3, budget));
        m = m.times(Monomial::var(vars::intern("x", i), e));
        budget -= e;
      } else if (choice == 2) {
        m = m.times(Monomial::var(vars::intern("y", i)));
        budget -= 1;
      }
    }
    if (!nonunit || !m.is_one()) return m;
  }
  return Monomial::var(vars::intern("y", 1));
}

std::vector<ClaimReport> run_cyclic(const GalleryParams& P) {
  const int n = std::min(P.truncation, 3);
  const int d = std::min(P.degree_bound + 1, 5);
  RewriteSystem rs = RewriteSystem::cyclic_xy();
  CoeffDomain dom = CoeffDomain::Q();
  std::vector<ClaimReport> out;

  // exhaustive basis check: survivors of the rewrite are exactly the
  // monomials with eps_i ∈ {0,1} and eps_i = 0 when nu_i > 0
  std::vector<VarId> all_vars;
  for (int i = 1; i <= n; ++i) {
    all_vars.push_back(vars::intern("x", i));
    all_vars.push_back(vars::intern("y", i));
  }
  std::function<void(std::size_t, int, Monomial, std::vector<Monomial>&)> enumerate =
      [&](std::size_t vi, int degree_left, Monomial acc, std::vector<Monomial>& sink) {
        if (vi == all_vars.size()) {
          sink.push_back(acc);
          return;
        }
        for (int e = 0; e <= degree_left; ++e)
          enumerate(vi + 1, degree_left - e, acc.times(Monomial::var(all_vars[vi], e)), sink);
      };
  std::vector<Monomial> monos;
  enumerate(0, d, Monomial::one(), monos);
  bool basis_ok = true;
  long survivors = 0;
  for (const Monomial& m : monos) {
    bool survives = !rs.rewrites_to_zero(m);
    bool in_basis = true;
    for (int i = 1; i <= n; ++i) {
      int ex = m.exponent(vars::intern("x", i));
      int ey = m.exponent(vars::intern("y", i));
      if (ey > 1 || (ex > 0 && ey > 0)) in_basis = false;
    }
    if (survives != in_basis) basis_ok = false;
    if (survives) ++survivors;
  }
  out.push_back(claim("basis-enumeration",
                      "normal-form monomials = { prod x_i^nu_i y_i^eps_i : eps_i <= 1, "
                      "eps_i = 0 if nu_i > 0 }",
                      basis_ok, "exact",
                      json{{"n", n}, {"degree", d}, {"monomials", monos.size()},
                           {"survivors", survivors}}));

  // sampled regularity: t with nonzero constant term annihilates nothing
  Rng rng(P.seed);
  bool reg_ok = true;
  for (int s = 0; s < P.samples; ++s) {
    Polynomial t = Polynomial::constant(rng.uniform(1, 3), dom);
    for (int k = rng.uniform(1, 3); k > 0; --k)
      t.add_term(random_basis_monomial(rng, 3, P.degree_bound, true), rng.uniform(1, 3));
    Polynomial z(dom);
    for (int k = rng.uniform(1, 3); k > 0; --k)
      z.add_term(random_basis_monomial(rng, 3, P.degree_bound, false), rng.uniform(1, 3));
    if (z.is_zero()) continue;
    reg_ok = reg_ok && !rs.normal_form(t.mul(z)).is_zero();
  }
  out.push_back(claim("regular-outside-p",
                      "t with nonzero constant term and z != 0 imply t*z != 0", reg_ok,
                      "witness-level", json{{"samples", P.samples}}));

  // membership certificates: each generator of p kills y_1···y_n
  Monomial yprod;
  for (int i = 1; i <= n; ++i) yprod = yprod.times(Monomial::var(vars::intern("y", i)));
  bool kills_ok = true;
  for (int i = 1; i <= n; ++i) {
    Polynomial xi = Polynomial::variable(vars::intern("x", i), dom);
    Polynomial yi = Polynomial::variable(vars::intern("y", i), dom);
    Polynomial ym = Polynomial::monomial(yprod, dom);
    kills_ok = kills_ok && rs.normal_form(xi.mul(ym)).is_zero() &&
               rs.normal_form(yi.mul(ym)).is_zero();
  }
  for (int s = 0; s < P.samples; ++s) {
    Polynomial p(dom);
    for (int k = rng.uniform(1, 3); k > 0; --k)
      p.add_term(random_basis_monomial(rng, n, P.degree_bound, true), rng.uniform(1, 3));
    kills_ok = kills_ok && rs.normal_form(p.mul(Polynomial::monomial(yprod, dom))).is_zero();
  }
  out.push_back(claim("p-kills-y-product", "p * y_1...y_n = 0 for every p in p",
                      kills_ok, "exact", json{{"y_product", yprod.str()}}));

  // non-nilpotence outside the support: x_m^l * z != 0
  bool nonnilp_ok = true;
  for (int s = 0; s < P.samples; ++s) {
    Polynomial z(dom);
    for (int k = rng.uniform(1, 3); k > 0; --k)
      z.add_term(random_basis_monomial(rng, n, P.degree_bound, false), rng.uniform(1, 3));
    if (z.is_zero()) continue;
    int m = n + 1 + rng.uniform(0, 2);
    int lambda = rng.uniform(1, std::min(P.power_bound, 6));
    Polynomial xm = Polynomial::monomial(Monomial::var(vars::intern("x", m), lambda), dom);
    nonnilp_ok = nonnilp_ok && !rs.normal_form(xm.mul(z)).is_zero();
  }
  out.push_back(claim("xm-not-nilpotent", "x_m^l * z != 0 for m beyond the support of z",
                      nonnilp_ok, "witness-level", json{{"samples", P.samples}}));
  return out;
}

// ---------------------------------------------------------------------------
// valuation-Q: value group Q, a = { nu >= 1 }, M = R/a
// ---------------------------------------------------------------------------

std::vector<ClaimReport> run_valuation_q(const GalleryParams&) {
  ValueGroup g = ValueGroup::Q();
  CutIdeal a = CutIdeal::closed_at(g, {mpq_class(1)});
  CutIdeal P = CutIdeal::maximal(g);
  ValModule M = ValModule::quotient(a);
  std::vector<ClaimReport> out;

  auto coprim = M.is_coprimary();
  bool primary = coprim && *coprim == P;
  out.push_back(claim("zero-primary", "(0) is P-primary in M", primary, "exact",
                      json{{"zero_divisors", M.zero_divisor_set().str()},
                           {"nilpotents", M.nilpotent_set().str()}}));

  auto w = M.ass0_witness_exists(P);
  out.push_back(claim("ass0-empty", "no x in M has Ann(x) = P, so Ass0(M) = {}",
                      !w.exists, "exact",
                      json{{"shape", "Ann(x) is a closed cut, P is open"}}));

  bool ass_singleton = false;
  try {
    ass_singleton = M.ass() == P;
  } catch (const Error&) {
  }
  out.push_back(claim("ass-singleton", "Ass(M) = {P}", ass_singleton, "exact",
                      json{{"prime", P.str()}}));

  // Ass1 ⊆ Ass = {P} and Ass1 nonempty since M != 0
  bool m_nonzero = !M.elem_is_zero(zero_elem(g));
  out.push_back(claim("ass1-equals-ass", "Ass(M) = Ass1(M) ⊋ Ass0(M) = {}",
                      primary && m_nonzero && !w.exists, "exact", json{}));
  return out;
}

// ---------------------------------------------------------------------------
// local-noetherian: declared principal primes in k[X,Y]
// ---------------------------------------------------------------------------

std::vector<ClaimReport> run_local_noetherian(const GalleryParams& P) {
  CoeffDomain dom = CoeffDomain::Q();
  VarId X = vars::intern("x"), Y = vars::intern("y");
  std::vector<VarId> vs{X, Y};
  std::vector<Polynomial> plist{
      parse_polynomial("x", dom), parse_polynomial("y", dom),
      parse_polynomial("x+y", dom), parse_polynomial("x+y^2", dom)};
  std::vector<PolyIdeal> summands;
  for (const Polynomial& p : plist) summands.push_back(PolyIdeal({p}));
  FgModule M = FgModule::direct_sum(summands);
  PolyIdeal m_ideal({parse_polynomial("x", dom), parse_polynomial("y", dom)});
  std::vector<ClaimReport> out;

  // the relevant checks happen in k[X,Y]; the localization at (X,Y) does
  // not change them (R_m-computations of the source are polynomial)
  bool ann_ok = true;
  for (std::size_t i = 0; i < plist.size(); ++i)
    ann_ok = ann_ok && ideal_equal(annihilator(M.generator(i), M), summands[i]);
  out.push_back(claim("ann-of-generators", "Ann(e_p) = (p) for each declared prime p",
                      ann_ok, "exact", json{{"modeled_in", "k[x,y]"}}));

  Rng rng(P.seed);
  bool samp_ok = true;
  json first_few = json::array();
  int done = 0;
  while (done < P.samples) {
    ModElement xi;
    xi.comps.assign(plist.size(), Polynomial::zero(dom));
    for (std::size_t i = 0; i < plist.size(); ++i)
      if (rng.uniform(0, 1)) xi.comps[i] = random_poly(rng, vs, 0, 2, 2, dom);
    if (xi.is_zero_in(M)) continue;
    ++done;
    PolyIdeal ann = annihilator(xi, M);
    int host = -1;
    for (std::size_t i = 0; i < plist.size() && host < 0; ++i) {
      if (xi.comps[i].is_zero() || ideal_member(xi.comps[i], summands[i])) continue;
      if (ideal_contains(summands[i], ann)) host = static_cast<int>(i);
    }
    samp_ok = samp_ok && host >= 0;
    if (done <= 5)
      first_few.push_back({{"ann", ann.str()}, {"inside", host >= 0 ? plist[static_cast<std::size_t>(host)].str() : "?"}});
  }
  out.push_back(claim("sampled-ann-in-principal", "Ann(xi) ⊆ (p_0) for a declared prime",
                      samp_ok, "witness-level", json{{"first_few", first_few}}));

  bool certs_ok = true;
  json certs = json::array();
  std::vector<Polynomial> m_elems = plist;
  m_elems.push_back(parse_polynomial("x", dom));
  m_elems.push_back(parse_polynomial("y", dom));
  for (const Polynomial& z : m_elems) {
    int host = -1;
    for (std::size_t i = 0; i < plist.size() && host < 0; ++i)
      if (ideal_member(z, summands[i])) host = static_cast<int>(i);
    certs_ok = certs_ok && host >= 0;
    certs.push_back({{"z", z.str()}, {"kills", host >= 0 ? "e_{" + plist[static_cast<std::size_t>(host)].str() + "}" : "?"}});
  }
  out.push_back(claim("m-zero-divisor-certificates",
                      "each declared element of m kills a generator e_p", certs_ok,
                      "exact", json{{"certificates", certs}}));

  // m never shows up as a minimal prime over a sampled annihilator
  bool not_ass1 = true;
  Rng rng2(P.seed + 1);
  int done2 = 0;
  while (done2 < P.samples) {
    ModElement xi;
    xi.comps.assign(plist.size(), Polynomial::zero(dom));
    for (std::size_t i = 0; i < plist.size(); ++i)
      if (rng2.uniform(0, 1)) xi.comps[i] = random_poly(rng2, vs, 0, 2, 2, dom);
    if (xi.is_zero_in(M)) continue;
    ++done2;
    PolyIdeal ann = annihilator(xi, M);
    // Ann ⊆ some (p0) ⊊ m, so m cannot be minimal over Ann
    bool in_principal = false;
    for (std::size_t i = 0; i < plist.size(); ++i)
      if (ideal_contains(summands[i], ann) && !ideal_contains(summands[i], m_ideal))
        in_principal = true;
    not_ass1 = not_ass1 && in_principal;
  }
  for (std::size_t i = 0; i < plist.size(); ++i)
    not_ass1 = not_ass1 && !ideal_equal(summands[i], m_ideal);
  out.push_back(claim("m-not-ass1-on-list",
                      "on the declared list m = (x,y) is never minimal over Ann(xi)",
                      not_ass1, "witness",
                      json{{"note", "checked against the declared prime list only"}}));
  return out;
}

// ---------------------------------------------------------------------------
// ass-not-exact: M = N ⊕ L with m ∈ Ass(M) but not in Ass(N) ∪ Ass(L)
// ---------------------------------------------------------------------------

std::vector<ClaimReport> run_ass_not_exact(const GalleryParams& P) {
  CoeffDomain dom = CoeffDomain::Q();
  VarId X = vars::intern("x"), Y = vars::intern("y");
  std::vector<VarId> vs{X, Y};
  Polynomial px = parse_polynomial("x", dom);
  std::vector<Polynomial> lprimes{parse_polynomial("y", dom), parse_polynomial("x+y", dom),
                                  parse_polynomial("x+y^2", dom)};
  std::vector<PolyIdeal> summands{PolyIdeal({px})};
  for (const Polynomial& p : lprimes) summands.push_back(PolyIdeal({p}));
  FgModule M = FgModule::direct_sum(summands);
  std::vector<ClaimReport> out;

  // generators of m are zero divisors on M (m ∈ Ass(M) witnesses)
  auto wx = is_zero_divisor(px, M);
  auto wy = is_zero_divisor(parse_polynomial("y", dom), M);
  out.push_back(claim("m-zero-divisors-on-M", "x and y are zero divisors for M = N ⊕ L",
                      wx.is_zero_divisor && wy.is_zero_divisor, "exact",
                      json{{"x_witness_summand", wx.summand},
                           {"y_witness_summand", wy.summand}}));

  PrimeSet assN = ass(FgModule::cyclic(MonomialIdeal::make({Monomial::var(X)})));
  MonomialIdeal m_mono = MonomialIdeal::variable_prime({X, Y});
  bool assn_ok = assN.primes.size() == 1 &&
                 assN.primes.front().prime == MonomialIdeal::variable_prime({X}) &&
                 !assN.contains(m_mono);
  out.push_back(claim("ass-N-excludes-m", "Ass(N) = {(x)}, so m ∉ Ass(N)", assn_ok,
                      "exact", json{{"ass_N", assN.str()}}));

  bool inj = true;
  for (std::size_t i = 1; i < summands.size(); ++i)
    inj = inj && ideal_equal(ideal_quotient(summands[i], px), summands[i]);
  Rng rng(P.seed);
  int done = 0;
  FgModule L = FgModule::direct_sum({summands.begin() + 1, summands.end()});
  while (done < P.samples) {
    ModElement xi;
    xi.comps.assign(L.summand_count(), Polynomial::zero(dom));
    for (std::size_t i = 0; i < L.summand_count(); ++i)
      if (rng.uniform(0, 1)) xi.comps[i] = random_poly(rng, vs, 0, 2, 2, dom);
    if (xi.is_zero_in(L)) continue;
    ++done;
    ModElement xxi;
    for (const Polynomial& c : xi.comps) xxi.comps.push_back(px.mul(c));
    inj = inj && !xxi.is_zero_in(L);
  }
  out.push_back(claim("x-regular-on-L", "x is not a zero divisor for L, so m ∉ Ass(L)",
                      inj, "exact", json{{"sampled", P.samples}}));
  return out;
}

// ---------------------------------------------------------------------------
// rad-zero-supp: M = ⊕_p Z/(p)
// ---------------------------------------------------------------------------

std::vector<ClaimReport> run_rad_zero_supp(const GalleryParams& P) {
  std::vector<std::int64_t> primes;
  for (std::int64_t p = 2; p <= 97; ++p)
    if (is_prime_i64(p)) primes.push_back(p);
  ZModule M(primes);
  std::vector<ClaimReport> out;

  bool supp_ok = !M.supp_contains(ZPrime{0});
  for (std::int64_t p : primes) supp_ok = supp_ok && M.supp_contains(ZPrime{p});
  out.push_back(claim("zero-not-in-supp",
                      "(0) ∉ Supp(M) although every (p) in the list is", supp_ok, "exact",
                      json{{"primes", primes.size()}}));

  Rng rng(P.seed);
  bool rad_ok = true;
  json first_few = json::array();
  for (int s = 0; s < P.samples; ++s) {
    std::int64_t n = 0;
    while (n == 0) n = rng.uniform(-1000000, 1000000);
    std::int64_t escape = 0;
    for (std::int64_t p : primes)
      if (n % p != 0) {
        escape = p;
        break;
      }
    rad_ok = rad_ok && escape != 0;
    if (s < 5) first_few.push_back({{"n", n}, {"p_not_dividing", escape}});
  }
  out.push_back(claim("radical-zero-witnesses",
                      "for each sampled n != 0 a prime p with p ∤ n^k for all k, so "
                      "n^k e_p != 0",
                      rad_ok, "witness-level", json{{"first_few", first_few}}));
  return out;
}

// ---------------------------------------------------------------------------
// QmodZ
// ---------------------------------------------------------------------------

std::vector<ClaimReport> run_qmodz(const GalleryParams& P) {
  std::vector<ClaimReport> out;
  Rng rng(P.seed);

  bool ann_ok = true;
  json first_few = json::array();
  for (int s = 0; s < P.samples; ++s) {
    std::int64_t n = 0;
    while (n == 0) n = rng.uniform(-100000, 100000);
    auto [a, b] = QmodZ::not_killed_witness(n);
    // n·(a/b) reduced mod 1 must be nonzero
    std::int64_t num = ((n * a) % b + b) % b;
    ann_ok = ann_ok && num != 0;
    if (s < 5) first_few.push_back({{"n", n}, {"x", std::to_string(a) + "/" + std::to_string(b)}});
  }
  out.push_back(claim("ann-M-zero", "Ann_R(Q/Z) = (0): every n != 0 misses some element",
                      ann_ok, "witness-level", json{{"first_few", first_few}}));

  bool torsion_ok = true;
  for (int s = 0; s < P.samples; ++s) {
    std::int64_t b = rng.uniform(2, 50);
    std::int64_t a = rng.uniform(1, static_cast<int>(b) - 1);
    std::int64_t d = QmodZ::annihilator_den(a, b);
    torsion_ok = torsion_ok && d != 0 && (a * d) % b == 0;
  }
  out.push_back(claim("torsion", "every element of Q/Z is torsion: Ann(a/b) = (b/gcd)",
                      torsion_ok, "witness-level", json{{"samples", P.samples}}));

  out.push_back(claim("zero-not-in-supp", "(0) ⊇ Ann_R(M) yet (0) ∉ Supp(M)",
                      !QmodZ::supp_contains(ZPrime{0}) && QmodZ::supp_contains(ZPrime{2}),
                      "exact", json{}));
  return out;
}

// ---------------------------------------------------------------------------
// no-min-supp: p_i = (x_i, ..., x_n) truncation of the tail primes
// ---------------------------------------------------------------------------

std::vector<ClaimReport> run_no_min_supp(const GalleryParams& P) {
  const int n = std::max(P.truncation, 3) + 2;
  CoeffDomain dom = CoeffDomain::Q();
  std::vector<VarId> vs = xvars(n);
  std::vector<MonomialIdeal> primes;
  for (int i = 0; i < n; ++i)
    primes.push_back(MonomialIdeal::variable_prime({vs.begin() + i, vs.end()}));
  std::vector<PolyIdeal> summands;
  for (const auto& p : primes) summands.push_back(p.to_poly_ideal(dom));
  FgModule M = FgModule::direct_sum(summands);
  std::vector<ClaimReport> out;

  bool chain_ok = true;
  for (const auto& p : primes) chain_ok = chain_ok && supp_contains(p, M);
  out.push_back(claim("chain-in-supp", "every truncated tail prime p_i lies in Supp(M)",
                      chain_ok, "exact", json{{"levels", n}}));

  bool strict_ok = true;
  for (int i = 0; i + 1 < n; ++i)
    strict_ok = strict_ok &&
                primes[static_cast<std::size_t>(i)].contains(primes[static_cast<std::size_t>(i + 1)]) &&
                !primes[static_cast<std::size_t>(i + 1)].contains(primes[static_cast<std::size_t>(i)]);
  out.push_back(claim("strict-descent",
                      "p_i ⊋ p_{i+1}: under every Supp member sits a smaller one",
                      strict_ok, "witness",
                      json{{"note", "finite truncation of the infinite descent"}}));
  return out;
}

// ---------------------------------------------------------------------------
// quotR-module: M = Quot(R)/R over a rank-1 discrete valuation ring
// ---------------------------------------------------------------------------

std::vector<ClaimReport> run_quotr(const GalleryParams& P) {
  ValueGroup g = ValueGroup::Zlex(1);
  ValModule M = ValModule::quot_field_mod_ring(g);
  CutIdeal p = CutIdeal::maximal(g);
  std::vector<ClaimReport> out;

  bool ann_zero = M.annihilator_of_module().is_zero();
  bool witnesses = true;
  for (int m = 1; m <= std::min(P.samples, 32); ++m) {
    GroupElem r{mpq_class(m)};
    GroupElem x{mpq_class(-(m + 1))};
    witnesses = witnesses && !M.elem_is_zero(elem_add(r, x));
  }
  out.push_back(claim("ann-M-zero", "Ann_R(M) = (0)", ann_zero && witnesses, "exact",
                      json{{"witness", "value -(m+1) survives multiplication by value m"}}));

  out.push_back(claim("zero-prime", "(0) is a prime ideal of R",
                      cut_is_prime(CutIdeal::zero(g)), "exact", json{}));

  auto coprim = M.is_coprimary();
  bool coprim_ok = coprim && *coprim == p;
  out.push_back(claim("coprimary", "M is p-coprimary, so Ass(M) = {p}", coprim_ok, "exact",
                      json{{"prime", p.str()},
                           {"ann_of_-3", M.annihilator_of({mpq_class(-3)}).str()}}));

  // Ass(R/Ann(M)) = Ass(R) = {(0)}: R is a domain, its zero divisor set is
  // {0}, so R is (0)-coprimary
  bool domain_ok = true;
  for (int a = 0; a <= 4 && domain_ok; ++a)
    for (int b = 0; b <= 4 && domain_ok; ++b) {
      GroupElem va{mpq_class(a)}, vb{mpq_class(b)};
      domain_ok = lex_cmp(elem_add(va, vb), zero_elem(g)) >= 0;  // ν(rs) finite
    }
  out.push_back(claim("zero-essential-for-annM",
                      "(0) is essential for Ann_R(M) in R: Ass(R) = {(0)}", domain_ok,
                      "exact", json{{"reason", "values add, so R has no zero divisors"}}));

  out.push_back(claim("ass-M-excludes-zero", "Ass(M) = {p} does not contain (0)",
                      coprim_ok && !p.is_zero(), "exact", json{}));
  return out;
}

// ---------------------------------------------------------------------------
// scomp-not-additive
// ---------------------------------------------------------------------------

std::vector<ClaimReport> run_scomp(const GalleryParams&) {
  CoeffDomain dom = CoeffDomain::Q();
  Polynomial f = parse_polynomial("x+y", dom);
  PolyIdeal N({parse_polynomial("x", dom)});
  PolyIdeal Nt({parse_polynomial("y", dom)});
  PolyIdeal sum({parse_polynomial("x", dom), parse_polynomial("y", dom)});
  PolyIdeal unit({parse_polynomial("1", dom)});
  std::vector<ClaimReport> out;

  PolyIdeal sN = saturate(N, f);
  out.push_back(claim("S-of-N", "S(N) = N for N = (x), S = powers of x+y",
                      ideal_equal(sN, N), "exact", json{{"S(N)", sN.str()}}));
  PolyIdeal sNt = saturate(Nt, f);
  out.push_back(claim("S-of-Ntilde", "S(N') = N' for N' = (y)", ideal_equal(sNt, Nt),
                      "exact", json{{"S(N')", sNt.str()}}));
  PolyIdeal sSum = saturate(sum, f);
  bool strict = ideal_equal(sSum, unit) && !ideal_contains(sum, sSum);
  out.push_back(claim("S-of-sum", "S(N + N') = (1) ⊄ S(N) + S(N')", strict, "exact",
                      json{{"S(N+N')", sSum.str()}}));
  return out;
}

// ---------------------------------------------------------------------------
// catalog
// ---------------------------------------------------------------------------

struct Scenario {
  ScenarioInfo info;
  std::function<std::vector<ClaimReport>(const GalleryParams&)> run;
};

const std::vector<Scenario>& scenarios() {
  static const std::vector<Scenario>* all = new std::vector<Scenario>{
      {{"rank2-valuation",
        "(0) indecomposable but M not coprimary (rank-2 valuation ring)",
        {{"indecomposable", "(0) is indecomposable in M = R/R*pi1"},
         {"zero-divisor", "pi2 is a zero divisor for M"},
         {"not-nilpotent", "pi2 is not nilpotent for M"}},
        {4, 50, 42, 4, 64}},
       run_rank2_valuation},
      {{"ass-vs-ass1-directsum",
        "Ass(M) ⊋ Ass1(M) for M = ⊕ R/p_i over k[x_1, x_2, ...]",
        {{"generators-in-ass0", "p_i = Ann(e_i), so p_i in Ass0(M)"},
         {"sampled-annihilators", "Ann(y) = p_i0 ⊆ p_n, and never the truncated p"},
         {"union-membership", "every finite-support element of p lies in some p_i"}},
        {4, 50, 42, 4, 64}},
       run_directsum},
      {{"ass-vs-ass1-cyclic",
        "Ass(M) ⊋ Ass1(M) for the cyclic quotient k[x_i,y_i]/(x_i y_i, y_i^2)",
        {{"basis-enumeration",
          "normal-form monomials = { prod x_i^nu_i y_i^eps_i : eps_i <= 1, eps_i = 0 if "
          "nu_i > 0 }"},
         {"regular-outside-p", "t with nonzero constant term and z != 0 imply t*z != 0"},
         {"p-kills-y-product", "p * y_1...y_n = 0 for every p in p"},
         {"xm-not-nilpotent", "x_m^l * z != 0 for m beyond the support of z"}},
        {3, 50, 42, 4, 64}},
       run_cyclic},
      {{"valuation-Q",
        "Ass(M) = Ass1(M) ⊋ Ass0(M) = {} over the rank-1 dense valuation ring",
        {{"zero-primary", "(0) is P-primary in M"},
         {"ass0-empty", "no x in M has Ann(x) = P, so Ass0(M) = {}"},
         {"ass-singleton", "Ass(M) = {P}"},
         {"ass1-equals-ass", "Ass(M) = Ass1(M) ⊋ Ass0(M) = {}"}},
        {4, 50, 42, 4, 64}},
       run_valuation_q},
      {{"local-noetherian",
        "R noetherian local, Ass(M) ⊋ Ass1(M) on the declared prime list",
        {{"ann-of-generators", "Ann(e_p) = (p) for each declared prime p"},
         {"sampled-ann-in-principal", "Ann(xi) ⊆ (p_0) for a declared prime"},
         {"m-zero-divisor-certificates", "each declared element of m kills a generator e_p"},
         {"m-not-ass1-on-list",
          "on the declared list m = (x,y) is never minimal over Ann(xi)"}},
        {4, 50, 42, 4, 64}},
       run_local_noetherian},
      {{"ass-not-exact",
        "Ass(N ⊕ L) ⊄ Ass(N) ∪ Ass(L) for a split exact sequence",
        {{"m-zero-divisors-on-M", "x and y are zero divisors for M = N ⊕ L"},
         {"ass-N-excludes-m", "Ass(N) = {(x)}, so m ∉ Ass(N)"},
         {"x-regular-on-L", "x is not a zero divisor for L, so m ∉ Ass(L)"}},
        {4, 50, 42, 4, 64}},
       run_ass_not_exact},
      {{"rad-zero-supp",
        "(0) ⊇ r_M((0)) yet (0) ∉ Supp(M) for M = ⊕_p Z/(p)",
        {{"zero-not-in-supp", "(0) ∉ Supp(M) although every (p) in the list is"},
         {"radical-zero-witnesses",
          "for each sampled n != 0 a prime p with p ∤ n^k for all k, so n^k e_p != 0"}},
        {4, 50, 42, 4, 64}},
       run_rad_zero_supp},
      {{"QmodZ",
        "(0) ⊇ Ann_R(M) yet (0) ∉ Supp(M) for M = Q/Z",
        {{"ann-M-zero", "Ann_R(Q/Z) = (0): every n != 0 misses some element"},
         {"torsion", "every element of Q/Z is torsion: Ann(a/b) = (b/gcd)"},
         {"zero-not-in-supp", "(0) ⊇ Ann_R(M) yet (0) ∉ Supp(M)"}},
        {4, 50, 42, 4, 64}},
       run_qmodz},
      {{"no-min-supp",
        "Supp(M) without minimal elements (truncated tail primes)",
        {{"chain-in-supp", "every truncated tail prime p_i lies in Supp(M)"},
         {"strict-descent", "p_i ⊋ p_{i+1}: under every Supp member sits a smaller one"}},
        {4, 50, 42, 4, 64}},
       run_no_min_supp},
      {{"quotR-module",
        "essential primes of Ann_R(M) need not be associated: M = Quot(R)/R",
        {{"ann-M-zero", "Ann_R(M) = (0)"},
         {"zero-prime", "(0) is a prime ideal of R"},
         {"coprimary", "M is p-coprimary, so Ass(M) = {p}"},
         {"zero-essential-for-annM", "(0) is essential for Ann_R(M) in R: Ass(R) = {(0)}"},
         {"ass-M-excludes-zero", "Ass(M) = {p} does not contain (0)"}},
        {4, 50, 42, 4, 64}},
       run_quotr},
      {{"scomp-not-additive",
        "S-components are not additive: S(N + N') ⊋ S(N) + S(N')",
        {{"S-of-N", "S(N) = N for N = (x), S = powers of x+y"},
         {"S-of-Ntilde", "S(N') = N' for N' = (y)"},
         {"S-of-sum", "S(N + N') = (1) ⊄ S(N) + S(N')"}},
        {4, 50, 42, 4, 64}},
       run_scomp},
  };
  return *all;
}

}  // namespace

bool ExampleReport::pass() const {
  return !claims.empty() &&
         std::all_of(claims.begin(), claims.end(), [](const ClaimReport& c) { return c.pass; });
}

json ExampleReport::to_json() const {
  json j;
  j["id"] = id;
  j["params"] = {{"truncation", params.truncation},
                 {"samples", params.samples},
                 {"seed", params.seed},
                 {"degree_bound", params.degree_bound},
                 {"power_bound", params.power_bound}};
  j["claims"] = json::array();
  for (const ClaimReport& c : claims)
    j["claims"].push_back({{"name", c.name},
                           {"anchor", c.anchor},
                           {"verdict", c.pass ? "pass" : "fail"},
                           {"mode", c.mode},
                           {"witness", c.witness}});
  j["verdict"] = pass() ? "pass" : "fail";
  j["elapsed_ms"] = elapsed_ms;
  return j;
}

const std::vector<ScenarioInfo>& list_examples() {
  static const std::vector<ScenarioInfo>* infos = [] {
    auto* v = new std::vector<ScenarioInfo>();
    for (const Scenario& s : scenarios()) v->push_back(s.info);
    return v;
  }();
  return *infos;
}

ExampleReport run_example(const std::string& id, const std::optional<GalleryParams>& params) {
  for (const Scenario& s : scenarios()) {
    if (s.info.id != id) continue;
    ExampleReport rep;
    rep.id = id;
    rep.params = params.value_or(s.info.defaults);
    auto t0 = std::chrono::steady_clock::now();
    rep.claims = s.run(rep.params);
    auto t1 = std::chrono::steady_clock::now();
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return rep;
  }
  throw UnsupportedInput("unknown gallery scenario: " + id);
}

}  // namespace primas
