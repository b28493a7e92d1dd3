#include "primas/valuation.hpp"

#include <algorithm>
#include <random>

namespace primas {

std::string ValueGroup::str() const {
  return kind == Kind::zk_lex ? "Zlex(" + std::to_string(rank) + ")" : "Q";
}

int lex_cmp(const GroupElem& a, const GroupElem& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;  // compared up to the common length
}

GroupElem elem_add(const GroupElem& a, const GroupElem& b) {
  GroupElem r(std::min(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

GroupElem elem_sub(const GroupElem& a, const GroupElem& b) {
  GroupElem r(std::min(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

GroupElem elem_scale(const GroupElem& a, long n) {
  GroupElem r = a;
  for (auto& x : r) x *= n;
  return r;
}

GroupElem zero_elem(const ValueGroup& g) { return GroupElem(g.rank, mpq_class(0)); }

std::string elem_str(const GroupElem& a) {
  if (a.size() == 1) return a[0].get_str();
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += a[i].get_str();
  }
  return s + ")";
}

namespace {

GroupElem truncate(const GroupElem& a, std::size_t j) {
  return GroupElem(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(j));
}

// (0, ..., 0, 1) of length j
GroupElem unit_last(std::size_t j) {
  GroupElem e(j, mpq_class(0));
  e[j - 1] = 1;
  return e;
}

// 1-based position of the first nonzero coordinate (threshold is > 0, so
// that coordinate is positive).
std::size_t first_nonzero(const GroupElem& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) return i + 1;
  return a.size() + 1;
}

}  // namespace

CutIdeal CutIdeal::closed_at(const ValueGroup& g, GroupElem gamma) {
  if (static_cast<int>(gamma.size()) != g.rank)
    throw DomainMismatch("threshold rank mismatch");
  GroupElem z = zero_elem(g);
  if (lex_cmp(gamma, z) <= 0) return unit(g);  // contains all of R
  return CutIdeal(g, Kind::closed, std::move(gamma));
}

CutIdeal CutIdeal::open_at(const ValueGroup& g, GroupElem gamma) {
  if (static_cast<int>(gamma.size()) != g.rank)
    throw DomainMismatch("threshold rank mismatch");
  if (g.discrete()) {
    // { ν > γ } = { ν ≥ γ + e_k } in Z^k lex
    gamma[gamma.size() - 1] += 1;
    return closed_at(g, std::move(gamma));
  }
  GroupElem z = zero_elem(g);
  if (lex_cmp(gamma, z) < 0) return unit(g);
  return CutIdeal(g, Kind::open, std::move(gamma));
}

CutIdeal CutIdeal::prefix_at(const ValueGroup& g, GroupElem prefix) {
  if (!g.discrete()) throw UnsupportedInput("limit cuts need a Z^k group");
  if (prefix.size() >= static_cast<std::size_t>(g.rank))
    throw UnsupportedInput("prefix cut must be shorter than the rank");
  if (prefix.empty()) return unit(g);
  GroupElem z(prefix.size(), mpq_class(0));
  if (lex_cmp(prefix, z) <= 0) return unit(g);
  return CutIdeal(g, Kind::prefix, std::move(prefix));
}

CutIdeal CutIdeal::maximal(const ValueGroup& g) {
  return open_at(g, zero_elem(g));
}

CutIdeal CutIdeal::prime_at_level(const ValueGroup& g, int j) {
  if (j < 1 || j > g.rank) throw UnsupportedInput("prime level out of range");
  if (!g.discrete()) return maximal(g);
  if (j == g.rank) return maximal(g);
  return prefix_at(g, unit_last(static_cast<std::size_t>(j)));
}

bool CutIdeal::member(const GroupElem& v) const {
  switch (kind_) {
    case Kind::zero:
      return false;
    case Kind::unit:
      return true;
    case Kind::closed:
      return lex_cmp(v, threshold_) >= 0;
    case Kind::open:
      return lex_cmp(v, threshold_) > 0;
    case Kind::prefix:
      return lex_cmp(truncate(v, threshold_.size()), threshold_) >= 0;
  }
  return false;
}

bool CutIdeal::member(const ValElement& z) const {
  if (z.group != group_) throw DomainMismatch("value group mismatch");
  return member(z.value);
}

bool CutIdeal::subset_of(const CutIdeal& o) const {
  if (group_ != o.group_) throw DomainMismatch("value group mismatch");
  if (kind_ == Kind::zero || o.kind_ == Kind::unit) return true;
  if (o.kind_ == Kind::zero) return kind_ == Kind::zero;
  if (kind_ == Kind::unit) return o.kind_ == Kind::unit;

  const bool a_pref = kind_ == Kind::prefix;
  const bool b_pref = o.kind_ == Kind::prefix;
  if (!a_pref && !b_pref) {
    int c = lex_cmp(threshold_, o.threshold_);
    if (kind_ == Kind::closed && o.kind_ == Kind::open) return c > 0;
    return c >= 0;
  }
  if (a_pref && !b_pref) {
    // worst elements of the prefix cut have arbitrarily small tails
    return lex_cmp(threshold_, truncate(o.threshold_, threshold_.size())) > 0;
  }
  if (!a_pref && b_pref) {
    return lex_cmp(truncate(threshold_, o.threshold_.size()), o.threshold_) >= 0;
  }
  // both prefixes
  std::size_t ja = threshold_.size(), jb = o.threshold_.size();
  if (ja == jb) return lex_cmp(threshold_, o.threshold_) >= 0;
  if (ja < jb) return lex_cmp(threshold_, truncate(o.threshold_, ja)) > 0;
  return lex_cmp(truncate(threshold_, jb), o.threshold_) >= 0;
}

bool CutIdeal::operator==(const CutIdeal& o) const {
  return group_ == o.group_ && kind_ == o.kind_ && threshold_ == o.threshold_;
}

std::string CutIdeal::str() const {
  switch (kind_) {
    case Kind::zero:
      return "(0)";
    case Kind::unit:
      return "(1)";
    case Kind::closed:
      return "cut>=(" + elem_str(threshold_) + ")";
    case Kind::open:
      return "cut>(" + elem_str(threshold_) + ")";
    case Kind::prefix: {
      std::string s = "cut>=((";
      for (const auto& x : threshold_) s += x.get_str() + ",";
      s += "*))";
      return s;
    }
  }
  return "?";
}

CutIdeal cut_intersect(const CutIdeal& I, const CutIdeal& J) {
  return I.subset_of(J) ? I : J;
}

CutIdeal cut_sum(const CutIdeal& I, const CutIdeal& J) {
  return I.subset_of(J) ? J : I;
}

CutIdeal cut_product(const CutIdeal& I, const CutIdeal& J) {
  const ValueGroup& g = I.group();
  if (g != J.group()) throw DomainMismatch("value group mismatch");
  if (I.is_zero() || J.is_zero()) return CutIdeal::zero(g);
  if (I.is_unit()) return J;
  if (J.is_unit()) return I;

  const bool a_pref = I.kind() == CutIdeal::Kind::prefix;
  const bool b_pref = J.kind() == CutIdeal::Kind::prefix;
  if (!a_pref && !b_pref) {
    GroupElem t = elem_add(I.threshold(), J.threshold());
    bool open = I.kind() == CutIdeal::Kind::open || J.kind() == CutIdeal::Kind::open;
    return open ? CutIdeal::open_at(g, std::move(t)) : CutIdeal::closed_at(g, std::move(t));
  }
  std::size_t j = std::min(I.threshold().size(), J.threshold().size());
  GroupElem t = elem_add(truncate(I.threshold(), j), truncate(J.threshold(), j));
  if (j == static_cast<std::size_t>(g.rank)) return CutIdeal::closed_at(g, std::move(t));
  return CutIdeal::prefix_at(g, std::move(t));
}

CutIdeal cut_quotient(const CutIdeal& I, const CutIdeal& J) {
  const ValueGroup& g = I.group();
  if (g != J.group()) throw DomainMismatch("value group mismatch");
  if (J.is_zero()) return CutIdeal::unit(g);
  if (I.is_zero()) return CutIdeal::zero(g);  // domain
  if (I.is_unit()) return CutIdeal::unit(g);
  if (J.is_unit()) return I;

  const bool a_pref = I.kind() == CutIdeal::Kind::prefix;
  const bool b_pref = J.kind() == CutIdeal::Kind::prefix;
  if (!a_pref && !b_pref) {
    GroupElem t = elem_sub(I.threshold(), J.threshold());
    // dense group: { r : r + S_J ⊆ S_I } closes at the threshold
    // difference except in the open:closed case
    bool open = I.kind() == CutIdeal::Kind::open && J.kind() == CutIdeal::Kind::closed;
    return open ? CutIdeal::open_at(g, std::move(t)) : CutIdeal::closed_at(g, std::move(t));
  }
  if (a_pref && !b_pref) {
    std::size_t j = I.threshold().size();
    return CutIdeal::prefix_at(g, elem_sub(I.threshold(), truncate(J.threshold(), j)));
  }
  if (!a_pref && b_pref) {
    // tails of J are unbounded below, so the prefix inequality must be strict
    std::size_t j = J.threshold().size();
    GroupElem t = elem_sub(truncate(I.threshold(), j), J.threshold());
    t = elem_add(t, unit_last(j));
    return CutIdeal::prefix_at(g, std::move(t));
  }
  std::size_t ja = I.threshold().size(), jb = J.threshold().size();
  std::size_t j = std::min(ja, jb);
  GroupElem t = elem_sub(truncate(I.threshold(), j), truncate(J.threshold(), j));
  if (j < ja) t = elem_add(t, unit_last(j));
  return CutIdeal::prefix_at(g, std::move(t));
}

CutIdeal principal_cut(const ValueGroup& g, const GroupElem& v) {
  return CutIdeal::closed_at(g, v);
}

CutIdeal cut_radical(const CutIdeal& I) {
  const ValueGroup& g = I.group();
  if (I.is_zero()) return I;
  if (I.is_unit()) return I;
  if (!g.discrete()) return CutIdeal::maximal(g);
  std::size_t j = first_nonzero(I.threshold());
  return CutIdeal::prime_at_level(g, static_cast<int>(j));
}

bool cut_is_prime(const CutIdeal& I) {
  if (I.is_zero()) return true;  // valuation rings are domains
  if (I.is_unit()) return false;
  return I == cut_radical(I);
}

CutClass cut_classify(const CutIdeal& I) {
  if (I.is_zero()) return {CutClass::Kind::zero, std::nullopt};
  if (I.is_unit()) return {CutClass::Kind::unit, std::nullopt};
  if (cut_is_prime(I)) return {CutClass::Kind::prime, I};
  // primary iff the zero divisors of R/I (= the prime at the threshold
  // length) all lie in the radical
  CutIdeal rad = cut_radical(I);
  std::size_t len = I.threshold().size();
  CutIdeal zdivs = CutIdeal::prime_at_level(I.group(), static_cast<int>(len));
  if (zdivs.subset_of(rad)) return {CutClass::Kind::primary, rad};
  return {CutClass::Kind::neither, std::nullopt};
}

std::string CutClass::str() const {
  switch (kind) {
    case Kind::prime:
      return "prime";
    case Kind::primary:
      return "primary with prime " + prime->str();
    case Kind::neither:
      return "neither";
    case Kind::unit:
      return "unit";
    case Kind::zero:
      return "zero";
  }
  return "?";
}

IndecomposabilityCertificate cut_indecomposable(const CutIdeal& I, int n_samples,
                                                std::uint64_t seed) {
  IndecomposabilityCertificate cert;
  const ValueGroup& g = I.group();
  std::mt19937_64 rng(seed);

  // candidate ideals strictly above I
  std::vector<CutIdeal> above;
  above.push_back(CutIdeal::unit(g));
  if (I.is_proper_nonzero()) {
    const GroupElem& t = I.threshold();
    for (int num = 1; num <= 4; ++num) {
      if (I.kind() != CutIdeal::Kind::prefix) {
        GroupElem s = t;
        if (g.discrete()) {
          s[s.size() - 1] -= num;
        } else {
          s[0] = s[0] * num / (num + 1);
        }
        CutIdeal c = CutIdeal::closed_at(g, s);
        if (I.subset_of(c) && c != I) above.push_back(c);
      } else {
        GroupElem s = t;
        s[s.size() - 1] -= num;
        CutIdeal c = CutIdeal::prefix_at(g, s);
        if (I.subset_of(c) && c != I) above.push_back(c);
      }
    }
    if (!g.discrete()) {
      CutIdeal m = CutIdeal::maximal(g);
      if (I.subset_of(m) && m != I) above.push_back(m);
    } else {
      for (int j = 1; j <= g.rank; ++j) {
        CutIdeal p = CutIdeal::prime_at_level(g, j);
        if (I.subset_of(p) && p != I) above.push_back(p);
      }
    }
  }

  for (int i = 0; i < n_samples; ++i) {
    const CutIdeal& a = above[rng() % above.size()];
    const CutIdeal& b = above[rng() % above.size()];
    CutIdeal meet = cut_intersect(a, b);
    bool ok = (meet == a || meet == b) && meet != I;
    cert.indecomposable = cert.indecomposable && ok;
    cert.samples.push_back({a, b, meet});
  }
  return cert;
}

ValModule ValModule::quotient(const CutIdeal& a) {
  if (!a.is_proper_nonzero())
    throw UnsupportedInput("R/a needs a proper nonzero cut");
  return ValModule(Kind::quotient_by_cut, a.group(), a);
}

ValModule ValModule::quot_field_mod_ring(const ValueGroup& g) {
  if (!(g.discrete() && g.rank == 1))
    throw UnsupportedInput("Quot(R)/R backend is built for the rank-1 discrete case");
  return ValModule(Kind::quot_field_mod_ring, g, CutIdeal::zero(g));
}

bool ValModule::elem_is_zero(const GroupElem& v) const {
  if (kind_ == Kind::quotient_by_cut) return cut_.member(v);
  return lex_cmp(v, zero_elem(group_)) >= 0;
}

CutIdeal ValModule::annihilator_of(const GroupElem& v) const {
  if (elem_is_zero(v)) return CutIdeal::unit(group_);
  if (kind_ == Kind::quotient_by_cut)
    return cut_quotient(cut_, principal_cut(group_, v));
  // Quot(R)/R: Ann(class of value -n) = { r : ν(r) ≥ n }
  GroupElem t = v;
  for (auto& x : t) x = -x;
  return CutIdeal::closed_at(group_, std::move(t));
}

CutIdeal ValModule::zero_divisor_set() const {
  if (kind_ == Kind::quot_field_mod_ring) return CutIdeal::maximal(group_);
  std::size_t len = cut_.threshold().size();
  return CutIdeal::prime_at_level(group_, static_cast<int>(len));
}

CutIdeal ValModule::nilpotent_set() const {
  if (kind_ == Kind::quot_field_mod_ring) return CutIdeal::maximal(group_);
  return cut_radical(cut_);
}

bool ValModule::is_zero_divisor(const GroupElem& r) const {
  return zero_divisor_set().member(r);
}

bool ValModule::is_nilpotent_for(const GroupElem& r) const {
  return nilpotent_set().member(r);
}

std::optional<CutIdeal> ValModule::is_coprimary() const {
  CutIdeal z = zero_divisor_set();
  CutIdeal n = nilpotent_set();
  if (z == n && cut_is_prime(z)) return z;
  return std::nullopt;
}

ValModule::Ass0Witness ValModule::ass0_witness_exists(const CutIdeal& prime) const {
  if (!cut_is_prime(prime)) throw UnsupportedInput("ass0 witness query needs a prime");
  Ass0Witness w;
  if (kind_ == Kind::quot_field_mod_ring) {
    // annihilators realized are exactly the closed cuts at n ≥ 1
    if (prime.kind() == CutIdeal::Kind::closed) {
      GroupElem v = prime.threshold();
      for (auto& x : v) x = -x;
      w.exists = true;
      w.witness = v;
    }
    return w;
  }
  // R/a: Ann(class of v) = (a : v); match shapes and solve for v
  if (prime.kind() != cut_.kind()) return w;
  if (prime.kind() == CutIdeal::Kind::prefix &&
      prime.threshold().size() != cut_.threshold().size())
    return w;
  GroupElem v = elem_sub(cut_.threshold(), prime.threshold());
  if (prime.kind() == CutIdeal::Kind::prefix) {
    // pad the free tail with zeros
    while (v.size() < static_cast<std::size_t>(group_.rank)) v.push_back(0);
  }
  GroupElem z = zero_elem(group_);
  if (lex_cmp(v, z) < 0 || elem_is_zero(v)) return w;
  if (annihilator_of(v) == prime) {
    w.exists = true;
    w.witness = v;
  }
  return w;
}

CutIdeal ValModule::annihilator_of_module() const {
  if (kind_ == Kind::quot_field_mod_ring) return CutIdeal::zero(group_);
  return cut_;
}

CutIdeal ValModule::ass() const {
  auto p = is_coprimary();
  if (!p)
    throw UnsupportedInput(
        "(0) has no primary decomposition in this module; Ass is not computable here");
  return *p;
}

CutIdeal essential_prime_of_cut(const CutIdeal& a) {
  return ValModule::quotient(a).ass();
}

}  // namespace primas
