#include "primas/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "primas/error.hpp"

namespace primas {

Polynomial Polynomial::constant(const mpq_class& c, CoeffDomain dom) {
  Polynomial p(dom);
  p.add_term(Monomial::one(), c);
  return p;
}

Polynomial Polynomial::monomial(const Monomial& m, CoeffDomain dom, const mpq_class& c) {
  Polynomial p(dom);
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::variable(VarId v, CoeffDomain dom) {
  return monomial(Monomial::var(v), dom);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

mpq_class Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

std::vector<VarId> Polynomial::support_vars() const {
  std::vector<VarId> s;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.entries()) s.push_back(v);
  std::sort(s.begin(), s.end(), vars::rank_less);
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::optional<Monomial> Polynomial::as_monomial() const {
  if (terms_.size() != 1) return std::nullopt;
  return terms_.begin()->first;
}

void Polynomial::add_term(const Monomial& m, const mpq_class& c) {
  mpq_class v = dom_.normalize(c);
  if (v == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, v);
  if (!inserted) {
    it->second = dom_.add(it->second, v);
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_domain(const Polynomial& o) const {
  if (dom_ != o.dom_)
    throw DomainMismatch("coefficient domains differ: " + dom_.str() + " vs " + o.dom_.str());
}

Polynomial Polynomial::add(const Polynomial& o) const {
  check_domain(o);
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::sub(const Polynomial& o) const {
  check_domain(o);
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, dom_.neg(c));
  return r;
}

Polynomial Polynomial::mul(const Polynomial& o) const {
  check_domain(o);
  Polynomial r(dom_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(m1.times(m2), dom_.mul(c1, c2));
  return r;
}

Polynomial Polynomial::neg() const {
  Polynomial r(dom_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, dom_.neg(c));
  return r;
}

Polynomial Polynomial::scale(const mpq_class& c) const {
  Polynomial r(dom_);
  for (const auto& [m, k] : terms_) r.add_term(m, dom_.mul(k, c));
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const mpq_class& c) const {
  Polynomial r(dom_);
  for (const auto& [m1, c1] : terms_) r.add_term(m1.times(m), dom_.mul(c1, c));
  return r;
}

Polynomial Polynomial::pow(int k) const {
  Polynomial r = constant(1, dom_);
  for (int i = 0; i < k; ++i) r = r.mul(*this);
  return r;
}

const Monomial& Polynomial::leading_monomial(const TermOrder& ord) const {
  if (terms_.empty()) throw UnsupportedInput("leading monomial of zero polynomial");
  const Monomial* best = nullptr;
  for (const auto& [m, c] : terms_)
    if (!best || ord.greater(m, *best)) best = &m;
  return *best;
}

mpq_class Polynomial::leading_coeff(const TermOrder& ord) const {
  return terms_.at(leading_monomial(ord));
}

Polynomial Polynomial::monic(const TermOrder& ord) const {
  if (terms_.empty()) return *this;
  return scale(dom_.inv(leading_coeff(ord)));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) { return a.add(b); }
Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a.sub(b); }
Polynomial operator*(const Polynomial& a, const Polynomial& b) { return a.mul(b); }

std::string Polynomial::str(const TermOrder& ord) const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Monomial, mpq_class>*> sorted;
  sorted.reserve(terms_.size());
  for (const auto& t : terms_) sorted.push_back(&t);
  std::sort(sorted.begin(), sorted.end(),
            [&](auto* a, auto* b) { return ord.greater(a->first, b->first); });

  std::string s;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const auto& [m, c] = *sorted[i];
    mpq_class a = c;
    bool negative = a < 0;
    if (negative) a = -a;
    if (i == 0) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    if (m.is_one()) {
      s += a.get_str();
    } else {
      if (a != 1) s += a.get_str() + "*";
      s += m.str();
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

class PolyParser {
 public:
  PolyParser(const std::string& text, CoeffDomain dom, const std::vector<VarId>* allowed)
      : text_(text), dom_(dom), allowed_(allowed) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return p;
  }

 private:
  Polynomial expr() {
    skip_ws();
    bool negate = false;
    while (peek() == '+' || peek() == '-') {
      if (take() == '-') negate = !negate;
      skip_ws();
    }
    Polynomial p = term();
    if (negate) p = p.neg();
    skip_ws();
    while (peek() == '+' || peek() == '-') {
      char op = take();
      Polynomial q = term();
      p = op == '+' ? p.add(q) : p.sub(q);
      skip_ws();
    }
    return p;
  }

  Polynomial term() {
    Polynomial p = factor();
    skip_ws();
    while (peek() == '*') {
      take();
      p = p.mul(factor());
      skip_ws();
    }
    return p;
  }

  Polynomial factor() {
    Polynomial p = base();
    skip_ws();
    if (peek() == '^') {
      take();
      skip_ws();
      std::size_t at = pos_;
      long e = integer();
      if (e < 0) throw ParseError("negative exponent", at);
      p = p.pow(static_cast<int>(e));
    }
    return p;
  }

  Polynomial base() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      take();
      Polynomial p = expr();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      take();
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return variable();
    throw ParseError(std::string("unexpected character '") + (c ? std::string(1, c) : "<end>") +
                         "'",
                     pos_);
  }

  Polynomial number() {
    mpz_class num(digits());
    skip_ws();
    if (peek() == '/') {
      take();
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        throw ParseError("expected denominator digits", pos_);
      std::size_t at = pos_;
      mpz_class den(digits());
      if (den == 0) throw ParseError("zero denominator", at);
      return Polynomial::constant(mpq_class(num, den), dom_);
    }
    return Polynomial::constant(mpq_class(num), dom_);
  }

  Polynomial variable() {
    std::size_t at = pos_;
    std::string name;
    name += take();
    while (std::isalnum(static_cast<unsigned char>(peek()))) name += take();
    int index = -1;
    if (peek() == '_') {
      take();
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        throw ParseError("expected digits after '_'", pos_);
      index = static_cast<int>(std::stol(digits()));
    }
    VarId v = vars::intern(name, index);
    if (allowed_ && std::find(allowed_->begin(), allowed_->end(), v) == allowed_->end())
      throw ParseError("unknown variable '" + vars::display(v) + "'", at);
    return Polynomial::variable(v, dom_);
  }

  std::string digits() {
    std::string s;
    while (std::isdigit(static_cast<unsigned char>(peek()))) s += take();
    return s;
  }

  long integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected integer", pos_);
    return std::stol(digits());
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char take() { return text_[pos_++]; }

  const std::string& text_;
  CoeffDomain dom_;
  const std::vector<VarId>* allowed_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, CoeffDomain dom,
                            const std::vector<VarId>* allowed_vars) {
  return PolyParser(text, dom, allowed_vars).parse();
}

}  // namespace primas
