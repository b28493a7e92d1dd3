#include "primas/monomial.hpp"

#include <algorithm>
#include <cassert>

namespace primas {

namespace {

bool entry_rank_less(const Monomial::Entry& a, const Monomial::Entry& b) {
  return vars::rank_less(a.first, b.first);
}

}  // namespace

Monomial Monomial::var(VarId v, int exp) {
  Monomial m;
  if (exp > 0) m.entries_.push_back({v, exp});
  return m;
}

Monomial Monomial::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(), entry_rank_less);
  Monomial m;
  for (const auto& [v, e] : entries) {
    if (e == 0) continue;
    if (!m.entries_.empty() && m.entries_.back().first == v)
      m.entries_.back().second += e;
    else
      m.entries_.push_back({v, e});
  }
  std::erase_if(m.entries_, [](const Entry& en) { return en.second == 0; });
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [v, e] : entries_) d += e;
  return d;
}

int Monomial::exponent(VarId v) const {
  for (const auto& [w, e] : entries_)
    if (w == v) return e;
  return 0;
}

std::vector<VarId> Monomial::support() const {
  std::vector<VarId> s;
  s.reserve(entries_.size());
  for (const auto& [v, e] : entries_) s.push_back(v);
  return s;
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial r;
  std::size_t i = 0, j = 0;
  while (i < entries_.size() || j < o.entries_.size()) {
    if (j == o.entries_.size() ||
        (i < entries_.size() && entry_rank_less(entries_[i], o.entries_[j]))) {
      r.entries_.push_back(entries_[i++]);
    } else if (i == entries_.size() || entry_rank_less(o.entries_[j], entries_[i])) {
      r.entries_.push_back(o.entries_[j++]);
    } else {
      r.entries_.push_back({entries_[i].first, entries_[i].second + o.entries_[j].second});
      ++i;
      ++j;
    }
  }
  return r;
}

Monomial Monomial::pow(int k) const {
  assert(k >= 0);
  Monomial r;
  if (k == 0) return r;
  r.entries_ = entries_;
  for (auto& [v, e] : r.entries_) e *= k;
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  std::size_t i = 0, j = 0;
  while (i < a.entries_.size() || j < b.entries_.size()) {
    if (j == b.entries_.size() ||
        (i < a.entries_.size() && entry_rank_less(a.entries_[i], b.entries_[j]))) {
      r.entries_.push_back(a.entries_[i++]);
    } else if (i == a.entries_.size() || entry_rank_less(b.entries_[j], a.entries_[i])) {
      r.entries_.push_back(b.entries_[j++]);
    } else {
      r.entries_.push_back(
          {a.entries_[i].first, std::max(a.entries_[i].second, b.entries_[j].second)});
      ++i;
      ++j;
    }
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  std::size_t i = 0, j = 0;
  while (i < a.entries_.size() && j < b.entries_.size()) {
    if (entry_rank_less(a.entries_[i], b.entries_[j])) {
      ++i;
    } else if (entry_rank_less(b.entries_[j], a.entries_[i])) {
      ++j;
    } else {
      r.entries_.push_back(
          {a.entries_[i].first, std::min(a.entries_[i].second, b.entries_[j].second)});
      ++i;
      ++j;
    }
  }
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  std::size_t j = 0;
  for (const auto& [v, e] : entries_) {
    while (j < o.entries_.size() && entry_rank_less(o.entries_[j], {v, e})) ++j;
    if (j == o.entries_.size() || o.entries_[j].first != v || o.entries_[j].second < e)
      return false;
  }
  return true;
}

Monomial Monomial::div(const Monomial& o) const {
  Monomial r;
  std::size_t j = 0;
  for (const auto& [v, e] : entries_) {
    int sub = 0;
    while (j < o.entries_.size() && entry_rank_less(o.entries_[j], {v, e})) ++j;
    if (j < o.entries_.size() && o.entries_[j].first == v) sub = o.entries_[j].second;
    assert(e >= sub);
    if (e > sub) r.entries_.push_back({v, e - sub});
  }
  return r;
}

Monomial Monomial::colon(const Monomial& o) const { return div(gcd(*this, o)); }

Monomial Monomial::erase_vars(const std::vector<VarId>& vs) const {
  Monomial r;
  for (const auto& [v, e] : entries_) {
    if (std::find(vs.begin(), vs.end(), v) == vs.end()) r.entries_.push_back({v, e});
  }
  return r;
}

Monomial Monomial::squarefree_part() const {
  Monomial r;
  r.entries_ = entries_;
  for (auto& [v, e] : r.entries_) e = 1;
  return r;
}

int Monomial::key_cmp(const Monomial& o) const {
  std::size_t n = std::min(entries_.size(), o.entries_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (int c = vars::rank_cmp(entries_[i].first, o.entries_[i].first); c != 0) return c;
    if (entries_[i].second != o.entries_[i].second)
      return entries_[i].second < o.entries_[i].second ? -1 : 1;
  }
  if (entries_.size() != o.entries_.size())
    return entries_.size() < o.entries_.size() ? -1 : 1;
  return 0;
}

std::string Monomial::str() const {
  if (entries_.empty()) return "1";
  std::string s;
  for (const auto& [v, e] : entries_) {
    if (!s.empty()) s += "*";
    s += vars::display(v);
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

TermOrder TermOrder::block_elim(std::vector<VarId> front) {
  std::sort(front.begin(), front.end(), vars::rank_less);
  front.erase(std::unique(front.begin(), front.end()), front.end());
  return TermOrder(Kind::block_elim, std::move(front));
}

bool TermOrder::in_front(VarId v) const {
  return std::find(front_.begin(), front_.end(), v) != front_.end();
}

namespace {

// grevlex on merged entry streams: higher total degree wins; on equal
// degree the *last* (rank-largest, i.e. smallest) variable where the
// exponents differ decides, smaller exponent winning.
int grevlex_cmp(const std::vector<Monomial::Entry>& a, const std::vector<Monomial::Entry>& b) {
  int da = 0, db = 0;
  for (const auto& [v, e] : a) da += e;
  for (const auto& [v, e] : b) db += e;
  if (da != db) return da < db ? -1 : 1;
  auto i = a.rbegin();
  auto j = b.rbegin();
  while (i != a.rend() || j != b.rend()) {
    if (j == b.rend()) return -1;  // a has an extra small-variable factor
    if (i == a.rend()) return 1;
    int c = vars::rank_cmp(i->first, j->first);
    if (c > 0) return -1;  // a's tail variable is smaller => a has it, b doesn't
    if (c < 0) return 1;
    if (i->second != j->second) return i->second < j->second ? 1 : -1;
    ++i;
    ++j;
  }
  return 0;
}

int lex_cmp(const std::vector<Monomial::Entry>& a, const std::vector<Monomial::Entry>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (i == a.size()) return -1;  // b still has a greater variable
    if (j == b.size()) return 1;
    int c = vars::rank_cmp(a[i].first, b[j].first);
    if (c < 0) return 1;  // a has the greater variable
    if (c > 0) return -1;
    if (a[i].second != b[j].second) return a[i].second < b[j].second ? -1 : 1;
    ++i;
    ++j;
  }
  return 0;
}

}  // namespace

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::lex:
      return lex_cmp(a.entries(), b.entries());
    case Kind::grevlex:
      return grevlex_cmp(a.entries(), b.entries());
    case Kind::block_elim: {
      std::vector<Monomial::Entry> fa, fb, ra, rb;
      for (const auto& en : a.entries()) (in_front(en.first) ? fa : ra).push_back(en);
      for (const auto& en : b.entries()) (in_front(en.first) ? fb : rb).push_back(en);
      if (int c = grevlex_cmp(fa, fb); c != 0) return c;
      return grevlex_cmp(ra, rb);
    }
  }
  return 0;
}

std::string TermOrder::str() const {
  switch (kind_) {
    case Kind::lex:
      return "lex";
    case Kind::grevlex:
      return "grevlex";
    case Kind::block_elim: {
      std::string s = "elim(";
      for (std::size_t i = 0; i < front_.size(); ++i) {
        if (i) s += ",";
        s += vars::display(front_[i]);
      }
      return s + ")";
    }
  }
  return "?";
}

}  // namespace primas
