#include "primas/zmodule.hpp"

#include <algorithm>
#include <numeric>

#include "primas/error.hpp"

namespace primas {

bool is_prime_i64(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> fs;
  if (n < 0) n = -n;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

ZModule::ZModule(std::vector<std::int64_t> moduli) : moduli_(std::move(moduli)) {
  for (std::int64_t n : moduli_)
    if (n < 0 || n == 1) throw UnsupportedInput("Z/(n) summand needs n = 0 or n >= 2");
}

mpz_class ZModule::annihilator(const std::vector<std::int64_t>& r) const {
  if (r.size() != moduli_.size()) throw UnsupportedInput("element arity mismatch");
  mpz_class ann = 1;  // the unit ideal
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::int64_t n = moduli_[i];
    mpz_class need;
    if (n == 0) {
      need = r[i] == 0 ? 1 : 0;  // free summand: nonzero element has Ann (0)
    } else {
      std::int64_t g = std::gcd(n, ((r[i] % n) + n) % n);
      need = n / g;  // 1 when the coset is zero
    }
    if (need == 0 || ann == 0)
      ann = 0;
    else
      mpz_lcm(ann.get_mpz_t(), ann.get_mpz_t(), need.get_mpz_t());
  }
  return ann;
}

std::vector<ZPrime> ZModule::ass0() const {
  std::vector<ZPrime> out;
  for (std::int64_t n : moduli_) {
    if (n == 0) {
      out.push_back({0});  // Ann(1) = (0), prime in Z
      continue;
    }
    // Ann(k) = (n / gcd(n, k)); prime exactly for the cosets k = n/p
    for (std::int64_t p : prime_factors(n)) out.push_back({p});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ZPrime> ZModule::ass1() const {
  std::vector<ZPrime> out;
  for (std::int64_t n : moduli_) {
    if (n == 0) {
      out.push_back({0});
      continue;
    }
    // minimal primes over the annihilators (n / gcd(n, k)) are exactly the
    // prime factors of n
    for (std::int64_t p : prime_factors(n)) out.push_back({p});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ZPrime> ZModule::ass() const {
  // (n) = ∩ (p^a): the decomposition primes are the prime factors
  return ass1();
}

bool ZModule::supp_contains(const ZPrime& p) const {
  for (std::int64_t n : moduli_) {
    if (n == 0) return true;                    // (0) ⊆ any prime
    if (p.p != 0 && n % p.p == 0) return true;  // (n) ⊆ (p)
  }
  return false;
}

bool ZModule::is_nilpotent(std::int64_t r) const {
  for (std::int64_t n : moduli_) {
    if (n == 0) {
      if (r != 0) return false;  // free summand: only 0 is nilpotent
      continue;
    }
    std::int64_t sqfree = 1;
    for (std::int64_t p : prime_factors(n)) sqfree *= p;
    if (r % sqfree != 0) return false;
  }
  return true;
}

bool ZModule::is_zero_divisor(std::int64_t r) const {
  if (r == 0) return !moduli_.empty();
  for (std::int64_t n : moduli_) {
    if (n == 0) continue;  // Z is a domain; a free summand contributes nothing
    if (std::gcd(n, ((r % n) + n) % n) != 1) return true;
  }
  return false;
}

mpz_class ZModule::radical() const {
  // ∩_i (sqfree(n_i)) = (lcm_i sqfree(n_i)); a free summand forces (0)
  bool first = true;
  mpz_class rad = 0;
  for (std::int64_t n : moduli_) {
    mpz_class sqfree = 0;
    if (n != 0) {
      sqfree = 1;
      for (std::int64_t p : prime_factors(n)) sqfree *= p;
    }
    if (first) {
      rad = sqfree;
      first = false;
    } else if (rad == 0 || sqfree == 0) {
      rad = 0;
    } else {
      mpz_lcm(rad.get_mpz_t(), rad.get_mpz_t(), sqfree.get_mpz_t());
    }
  }
  return rad;
}

std::int64_t QmodZ::annihilator_den(std::int64_t a, std::int64_t b) {
  if (b == 0) throw UnsupportedInput("fraction with zero denominator");
  std::int64_t g = std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
  return b / g;
}

std::pair<std::int64_t, std::int64_t> QmodZ::not_killed_witness(std::int64_t n) {
  if (n == 0) throw UnsupportedInput("witness query for n = 0");
  // n·(1/(2n)) = 1/2 ∉ Z
  return {1, 2 * (n < 0 ? -n : n)};
}

bool QmodZ::supp_contains(const ZPrime& p) {
  // the p-primary part Z(p^∞) survives localization at (p); at (0) every
  // element is torsion and the localization vanishes
  return p.p != 0;
}

}  // namespace primas
