#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace primas {

// Z-backend: primes are certified prime integers, plus the zero ideal.
struct ZPrime {
  // 0 stands for the zero ideal (0); otherwise a prime number p for (p).
  std::int64_t p = 0;
  bool operator==(const ZPrime& o) const { return p == o.p; }
  bool operator<(const ZPrime& o) const { return p < o.p; }
  std::string str() const { return "(" + std::to_string(p) + ")"; }
};

bool is_prime_i64(std::int64_t n);
std::vector<std::int64_t> prime_factors(std::int64_t n);

// ⊕_i Z/(n_i) with n_i ≥ 2 (a 0 modulus summand is a free Z summand).
class ZModule {
 public:
  explicit ZModule(std::vector<std::int64_t> moduli);
  const std::vector<std::int64_t>& moduli() const { return moduli_; }

  // Ann of the element with coset representatives r_i: the principal ideal
  // (lcm_i (n_i / gcd(n_i, r_i))); 1 for the zero element, 0 when a free
  // summand contributes.
  mpz_class annihilator(const std::vector<std::int64_t>& r) const;

  std::vector<ZPrime> ass0() const;
  std::vector<ZPrime> ass1() const;
  // Primary decomposition route: primes of the factorizations.
  std::vector<ZPrime> ass() const;
  bool supp_contains(const ZPrime& p) const;
  // r nilpotent for ⊕ Z/(n_i) iff every squarefree kernel divides r.
  bool is_nilpotent(std::int64_t r) const;
  bool is_zero_divisor(std::int64_t r) const;
  // Generator of r_M((0)) = ∩_i rad((n_i)); 0 when the radical is zero.
  mpz_class radical() const;

 private:
  std::vector<std::int64_t> moduli_;
};

// Q/Z: torsion witnesses for the Supp examples. Elements are fractions
// a/b mod 1 in lowest terms; Ann(a/b) = (b).
struct QmodZ {
  static std::int64_t annihilator_den(std::int64_t a, std::int64_t b);
  // For n ≠ 0: an element x with n·x ≠ 0 (so n ∉ Ann_R(M)); x = 1/(2n).
  static std::pair<std::int64_t, std::int64_t> not_killed_witness(std::int64_t n);
  static bool supp_contains(const ZPrime& p);
};

}  // namespace primas
