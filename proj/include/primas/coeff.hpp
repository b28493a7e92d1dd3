#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "primas/error.hpp"

namespace primas {

// Coefficient domain: exact rationals or the prime field F_p (p < 2^31).
// F_p values are kept as integers in [0, p) with denominator 1, so a single
// mpq_class representation serves both domains.
struct CoeffDomain {
  enum class Kind { rationals, prime_field };

  Kind kind = Kind::rationals;
  std::uint32_t p = 0;

  static CoeffDomain Q() { return {Kind::rationals, 0}; }
  static CoeffDomain Fp(std::uint32_t p);

  bool operator==(const CoeffDomain& o) const { return kind == o.kind && p == o.p; }
  bool operator!=(const CoeffDomain& o) const { return !(*this == o); }

  bool is_rationals() const { return kind == Kind::rationals; }

  // Map an arbitrary rational into the domain's canonical representation.
  mpq_class normalize(const mpq_class& v) const;
  mpq_class add(const mpq_class& a, const mpq_class& b) const { return normalize(a + b); }
  mpq_class sub(const mpq_class& a, const mpq_class& b) const { return normalize(a - b); }
  mpq_class mul(const mpq_class& a, const mpq_class& b) const { return normalize(a * b); }
  mpq_class neg(const mpq_class& a) const { return normalize(-a); }
  mpq_class inv(const mpq_class& a) const;
  mpq_class div(const mpq_class& a, const mpq_class& b) const { return mul(a, inv(b)); }

  std::string str() const;
};

bool is_prime_u32(std::uint32_t n);

}  // namespace primas
