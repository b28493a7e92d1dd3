#include "primas/coeff.hpp"

namespace primas {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

CoeffDomain CoeffDomain::Fp(std::uint32_t p) {
  if (!is_prime_u32(p)) throw UnsupportedInput("Fp modulus must be prime: " + std::to_string(p));
  return {Kind::prime_field, p};
}

mpq_class CoeffDomain::normalize(const mpq_class& v) const {
  if (kind == Kind::rationals) {
    mpq_class r = v;
    r.canonicalize();
    return r;
  }
  mpz_class mod(p);
  mpz_class num = v.get_num() % mod;
  if (num < 0) num += mod;
  mpz_class den = v.get_den() % mod;
  if (den < 0) den += mod;
  if (den == 0) throw DomainMismatch("denominator divisible by " + std::to_string(p));
  mpz_class deninv;
  if (mpz_invert(deninv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0)
    throw DomainMismatch("denominator not invertible mod " + std::to_string(p));
  mpz_class r = (num * deninv) % mod;
  return mpq_class(r);
}

mpq_class CoeffDomain::inv(const mpq_class& a) const {
  if (a == 0) throw DomainMismatch("division by zero");
  if (kind == Kind::rationals) {
    mpq_class r = 1 / a;
    r.canonicalize();
    return r;
  }
  return normalize(mpq_class(1) / a);
}

std::string CoeffDomain::str() const {
  return kind == Kind::rationals ? "Q" : "Fp(" + std::to_string(p) + ")";
}

}  // namespace primas
