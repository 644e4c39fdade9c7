#include "floordiag/arith.hpp"

#include "floordiag/errors.hpp"

namespace floordiag {

BigInt factorial(long n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt binomial(long n, long k) {
  if (k < 0) return 0;
  BigInt r;
  if (n >= 0) {
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  } else {
    BigInt top = n;
    mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
  }
  return r;
}

BigInt power(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

BigInt exact_div(const BigInt& num, const BigInt& den, const char* context) {
  if (den == 0 || !mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw InternalError(std::string("inexact division in ") + context + ": " + num.get_str() + " / " +
                        den.get_str());
  }
  BigInt q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

BigInt to_integer(const Rational& q, const char* context) {
  if (q.get_den() != 1) {
    throw InternalError(std::string("non-integral value in ") + context + ": " + q.get_str());
  }
  return q.get_num();
}

Rational make_rational(long num, long den) {
  Rational q{BigInt(num), BigInt(den)};
  q.canonicalize();
  return q;
}

std::string to_string(const BigInt& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

}  // namespace floordiag
