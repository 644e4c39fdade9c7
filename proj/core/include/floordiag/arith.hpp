#pragma once

// Exact integer and rational helpers shared by every module.

#include <gmpxx.h>

#include <string>

namespace floordiag {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt factorial(long n);

// Binomial coefficient C(n, k) for integer n (possibly negative) and k >= 0.
BigInt binomial(long n, long k);

BigInt power(const BigInt& base, unsigned long exponent);

// Exact quotient; throws InternalError when `den` does not divide `num`.
BigInt exact_div(const BigInt& num, const BigInt& den, const char* context);

// Converts an integral rational to BigInt; throws InternalError otherwise.
BigInt to_integer(const Rational& q, const char* context);

Rational make_rational(long num, long den = 1);

std::string to_string(const BigInt& value);
std::string to_string(const Rational& value);

}  // namespace floordiag
