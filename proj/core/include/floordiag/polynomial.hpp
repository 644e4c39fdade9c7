#pragma once

#include <string>
#include <vector>

#include "floordiag/arith.hpp"

namespace floordiag {

// Univariate polynomial with exact rational coefficients, stored in the
// monomial basis with trailing zeros trimmed.
class RatPolynomial {
 public:
  RatPolynomial() = default;
  RatPolynomial(const Rational& constant);
  RatPolynomial(long constant);
  explicit RatPolynomial(std::vector<Rational> coefficients);

  static RatPolynomial variable();
  // C(x + shift, m) as a polynomial in x.
  static RatPolynomial binomial_in(long shift, long m);
  // The polynomial of degree < values.size() with p(start + i) = values[i].
  static RatPolynomial interpolate(long start, const std::vector<Rational>& values);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coefficient(int i) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational operator()(const Rational& x) const;
  Rational operator()(long x) const;

  // p(x + shift).
  RatPolynomial shifted(long shift) const;
  // Coefficients c_m with p(x) = Σ c_m C(x, m).
  std::vector<Rational> newton_coefficients() const;

  RatPolynomial& operator+=(const RatPolynomial& other);
  RatPolynomial& operator-=(const RatPolynomial& other);
  RatPolynomial& operator*=(const RatPolynomial& other);
  friend RatPolynomial operator+(RatPolynomial a, const RatPolynomial& b) { return a += b; }
  friend RatPolynomial operator-(RatPolynomial a, const RatPolynomial& b) { return a -= b; }
  friend RatPolynomial operator*(RatPolynomial a, const RatPolynomial& b) { return a *= b; }
  RatPolynomial operator-() const;

  bool operator==(const RatPolynomial& other) const { return coeffs_ == other.coeffs_; }

  // Monomial form in `var`, highest degree first, e.g. "3*d^2 - 6*d + 3".
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// q(n) = Σ_{k=a}^{n-shift} p(k), valid for n >= a + shift - 1.
RatPolynomial discrete_sum(const RatPolynomial& p, long a, long shift);

}  // namespace floordiag
