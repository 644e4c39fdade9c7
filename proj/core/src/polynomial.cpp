#include "floordiag/polynomial.hpp"

#include <algorithm>

namespace floordiag {

RatPolynomial::RatPolynomial(const Rational& constant) : coeffs_{constant} { trim(); }

RatPolynomial::RatPolynomial(long constant) : coeffs_{Rational(constant)} { trim(); }

RatPolynomial::RatPolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RatPolynomial RatPolynomial::variable() { return RatPolynomial(std::vector<Rational>{0, 1}); }

RatPolynomial RatPolynomial::binomial_in(long shift, long m) {
  RatPolynomial p(1);
  for (long i = 0; i < m; ++i) p *= RatPolynomial(std::vector<Rational>{Rational(shift - i), 1});
  Rational scale = Rational(1) / Rational(factorial(m));
  return p * RatPolynomial(scale);
}

RatPolynomial RatPolynomial::interpolate(long start, const std::vector<Rational>& values) {
  // Newton forward differences at `start`, then Σ Δ^m C(x - start, m).
  std::vector<Rational> diff = values;
  RatPolynomial out;
  for (std::size_t m = 0; m < values.size(); ++m) {
    out += RatPolynomial(diff[0]) * binomial_in(-start, static_cast<long>(m));
    for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
    diff.pop_back();
  }
  return out;
}

Rational RatPolynomial::coefficient(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational RatPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational RatPolynomial::operator()(long x) const { return (*this)(Rational(x)); }

RatPolynomial RatPolynomial::shifted(long shift) const {
  RatPolynomial out;
  RatPolynomial base(std::vector<Rational>{Rational(shift), 1});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) out = out * base + RatPolynomial(*it);
  return out;
}

std::vector<Rational> RatPolynomial::newton_coefficients() const {
  std::vector<Rational> values;
  for (int i = 0; i <= degree(); ++i) values.push_back((*this)(static_cast<long>(i)));
  std::vector<Rational> out;
  while (!values.empty()) {
    out.push_back(values[0]);
    for (std::size_t i = 0; i + 1 < values.size(); ++i) values[i] = values[i + 1] - values[i];
    values.pop_back();
  }
  return out;
}

RatPolynomial& RatPolynomial::operator+=(const RatPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

RatPolynomial& RatPolynomial::operator-=(const RatPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

RatPolynomial& RatPolynomial::operator*=(const RatPolynomial& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

RatPolynomial RatPolynomial::operator-() const {
  RatPolynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string RatPolynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    Rational c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string monomial = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (i == 0) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += monomial;
    } else {
      out += mag.get_str() + "*" + monomial;
    }
  }
  return out;
}

void RatPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RatPolynomial discrete_sum(const RatPolynomial& p, long a, long shift) {
  // With p = Σ c_m C(k, m) and Σ_{k=0}^{N} C(k, m) = C(N+1, m+1), the partial
  // sum S(N) = Σ_{k=0}^{N} p(k) is Σ c_m C(N+1, m+1).
  std::vector<Rational> c = p.newton_coefficients();
  RatPolynomial partial;
  for (std::size_t m = 0; m < c.size(); ++m) {
    partial += RatPolynomial(c[m]) * RatPolynomial::binomial_in(1 - shift, static_cast<long>(m) + 1);
  }
  // partial(n) = S(n - shift); subtract S(a - 1) = partial(a - 1 + shift).
  return partial - RatPolynomial(partial(a - 1 + shift));
}

}  // namespace floordiag
