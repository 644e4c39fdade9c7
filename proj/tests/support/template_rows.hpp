#pragma once

#include <vector>

#include "floordiag/arith.hpp"
#include "floordiag/polynomial.hpp"

namespace testing {

// One printed row per template of cogenus at most 2.
struct TemplateRow {
  int delta;
  int length;
  int mu;
  int epsilon;
  std::vector<int> kappa;
  int k_min;
  floordiag::RatPolynomial p;
};

inline std::vector<TemplateRow> template_rows() {
  using floordiag::RatPolynomial;
  using floordiag::Rational;
  const RatPolynomial k = RatPolynomial::variable();
  const auto c = [](long v) { return RatPolynomial(v); };
  return {
      {1, 1, 4, 0, {2}, 2, k - c(1)},
      {1, 2, 1, 1, {1, 1}, 1, c(2) * k + c(1)},
      {2, 1, 9, 0, {3}, 3, k - c(2)},
      {2, 1, 16, 0, {4}, 4, RatPolynomial(Rational(1, 2)) * (k - c(2)) * (k - c(3))},
      {2, 2, 1, 1, {2, 2}, 2, k * (c(2) * k - c(1))},
      {2, 2, 4, 1, {3, 1}, 3, c(2) * k * (k - c(2))},
      {2, 2, 4, 0, {1, 3}, 2, c(2) * k * (k - c(1))},
      {2, 3, 1, 1, {1, 1, 1}, 1, c(3) * (k + c(1))},
      {2, 3, 1, 1, {1, 2, 1}, 1, k * (c(4) * k + c(5))},
  };
}

}  // namespace testing
