#include "doctest.h"

#include <functional>
#include <optional>

#include "floordiag/errors.hpp"
#include "floordiag/invariants.hpp"
#include "floordiag/node_polynomials.hpp"
#include "floordiag/polynomial.hpp"
#include "template_rows.hpp"
#include "test_support.hpp"

using namespace floordiag;

namespace {

const RatPolynomial x = RatPolynomial::variable();

RatPolynomial c(long v) { return RatPolynomial(v); }
RatPolynomial half(long v) { return RatPolynomial(Rational(v, 2)); }

// Templates of cogenus δ counted straight from the definition: every
// multiset of admissible edges on 0..ℓ of total cogenus δ that covers each
// interior vertex and touches both ends.
int brute_template_count(int delta) {
  int count = 0;
  for (int length = 1; length <= delta + 1; ++length) {
    struct Cand {
      int i, j, w, cost;
    };
    std::vector<Cand> cands;
    for (int i = 0; i < length; ++i) {
      for (int j = i + 1; j <= length; ++j) {
        for (int w = 1; (j - i) * w - 1 <= delta; ++w) {
          if (j - i == 1 && w == 1) continue;
          cands.push_back({i, j, w, (j - i) * w - 1});
        }
      }
    }
    std::vector<int> mult(cands.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t n, int left) {
      if (n == cands.size()) {
        if (left != 0) return;
        bool starts = false, ends = false;
        std::vector<bool> covered(length + 1, false);
        for (std::size_t k = 0; k < cands.size(); ++k) {
          if (!mult[k]) continue;
          starts = starts || cands[k].i == 0;
          ends = ends || cands[k].j == length;
          for (int v = cands[k].i + 1; v < cands[k].j; ++v) covered[v] = true;
        }
        bool ok = starts && ends;
        for (int v = 1; v < length; ++v) ok = ok && covered[v];
        if (ok) ++count;
        return;
      }
      for (int m = 0; m * cands[n].cost <= left; ++m) {
        mult[n] = m;
        rec(n + 1, left - m * cands[n].cost);
      }
      mult[n] = 0;
    };
    rec(0, delta);
  }
  return count;
}

}  // namespace

TEST_SUITE("node_polynomials") {
  TEST_CASE("template census") {
    CHECK(enumerate_templates(1).size() == 2);
    CHECK(enumerate_templates(2).size() == 7);
    for (int delta = 1; delta <= 4; ++delta) {
      CHECK(enumerate_templates(delta).size() == static_cast<std::size_t>(brute_template_count(delta)));
    }
  }

  TEST_CASE("template statistics and extension polynomials match the printed rows") {
    std::vector<Template> all = enumerate_templates(1);
    for (const auto& t : enumerate_templates(2)) all.push_back(t);
    const auto rows = testing::template_rows();
    REQUIRE(all.size() == rows.size());
    std::vector<bool> used(rows.size(), false);
    for (const auto& t : all) {
      const auto s = template_stats(t);
      std::optional<std::size_t> match;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (!used[r] && rows[r].delta == t.cogenus() && rows[r].length == s.length && rows[r].mu == s.multiplicity &&
            rows[r].epsilon == s.epsilon && rows[r].kappa == s.kappa && rows[r].k_min == s.k_min) {
          match = r;
        }
      }
      CAPTURE(t.to_string());
      REQUIRE(match.has_value());
      used[*match] = true;
      CHECK(extension_polynomial(t) == rows[*match].p);
    }
  }

  TEST_CASE("named template rows") {
    const Template heavy(1, {{0, 1, 2}});
    const auto s = template_stats(heavy);
    CHECK(s.length == 1);
    CHECK(s.multiplicity == 4);
    CHECK(s.epsilon == 0);
    CHECK(s.kappa == std::vector<int>{2});
    CHECK(s.k_min == 2);
    CHECK(extension_polynomial(heavy) == x - c(1));

    const Template span(2, {{0, 2, 1}});
    CHECK(template_stats(span).kappa == std::vector<int>{1, 1});
    CHECK(extension_polynomial(span) == c(2) * x + c(1));

    const Template twin(3, {{0, 2, 1}, {1, 3, 1}});
    const auto ts = template_stats(twin);
    CHECK(ts.length == 3);
    CHECK(ts.kappa == std::vector<int>{1, 2, 1});
    CHECK(ts.k_min == 1);
    CHECK(extension_polynomial(twin) == x * (c(4) * x + c(5)));

    CHECK_THROWS_AS(Template(1, {{0, 1, 1}}), ValidationError);
    CHECK_THROWS_AS(Template(3, {{0, 1, 2}, {2, 3, 2}}), ValidationError);
  }

  TEST_CASE("extension polynomials agree with concrete counts") {
    for (int delta = 1; delta <= 3; ++delta) {
      for (const auto& t : enumerate_templates(delta)) {
        const auto p = extension_polynomial(t);
        const int k0 = template_stats(t).k_min;
        for (int k = k0; k <= k0 + 4; ++k) {
          CAPTURE(t.to_string());
          CAPTURE(k);
          CHECK(p(static_cast<long>(k)) == Rational(concrete_extension_count(t, k)));
        }
      }
    }
  }

  TEST_CASE("discrete sums") {
    CHECK(discrete_sum(c(1), 1, 0) == x);
    CHECK(discrete_sum(x, 1, 0) == half(1) * x * (x + c(1)));
    CHECK(discrete_sum(c(2) * x + c(1), 1, 1) == x * x - c(1));
  }

  TEST_CASE("numeric Severi degrees") {
    for (int d = 2; d <= 7; ++d) CHECK(severi_numeric(d, 1) == 3 * (d - 1) * (d - 1));
    CHECK(severi_numeric(4, 2) == 225);
    CHECK(severi_numeric(3, 2) == 21);
    for (int d = 1; d <= 5; ++d) {
      for (int delta = 0; delta <= 6; ++delta) {
        CAPTURE(d);
        CAPTURE(delta);
        CHECK(severi_numeric(d, delta) == severi(d, delta));
      }
    }
  }

  TEST_CASE("node polynomials") {
    const auto n1 = node_polynomial(1);
    CHECK(n1.polynomial == c(3) * (x - c(1)) * (x - c(1)));
    CHECK(n1.threshold == 2);
    CHECK(node_polynomial(2).polynomial == half(3) * (x - c(1)) * (x - c(2)) * (c(3) * x * x - c(3) * x - c(11)));
    const auto n3 = node_polynomial(3);
    CHECK(n3.polynomial(5L) == 7915);
    CHECK(n3.polynomial(4L) == 675);
    for (int delta = 1; delta <= 4; ++delta) CHECK(node_polynomial(delta).polynomial.degree() == 2 * delta);
    for (int delta = 1; delta <= 3; ++delta) {
      const auto np = node_polynomial(delta);
      CHECK(np.sequence_bound <= 2 * delta);
      for (int d = 2 * delta; d <= 2 * delta + 3; ++d) CHECK(np.polynomial(static_cast<long>(d)) == Rational(severi_numeric(d, delta)));
    }
  }

  TEST_CASE("logarithmic coefficients") {
    const auto a = aj_polynomials(3);
    REQUIRE(a.size() == 3);
    CHECK(a[0] == c(3) * (x - c(1)) * (x - c(1)));
    CHECK(a[1] == c(-3) * (x - c(1)) * (c(14) * x - c(25)));
    CHECK(a[2] == c(3) * (c(230) * x * x - c(788) * x + c(633)));
    const auto back = node_polynomials_from_aj(a);
    for (int delta = 1; delta <= 3; ++delta) CHECK(back[delta - 1] == node_polynomial(delta).polynomial);
  }
}
