#include "floordiag/node_polynomials.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "floordiag/errors.hpp"
#include "floordiag/markings.hpp"

namespace floordiag {

namespace {

BigInt parallel_factor(const std::vector<TemplateEdge>& sorted_edges) {
  BigInt f = 1;
  for (std::size_t i = 0; i < sorted_edges.size();) {
    std::size_t j = i;
    while (j < sorted_edges.size() && sorted_edges[j] == sorted_edges[i]) ++j;
    f *= factorial(static_cast<long>(j - i));
    i = j;
  }
  return f;
}

struct PreparedTemplate {
  Template shape;
  TemplateStats stats;
  RatPolynomial p;
  int cogenus;
};

std::vector<PreparedTemplate> prepared_upto(int delta) {
  static std::vector<PreparedTemplate> cache;
  static int filled = 0;
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  for (; filled < delta; ++filled) {
    for (const auto& t : enumerate_templates(filled + 1)) {
      cache.push_back({t, template_stats(t), extension_polynomial(t), filled + 1});
    }
  }
  std::vector<PreparedTemplate> out;
  for (const auto& pt : cache) {
    if (pt.cogenus <= delta) out.push_back(pt);
  }
  return out;
}

}  // namespace

Template::Template(int length, std::vector<TemplateEdge> edges) : length_(length), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  if (length_ < 1) throw ValidationError("template length must be positive");
  if (edges_.empty()) throw ValidationError("template needs at least one edge");
  for (const auto& e : edges_) {
    if (e.i < 0 || e.j > length_ || e.i >= e.j) throw ValidationError("template edge outside 0.." + std::to_string(length_));
    if (e.weight < 1) throw ValidationError("template edge weight must be positive");
    if (e.j - e.i == 1 && e.weight == 1) throw ValidationError("template contains a short unit edge");
  }
  for (int j = 1; j < length_; ++j) {
    bool covered = std::any_of(edges_.begin(), edges_.end(), [j](const TemplateEdge& e) { return e.i < j && j < e.j; });
    if (!covered) throw ValidationError("template vertex " + std::to_string(j) + " is not covered");
  }
  bool starts = std::any_of(edges_.begin(), edges_.end(), [](const TemplateEdge& e) { return e.i == 0; });
  bool ends = std::any_of(edges_.begin(), edges_.end(), [this](const TemplateEdge& e) { return e.j == length_; });
  if (!starts || !ends) throw ValidationError("template edges must reach both end vertices");
}

int Template::cogenus() const {
  int delta = 0;
  for (const auto& e : edges_) delta += (e.j - e.i) * e.weight - 1;
  return delta;
}

std::string Template::to_string() const {
  std::string out = "l=" + std::to_string(length_) + "; edges=";
  for (std::size_t n = 0; n < edges_.size(); ++n) {
    if (n) out += ';';
    out += '(' + std::to_string(edges_[n].i) + ',' + std::to_string(edges_[n].j) + ',' +
           std::to_string(edges_[n].weight) + ')';
  }
  return out;
}

TemplateStats template_stats(const Template& t) {
  TemplateStats s;
  s.length = t.length();
  s.multiplicity = 1;
  bool all_unit = true;
  for (const auto& e : t.edges()) {
    s.multiplicity *= e.weight * e.weight;
    if (e.j == t.length() && e.weight != 1) all_unit = false;
  }
  s.epsilon = all_unit ? 1 : 0;
  s.k_min = 1;
  for (int j = 1; j <= t.length(); ++j) {
    int kappa = 0;
    for (const auto& e : t.edges()) {
      if (e.i < j && j <= e.j) kappa += e.weight;
    }
    s.kappa.push_back(kappa);
    s.k_min = j == 1 ? kappa : std::max(s.k_min, kappa - j + 1);
  }
  return s;
}

std::vector<Template> enumerate_templates(int delta) {
  std::vector<Template> out;
  if (delta < 1) return out;
  for (int length = 1; length <= delta + 1; ++length) {
    // Candidate edges whose cogenus contribution lies in 1..delta.
    std::vector<TemplateEdge> cands;
    for (int i = 0; i < length; ++i) {
      for (int j = i + 1; j <= length; ++j) {
        for (int w = 1; (j - i) * w - 1 <= delta; ++w) {
          if ((j - i) * w - 1 >= 1) cands.push_back({i, j, w});
        }
      }
    }
    std::vector<TemplateEdge> chosen;
    auto pick = [&](auto&& self, std::size_t from, int left) -> void {
      if (left == 0) {
        try {
          out.emplace_back(length, chosen);
        } catch (const ValidationError&) {
        }
        return;
      }
      for (std::size_t n = from; n < cands.size(); ++n) {
        int cost = (cands[n].j - cands[n].i) * cands[n].weight - 1;
        if (cost > left) continue;
        chosen.push_back(cands[n]);
        self(self, n, left - cost);
        chosen.pop_back();
      }
    };
    pick(pick, 0, delta);
  }
  std::sort(out.begin(), out.end(), [](const Template& a, const Template& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.edges() < b.edges();
  });
  return out;
}

RatPolynomial extension_polynomial(const Template& t) {
  const TemplateStats s = template_stats(t);
  const auto& edges = t.edges();
  const int length = t.length();
  // Assignments of distinguishable midpoints to gaps, grouped by gap counts b.
  std::map<std::vector<int>, BigInt> by_counts;
  std::vector<int> b(static_cast<std::size_t>(length) + 1, 0);
  auto place = [&](auto&& self, std::size_t n) -> void {
    if (n == edges.size()) {
      by_counts[b] += 1;
      return;
    }
    for (int gap = edges[n].i + 1; gap <= edges[n].j; ++gap) {
      ++b[gap];
      self(self, n + 1);
      --b[gap];
    }
  };
  place(place, 0);

  RatPolynomial total;
  for (const auto& [counts, assignments] : by_counts) {
    RatPolynomial term{Rational(assignments)};
    for (int j = 1; j <= length; ++j) {
      const int bj = counts[j];
      term *= RatPolynomial(Rational(factorial(bj)));
      term *= RatPolynomial::binomial_in(j - 1 - s.kappa[j - 1] + bj, bj);
    }
    total += term;
  }
  return total * RatPolynomial(Rational(1) / Rational(parallel_factor(edges)));
}

BigInt concrete_extension_count(const Template& t, int k) {
  const TemplateStats s = template_stats(t);
  if (k < s.k_min) throw DomainError("offset below k_min");
  std::vector<GapItem> items;
  for (const auto& e : t.edges()) items.push_back({e.i + 1, e.j});
  BigInt symmetry = parallel_factor(t.edges());
  for (int j = 1; j <= t.length(); ++j) {
    const int shorts = k + j - 1 - s.kappa[j - 1];
    symmetry *= factorial(shorts);
    for (int n = 0; n < shorts; ++n) items.push_back({j, j});
  }
  return exact_div(count_gap_orderings(t.length(), items), symmetry, "concrete_extension_count");
}

BigInt severi_numeric(int d, int delta) {
  if (d < 1) throw DomainError("degree must be at least 1");
  if (delta < 0) throw DomainError("cogenus must be nonnegative");
  if (delta == 0) return 1;
  const auto templates = prepared_upto(delta);
  std::map<std::pair<int, int>, BigInt> memo;
  // Sum over template sequences whose first offset is at least `from`.
  auto rest = [&](auto&& self, int from, int left) -> BigInt {
    if (left == 0) return 1;
    if (from > d) return 0;
    auto key = std::make_pair(from, left);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    BigInt total = 0;
    for (const auto& pt : templates) {
      if (pt.cogenus > left) continue;
      const bool last = pt.cogenus == left;
      const int top = last ? d + pt.stats.epsilon - pt.stats.length : d - pt.stats.length;
      for (int k = std::max(from, pt.stats.k_min); k <= top; ++k) {
        BigInt weight = pt.stats.multiplicity * to_integer(pt.p(static_cast<long>(k)), "severi_numeric");
        if (!last) weight *= self(self, k + pt.stats.length, left - pt.cogenus);
        total += weight;
      }
    }
    memo.emplace(key, total);
    return total;
  };
  return rest(rest, 1, delta);
}

NodePolynomial node_polynomial(int delta) {
  if (delta < 0) throw DomainError("cogenus must be nonnegative");
  NodePolynomial out;
  if (delta == 0) {
    out.polynomial = RatPolynomial(1);
    return out;
  }
  const auto templates = prepared_upto(delta);
  // q: the nested sums so far as a polynomial in the next offset;
  // lower: smallest admissible next offset.
  auto extend = [&](auto&& self, const RatPolynomial& q, int lower, int left, const BigInt& mu) -> void {
    for (const auto& pt : templates) {
      if (pt.cogenus > left) continue;
      const int a = std::max(lower, pt.stats.k_min);
      const RatPolynomial summand = pt.p * q;
      const BigInt weight = mu * pt.stats.multiplicity;
      if (pt.cogenus == left) {
        const int shift = pt.stats.length - pt.stats.epsilon;
        out.polynomial += RatPolynomial(Rational(weight)) * discrete_sum(summand, a, shift);
        out.sequence_bound = std::max(out.sequence_bound, a + shift - 1);
      } else {
        self(self, discrete_sum(summand, a, pt.stats.length), a + pt.stats.length, left - pt.cogenus, weight);
      }
    }
  };
  extend(extend, RatPolynomial(1), 1, delta, BigInt(1));
  if (out.sequence_bound > 2 * delta) {
    throw InternalError("node polynomial validity bound " + std::to_string(out.sequence_bound) + " exceeds 2*delta");
  }
  out.threshold = 2 * delta;
  return out;
}

std::vector<RatPolynomial> aj_polynomials(int delta_max) {
  if (delta_max < 1) throw DomainError("need at least one A_j");
  std::vector<RatPolynomial> n(static_cast<std::size_t>(delta_max) + 1);
  for (int j = 0; j <= delta_max; ++j) n[j] = node_polynomial(j).polynomial;
  std::vector<RatPolynomial> a(static_cast<std::size_t>(delta_max) + 1);
  for (int j = 1; j <= delta_max; ++j) {
    RatPolynomial value = RatPolynomial(static_cast<long>(j)) * n[j];
    for (int k = 1; k < j; ++k) value -= a[k] * n[j - k];
    a[j] = value;
  }
  a.erase(a.begin());
  return a;
}

std::vector<RatPolynomial> node_polynomials_from_aj(const std::vector<RatPolynomial>& aj) {
  std::vector<RatPolynomial> n(aj.size() + 1);
  n[0] = RatPolynomial(1);
  for (std::size_t j = 1; j <= aj.size(); ++j) {
    RatPolynomial acc;
    for (std::size_t k = 1; k <= j; ++k) acc += aj[k - 1] * n[j - k];
    n[j] = acc * RatPolynomial(Rational(1) / Rational(static_cast<long>(j)));
  }
  n.erase(n.begin());
  return n;
}

}  // namespace floordiag
