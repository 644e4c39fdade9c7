#include "floordiag/invariants.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <thread>

#include "floordiag/errors.hpp"
#include "floordiag/markings.hpp"

namespace floordiag {

namespace {

std::atomic<unsigned> g_threads{0};

unsigned default_threads() {
  if (const char* env = std::getenv("FLOORDIAG_THREADS"); env && *env) {
    long n = std::strtol(env, nullptr, 10);
    if (n > 0) return static_cast<unsigned>(n);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void require_degree(int d) {
  if (d < 1) throw DomainError("degree must be at least 1");
}

std::shared_ptr<const std::vector<FloorDiagram>> connected_diagrams(int d, int g) {
  return DiagramStore::global().get(DiagramQuery::connected(d, g));
}

}  // namespace

unsigned worker_threads() {
  unsigned t = g_threads.load();
  return t == 0 ? default_threads() : t;
}

void set_worker_threads(unsigned threads) { g_threads.store(threads); }

BigInt parallel_sum(const std::vector<FloorDiagram>& items, const std::function<BigInt(const FloorDiagram&)>& f) {
  const std::size_t n = items.size();
  const unsigned threads = static_cast<unsigned>(std::min<std::size_t>(worker_threads(), std::max<std::size_t>(n, 1)));
  if (threads <= 1) {
    BigInt total = 0;
    for (const auto& item : items) total += f(item);
    return total;
  }
  std::vector<BigInt> partial(threads, BigInt(0));
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < n; i += threads) partial[t] += f(items[i]);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
  BigInt total = 0;
  for (const auto& p : partial) total += p;
  return total;
}

BigInt gw(int d, int g) {
  require_degree(d);
  if (g < 0) throw DomainError("genus must be nonnegative");
  return parallel_sum(*connected_diagrams(d, g),
                      [](const FloorDiagram& D) -> BigInt { return D.multiplicity() * count_markings(D); });
}

BigInt severi(int d, int delta) {
  require_degree(d);
  if (delta < 0) throw DomainError("cogenus must be nonnegative");
  auto list = DiagramStore::global().get(DiagramQuery::with_cogenus(d, delta));
  return parallel_sum(*list, [](const FloorDiagram& D) -> BigInt { return D.multiplicity() * count_markings(D); });
}

BigInt severi_split_oracle(int d, int delta) {
  require_degree(d);
  if (delta < 0) throw DomainError("cogenus must be nonnegative");
  const int marker_count = d * (d + 3) / 2 - delta;
  if (marker_count < 0) return 0;
  BigInt total = 0;
  for (const Partition& degrees : partitions_of(d)) {
    const auto& dj = degrees.parts();
    int square_sum = 0;
    for (int x : dj) square_sum += x * x;
    const int cross = (d * d - square_sum) / 2;
    const int spare = delta - cross;
    if (spare < 0) continue;
    // Component cogenera; equal degrees get non-increasing cogenera so each
    // multiset of component types is visited once.
    std::vector<int> dl(dj.size(), 0);
    auto assign = [&](auto&& self, std::size_t j, int left) -> void {
      if (j == dj.size()) {
        if (left != 0) return;
        BigInt term = factorial(marker_count);
        std::map<std::pair<int, int>, int> type_count;
        for (std::size_t i = 0; i < dj.size(); ++i) {
          const int size_j = dj[i] * (dj[i] + 3) / 2 - dl[i];
          term = exact_div(term, factorial(size_j), "severi_split_oracle");
          term *= gw(dj[i], max_genus(dj[i]) - dl[i]);
          ++type_count[{dj[i], dl[i]}];
        }
        for (const auto& [type, count] : type_count) term = exact_div(term, factorial(count), "severi_split_oracle");
        total += term;
        return;
      }
      int upper = std::min(left, max_genus(dj[j]));
      if (j > 0 && dj[j] == dj[j - 1]) upper = std::min(upper, dl[j - 1]);
      for (int x = 0; x <= upper; ++x) {
        dl[j] = x;
        self(self, j + 1, left - x);
      }
    };
    assign(assign, 0, spare);
  }
  return total;
}

BigInt relative_gw(int d, int g, const Partition& lambda, const Partition& rho) {
  require_degree(d);
  if (g < 0) throw DomainError("genus must be nonnegative");
  if (lambda.size() + rho.size() != d) throw DomainError("|lambda| + |rho| must equal d");
  const BigInt rho_product = rho.product();
  return parallel_sum(*connected_diagrams(d, g), [&](const FloorDiagram& D) -> BigInt {
    return D.multiplicity() * rho_product * count_relative_markings(D, lambda, rho);
  });
}

BigInt welschinger(int d) {
  require_degree(d);
  return parallel_sum(*connected_diagrams(d, 0), [](const FloorDiagram& D) -> BigInt {
    return D.multiplicity() % 2 == 1 ? count_markings(D) : BigInt(0);
  });
}

BigInt kontsevich_oracle(int d) {
  require_degree(d);
  std::vector<BigInt> N(static_cast<std::size_t>(d) + 1, BigInt(0));
  N[1] = 1;
  for (int n = 2; n <= d; ++n) {
    BigInt sum = 0;
    for (int k = 1; k < n; ++k) {
      const int l = n - k;
      sum += N[k] * N[l] * k * k * l * (l * binomial(3 * n - 4, 3 * k - 2) - k * binomial(3 * n - 4, 3 * k - 1));
    }
    N[n] = sum;
  }
  return N[d];
}

BigInt closed_form_gmax(int d, const Partition& lambda, const Partition& rho) {
  require_degree(d);
  if (lambda.size() + rho.size() != d) throw DomainError("|lambda| + |rho| must equal d");
  BigInt value = rho.product() * factorial(rho.length());
  for (int i = 1; i <= rho.size(); ++i) value = exact_div(value, factorial(rho.multiplicity(i)), "closed_form_gmax");
  return value;
}

BigInt closed_form_uninodal(int d, const Partition& lambda, const Partition& rho) {
  if (d < 3) throw DomainError("the uninodal formula needs d >= 3");
  if (lambda.size() + rho.size() != d) throw DomainError("|lambda| + |rho| must equal d");
  const long base = static_cast<long>(d - 2) * (3 * d - 2) + lambda.multiplicity(1);
  if (rho.empty()) return base;
  const int beta1 = rho.multiplicity(1);
  Rational factor = Rational(base + beta1) + make_rational(static_cast<long>(d - 1) * beta1, rho.length());
  Rational value = factor * Rational(closed_form_gmax(d, lambda, rho));
  return to_integer(value, "closed_form_uninodal");
}

BigInt collinear_triple(int d, int g) {
  if (d < 3) throw DomainError("collinear triples need d >= 3");
  return gw(d, g) - (d - 1) * gw(d - 1, g);
}

BigInt terminal_sink_sum(int d, int g, int k) {
  require_degree(d);
  return parallel_sum(*connected_diagrams(d, g), [k](const FloorDiagram& D) -> BigInt {
    return D.multiplicity() * count_markings_with_terminal_sinks(D, k, false);
  });
}

TangencyAtPoint tangency_at_point(int d, int g, int k) {
  require_degree(d);
  if (k < 1 || k > d) throw DomainError("tangency order must lie in 1..d");
  TangencyAtPoint out;
  out.filtered_markings = parallel_sum(*connected_diagrams(d, g), [k](const FloorDiagram& D) -> BigInt {
    return D.multiplicity() * count_markings_with_terminal_sinks(D, k, true);
  });
  out.relative = relative_gw(d, g, Partition({k}), Partition::ones(d - k));
  return out;
}

}  // namespace floordiag
