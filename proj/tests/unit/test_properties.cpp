#include "doctest.h"

#include <algorithm>
#include <random>

#include "floordiag/enumeration.hpp"
#include "floordiag/invariants.hpp"
#include "floordiag/markings.hpp"
#include "floordiag/polynomial.hpp"
#include "floordiag/sequences.hpp"
#include "floordiag/tropical.hpp"
#include "test_support.hpp"

using namespace floordiag;
using testing::fd;

namespace {

constexpr std::uint32_t kSeed = 20240611;

template <class T>
const T& pick(const std::vector<T>& items, std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> at(0, items.size() - 1);
  return items[at(rng)];
}

std::string shuffled_text(const oracle::Diagram& raw, std::mt19937& rng) {
  auto edges = raw.edges;
  std::shuffle(edges.begin(), edges.end(), rng);
  std::string out = "d=" + std::to_string(raw.d) + "; edges=";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out += ";";
    out += "(" + std::to_string(edges[i].src) + "," + std::to_string(edges[i].tgt) + "," +
           std::to_string(edges[i].weight) + ")";
  }
  return out;
}

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("random diagrams: canonical form, divergence budget, multiplicity and marking counts") {
    std::mt19937 rng(kSeed);
    const auto pool = oracle::all_diagrams(5);
    for (int trial = 0; trial < 200; ++trial) {
      const auto& raw = pick(pool, rng);
      const auto diagram = fd(shuffled_text(raw, rng));
      CHECK(diagram.to_text() == raw.text());
      CHECK(FloorDiagram::parse_json(diagram.to_json()) == diagram);
      int sinks = 0;
      for (int v = 1; v <= diagram.degree(); ++v) sinks += 1 - diagram.divergence(v);
      CHECK(sinks == diagram.degree());
      BigInt mu = 1;
      for (const auto& e : raw.edges) mu *= e.weight * e.weight;
      CHECK(diagram.multiplicity() == mu);
      CHECK(diagram.classify().cogenus == raw.cogenus());
      if (oracle::ordinary_poset(raw).size <= 18) CHECK(count_markings(diagram) == oracle::markings(raw));
    }
  }

  TEST_CASE("random relative splits: brute force equals the pipeline") {
    std::mt19937 rng(kSeed + 1);
    for (int trial = 0; trial < 40; ++trial) {
      const int d = std::uniform_int_distribution<int>(1, 4)(rng);
      const auto diagrams = enumerate(DiagramQuery::connected(d, std::uniform_int_distribution<int>(0, max_genus(d))(rng)));
      if (diagrams.empty()) continue;
      const auto& diagram = pick(diagrams, rng);
      const int k = std::uniform_int_distribution<int>(0, d)(rng);
      const auto lambda = k == 0 ? Partition{} : pick(partitions_of(k), rng);
      const auto rho = k == d ? Partition{} : pick(partitions_of(d - k), rng);
      CAPTURE(diagram.to_text());
      CAPTURE(lambda.to_string());
      CAPTURE(rho.to_string());
      if (diagram.degree() + static_cast<int>(diagram.edges().size()) + static_cast<int>(rho.size()) > 11) continue;
      CHECK(brute_force_markings(diagram, lambda, rho) == count_relative_markings(diagram, lambda, rho));
    }
  }

  TEST_CASE("random polynomials: discrete sums telescope") {
    std::mt19937 rng(kSeed + 2);
    std::uniform_int_distribution<long> coeff(-9, 9);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<Rational> c;
      const int degree = std::uniform_int_distribution<int>(0, 5)(rng);
      for (int i = 0; i <= degree; ++i) c.push_back(Rational(coeff(rng)) / std::uniform_int_distribution<long>(1, 4)(rng));
      const RatPolynomial p(c);
      const long a = std::uniform_int_distribution<long>(-2, 3)(rng);
      const long shift = std::uniform_int_distribution<long>(0, 3)(rng);
      const auto q = discrete_sum(p, a, shift);
      for (long n = a + shift; n <= a + shift + 6; ++n) CHECK(q(n) - q(n - 1) == p(n - shift));
      CHECK(q(a + shift - 1) == 0);
      CHECK(RatPolynomial::interpolate(3, {p(3L), p(4L), p(5L), p(6L), p(7L), p(8L)}) == p);
    }
  }

  TEST_CASE("random Pruefer codes: the tree bijection is inverse in both directions") {
    std::mt19937 rng(kSeed + 3);
    for (int trial = 0; trial < 100; ++trial) {
      const int d = std::uniform_int_distribution<int>(2, 9)(rng);
      std::vector<int> code(static_cast<std::size_t>(d - 2));
      for (auto& x : code) x = std::uniform_int_distribution<int>(1, d)(rng);
      const auto tree = LabeledTree::from_pruefer(d, code);
      const auto diagram = tree_to_diagram(tree);
      CHECK(diagram.classify().genus == 0);
      CHECK(diagram.classify().connected);
      CHECK(diagram_to_tree(diagram) == tree);
      CHECK(unit_short_edges(diagram) == short_edges(tree));
    }
  }

  TEST_CASE("random seeds: configurations stay stretched and reconstructions verify") {
    std::mt19937 rng(kSeed + 4);
    const auto diagram = fd(testing::kQuartic);
    const auto markings = enumerate_markings(diagram);
    for (int trial = 0; trial < 20; ++trial) {
      const std::uint64_t seed = rng();
      const auto config = stretched_config(4, 1, seed);
      CHECK(config.is_stretched());
      const auto& marking = pick(markings, rng);
      const auto sketch = reconstruct(diagram, marking, config);
      CHECK(verify_curve(sketch, 4, 1).ok());
      CHECK(extract_marking(sketch).second == marking);
    }
  }
}
