#pragma once

// Slow, independent reimplementations used to cross-check the library.
// Nothing here calls into floordiag except for the BigInt/Rational aliases.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "floordiag/arith.hpp"

namespace oracle {

using floordiag::BigInt;
using floordiag::Rational;

struct Edge {
  int src;
  int tgt;
  int weight;
  auto operator<=>(const Edge&) const = default;
};

struct Diagram {
  int d = 1;
  std::vector<Edge> edges;  // sorted

  int divergence(int v) const;
  int components() const;
  int genus() const;  // first Betti number when connected
  bool connected() const { return components() == 1; }
  int cogenus() const { return d * (d - 1) / 2 - static_cast<int>(edges.size()); }
  BigInt multiplicity() const;
  std::string text() const;
};

// Every diagram on 1..d, generated vertex by vertex: vertex v picks its
// outgoing multiset subject to out(v) - in(v) <= 1.
std::vector<Diagram> all_diagrams(int d);

// Linear extensions of a poset on 0..n-1 given as strict relations a < b.
BigInt linear_extensions(int n, const std::vector<std::pair<int, int>>& less);

struct OrdinaryPoset {
  int size = 0;
  std::vector<std::pair<int, int>> less;
  // Element kinds: 'F' floor, 'E' midpoint, 'S' sink, with their data.
  std::vector<char> kind;
  std::vector<std::array<int, 3>> data;
};

OrdinaryPoset ordinary_poset(const Diagram& diagram);

// Size of the group of label-preserving relation automorphisms fixing floors.
BigInt automorphisms(const OrdinaryPoset& poset);

// ν(D) = extensions / automorphisms.
BigInt markings(const Diagram& diagram);

BigInt kontsevich(int d);

// All labeled trees on 1..d as sorted edge lists, by brute force over edge subsets.
std::vector<std::vector<std::pair<int, int>>> all_trees(int d);
bool alternating(int d, const std::vector<std::pair<int, int>>& tree);

// Coefficients a_1..a_n of the exponential series with A' = 1 - log(1 - A), A(0) = 0, times n!.
std::vector<BigInt> log_series_counts(int n);

// Σ μ·ν over increasing trees with hook-length weights.
BigInt increasing_tree_sum(int d);

}  // namespace oracle
