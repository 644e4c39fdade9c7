#pragma once

// Closed recurrences for the maximal-tangency counts, the diagram/tree
// bijection in genus 0, and the tree-counting formulas that accompany it.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "floordiag/arith.hpp"
#include "floordiag/diagram.hpp"

namespace floordiag {

// A tree on the vertices 1..d, edges stored as sorted pairs (a < b).
class LabeledTree {
 public:
  // Throws ValidationError unless the edges form a spanning tree of 1..d.
  LabeledTree(int d, std::vector<std::pair<int, int>> edges);

  // "d=4; edges=(1,2);(2,4);(3,4)".
  static LabeledTree parse(std::string_view text);
  // The tree with the given Prüfer sequence (length d - 2, entries in 1..d).
  static LabeledTree from_pruefer(int d, const std::vector<int>& code);

  int vertex_count() const { return d_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool has_edge(int a, int b) const;
  std::vector<int> neighbours(int v) const;

  // Labels increase along every path towards the root d.
  bool is_increasing() const;
  // No path a - b - c with a < b < c.
  bool is_alternating() const;

  std::string to_string() const;

  auto operator<=>(const LabeledTree&) const = default;
  bool operator==(const LabeledTree&) const = default;

 private:
  int d_;
  std::vector<std::pair<int, int>> edges_;
};

// All d^{d-2} trees on 1..d in Prüfer order. Refuses d > 9.
std::vector<LabeledTree> all_labeled_trees(int d);

// z(d) = N_{d,0}((d), ∅).
BigInt max_tangency_fixed(int d);
// d * z(d) = N_{d,0}(∅, (d)).
BigInt max_tangency_free(int d);
// z(1..d_max).
std::vector<BigInt> max_tangency_table(int d_max);

// Σ μ(D) ν(D) over increasing rooted trees D on d vertices, each read as a
// floor diagram with edge weights given by hooklengths. Refuses d > 7.
BigInt increasing_tree_oracle(int d);
// The floor diagram of an increasing tree; throws DomainError otherwise.
FloorDiagram increasing_tree_diagram(const LabeledTree& tree);

// Coefficients y_0..y_n of y = Σ d² z(d) x^d / (2d)!.
std::vector<Rational> ode_series(int n);
// Coefficients of x^0..x^{n-1} in x(4y' - e^y - x e^y y') - 2y.
std::vector<Rational> ode_residual(int n);

// Genus-0 diagrams only; throws DomainError otherwise.
LabeledTree diagram_to_tree(const FloorDiagram& diagram);
FloorDiagram tree_to_diagram(const LabeledTree& tree);

// Positions i with a weight-1 edge i -> i+1.
std::vector<int> unit_short_edges(const FloorDiagram& diagram);
// Positions i with an edge (i, i+1).
std::vector<int> short_edges(const LabeledTree& tree);

struct ClosedCounts {
  int d = 0;
  BigInt cayley;
  BigInt alternating;
  BigInt odd;
  BigInt multiplicity_free;
  // Exhaustive counts, filled when d <= enumeration_limit.
  std::optional<BigInt> enumerated_genus0;
  std::optional<BigInt> enumerated_odd;
  std::optional<BigInt> enumerated_multiplicity_free;
};

// Largest d for which closed_counts also enumerates diagrams.
inline constexpr int kClosedCountsEnumerationLimit = 8;

ClosedCounts closed_counts(int d);

BigInt alternating_tree_count(int d);
BigInt odd_diagram_count(int d);
// Increasing rooted trees with cyclically ordered branches.
std::vector<BigInt> multiplicity_free_counts(int d_max);

// Number of trees on 1..d that arise as underlying graphs of genus-0
// diagrams, next to the alternating-tree count it is compared with.
struct UnderlyingTreeReport {
  int d = 0;
  BigInt underlying_trees;
  BigInt alternating_trees;
  BigInt alternating_enumerated;
  bool equal = false;
};

// Refuses d > 8.
UnderlyingTreeReport underlying_tree_report(int d);

}  // namespace floordiag
