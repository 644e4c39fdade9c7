#pragma once

// Partitions and labeled floor diagrams.

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "floordiag/arith.hpp"

namespace floordiag {

// Weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  // Throws DomainError unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);

  // Sorts `parts` before validating positivity.
  static Partition from_unsorted(std::vector<int> parts);
  // The partition ⟨1^n⟩.
  static Partition ones(int n);
  // Accepts "", "-", "2,1,1" and exponent notation such as "1^3" or "2,1^2".
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  // α_i: how many parts equal i.
  int multiplicity(int i) const;
  // Product of the parts (1 for the empty partition).
  BigInt product() const;

  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// Every partition of n in reverse lexicographic order, starting with (n).
std::vector<Partition> partitions_of(int n);

struct WeightedEdge {
  int src = 0;
  int tgt = 0;
  int weight = 1;

  auto operator<=>(const WeightedEdge&) const = default;
};

struct DiagramSummary {
  int components = 0;
  int degree = 0;
  // First Betti number |E| - d + components.
  int genus = 0;
  int cogenus = 0;
  bool connected = false;
  std::vector<int> component_degrees;
  std::vector<int> component_genera;
};

// Weighted acyclic multigraph on the ordered vertices 1..d with edges pointing
// upwards and divergence at most 1 everywhere. Immutable once constructed.
class FloorDiagram {
 public:
  // Sorts the edges and validates; throws ValidationError on failure.
  FloorDiagram(int d, std::vector<WeightedEdge> edges);

  static FloorDiagram parse_text(std::string_view text);
  static FloorDiagram parse_json(std::string_view text);
  // Accepts either serialized form.
  static FloorDiagram parse(std::string_view text);

  int degree() const { return d_; }
  const std::vector<WeightedEdge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  int divergence(int v) const;
  std::vector<int> divergences() const;
  // Total weight of edges p -> r with p < q <= r.
  int cut_weight(int q) const;
  int max_weight() const;

  BigInt multiplicity() const;
  DiagramSummary classify() const;
  bool connected() const;
  int genus() const;
  // d(d-1)/2 - |E|; agrees with the per-component formula.
  int cogenus() const;

  std::string to_text() const;
  std::string to_json() const;

  auto operator<=>(const FloorDiagram&) const = default;
  bool operator==(const FloorDiagram&) const = default;

 private:
  int d_;
  std::vector<WeightedEdge> edges_;
};

// Assigns each vertex a component id in 0..c-1, numbered by smallest vertex.
std::vector<int> component_labels(int d, const std::vector<WeightedEdge>& edges);

}  // namespace floordiag
