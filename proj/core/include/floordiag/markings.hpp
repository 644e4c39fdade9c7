#pragma once

// Markings of floor diagrams: the derived poset, (λ,ρ) distributions and
// exact linear-extension counts.

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "floordiag/arith.hpp"
#include "floordiag/diagram.hpp"

namespace floordiag {

enum class ElementKind { Floor, Midpoint, Sink, LambdaVertex };

// One vertex of the extended graph. Gaps are numbered 1..d: gap g lies
// directly above floor g, so midpoints of s->t live in gaps s..t-1 and
// sinks of floor v in gaps v..d. Floors and λ-vertices have no gap range.
struct MarkingElement {
  ElementKind kind = ElementKind::Floor;
  // Floor index for floors and sinks, source floor for midpoints and λ-vertices.
  int floor = 0;
  // Target floor for midpoints.
  int target = 0;
  int weight = 0;
  // 1-based λ index for λ-vertices.
  int lambda_index = 0;
  int lo_gap = 0;
  int hi_gap = 0;
};

struct MarkingPoset {
  int floors = 0;
  std::vector<MarkingElement> elements;
  // Cover relations (a, b) meaning elements[a] < elements[b].
  std::vector<std::pair<int, int>> relations;
  BigInt symmetry = 1;

  std::size_t size() const { return elements.size(); }
  int lambda_count() const;
};

struct Distribution {
  // lambda_sources[i] is the floor feeding λ-vertex i+1.
  std::vector<int> lambda_sources;
  // rho_sinks[v-1] lists the sink weights at floor v in decreasing order.
  std::vector<std::vector<int>> rho_sinks;

  auto operator<=>(const Distribution&) const = default;
};

// All distinct ways to spend the budgets 1 - div(v) on λ-edges and ρ-sinks,
// in canonical order. Throws DomainError unless |λ| + |ρ| = d.
std::vector<Distribution> enumerate_distributions(const FloorDiagram& diagram, const Partition& lambda,
                                                  const Partition& rho);

Distribution ordinary_distribution(const FloorDiagram& diagram);

MarkingPoset build_poset(const FloorDiagram& diagram, const Distribution& dist, const Partition& lambda);
MarkingPoset build_poset(const FloorDiagram& diagram);

// An item confined to the gaps lo..hi of a chain of floors.
struct GapItem {
  int lo = 0;
  int hi = 0;
};

// Number of ways to interleave distinguishable items with a chain whose
// gaps are 1..gaps, each item landing in its interval.
BigInt count_gap_orderings(int gaps, const std::vector<GapItem>& items);

// Linear extensions with all elements distinguishable (gap dynamic program).
BigInt count_orderings(const MarkingPoset& poset);
// Same count by dynamic programming over downsets; at most 40 elements.
BigInt count_orderings_downset(const MarkingPoset& poset);

// ν(D).
BigInt count_markings(const FloorDiagram& diagram);
// ν_{λ,ρ}(D).
BigInt count_relative_markings(const FloorDiagram& diagram, const Partition& lambda, const Partition& rho);

// Independent oracle: generates every decoration and every compatible order,
// then counts distinct typed sequences. Refuses posets above 14 elements.
BigInt brute_force_markings(const FloorDiagram& diagram, const Partition& lambda, const Partition& rho);

// Ordinary markings whose last k elements are all sinks; with `same_floor`
// the k sinks must hang from one floor.
BigInt count_markings_with_terminal_sinks(const FloorDiagram& diagram, int k, bool same_floor);

// A typed element label. Text forms: F<v>, E<s>.<t>[:w], S<v>[:w], L<i>@<v>.
struct MarkingLabel {
  ElementKind kind = ElementKind::Floor;
  int a = 0;
  int b = 0;
  int weight = 1;

  std::string to_string() const;
  static MarkingLabel parse(std::string_view text);
  auto operator<=>(const MarkingLabel&) const = default;
};

MarkingLabel label_of(const MarkingElement& element);

struct Marking {
  std::vector<MarkingLabel> order;

  std::string to_string() const;
  // Comma- or space-separated labels.
  static Marking parse(std::string_view text);
  auto operator<=>(const Marking&) const = default;
};

// Every distinct (λ,ρ)-marking as a label sequence, sorted. Intended for small d.
std::vector<Marking> enumerate_markings(const FloorDiagram& diagram, const Partition& lambda,
                                        const Partition& rho);
std::vector<Marking> enumerate_markings(const FloorDiagram& diagram);

// Throws ValidationError when `marking` is not an ordinary marking of `diagram`.
void validate_marking(const FloorDiagram& diagram, const Marking& marking);

}  // namespace floordiag
