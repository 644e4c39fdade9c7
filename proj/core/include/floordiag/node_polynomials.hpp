#pragma once

// Template calculus for Severi degrees and node polynomials.

#include <compare>
#include <string>
#include <vector>

#include "floordiag/arith.hpp"
#include "floordiag/polynomial.hpp"

namespace floordiag {

struct TemplateEdge {
  int i = 0;
  int j = 0;
  int weight = 1;

  auto operator<=>(const TemplateEdge&) const = default;
};

// Weighted edges over the vertices v_0 < ... < v_ℓ.
class Template {
 public:
  // Sorts and validates; throws ValidationError on a short unit edge,
  // an uncovered interior vertex or an edge outside 0..ℓ.
  Template(int length, std::vector<TemplateEdge> edges);

  int length() const { return length_; }
  const std::vector<TemplateEdge>& edges() const { return edges_; }

  int cogenus() const;
  std::string to_string() const;

  auto operator<=>(const Template&) const = default;

 private:
  int length_;
  std::vector<TemplateEdge> edges_;
};

struct TemplateStats {
  int length = 0;
  BigInt multiplicity;
  int epsilon = 0;
  // κ_1..κ_ℓ.
  std::vector<int> kappa;
  int k_min = 0;
};

TemplateStats template_stats(const Template& t);

// Every template of cogenus δ, ordered by (length, edges).
std::vector<Template> enumerate_templates(int delta);

// P(Γ, k).
RatPolynomial extension_polynomial(const Template& t);

// Marking count of the concrete chain Γ_(k): template edges plus
// k + j - 1 - κ_j unit edges across gap j. Requires k >= k_min.
BigInt concrete_extension_count(const Template& t, int k);

// N^{d,δ} from the template master sum with explicit offsets.
BigInt severi_numeric(int d, int delta);

struct NodePolynomial {
  RatPolynomial polynomial;
  // Guaranteed agreement from this degree on.
  int threshold = 0;
  // Largest validity bound met by an individual template sequence.
  int sequence_bound = 0;
};

NodePolynomial node_polynomial(int delta);

// A_1..A_{δ_max} with Σ N_δ t^δ = exp(Σ A_j t^j / j).
std::vector<RatPolynomial> aj_polynomials(int delta_max);
// N_1..N_n rebuilt from A_1..A_n by exponentiation.
std::vector<RatPolynomial> node_polynomials_from_aj(const std::vector<RatPolynomial>& aj);

}  // namespace floordiag
