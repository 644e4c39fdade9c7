#include "floordiag/sequences.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "floordiag/enumeration.hpp"
#include "floordiag/errors.hpp"
#include "floordiag/markings.hpp"

namespace floordiag {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, const char* what) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw DomainError(std::string("cannot parse ") + what);
  return value;
}

// Weighted edges restricted to a vertex subset; vertices keep global labels.
struct SubDiagram {
  std::vector<int> vertices;  // ascending
  std::vector<WeightedEdge> edges;
};

std::vector<std::vector<int>> split_components(const std::vector<int>& vertices,
                                               const std::vector<std::pair<int, int>>& links) {
  std::map<int, int> parent;
  for (int v : vertices) parent[v] = v;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : links) parent[find(a)] = find(b);
  std::map<int, std::vector<int>> groups;
  for (int v : vertices) groups[find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

// Attachment choices (v, w) for joining `sub` to a vertex on its right,
// listed left to right and, per vertex, from the largest weight down.
std::vector<std::pair<int, int>> attachment_choices(const SubDiagram& sub) {
  std::vector<std::pair<int, int>> out;
  for (int v : sub.vertices) {
    int div = 0;
    for (const auto& e : sub.edges) {
      if (e.src == v) div += e.weight;
      if (e.tgt == v) div -= e.weight;
    }
    for (int w = 1 - div; w >= 1; --w) out.emplace_back(v, w);
  }
  return out;
}

void diagram_to_tree_rec(const SubDiagram& sub, std::vector<std::pair<int, int>>& tree) {
  if (sub.vertices.size() <= 1) return;
  const int root = sub.vertices.back();
  std::vector<int> rest(sub.vertices.begin(), sub.vertices.end() - 1);
  std::vector<std::pair<int, int>> links;
  for (const auto& e : sub.edges) {
    if (e.tgt != root) links.emplace_back(e.src, e.tgt);
  }
  for (const auto& block : split_components(rest, links)) {
    SubDiagram child{block, {}};
    const WeightedEdge* joint = nullptr;
    for (const auto& e : sub.edges) {
      if (!std::binary_search(block.begin(), block.end(), e.src)) continue;
      if (e.tgt == root) {
        if (joint) throw DomainError("diagram is not a tree");
        joint = &e;
      } else {
        child.edges.push_back(e);
      }
    }
    if (!joint) throw DomainError("diagram is disconnected");
    const auto choices = attachment_choices(child);
    auto it = std::find(choices.begin(), choices.end(), std::make_pair(joint->src, joint->weight));
    if (it == choices.end()) throw InternalError("attachment edge violates the divergence bound");
    diagram_to_tree_rec(child, tree);
    tree.emplace_back(block[static_cast<std::size_t>(it - choices.begin())], root);
  }
}

SubDiagram tree_to_diagram_rec(const std::vector<int>& vertices, const std::vector<std::pair<int, int>>& tree) {
  SubDiagram out{vertices, {}};
  if (vertices.size() <= 1) return out;
  const int root = vertices.back();
  std::vector<int> rest(vertices.begin(), vertices.end() - 1);
  std::vector<std::pair<int, int>> inner;
  for (auto [a, b] : tree) {
    if (a != root && b != root) inner.emplace_back(a, b);
  }
  for (const auto& block : split_components(rest, inner)) {
    std::vector<std::pair<int, int>> child_tree;
    for (auto [a, b] : inner) {
      if (std::binary_search(block.begin(), block.end(), a)) child_tree.emplace_back(a, b);
    }
    int anchor = 0;
    for (auto [a, b] : tree) {
      int other = a == root ? b : (b == root ? a : 0);
      if (other && std::binary_search(block.begin(), block.end(), other)) anchor = other;
    }
    SubDiagram child = tree_to_diagram_rec(block, child_tree);
    const auto choices = attachment_choices(child);
    const auto index = static_cast<std::size_t>(std::lower_bound(block.begin(), block.end(), anchor) - block.begin());
    if (choices.size() != block.size()) throw InternalError("choice list length differs from block size");
    out.edges.insert(out.edges.end(), child.edges.begin(), child.edges.end());
    out.edges.push_back({choices[index].first, root, choices[index].second});
  }
  return out;
}

}  // namespace

LabeledTree::LabeledTree(int d, std::vector<std::pair<int, int>> edges) : d_(d), edges_(std::move(edges)) {
  if (d_ < 1) throw ValidationError("tree needs at least one vertex");
  for (auto& [a, b] : edges_) {
    if (a > b) std::swap(a, b);
    if (a < 1 || b > d_ || a == b) throw ValidationError("tree edge outside 1.." + std::to_string(d_));
  }
  std::sort(edges_.begin(), edges_.end());
  if (static_cast<int>(edges_.size()) != d_ - 1) throw ValidationError("tree needs exactly d-1 edges");
  std::vector<int> all(static_cast<std::size_t>(d_));
  std::iota(all.begin(), all.end(), 1);
  if (split_components(all, edges_).size() != 1) throw ValidationError("tree edges do not connect 1..d");
}

LabeledTree LabeledTree::parse(std::string_view text) {
  text = trim(text);
  if (text.substr(0, 2) != "d=") throw DomainError("tree text must start with 'd='");
  std::size_t semi = text.find(';');
  int d = parse_int(text.substr(2, semi == text.npos ? text.npos : semi - 2), "vertex count");
  std::vector<std::pair<int, int>> edges;
  if (semi != text.npos) {
    std::string_view rest = trim(text.substr(semi + 1));
    if (rest.substr(0, 6) != "edges=") throw DomainError("expected 'edges=' after vertex count");
    rest = trim(rest.substr(6));
    while (!rest.empty()) {
      if (rest.front() != '(') throw DomainError("expected '(' in edge list");
      std::size_t close = rest.find(')');
      if (close == rest.npos) throw DomainError("unterminated edge pair");
      std::string_view pair = rest.substr(1, close - 1);
      std::size_t comma = pair.find(',');
      if (comma == pair.npos) throw DomainError("edge pair needs two entries");
      edges.emplace_back(parse_int(pair.substr(0, comma), "edge endpoint"),
                         parse_int(pair.substr(comma + 1), "edge endpoint"));
      rest = trim(rest.substr(close + 1));
      if (!rest.empty()) {
        if (rest.front() != ';') throw DomainError("edge pairs must be separated by ';'");
        rest = trim(rest.substr(1));
      }
    }
  }
  return LabeledTree(d, std::move(edges));
}

LabeledTree LabeledTree::from_pruefer(int d, const std::vector<int>& code) {
  if (d < 2) return LabeledTree(d, {});
  if (static_cast<int>(code.size()) != d - 2) throw DomainError("Prüfer sequence must have length d-2");
  std::vector<int> degree(static_cast<std::size_t>(d) + 1, 1);
  for (int c : code) {
    if (c < 1 || c > d) throw DomainError("Prüfer entry outside 1..d");
    ++degree[c];
  }
  std::set<int> leaves;
  for (int v = 1; v <= d; ++v) {
    if (degree[v] == 1) leaves.insert(v);
  }
  std::vector<std::pair<int, int>> edges;
  for (int c : code) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, c);
    if (--degree[c] == 1) leaves.insert(c);
  }
  edges.emplace_back(*leaves.begin(), *std::next(leaves.begin()));
  return LabeledTree(d, std::move(edges));
}

bool LabeledTree::has_edge(int a, int b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(a, b));
}

std::vector<int> LabeledTree::neighbours(int v) const {
  std::vector<int> out;
  for (auto [a, b] : edges_) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool LabeledTree::is_increasing() const {
  // Rooted at d, every non-root vertex must have exactly one larger neighbour.
  for (int v = 1; v < d_; ++v) {
    auto nb = neighbours(v);
    if (std::count_if(nb.begin(), nb.end(), [v](int u) { return u > v; }) != 1) return false;
  }
  return true;
}

bool LabeledTree::is_alternating() const {
  for (int v = 1; v <= d_; ++v) {
    auto nb = neighbours(v);
    bool below = std::any_of(nb.begin(), nb.end(), [v](int u) { return u < v; });
    bool above = std::any_of(nb.begin(), nb.end(), [v](int u) { return u > v; });
    if (below && above) return false;
  }
  return true;
}

std::string LabeledTree::to_string() const {
  std::string out = "d=" + std::to_string(d_) + "; edges=";
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i) out += ';';
    out += '(' + std::to_string(edges_[i].first) + ',' + std::to_string(edges_[i].second) + ')';
  }
  return out;
}

std::vector<LabeledTree> all_labeled_trees(int d) {
  if (d < 1) throw DomainError("tree needs at least one vertex");
  if (d > 9) throw RefusalError("all_labeled_trees refuses d > 9");
  std::vector<LabeledTree> out;
  if (d <= 2) {
    out.emplace_back(d, d == 2 ? std::vector<std::pair<int, int>>{{1, 2}} : std::vector<std::pair<int, int>>{});
    return out;
  }
  std::vector<int> code(static_cast<std::size_t>(d) - 2, 1);
  while (true) {
    out.push_back(LabeledTree::from_pruefer(d, code));
    std::size_t i = code.size();
    while (i > 0 && code[i - 1] == d) code[--i] = 1;
    if (i == 0) break;
    ++code[i - 1];
  }
  return out;
}

std::vector<BigInt> max_tangency_table(int d_max) {
  if (d_max < 1) throw DomainError("degree must be at least 1");
  static std::mutex mutex;
  static std::vector<BigInt> z{BigInt(1)};
  // comp[k][n]: Σ over compositions of n into k parts of Π a² z(a) / (2a)!.
  static std::vector<std::vector<Rational>> comp{{Rational(1)}};
  std::lock_guard lock(mutex);
  while (static_cast<int>(z.size()) < d_max) {
    const int d = static_cast<int>(z.size());  // z(1..d) known; compute z(d+1)
    std::vector<Rational> f(static_cast<std::size_t>(d) + 1);
    for (int a = 1; a <= d; ++a) {
      f[a] = Rational(BigInt(a) * a * z[a - 1], factorial(2L * a));
      f[a].canonicalize();
    }
    comp.assign(static_cast<std::size_t>(d) + 1, std::vector<Rational>(static_cast<std::size_t>(d) + 1, 0));
    comp[0][0] = 1;
    for (int k = 1; k <= d; ++k) {
      for (int n = k; n <= d; ++n) {
        Rational acc = 0;
        for (int a = 1; a <= n - (k - 1); ++a) acc += f[a] * comp[k - 1][n - a];
        comp[k][n] = acc;
      }
    }
    Rational total = 0;
    for (int k = 1; k <= d; ++k) total += comp[k][d] / Rational(factorial(k));
    total *= Rational(factorial(2L * d));
    z.push_back(to_integer(total, "max_tangency_fixed"));
  }
  return {z.begin(), z.begin() + d_max};
}

BigInt max_tangency_fixed(int d) { return max_tangency_table(d).back(); }

BigInt max_tangency_free(int d) { return BigInt(d) * max_tangency_fixed(d); }

FloorDiagram increasing_tree_diagram(const LabeledTree& tree) {
  if (!tree.is_increasing()) throw DomainError("tree is not increasing towards its root");
  const int d = tree.vertex_count();
  std::vector<int> parent(static_cast<std::size_t>(d) + 1, 0);
  for (auto [a, b] : tree.edges()) parent[a] = b;
  std::vector<int> hook(static_cast<std::size_t>(d) + 1, 1);
  for (int v = 1; v < d; ++v) hook[parent[v]] += hook[v];
  std::vector<WeightedEdge> edges;
  for (int v = 1; v < d; ++v) edges.push_back({v, parent[v], hook[v]});
  return FloorDiagram(d, std::move(edges));
}

BigInt increasing_tree_oracle(int d) {
  if (d < 1) throw DomainError("degree must be at least 1");
  if (d > 7) throw RefusalError("increasing_tree_oracle refuses d > 7");
  BigInt total = 0;
  std::vector<int> parent(static_cast<std::size_t>(d), 0);
  auto assign = [&](auto&& self, int v) -> void {
    if (v == d) {
      std::vector<std::pair<int, int>> edges;
      for (int u = 1; u < d; ++u) edges.emplace_back(u, parent[u - 1]);
      const FloorDiagram diagram = increasing_tree_diagram(LabeledTree(d, edges));
      total += diagram.multiplicity() * count_markings(diagram);
      return;
    }
    for (int p = v + 1; p <= d; ++p) {
      parent[v - 1] = p;
      self(self, v + 1);
    }
  };
  assign(assign, 1);
  return total;
}

std::vector<Rational> ode_series(int n) {
  if (n < 0) throw DomainError("series order must be nonnegative");
  std::vector<Rational> y(static_cast<std::size_t>(n) + 1, 0);
  if (n == 0) return y;
  const auto z = max_tangency_table(n);
  for (int d = 1; d <= n; ++d) {
    y[d] = Rational(BigInt(d) * d * z[d - 1], factorial(2L * d));
    y[d].canonicalize();
  }
  return y;
}

std::vector<Rational> ode_residual(int n) {
  if (n < 1) throw DomainError("residual order must be positive");
  const auto y = ode_series(n);
  const auto size = static_cast<std::size_t>(n) + 1;
  std::vector<Rational> dy(size, 0), ey(size, 0), ey_dy(size, 0);
  for (std::size_t k = 0; k + 1 < size; ++k) dy[k] = y[k + 1] * static_cast<long>(k + 1);
  // exp of a series with zero constant term: m e_m = Σ_k k y_k e_{m-k}.
  ey[0] = 1;
  for (std::size_t m = 1; m < size; ++m) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= m; ++k) acc += Rational(static_cast<long>(k)) * y[k] * ey[m - k];
    ey[m] = acc / static_cast<long>(m);
  }
  for (std::size_t m = 0; m < size; ++m) {
    for (std::size_t k = 0; k <= m; ++k) ey_dy[m] += ey[k] * dy[m - k];
  }
  std::vector<Rational> out(static_cast<std::size_t>(n), 0);
  for (std::size_t m = 0; m < out.size(); ++m) {
    Rational lhs = 0;
    if (m >= 1) lhs += 4 * dy[m - 1] - ey[m - 1];
    if (m >= 2) lhs -= ey_dy[m - 2];
    out[m] = lhs - 2 * y[m];
  }
  return out;
}

LabeledTree diagram_to_tree(const FloorDiagram& diagram) {
  if (!diagram.connected() || diagram.genus() != 0) throw DomainError("bijection needs a connected genus-0 diagram");
  SubDiagram whole;
  for (int v = 1; v <= diagram.degree(); ++v) whole.vertices.push_back(v);
  whole.edges = diagram.edges();
  std::vector<std::pair<int, int>> tree;
  diagram_to_tree_rec(whole, tree);
  return LabeledTree(diagram.degree(), std::move(tree));
}

FloorDiagram tree_to_diagram(const LabeledTree& tree) {
  std::vector<int> vertices(static_cast<std::size_t>(tree.vertex_count()));
  std::iota(vertices.begin(), vertices.end(), 1);
  return FloorDiagram(tree.vertex_count(), tree_to_diagram_rec(vertices, tree.edges()).edges);
}

std::vector<int> unit_short_edges(const FloorDiagram& diagram) {
  std::vector<int> out;
  for (const auto& e : diagram.edges()) {
    if (e.tgt == e.src + 1 && e.weight == 1) out.push_back(e.src);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> short_edges(const LabeledTree& tree) {
  std::vector<int> out;
  for (auto [a, b] : tree.edges()) {
    if (b == a + 1) out.push_back(a);
  }
  return out;
}

BigInt alternating_tree_count(int d) {
  if (d < 1) throw DomainError("degree must be at least 1");
  BigInt sum = 0;
  for (int k = 1; k <= d; ++k) sum += binomial(d, k) * power(BigInt(k), static_cast<unsigned long>(d - 1));
  return exact_div(sum, BigInt(d) * power(BigInt(2), static_cast<unsigned long>(d - 1)), "alternating_tree_count");
}

BigInt odd_diagram_count(int d) {
  if (d < 1) throw DomainError("degree must be at least 1");
  BigInt sum = 0;
  for (int k = 0; k <= d / 2; ++k) {
    BigInt term = binomial(d, k) * power(BigInt(d - 2 * k), static_cast<unsigned long>(d - 1));
    if (k % 2) sum -= term;
    else sum += term;
  }
  return exact_div(sum, BigInt(d), "odd_diagram_count");
}

std::vector<BigInt> multiplicity_free_counts(int d_max) {
  if (d_max < 1) throw DomainError("degree must be at least 1");
  // a[n]: structures on n labels. forest[k][n]: unordered k-sets of
  // structures on n labels, split off by the block holding the least label.
  std::vector<BigInt> a(static_cast<std::size_t>(d_max) + 1, 0);
  std::vector<std::vector<BigInt>> forest(static_cast<std::size_t>(d_max) + 1,
                                          std::vector<BigInt>(static_cast<std::size_t>(d_max) + 1, 0));
  forest[0][0] = 1;
  a[1] = 1;
  for (int n = 1; n < d_max; ++n) {
    for (int k = 1; k <= n; ++k) {
      BigInt acc = 0;
      for (int j = 1; j <= n - k + 1; ++j) acc += binomial(n - 1, j - 1) * a[j] * forest[k - 1][n - j];
      forest[k][n] = acc;
    }
    BigInt next = 0;
    for (int k = 1; k <= n; ++k) next += factorial(k - 1) * forest[k][n];
    a[n + 1] = next;
  }
  return {a.begin() + 1, a.end()};
}

ClosedCounts closed_counts(int d) {
  if (d < 1) throw DomainError("degree must be at least 1");
  ClosedCounts out;
  out.d = d;
  out.cayley = d == 1 ? BigInt(1) : power(BigInt(d), static_cast<unsigned long>(d - 2));
  out.alternating = alternating_tree_count(d);
  out.odd = odd_diagram_count(d);
  out.multiplicity_free = multiplicity_free_counts(d).back();
  if (d <= kClosedCountsEnumerationLimit) {
    DiagramFilter odd;
    odd.odd_weights = true;
    DiagramFilter simple;
    simple.unit_weights = true;
    out.enumerated_genus0 = count_connected(d, 0);
    out.enumerated_odd = count_filtered(d, 0, odd);
    out.enumerated_multiplicity_free = count_filtered(d, 0, simple);
  }
  return out;
}

UnderlyingTreeReport underlying_tree_report(int d) {
  if (d < 1) throw DomainError("degree must be at least 1");
  if (d > 8) throw RefusalError("underlying_tree_report refuses d > 8");
  std::set<std::vector<std::pair<int, int>>> shapes;
  enumerate(DiagramQuery::connected(d, 0), [&](const FloorDiagram& diagram) {
    std::vector<std::pair<int, int>> shape;
    for (const auto& e : diagram.edges()) shape.emplace_back(e.src, e.tgt);
    shapes.insert(std::move(shape));
  });
  UnderlyingTreeReport report;
  report.d = d;
  report.underlying_trees = static_cast<unsigned long>(shapes.size());
  report.alternating_trees = alternating_tree_count(d);
  unsigned long alternating = 0;
  for (const auto& tree : all_labeled_trees(d)) alternating += tree.is_alternating() ? 1 : 0;
  report.alternating_enumerated = alternating;
  report.equal = report.underlying_trees == report.alternating_trees;
  return report;
}

}  // namespace floordiag
