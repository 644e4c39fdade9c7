#include "floordiag/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "floordiag/errors.hpp"
#include "json.hpp"

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
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw DomainError(std::string("cannot parse ") + what + " from '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::ones(int n) {
  if (n < 0) throw DomainError("negative partition size");
  return Partition(std::vector<int>(static_cast<std::size_t>(n), 1));
}

Partition Partition::parse(std::string_view text) {
  text = trim(text);
  if (text.empty() || text == "-" || text == "()" || text == "{}") return {};
  if (text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
  std::vector<int> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view token = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    std::size_t caret = token.find('^');
    if (caret == std::string_view::npos) {
      parts.push_back(parse_int(token, "partition part"));
    } else {
      int part = parse_int(token.substr(0, caret), "partition part");
      int count = parse_int(token.substr(caret + 1), "partition exponent");
      if (count < 0) throw DomainError("negative exponent in partition");
      parts.insert(parts.end(), static_cast<std::size_t>(count), part);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return from_unsorted(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

BigInt Partition::product() const {
  BigInt p = 1;
  for (int part : parts_) p *= part;
  return p;
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      self(self, remaining - p, p);
      current.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

std::vector<int> component_labels(int d, const std::vector<WeightedEdge>& edges) {
  std::vector<int> parent(static_cast<std::size_t>(d) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : edges) {
    int a = find(e.src), b = find(e.tgt);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> label(static_cast<std::size_t>(d) + 1, -1);
  std::vector<int> root_label(static_cast<std::size_t>(d) + 1, -1);
  int next = 0;
  for (int v = 1; v <= d; ++v) {
    int r = find(v);
    if (root_label[r] < 0) root_label[r] = next++;
    label[v] = root_label[r];
  }
  label.erase(label.begin());
  return label;
}

FloorDiagram::FloorDiagram(int d, std::vector<WeightedEdge> edges) : d_(d), edges_(std::move(edges)) {
  if (d_ < 1) throw ValidationError("degree must be at least 1");
  std::sort(edges_.begin(), edges_.end());
  for (const auto& e : edges_) {
    if (e.src < 1 || e.tgt > d_ || e.src > d_ || e.tgt < 1) {
      throw ValidationError("edge endpoint outside 1.." + std::to_string(d_));
    }
    if (e.src == e.tgt) throw ValidationError("loop at vertex " + std::to_string(e.src));
    if (e.src > e.tgt) {
      throw ValidationError("backward edge " + std::to_string(e.src) + "->" + std::to_string(e.tgt));
    }
    if (e.weight < 1) throw ValidationError("edge weight must be at least 1");
  }
  for (int v = 1; v <= d_; ++v) {
    int div = divergence(v);
    if (div > 1) {
      throw ValidationError("divergence " + std::to_string(div) + " > 1 at vertex " + std::to_string(v));
    }
  }
}

FloorDiagram FloorDiagram::parse_text(std::string_view text) {
  text = trim(text);
  if (text.substr(0, 2) != "d=") throw DomainError("diagram text must start with 'd='");
  std::size_t semi = text.find(';');
  int d = parse_int(text.substr(2, semi == text.npos ? text.npos : semi - 2), "degree");
  std::vector<WeightedEdge> edges;
  if (semi != text.npos) {
    std::string_view rest = trim(text.substr(semi + 1));
    if (rest.substr(0, 6) != "edges=") throw DomainError("expected 'edges=' after degree");
    rest = trim(rest.substr(6));
    while (!rest.empty()) {
      if (rest.front() != '(') throw DomainError("expected '(' in edge list");
      std::size_t close = rest.find(')');
      if (close == rest.npos) throw DomainError("unterminated edge triple");
      std::string_view triple = rest.substr(1, close - 1);
      std::size_t c1 = triple.find(',');
      std::size_t c2 = c1 == triple.npos ? triple.npos : triple.find(',', c1 + 1);
      if (c2 == triple.npos) throw DomainError("edge triple needs three entries");
      edges.push_back({parse_int(triple.substr(0, c1), "edge source"),
                       parse_int(triple.substr(c1 + 1, c2 - c1 - 1), "edge target"),
                       parse_int(triple.substr(c2 + 1), "edge weight")});
      rest = trim(rest.substr(close + 1));
      if (!rest.empty()) {
        if (rest.front() != ';') throw DomainError("edge triples must be separated by ';'");
        rest = trim(rest.substr(1));
      }
    }
  }
  return FloorDiagram(d, std::move(edges));
}

FloorDiagram FloorDiagram::parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw DomainError(std::string("invalid diagram JSON: ") + ex.what());
  }
  if (!j.is_object() || !j.contains("d") || !j.contains("edges")) {
    throw DomainError("diagram JSON needs keys 'd' and 'edges'");
  }
  auto as_int = [](const nlohmann::json& v) {
    if (v.is_number_integer()) return v.get<int>();
    if (v.is_string()) return parse_int(v.get<std::string>(), "integer");
    throw DomainError("expected an integer in diagram JSON");
  };
  std::vector<WeightedEdge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 3) throw DomainError("each edge must be [src, tgt, weight]");
    edges.push_back({as_int(e[0]), as_int(e[1]), as_int(e[2])});
  }
  return FloorDiagram(as_int(j.at("d")), std::move(edges));
}

FloorDiagram FloorDiagram::parse(std::string_view text) {
  std::string_view t = trim(text);
  if (!t.empty() && t.front() == '{') return parse_json(t);
  return parse_text(t);
}

int FloorDiagram::divergence(int v) const {
  if (v < 1 || v > d_) throw DomainError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(d_));
  int div = 0;
  for (const auto& e : edges_) {
    if (e.src == v) div += e.weight;
    if (e.tgt == v) div -= e.weight;
  }
  return div;
}

std::vector<int> FloorDiagram::divergences() const {
  std::vector<int> div(static_cast<std::size_t>(d_), 0);
  for (const auto& e : edges_) {
    div[e.src - 1] += e.weight;
    div[e.tgt - 1] -= e.weight;
  }
  return div;
}

int FloorDiagram::cut_weight(int q) const {
  int total = 0;
  for (const auto& e : edges_) {
    if (e.src < q && q <= e.tgt) total += e.weight;
  }
  return total;
}

int FloorDiagram::max_weight() const {
  int m = 0;
  for (const auto& e : edges_) m = std::max(m, e.weight);
  return m;
}

BigInt FloorDiagram::multiplicity() const {
  BigInt mu = 1;
  for (const auto& e : edges_) mu *= e.weight * e.weight;
  return mu;
}

DiagramSummary FloorDiagram::classify() const {
  std::vector<int> label = component_labels(d_, edges_);
  DiagramSummary s;
  s.degree = d_;
  s.components = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  s.connected = s.components == 1;
  s.component_degrees.assign(static_cast<std::size_t>(s.components), 0);
  std::vector<int> edge_counts(static_cast<std::size_t>(s.components), 0);
  for (int v = 1; v <= d_; ++v) ++s.component_degrees[label[v - 1]];
  for (const auto& e : edges_) ++edge_counts[label[e.src - 1]];
  s.genus = static_cast<int>(edges_.size()) - d_ + s.components;
  int cogenus = 0;
  for (int j = 0; j < s.components; ++j) {
    int dj = s.component_degrees[j];
    int gj = edge_counts[j] - dj + 1;
    s.component_genera.push_back(gj);
    cogenus += (dj - 1) * (dj - 2) / 2 - gj;
    for (int k = j + 1; k < s.components; ++k) cogenus += dj * s.component_degrees[k];
  }
  s.cogenus = cogenus;
  return s;
}

bool FloorDiagram::connected() const {
  std::vector<int> label = component_labels(d_, edges_);
  return std::all_of(label.begin(), label.end(), [](int c) { return c == 0; });
}

int FloorDiagram::genus() const { return classify().genus; }

int FloorDiagram::cogenus() const { return d_ * (d_ - 1) / 2 - static_cast<int>(edges_.size()); }

std::string FloorDiagram::to_text() const {
  std::string out = "d=" + std::to_string(d_) + "; edges=";
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i) out += ';';
    const auto& e = edges_[i];
    out += '(' + std::to_string(e.src) + ',' + std::to_string(e.tgt) + ',' + std::to_string(e.weight) + ')';
  }
  return out;
}

std::string FloorDiagram::to_json() const {
  nlohmann::json j;
  j["d"] = d_;
  j["edges"] = nlohmann::json::array();
  for (const auto& e : edges_) j["edges"].push_back({e.src, e.tgt, e.weight});
  return j.dump();
}

}  // namespace floordiag
