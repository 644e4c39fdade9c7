#include "floordiag/enumeration.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "floordiag/errors.hpp"
#include "json.hpp"

namespace floordiag {

namespace {

bool contains_multiset(const std::vector<WeightedEdge>& sorted_edges, std::vector<WeightedEdge> wanted) {
  std::sort(wanted.begin(), wanted.end());
  return std::includes(sorted_edges.begin(), sorted_edges.end(), wanted.begin(), wanted.end());
}

int parse_count(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw DomainError("bad number '" + std::string(s) + "' in filter");
  }
  return value;
}

class Generator {
 public:
  Generator(const DiagramQuery& q, std::vector<FloorDiagram>& out)
      : q_(q), d_(q.d), target_(q.target_edge_count()), out_(out) {
    in_.assign(static_cast<std::size_t>(d_) + 2, 0);
    cut_.assign(static_cast<std::size_t>(d_) + 2, 0);
    weight_cap_ = d_ - 1;
    if (q.filter.max_weight) weight_cap_ = std::min(weight_cap_, *q.filter.max_weight);
    if (q.filter.unit_weights) weight_cap_ = std::min(weight_cap_, 1);
  }

  void run() {
    if (target_ < 0) return;
    vertex(1);
  }

 private:
  // Upper bound on how many more edges fit once vertices < v are settled.
  int remaining_capacity(int v) const {
    int cap = 0;
    for (int q = v + 1; q <= d_; ++q) cap += q - 1 - cut_[q];
    return cap;
  }

  void vertex(int v) {
    int need = target_ - static_cast<int>(edges_.size());
    if (v == d_) {
      if (need == 0) emit();
      return;
    }
    if (need > remaining_capacity(v)) return;
    bool may_emit = v <= d_ - q_.filter.terminal_sinks;
    int budget = may_emit ? 1 + in_[v] : 0;
    std::vector<WeightedEdge> cands;
    for (int t = v + 1; t <= d_; ++t) {
      for (int w = 1; w <= std::min(budget, weight_cap_); ++w) {
        if (q_.filter.odd_weights && w % 2 == 0) continue;
        cands.push_back({v, t, w});
      }
    }
    choose(v, cands, 0, budget, need);
  }

  // Picks a multiset of out-edges of v from cands[i..] with total weight <= budget.
  void choose(int v, const std::vector<WeightedEdge>& cands, std::size_t i, int budget, int need) {
    vertex(v + 1);
    if (need == 0) return;
    for (std::size_t j = i; j < cands.size(); ++j) {
      const WeightedEdge& e = cands[j];
      if (e.weight > budget) continue;
      bool fits = true;
      for (int q = e.src + 1; q <= e.tgt; ++q) {
        if (cut_[q] + e.weight > q - 1) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      apply(e, +1);
      choose(v, cands, j, budget - e.weight, need - 1);
      apply(e, -1);
    }
  }

  void apply(const WeightedEdge& e, int sign) {
    in_[e.tgt] += sign * e.weight;
    for (int q = e.src + 1; q <= e.tgt; ++q) cut_[q] += sign * e.weight;
    if (sign > 0) {
      edges_.push_back(e);
    } else {
      edges_.pop_back();
    }
  }

  void emit() {
    if (q_.genus) {
      auto labels = component_labels(d_, edges_);
      if (*std::max_element(labels.begin(), labels.end()) != 0) return;
    }
    FloorDiagram diagram(d_, edges_);
    if (!q_.filter.accepts(diagram)) return;
    out_.push_back(std::move(diagram));
  }

  const DiagramQuery& q_;
  int d_;
  int target_;
  int weight_cap_;
  std::vector<int> in_;
  std::vector<int> cut_;
  std::vector<WeightedEdge> edges_;
  std::vector<FloorDiagram>& out_;
};

}  // namespace

bool DiagramFilter::accepts(const FloorDiagram& diagram) const {
  const auto& edges = diagram.edges();
  for (const auto& e : edges) {
    if (odd_weights && e.weight % 2 == 0) return false;
    if (unit_weights && e.weight != 1) return false;
    if (max_weight && e.weight > *max_weight) return false;
    if (e.src > diagram.degree() - terminal_sinks) return false;
  }
  if (heavy_edge && diagram.max_weight() < *heavy_edge) return false;
  if (!required_edges.empty() && !contains_multiset(edges, required_edges)) return false;
  return true;
}

bool DiagramFilter::trivial() const { return key() == "all"; }

std::string DiagramFilter::key() const {
  std::vector<std::string> terms;
  if (odd_weights) terms.emplace_back("odd");
  if (unit_weights) terms.emplace_back("simple");
  if (max_weight) terms.push_back("maxw=" + std::to_string(*max_weight));
  if (heavy_edge) terms.push_back("heavy=" + std::to_string(*heavy_edge));
  if (terminal_sinks > 0) terms.push_back("sinks=" + std::to_string(terminal_sinks));
  if (!required_edges.empty()) {
    auto sorted = required_edges;
    std::sort(sorted.begin(), sorted.end());
    std::string c = "contains=";
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (i) c += ';';
      c += '(' + std::to_string(sorted[i].src) + ',' + std::to_string(sorted[i].tgt) + ',' +
           std::to_string(sorted[i].weight) + ')';
    }
    terms.push_back(c);
  }
  if (terms.empty()) return "all";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += '+';
    out += terms[i];
  }
  return out;
}

DiagramFilter DiagramFilter::parse(std::string_view text) {
  DiagramFilter f;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t plus = text.find('+', start);
    std::string_view term = text.substr(start, plus == text.npos ? text.npos : plus - start);
    start = plus == text.npos ? text.size() : plus + 1;
    if (term.empty() || term == "all") continue;
    if (term == "odd") {
      f.odd_weights = true;
    } else if (term == "simple") {
      f.unit_weights = true;
    } else if (term.substr(0, 5) == "maxw=") {
      f.max_weight = parse_count(term.substr(5));
    } else if (term.substr(0, 6) == "heavy=") {
      f.heavy_edge = parse_count(term.substr(6));
    } else if (term.substr(0, 6) == "sinks=") {
      f.terminal_sinks = parse_count(term.substr(6));
    } else if (term.substr(0, 9) == "contains=") {
      std::string probe(term.substr(9));
      std::vector<WeightedEdge> edges;
      std::size_t pos = 0;
      while ((pos = probe.find('(', pos)) != std::string::npos) {
        std::size_t close = probe.find(')', pos);
        if (close == std::string::npos) throw DomainError("unterminated edge in contains filter");
        std::string triple = probe.substr(pos + 1, close - pos - 1);
        WeightedEdge e;
        char c1 = 0, c2 = 0;
        std::istringstream in(triple);
        if (!(in >> e.src >> c1 >> e.tgt >> c2 >> e.weight) || c1 != ',' || c2 != ',') {
          throw DomainError("bad edge '(" + triple + ")' in contains filter");
        }
        edges.push_back(e);
        pos = close + 1;
      }
      f.required_edges = std::move(edges);
    } else {
      throw DomainError("unknown filter term '" + std::string(term) + "'");
    }
  }
  return f;
}

DiagramFilter DiagramFilter::unit_chain(int a, int b) {
  DiagramFilter f;
  for (int i = a; i < a + b; ++i) f.required_edges.push_back({i, i + 1, 1});
  return f;
}

DiagramQuery DiagramQuery::connected(int d, int g, DiagramFilter filter) {
  DiagramQuery q;
  q.d = d;
  q.genus = g;
  q.filter = std::move(filter);
  return q;
}

DiagramQuery DiagramQuery::with_cogenus(int d, int delta, DiagramFilter filter) {
  DiagramQuery q;
  q.d = d;
  q.cogenus = delta;
  q.filter = std::move(filter);
  return q;
}

void DiagramQuery::validate() const {
  if (d < 1) throw DomainError("degree must be at least 1");
  if (genus.has_value() == cogenus.has_value()) throw DomainError("set exactly one of genus and cogenus");
  if (genus && *genus < 0) throw DomainError("genus must be nonnegative");
  if (cogenus && *cogenus < 0) throw DomainError("cogenus must be nonnegative");
  if (filter.terminal_sinks < 0) throw DomainError("terminal sink count must be nonnegative");
}

int DiagramQuery::target_edge_count() const {
  if (genus) return d + *genus - 1;
  return d * (d - 1) / 2 - *cogenus;
}

std::string DiagramQuery::key() const {
  std::string k = "d" + std::to_string(d);
  k += genus ? "_g" + std::to_string(*genus) : "_delta" + std::to_string(*cogenus);
  return k + "_" + filter.key();
}

std::vector<FloorDiagram> enumerate(const DiagramQuery& query) {
  query.validate();
  std::vector<FloorDiagram> out;
  Generator(query, out).run();
  std::vector<std::pair<std::string, std::size_t>> keys;
  keys.reserve(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) keys.emplace_back(out[i].to_text(), i);
  std::sort(keys.begin(), keys.end());
  std::vector<FloorDiagram> sorted;
  sorted.reserve(out.size());
  for (const auto& [text, i] : keys) sorted.push_back(std::move(out[i]));
  return sorted;
}

void enumerate(const DiagramQuery& query, const std::function<void(const FloorDiagram&)>& visit) {
  for (const auto& diagram : enumerate(query)) visit(diagram);
}

BigInt count_connected(int d, int g) {
  return static_cast<unsigned long>(DiagramStore::global().get(DiagramQuery::connected(d, g))->size());
}

BigInt count_filtered(int d, int g, const DiagramFilter& filter) {
  return static_cast<unsigned long>(DiagramStore::global().get(DiagramQuery::connected(d, g, filter))->size());
}

int max_genus(int d) { return (d - 1) * (d - 2) / 2; }

DiagramStore::DiagramStore(std::optional<std::filesystem::path> cache_dir) : cache_dir_(std::move(cache_dir)) {}

DiagramStore& DiagramStore::global() {
  static DiagramStore store([] {
    std::optional<std::filesystem::path> dir;
    if (const char* env = std::getenv("FLOORDIAG_CACHE_DIR"); env && *env) dir = std::filesystem::path(env);
    return dir;
  }());
  return store;
}

void DiagramStore::set_cache_dir(std::optional<std::filesystem::path> dir) {
  std::lock_guard lock(mutex_);
  cache_dir_ = std::move(dir);
}

std::shared_ptr<const std::vector<FloorDiagram>> DiagramStore::get(const DiagramQuery& query) {
  query.validate();
  const std::string key = query.key();
  std::lock_guard lock(mutex_);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  std::shared_ptr<const std::vector<FloorDiagram>> result;
  if (cache_dir_) result = load(key);
  if (!result) {
    auto fresh = std::make_shared<std::vector<FloorDiagram>>(enumerate(query));
    if (cache_dir_) save(key, *fresh);
    result = std::move(fresh);
  }
  memo_.emplace(key, result);
  return result;
}

namespace {

std::filesystem::path manifest_path(const std::filesystem::path& dir) { return dir / "manifest.json"; }

nlohmann::json read_manifest(const std::filesystem::path& dir) {
  std::ifstream in(manifest_path(dir));
  if (!in) return nlohmann::json::object();
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception&) {
    return nlohmann::json::object();
  }
}

}  // namespace

std::shared_ptr<const std::vector<FloorDiagram>> DiagramStore::load(const std::string& key) {
  const auto& dir = *cache_dir_;
  nlohmann::json manifest = read_manifest(dir);
  if (!manifest.contains(key)) return nullptr;
  std::ifstream in(dir / (key + ".jsonl"), std::ios::binary);
  if (!in) return nullptr;
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string content = buffer.str();
  if (manifest[key].value("sha256", "") != sha256_hex(content)) return nullptr;
  auto diagrams = std::make_shared<std::vector<FloorDiagram>>();
  std::istringstream lines(content);
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty()) diagrams->push_back(FloorDiagram::parse_json(line));
  }
  if (std::to_string(diagrams->size()) != manifest[key].value("count", "")) return nullptr;
  return diagrams;
}

void DiagramStore::save(const std::string& key, const std::vector<FloorDiagram>& diagrams) {
  const auto& dir = *cache_dir_;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return;
  std::string content;
  for (const auto& diagram : diagrams) content += diagram.to_json() + "\n";
  {
    std::ofstream out(dir / (key + ".jsonl"), std::ios::binary | std::ios::trunc);
    if (!out) return;
    out << content;
  }
  nlohmann::json manifest = read_manifest(dir);
  manifest[key] = {{"count", std::to_string(diagrams.size())}, {"sha256", sha256_hex(content)}};
  std::ofstream out(manifest_path(dir), std::ios::trunc);
  out << manifest.dump(2) << "\n";
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

}  // namespace floordiag
