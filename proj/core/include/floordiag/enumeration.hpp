#pragma once

// Exhaustive generation of labeled floor diagrams.

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "floordiag/diagram.hpp"

namespace floordiag {

struct DiagramFilter {
  bool odd_weights = false;
  bool unit_weights = false;
  // Sub-multiset of edges every emitted diagram must contain.
  std::vector<WeightedEdge> required_edges;
  // The last `terminal_sinks` vertices emit no edges.
  int terminal_sinks = 0;
  std::optional<int> max_weight;
  // Some edge must have at least this weight.
  std::optional<int> heavy_edge;

  bool accepts(const FloorDiagram& diagram) const;
  bool trivial() const;
  // Canonical description, also accepted by `parse`. "all" for the empty filter.
  std::string key() const;

  // '+'-separated terms: odd, simple, maxw=K, heavy=K, sinks=K, contains=(s,t,w);(s,t,w).
  static DiagramFilter parse(std::string_view text);
  // Edges a -> a+1 -> ... -> a+b, all of weight 1.
  static DiagramFilter unit_chain(int a, int b);
};

struct DiagramQuery {
  int d = 1;
  // Genus queries return connected diagrams only.
  std::optional<int> genus;
  // Cogenus queries also return disconnected diagrams.
  std::optional<int> cogenus;
  DiagramFilter filter;

  static DiagramQuery connected(int d, int g, DiagramFilter filter = {});
  static DiagramQuery with_cogenus(int d, int delta, DiagramFilter filter = {});

  // Throws DomainError when the query is malformed.
  void validate() const;
  int target_edge_count() const;
  std::string key() const;
};

// Every matching diagram once, sorted by canonical text form.
std::vector<FloorDiagram> enumerate(const DiagramQuery& query);
void enumerate(const DiagramQuery& query, const std::function<void(const FloorDiagram&)>& visit);

BigInt count_connected(int d, int g);
BigInt count_filtered(int d, int g, const DiagramFilter& filter);
// Largest genus with a nonempty family: (d-1)(d-2)/2.
int max_genus(int d);

// Memoizes enumerations in memory and, when a directory is configured, on disk
// as one JSONL file per query plus a manifest of counts and SHA-256 hashes.
class DiagramStore {
 public:
  explicit DiagramStore(std::optional<std::filesystem::path> cache_dir = std::nullopt);

  // Process-wide store; reads FLOORDIAG_CACHE_DIR on first use.
  static DiagramStore& global();

  std::shared_ptr<const std::vector<FloorDiagram>> get(const DiagramQuery& query);
  const std::optional<std::filesystem::path>& cache_dir() const { return cache_dir_; }
  void set_cache_dir(std::optional<std::filesystem::path> dir);

 private:
  std::shared_ptr<const std::vector<FloorDiagram>> load(const std::string& key);
  void save(const std::string& key, const std::vector<FloorDiagram>& diagrams);

  std::optional<std::filesystem::path> cache_dir_;
  std::map<std::string, std::shared_ptr<const std::vector<FloorDiagram>>> memo_;
  std::mutex mutex_;
};

std::string sha256_hex(std::string_view data);

}  // namespace floordiag
