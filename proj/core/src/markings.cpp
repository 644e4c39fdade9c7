#include "floordiag/markings.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <map>
#include <set>
#include <unordered_map>

#include "floordiag/errors.hpp"

namespace floordiag {

namespace {

void check_sizes(const FloorDiagram& diagram, const Partition& lambda, const Partition& rho) {
  if (lambda.size() + rho.size() != diagram.degree()) {
    throw DomainError("|lambda| + |rho| = " + std::to_string(lambda.size() + rho.size()) +
                      " differs from d = " + std::to_string(diagram.degree()));
  }
}

std::vector<int> budgets(const FloorDiagram& diagram) {
  std::vector<int> b = diagram.divergences();
  for (int& x : b) x = 1 - x;
  return b;
}

BigInt parallel_class_factor(const FloorDiagram& diagram) {
  BigInt f = 1;
  const auto& edges = diagram.edges();
  for (std::size_t i = 0; i < edges.size();) {
    std::size_t j = i;
    while (j < edges.size() && edges[j] == edges[i]) ++j;
    f *= factorial(static_cast<long>(j - i));
    i = j;
  }
  return f;
}

int parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw DomainError("bad number '" + std::string(s) + "' in marking label");
  }
  return value;
}

}  // namespace

int MarkingPoset::lambda_count() const {
  return static_cast<int>(std::count_if(elements.begin(), elements.end(),
                                        [](const MarkingElement& e) { return e.kind == ElementKind::LambdaVertex; }));
}

std::vector<Distribution> enumerate_distributions(const FloorDiagram& diagram, const Partition& lambda,
                                                  const Partition& rho) {
  check_sizes(diagram, lambda, rho);
  const int d = diagram.degree();
  std::vector<int> budget = budgets(diagram);
  std::vector<Distribution> out;

  // ρ as (weight, count) pairs in decreasing weight order.
  std::vector<std::pair<int, int>> rho_counts;
  for (int part : rho.parts()) {
    if (rho_counts.empty() || rho_counts.back().first != part) rho_counts.emplace_back(part, 0);
    ++rho_counts.back().second;
  }

  Distribution current;
  current.lambda_sources.assign(static_cast<std::size_t>(lambda.length()), 0);
  current.rho_sinks.assign(static_cast<std::size_t>(d), {});

  // Fills floor v's remaining budget from the unused ρ parts.
  auto fill_floor = [&](auto&& self, int v, std::size_t weight_index, int need) -> void {
    if (v > d) {
      out.push_back(current);
      return;
    }
    if (need == 0) {
      int next = v + 1;
      self(self, next, 0, next <= d ? budget[next - 1] : 0);
      return;
    }
    if (weight_index >= rho_counts.size()) return;
    auto& [w, avail] = rho_counts[weight_index];
    int max_take = std::min(avail, need / w);
    for (int take = max_take; take >= 0; --take) {
      avail -= take;
      auto& sinks = current.rho_sinks[v - 1];
      sinks.insert(sinks.end(), static_cast<std::size_t>(take), w);
      self(self, v, weight_index + 1, need - take * w);
      sinks.resize(sinks.size() - static_cast<std::size_t>(take));
      avail += take;
    }
  };

  auto assign_lambda = [&](auto&& self, int i) -> void {
    if (i == lambda.length()) {
      fill_floor(fill_floor, 1, 0, budget[0]);
      return;
    }
    int w = lambda.parts()[i];
    for (int v = 1; v <= d; ++v) {
      if (budget[v - 1] < w) continue;
      budget[v - 1] -= w;
      current.lambda_sources[i] = v;
      self(self, i + 1);
      budget[v - 1] += w;
    }
  };
  assign_lambda(assign_lambda, 0);
  std::sort(out.begin(), out.end());
  return out;
}

Distribution ordinary_distribution(const FloorDiagram& diagram) {
  Distribution dist;
  for (int b : budgets(diagram)) dist.rho_sinks.emplace_back(static_cast<std::size_t>(b), 1);
  return dist;
}

MarkingPoset build_poset(const FloorDiagram& diagram, const Distribution& dist, const Partition& lambda) {
  const int d = diagram.degree();
  if (dist.rho_sinks.size() != static_cast<std::size_t>(d) ||
      dist.lambda_sources.size() != static_cast<std::size_t>(lambda.length())) {
    throw DomainError("distribution does not match the diagram");
  }
  MarkingPoset p;
  p.floors = d;
  for (int v = 1; v <= d; ++v) {
    p.elements.push_back({ElementKind::Floor, v, 0, 0, 0, 0, 0});
    if (v > 1) p.relations.emplace_back(v - 2, v - 1);
  }
  for (const auto& e : diagram.edges()) {
    int idx = static_cast<int>(p.elements.size());
    p.elements.push_back({ElementKind::Midpoint, e.src, e.tgt, e.weight, 0, e.src, e.tgt - 1});
    p.relations.emplace_back(e.src - 1, idx);
    p.relations.emplace_back(idx, e.tgt - 1);
  }
  for (int v = 1; v <= d; ++v) {
    const auto& sinks = dist.rho_sinks[v - 1];
    for (std::size_t i = 0; i < sinks.size();) {
      std::size_t j = i;
      while (j < sinks.size() && sinks[j] == sinks[i]) ++j;
      p.symmetry *= factorial(static_cast<long>(j - i));
      i = j;
    }
    for (int w : sinks) {
      int idx = static_cast<int>(p.elements.size());
      p.elements.push_back({ElementKind::Sink, v, 0, w, 0, v, d});
      p.relations.emplace_back(v - 1, idx);
    }
  }
  p.symmetry *= parallel_class_factor(diagram);

  const int non_lambda = static_cast<int>(p.elements.size());
  for (int i = lambda.length(); i >= 1; --i) {
    int idx = static_cast<int>(p.elements.size());
    p.elements.push_back({ElementKind::LambdaVertex, dist.lambda_sources[i - 1], 0, lambda.parts()[i - 1], i, 0, 0});
    if (i == lambda.length()) {
      for (int a = 0; a < non_lambda; ++a) p.relations.emplace_back(a, idx);
    } else {
      p.relations.emplace_back(idx - 1, idx);
    }
  }
  return p;
}

MarkingPoset build_poset(const FloorDiagram& diagram) {
  return build_poset(diagram, ordinary_distribution(diagram), Partition{});
}

BigInt count_gap_orderings(int gaps, const std::vector<GapItem>& items) {
  if (gaps < 0) throw DomainError("negative gap count");
  // arrivals[g][h]: items whose interval is g..h.
  std::vector<std::vector<int>> arrivals(static_cast<std::size_t>(gaps) + 2,
                                         std::vector<int>(static_cast<std::size_t>(gaps) + 2, 0));
  for (const auto& item : items) {
    if (item.lo < 1 || item.hi > gaps || item.lo > item.hi) {
      throw DomainError("gap item interval outside 1.." + std::to_string(gaps));
    }
    ++arrivals[item.lo][item.hi];
  }
  std::vector<std::map<std::vector<int>, BigInt>> memo(static_cast<std::size_t>(gaps) + 2);

  // pending[h]: unplaced items whose last admissible gap is h.
  auto solve = [&](auto&& self, int g, const std::vector<int>& pending_in) -> BigInt {
    if (g > gaps) return 1;
    if (auto it = memo[g].find(pending_in); it != memo[g].end()) return it->second;
    std::vector<int> pending = pending_in;
    for (int h = g; h <= gaps; ++h) pending[h] += arrivals[g][h];

    BigInt total = 0;
    std::vector<int> rest = pending;
    rest[g] = 0;
    auto pick = [&](auto&& pick_self, int h, const BigInt& ways, int placed) -> void {
      if (h > gaps) {
        total += ways * factorial(placed) * self(self, g + 1, rest);
        return;
      }
      for (int c = 0; c <= pending[h]; ++c) {
        rest[h] = pending[h] - c;
        pick_self(pick_self, h + 1, ways * binomial(pending[h], c), placed + c);
      }
      rest[h] = pending[h];
    };
    pick(pick, g + 1, BigInt(1), pending[g]);
    memo[g].emplace(pending_in, total);
    return total;
  };
  return solve(solve, 1, std::vector<int>(static_cast<std::size_t>(gaps) + 2, 0));
}

BigInt count_orderings(const MarkingPoset& poset) {
  std::vector<GapItem> items;
  for (const auto& e : poset.elements) {
    if (e.kind == ElementKind::Midpoint || e.kind == ElementKind::Sink) items.push_back({e.lo_gap, e.hi_gap});
  }
  return count_gap_orderings(poset.floors, items);
}

BigInt count_orderings_downset(const MarkingPoset& poset) {
  const std::size_t n = poset.size();
  if (n > 40) throw RefusalError("downset counter limited to 40 elements");
  std::vector<std::uint64_t> preds(n, 0);
  for (auto [a, b] : poset.relations) preds[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
  std::unordered_map<std::uint64_t, BigInt> layer{{0, BigInt(1)}};
  for (std::size_t step = 0; step < n; ++step) {
    std::unordered_map<std::uint64_t, BigInt> next;
    for (const auto& [mask, ways] : layer) {
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t bit = std::uint64_t{1} << i;
        if ((mask & bit) == 0 && (preds[i] & mask) == preds[i]) next[mask | bit] += ways;
      }
    }
    layer = std::move(next);
  }
  BigInt total = 0;
  for (const auto& [mask, ways] : layer) total += ways;
  return total;
}

BigInt count_markings(const FloorDiagram& diagram) {
  MarkingPoset p = build_poset(diagram);
  return exact_div(count_orderings(p), p.symmetry, "count_markings");
}

BigInt count_relative_markings(const FloorDiagram& diagram, const Partition& lambda, const Partition& rho) {
  BigInt total = 0;
  for (const auto& dist : enumerate_distributions(diagram, lambda, rho)) {
    MarkingPoset p = build_poset(diagram, dist, lambda);
    total += exact_div(count_orderings(p), p.symmetry, "count_relative_markings");
  }
  return total;
}

BigInt brute_force_markings(const FloorDiagram& diagram, const Partition& lambda, const Partition& rho) {
  check_sizes(diagram, lambda, rho);
  const int d = diagram.degree();
  const std::size_t element_count =
      static_cast<std::size_t>(d) + diagram.edge_count() + static_cast<std::size_t>(lambda.length() + rho.length());
  if (element_count > 14) {
    throw RefusalError("brute-force marking oracle refuses " + std::to_string(element_count) + " elements");
  }
  const std::vector<int> budget = budgets(diagram);
  const auto& lparts = lambda.parts();
  const auto& rparts = rho.parts();

  std::set<std::vector<std::string>> seen;
  std::vector<int> lambda_src(lparts.size()), rho_src(rparts.size());

  auto run_orders = [&]() {
    std::vector<int> used(static_cast<std::size_t>(d) + 1, 0);
    for (std::size_t i = 0; i < lparts.size(); ++i) used[lambda_src[i]] += lparts[i];
    for (std::size_t i = 0; i < rparts.size(); ++i) used[rho_src[i]] += rparts[i];
    for (int v = 1; v <= d; ++v) {
      if (used[v] != budget[v - 1]) return;
    }
    // Elements: floors, midpoints and sinks with their labels and predecessors.
    std::vector<std::string> label;
    std::vector<std::vector<int>> before;
    for (int v = 1; v <= d; ++v) {
      label.push_back("F" + std::to_string(v));
      before.push_back(v > 1 ? std::vector<int>{v - 2} : std::vector<int>{});
    }
    for (const auto& e : diagram.edges()) {
      label.push_back("E" + std::to_string(e.src) + "." + std::to_string(e.tgt) + ":" + std::to_string(e.weight));
      before.push_back({e.src - 1});
      before[e.tgt - 1].push_back(static_cast<int>(label.size()) - 1);
    }
    for (std::size_t i = 0; i < rparts.size(); ++i) {
      label.push_back("S" + std::to_string(rho_src[i]) + ":" + std::to_string(rparts[i]));
      before.push_back({rho_src[i] - 1});
    }
    // λ-vertices close the order as L_ℓ, ..., L_1.
    std::vector<std::string> tail;
    for (std::size_t i = lparts.size(); i-- > 0;) {
      tail.push_back("L" + std::to_string(i + 1) + "@" + std::to_string(lambda_src[i]));
    }
    const std::size_t n = label.size();
    std::vector<char> placed(n, 0);
    std::vector<std::string> sequence;
    auto extend = [&](auto&& self) -> void {
      if (sequence.size() == n) {
        auto full = sequence;
        full.insert(full.end(), tail.begin(), tail.end());
        seen.insert(std::move(full));
        return;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (placed[i]) continue;
        bool ready = std::all_of(before[i].begin(), before[i].end(), [&](int p) { return placed[p] != 0; });
        if (!ready) continue;
        placed[i] = 1;
        sequence.push_back(label[i]);
        self(self);
        sequence.pop_back();
        placed[i] = 0;
      }
    };
    extend(extend);
  };

  auto assign_rho = [&](auto&& self, std::size_t i) -> void {
    if (i == rparts.size()) {
      run_orders();
      return;
    }
    for (int v = 1; v <= d; ++v) {
      rho_src[i] = v;
      self(self, i + 1);
    }
  };
  auto assign_lambda = [&](auto&& self, std::size_t i) -> void {
    if (i == lparts.size()) {
      assign_rho(assign_rho, 0);
      return;
    }
    for (int v = 1; v <= d; ++v) {
      lambda_src[i] = v;
      self(self, i + 1);
    }
  };
  assign_lambda(assign_lambda, 0);
  return static_cast<unsigned long>(seen.size());
}

BigInt count_markings_with_terminal_sinks(const FloorDiagram& diagram, int k, bool same_floor) {
  const int d = diagram.degree();
  if (k < 0 || k > d) throw DomainError("terminal sink count outside 0..d");
  const std::vector<int> sinks = budgets(diagram);
  MarkingPoset full = build_poset(diagram);

  std::vector<GapItem> midpoints;
  for (const auto& e : diagram.edges()) midpoints.push_back({e.src, e.tgt - 1});

  auto raw_for = [&](const std::vector<int>& removed) -> BigInt {
    std::vector<GapItem> items = midpoints;
    BigInt choose = 1;
    for (int v = 1; v <= d; ++v) {
      choose *= binomial(sinks[v - 1], removed[v - 1]);
      for (int i = 0; i < sinks[v - 1] - removed[v - 1]; ++i) items.push_back({v, d});
    }
    return choose * factorial(k) * count_gap_orderings(d, items);
  };

  BigInt raw = 0;
  std::vector<int> removed(static_cast<std::size_t>(d), 0);
  if (same_floor) {
    for (int v = 1; v <= d; ++v) {
      if (sinks[v - 1] < k) continue;
      removed.assign(static_cast<std::size_t>(d), 0);
      removed[v - 1] = k;
      raw += raw_for(removed);
      if (k == 0) break;
    }
  } else {
    auto spread = [&](auto&& self, int v, int left) -> void {
      if (v > d) {
        if (left == 0) raw += raw_for(removed);
        return;
      }
      for (int r = 0; r <= std::min(left, sinks[v - 1]); ++r) {
        removed[v - 1] = r;
        self(self, v + 1, left - r);
      }
      removed[v - 1] = 0;
    };
    spread(spread, 1, k);
  }
  return exact_div(raw, full.symmetry, "count_markings_with_terminal_sinks");
}

std::string MarkingLabel::to_string() const {
  auto suffix = [this] { return weight == 1 ? std::string() : ":" + std::to_string(weight); };
  switch (kind) {
    case ElementKind::Floor:
      return "F" + std::to_string(a);
    case ElementKind::Midpoint:
      return "E" + std::to_string(a) + "." + std::to_string(b) + suffix();
    case ElementKind::Sink:
      return "S" + std::to_string(a) + suffix();
    case ElementKind::LambdaVertex:
      return "L" + std::to_string(a) + "@" + std::to_string(b);
  }
  return {};
}

MarkingLabel MarkingLabel::parse(std::string_view text) {
  if (text.size() < 2) throw DomainError("marking label '" + std::string(text) + "' is too short");
  MarkingLabel label;
  std::string_view body = text.substr(1);
  auto split_weight = [&](std::string_view s) {
    std::size_t colon = s.find(':');
    if (colon != s.npos) {
      label.weight = parse_int(s.substr(colon + 1));
      s = s.substr(0, colon);
    }
    return s;
  };
  switch (text.front()) {
    case 'F':
      label.kind = ElementKind::Floor;
      label.a = parse_int(body);
      break;
    case 'E': {
      label.kind = ElementKind::Midpoint;
      body = split_weight(body);
      std::size_t dot = body.find('.');
      if (dot == body.npos) throw DomainError("midpoint label needs '<s>.<t>'");
      label.a = parse_int(body.substr(0, dot));
      label.b = parse_int(body.substr(dot + 1));
      break;
    }
    case 'S':
      label.kind = ElementKind::Sink;
      label.a = parse_int(split_weight(body));
      break;
    case 'L': {
      label.kind = ElementKind::LambdaVertex;
      std::size_t at = body.find('@');
      if (at == body.npos) throw DomainError("lambda label needs '<i>@<v>'");
      label.a = parse_int(body.substr(0, at));
      label.b = parse_int(body.substr(at + 1));
      label.weight = 0;
      break;
    }
    default:
      throw DomainError("unknown marking label '" + std::string(text) + "'");
  }
  return label;
}

MarkingLabel label_of(const MarkingElement& element) {
  switch (element.kind) {
    case ElementKind::Floor:
      return {ElementKind::Floor, element.floor, 0, 1};
    case ElementKind::Midpoint:
      return {ElementKind::Midpoint, element.floor, element.target, element.weight};
    case ElementKind::Sink:
      return {ElementKind::Sink, element.floor, 0, element.weight};
    case ElementKind::LambdaVertex:
      return {ElementKind::LambdaVertex, element.lambda_index, element.floor, 0};
  }
  return {};
}

std::string Marking::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i) out += ',';
    out += order[i].to_string();
  }
  return out;
}

Marking Marking::parse(std::string_view text) {
  Marking m;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find_first_of(", \t\n", start);
    if (end == text.npos) end = text.size();
    if (end > start) m.order.push_back(MarkingLabel::parse(text.substr(start, end - start)));
    start = end + 1;
  }
  return m;
}

std::vector<Marking> enumerate_markings(const FloorDiagram& diagram, const Partition& lambda,
                                        const Partition& rho) {
  const int d = diagram.degree();
  std::vector<Marking> out;
  for (const auto& dist : enumerate_distributions(diagram, lambda, rho)) {
    MarkingPoset p = build_poset(diagram, dist, lambda);
    // Group identical elements; each group is one label with a multiplicity.
    std::map<MarkingLabel, int> remaining;
    std::vector<MarkingLabel> tail;
    for (const auto& e : p.elements) {
      if (e.kind == ElementKind::LambdaVertex) {
        tail.push_back(label_of(e));
      } else if (e.kind != ElementKind::Floor) {
        ++remaining[label_of(e)];
      }
    }
    std::vector<int> open_midpoints_into(static_cast<std::size_t>(d) + 2, 0);
    for (const auto& e : diagram.edges()) ++open_midpoints_into[e.tgt];

    Marking current;
    int next_floor = 1;
    const std::size_t total = p.size() - tail.size();
    auto extend = [&](auto&& self) -> void {
      if (current.order.size() == total) {
        Marking full = current;
        full.order.insert(full.order.end(), tail.begin(), tail.end());
        out.push_back(std::move(full));
        return;
      }
      if (next_floor <= d && open_midpoints_into[next_floor] == 0) {
        current.order.push_back({ElementKind::Floor, next_floor, 0, 1});
        ++next_floor;
        self(self);
        --next_floor;
        current.order.pop_back();
      }
      for (auto& [label, count] : remaining) {
        if (count == 0 || label.a >= next_floor) continue;
        --count;
        if (label.kind == ElementKind::Midpoint) --open_midpoints_into[label.b];
        current.order.push_back(label);
        self(self);
        current.order.pop_back();
        if (label.kind == ElementKind::Midpoint) ++open_midpoints_into[label.b];
        ++count;
      }
    };
    extend(extend);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Marking> enumerate_markings(const FloorDiagram& diagram) {
  return enumerate_markings(diagram, Partition{}, Partition::ones(diagram.degree()));
}

void validate_marking(const FloorDiagram& diagram, const Marking& marking) {
  const int d = diagram.degree();
  MarkingPoset p = build_poset(diagram);
  std::map<MarkingLabel, int> expected;
  for (const auto& e : p.elements) ++expected[label_of(e)];
  std::map<MarkingLabel, int> given;
  for (const auto& label : marking.order) ++given[label];
  if (expected != given) throw ValidationError("marking labels do not match the elements of the diagram");

  std::vector<int> floor_pos(static_cast<std::size_t>(d) + 1, -1);
  for (std::size_t i = 0; i < marking.order.size(); ++i) {
    const auto& label = marking.order[i];
    if (label.kind == ElementKind::Floor) floor_pos[label.a] = static_cast<int>(i);
  }
  for (int v = 2; v <= d; ++v) {
    if (floor_pos[v] < floor_pos[v - 1]) throw ValidationError("floors out of order in marking");
  }
  for (std::size_t i = 0; i < marking.order.size(); ++i) {
    const auto& label = marking.order[i];
    int pos = static_cast<int>(i);
    if (label.kind == ElementKind::Midpoint && !(floor_pos[label.a] < pos && pos < floor_pos[label.b])) {
      throw ValidationError("midpoint " + label.to_string() + " is not between its floors");
    }
    if (label.kind == ElementKind::Sink && pos < floor_pos[label.a]) {
      throw ValidationError("sink " + label.to_string() + " precedes its floor");
    }
  }
}

}  // namespace floordiag
