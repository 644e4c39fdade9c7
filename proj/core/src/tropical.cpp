#include "floordiag/tropical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "floordiag/enumeration.hpp"
#include "floordiag/errors.hpp"

namespace floordiag {

namespace {

// Union-find over vertex ids.
class Components {
 public:
  explicit Components(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }
  std::size_t count() {
    std::size_t n = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i) n += find(i) == i ? 1 : 0;
    return n;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

bool StretchedConfig::is_stretched() const {
  if (points.size() < 2) return true;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i - 1].x < points[i].x) || !(points[i - 1].y < points[i].y)) return false;
  }
  Rational min_gap = points[1].y - points[0].y;
  for (std::size_t i = 2; i < points.size(); ++i) min_gap = std::min(min_gap, Rational(points[i].y - points[i - 1].y));
  const Rational spread = points.back().x - points.front().x;
  return min_gap > Rational(static_cast<long>(d) * d * d + d) * spread;
}

StretchedConfig stretched_config(int d, int g, std::uint64_t seed) {
  if (d < 1) throw DomainError("degree must be at least 1");
  if (g < 0) throw DomainError("genus must be nonnegative");
  const long n = 3L * d - 1 + g;
  const long denominator = n < 100 ? 100 : n + 1;
  const long lift = static_cast<long>(d) * d * d + d + 1;
  StretchedConfig config{d, g, {}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> jitter(0, 49);
  for (long i = 1; i <= n; ++i) {
    Rational x{BigInt(i) * 100 + (seed == 0 ? 0 : jitter(rng)), BigInt(100) * denominator};
    x.canonicalize();
    config.points.push_back({x, Rational(lift * i)});
  }
  return config;
}

Rational Floor::value_at(const Rational& x) const {
  if (breakpoints.empty()) return slopes.empty() ? Rational(0) : Rational(slopes.front()) * x;
  std::size_t i = 0;
  while (i < breakpoints.size() && breakpoints[i].x < x) ++i;
  // Segment i lies left of breakpoint i and right of breakpoint i-1.
  const Breakpoint& anchor = i < breakpoints.size() ? breakpoints[i] : breakpoints.back();
  return anchor.y + Rational(slopes[i]) * (x - anchor.x);
}

TropicalCurveSketch reconstruct(const FloorDiagram& diagram, const Marking& marking, const StretchedConfig& config) {
  validate_marking(diagram, marking);
  const int d = diagram.degree();
  const int g = diagram.genus();
  if (config.d != d || config.g != g) throw DomainError("configuration was built for a different (d, g)");
  const std::size_t n = marking.order.size();
  if (config.points.size() != n) throw DomainError("configuration size differs from the marking length");

  TropicalCurveSketch sketch;
  sketch.d = d;
  sketch.g = g;
  sketch.config = config;
  sketch.floors.resize(static_cast<std::size_t>(d));
  // Element i of the marking sits on the i-th highest point.
  auto point_of = [n](std::size_t i) { return static_cast<int>(n - 1 - i); };

  std::vector<std::vector<int>> touching(static_cast<std::size_t>(d) + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const MarkingLabel& label = marking.order[i];
    const int p = point_of(i);
    if (label.kind == ElementKind::Floor) {
      sketch.floors[label.a - 1].vertex = label.a;
      sketch.floors[label.a - 1].point = p;
      continue;
    }
    if (label.kind == ElementKind::LambdaVertex) throw DomainError("relative markings have no plane reconstruction");
    Elevator e;
    e.x = config.points[p].x;
    e.weight = label.weight;
    e.point = p;
    e.top_floor = label.a;
    if (label.kind == ElementKind::Midpoint) e.bottom_floor = label.b;
    const int index = static_cast<int>(sketch.elevators.size());
    sketch.elevators.push_back(e);
    touching[label.a].push_back(index);
    if (e.bottom_floor) touching[*e.bottom_floor].push_back(index);
  }

  for (int v = 1; v <= d; ++v) {
    Floor& floor = sketch.floors[v - 1];
    // Elevators were appended in marking order, i.e. right to left.
    std::vector<int> right_to_left = touching[v];
    std::vector<int> slopes{1};
    for (int idx : right_to_left) {
      const Elevator& e = sketch.elevators[idx];
      const bool from_above = e.bottom_floor && *e.bottom_floor == v;
      slopes.push_back(slopes.back() + (from_above ? e.weight : -e.weight));
    }
    std::reverse(slopes.begin(), slopes.end());
    floor.slopes = slopes;
    for (auto it = right_to_left.rbegin(); it != right_to_left.rend(); ++it) {
      floor.breakpoints.push_back({sketch.elevators[*it].x, 0, *it});
    }
    // Heights relative to the first breakpoint, then shifted through p(v).
    for (std::size_t k = 1; k < floor.breakpoints.size(); ++k) {
      floor.breakpoints[k].y =
          floor.breakpoints[k - 1].y + Rational(slopes[k]) * (floor.breakpoints[k].x - floor.breakpoints[k - 1].x);
    }
    const Point& white = config.points[floor.point];
    const Rational shift = white.y - floor.value_at(white.x);
    for (auto& b : floor.breakpoints) b.y += shift;
  }

  for (auto& e : sketch.elevators) {
    e.y_top = sketch.floors[e.top_floor - 1].value_at(e.x);
    if (e.bottom_floor) e.y_bottom = sketch.floors[*e.bottom_floor - 1].value_at(e.x);
  }
  return sketch;
}

bool CurveReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CurveCheck& c) { return c.passed; });
}

std::vector<std::string> CurveReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (!c.passed) out.push_back(c.name + ": " + c.detail);
  }
  return out;
}

CurveReport verify_curve(const TropicalCurveSketch& sketch, int d, int g) {
  CurveReport report;
  auto add = [&](std::string name, bool passed, std::string detail) {
    report.checks.push_back({std::move(name), passed, passed ? std::string() : std::move(detail)});
  };

  // Graph vertices are elevator feet on floors.
  struct Foot {
    int floor;
    int elevator;
  };
  std::vector<Foot> feet;
  std::map<std::pair<int, int>, std::size_t> foot_id;
  for (const auto& floor : sketch.floors) {
    for (const auto& b : floor.breakpoints) {
      foot_id[{floor.vertex, b.elevator}] = feet.size();
      feet.push_back({floor.vertex, b.elevator});
    }
  }

  // Balancing: Σ weight * primitive direction over edges leaving the foot.
  std::string unbalanced;
  for (const auto& floor : sketch.floors) {
    for (std::size_t k = 0; k < floor.breakpoints.size(); ++k) {
      const Elevator& e = sketch.elevators[floor.breakpoints[k].elevator];
      // Both floor segments have horizontal component ±1, so only the
      // vertical components can fail to cancel.
      const long dy = floor.slopes[k + 1] - floor.slopes[k] + (e.top_floor == floor.vertex ? -e.weight : e.weight);
      if (dy != 0) {
        unbalanced += " F" + std::to_string(floor.vertex) + "/e" + std::to_string(floor.breakpoints[k].elevator);
      }
    }
  }
  add("balancing", unbalanced.empty(), "unbalanced vertices:" + unbalanced);

  int left_rays = 0;
  int right_rays = 0;
  int down_rays = 0;
  std::string bad_rays;
  for (const auto& floor : sketch.floors) {
    if (floor.slopes.front() == 0) ++left_rays;
    else bad_rays += " left ray of F" + std::to_string(floor.vertex);
    if (floor.slopes.back() == 1) ++right_rays;
    else bad_rays += " right ray of F" + std::to_string(floor.vertex);
  }
  for (const auto& e : sketch.elevators) {
    if (e.bottom_floor) continue;
    if (e.weight == 1) ++down_rays;
    else bad_rays += " heavy downward ray";
  }
  add("unbounded directions", bad_rays.empty() && left_rays == d && right_rays == d && down_rays == d,
      "census (-1,0):" + std::to_string(left_rays) + " (1,1):" + std::to_string(right_rays) +
          " (0,-1):" + std::to_string(down_rays) + bad_rays);
  report.degree = right_rays;
  add("degree", report.degree == d, "degree " + std::to_string(report.degree));

  // First Betti number over bounded edges.
  std::size_t bounded = 0;
  Components comps(feet.size());
  for (const auto& floor : sketch.floors) {
    for (std::size_t k = 1; k < floor.breakpoints.size(); ++k) {
      comps.join(foot_id.at({floor.vertex, floor.breakpoints[k - 1].elevator}),
                 foot_id.at({floor.vertex, floor.breakpoints[k].elevator}));
      ++bounded;
    }
  }
  for (std::size_t i = 0; i < sketch.elevators.size(); ++i) {
    const Elevator& e = sketch.elevators[i];
    if (!e.bottom_floor) continue;
    comps.join(foot_id.at({e.top_floor, static_cast<int>(i)}), foot_id.at({*e.bottom_floor, static_cast<int>(i)}));
    ++bounded;
  }
  const std::size_t components = feet.empty() ? 1 : comps.count();
  report.genus = static_cast<int>(bounded) - static_cast<int>(feet.size()) + static_cast<int>(components);
  add("irreducible", components == 1, std::to_string(components) + " components");
  add("genus", report.genus == g, "genus " + std::to_string(report.genus));

  std::string slope_issue;
  for (const auto& floor : sketch.floors) {
    for (int s : floor.slopes) {
      if (s > d || s < -d) slope_issue += " F" + std::to_string(floor.vertex) + " slope " + std::to_string(s);
    }
  }
  add("slope bound", slope_issue.empty(), slope_issue);

  std::string missed;
  for (const auto& floor : sketch.floors) {
    const Point& p = sketch.config.points[floor.point];
    if (floor.value_at(p.x) != p.y) missed += " white point " + std::to_string(floor.point);
  }
  for (const auto& e : sketch.elevators) {
    const Point& p = sketch.config.points[e.point];
    bool on = p.x == e.x && p.y < e.y_top && (!e.y_bottom || *e.y_bottom < p.y);
    if (!on) missed += " black point " + std::to_string(e.point);
    if (e.y_bottom && !(*e.y_bottom < e.y_top)) missed += " inverted elevator at point " + std::to_string(e.point);
  }
  add("passes through configuration", missed.empty(), missed);
  add("configuration stretched", sketch.config.is_stretched(), "inequalities fail");
  return report;
}

std::pair<FloorDiagram, Marking> extract_marking(const TropicalCurveSketch& sketch) {
  const auto& points = sketch.config.points;
  // Floors ranked top-down by their white points.
  std::vector<int> order(sketch.floors.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return points[sketch.floors[a].point].y > points[sketch.floors[b].point].y;
  });
  std::vector<int> rank(sketch.floors.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = static_cast<int>(r) + 1;

  std::vector<WeightedEdge> edges;
  for (const auto& e : sketch.elevators) {
    if (e.bottom_floor) edges.push_back({rank[e.top_floor - 1], rank[*e.bottom_floor - 1], e.weight});
  }
  FloorDiagram diagram(static_cast<int>(sketch.floors.size()), edges);

  Marking marking;
  for (std::size_t i = points.size(); i-- > 0;) {
    const Point& p = points[i];
    std::optional<MarkingLabel> label;
    for (std::size_t f = 0; f < sketch.floors.size() && !label; ++f) {
      if (sketch.floors[f].value_at(p.x) == p.y) label = MarkingLabel{ElementKind::Floor, rank[f], 0, 1};
    }
    for (const auto& e : sketch.elevators) {
      if (label) break;
      if (e.x != p.x || !(p.y < e.y_top) || (e.y_bottom && !(*e.y_bottom < p.y))) continue;
      if (e.bottom_floor) {
        label = MarkingLabel{ElementKind::Midpoint, rank[e.top_floor - 1], rank[*e.bottom_floor - 1], e.weight};
      } else {
        label = MarkingLabel{ElementKind::Sink, rank[e.top_floor - 1], 0, e.weight};
      }
    }
    if (!label) throw DomainError("configuration point " + std::to_string(i) + " lies on no floor or elevator");
    marking.order.push_back(*label);
  }
  return {diagram, marking};
}

std::string skeleton(const TropicalCurveSketch& sketch) {
  const std::size_t n = sketch.config.points.size();
  auto rank = [n](int point) { return std::to_string(n - static_cast<std::size_t>(point)); };
  std::vector<std::size_t> floors(sketch.floors.size());
  std::iota(floors.begin(), floors.end(), 0);
  std::sort(floors.begin(), floors.end(),
            [&](std::size_t a, std::size_t b) { return sketch.floors[a].point > sketch.floors[b].point; });
  std::string out;
  for (std::size_t f : floors) {
    const Floor& floor = sketch.floors[f];
    out += "floor@" + rank(floor.point) + ":";
    for (std::size_t k = floor.breakpoints.size(); k-- > 0;) {
      out += " " + std::to_string(floor.slopes[k + 1]) + "|" + rank(sketch.elevators[floor.breakpoints[k].elevator].point);
    }
    out += " " + std::to_string(floor.slopes.front()) + "\n";
  }
  for (const auto& e : sketch.elevators) {
    out += "elevator@" + rank(e.point) + ": w=" + std::to_string(e.weight) + " top@" +
           rank(sketch.floors[e.top_floor - 1].point) + " bottom@" +
           (e.bottom_floor ? rank(sketch.floors[*e.bottom_floor - 1].point) : std::string("ground")) + "\n";
  }
  return out;
}

TropicalCurveSketch perturb(const TropicalCurveSketch& sketch, std::size_t elevator, int delta) {
  if (elevator >= sketch.elevators.size()) throw DomainError("no elevator with index " + std::to_string(elevator));
  TropicalCurveSketch out = sketch;
  out.elevators[elevator].weight += delta;
  return out;
}

std::vector<GalleryEntry> tropical_gallery(int d, int g, std::uint64_t seed) {
  const StretchedConfig config = stretched_config(d, g, seed);
  std::vector<GalleryEntry> out;
  for (const auto& diagram : enumerate(DiagramQuery::connected(d, g))) {
    for (const auto& marking : enumerate_markings(diagram)) {
      out.push_back({diagram, marking, reconstruct(diagram, marking, config)});
    }
  }
  return out;
}

}  // namespace floordiag
