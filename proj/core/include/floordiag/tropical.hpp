#pragma once

// Plane tropical curves through vertically stretched point configurations,
// rebuilt from marked floor diagrams with exact rational geometry.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "floordiag/arith.hpp"
#include "floordiag/diagram.hpp"
#include "floordiag/markings.hpp"

namespace floordiag {

struct Point {
  Rational x;
  Rational y;
  bool operator==(const Point&) const = default;
};

// Points stored bottom to top, so points.back() is the highest one and
// marking element i sits at points[size - 1 - i].
struct StretchedConfig {
  int d = 0;
  int g = 0;
  std::vector<Point> points;

  // Both coordinate chains increase and the smallest vertical gap beats
  // (d^3 + d) times the horizontal spread.
  bool is_stretched() const;
};

// 3d - 1 + g points. Seed 0 gives x_i = i/100 (or i/(n+1) once n >= 100);
// other seeds add a deterministic jitter below half a step.
StretchedConfig stretched_config(int d, int g, std::uint64_t seed);

struct Breakpoint {
  Rational x;
  Rational y;
  int elevator = 0;
};

// Graph of a piecewise-linear function through one white point.
struct Floor {
  int vertex = 0;
  int point = 0;
  // Ascending x.
  std::vector<Breakpoint> breakpoints;
  // slopes[0] is the left ray, slopes.back() the right ray.
  std::vector<int> slopes;

  Rational value_at(const Rational& x) const;
};

struct Elevator {
  Rational x;
  int weight = 1;
  int point = 0;
  int top_floor = 0;
  // Absent for elevators that run down to infinity.
  std::optional<int> bottom_floor;
  Rational y_top;
  std::optional<Rational> y_bottom;
};

struct TropicalCurveSketch {
  int d = 0;
  int g = 0;
  StretchedConfig config;
  // floors[v - 1] belongs to diagram vertex v.
  std::vector<Floor> floors;
  std::vector<Elevator> elevators;
};

// Throws DomainError when the marking does not belong to the diagram or
// the configuration has the wrong size or shape.
TropicalCurveSketch reconstruct(const FloorDiagram& diagram, const Marking& marking,
                                const StretchedConfig& config);

struct CurveCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CurveReport {
  std::vector<CurveCheck> checks;
  int degree = 0;
  int genus = 0;

  bool ok() const;
  std::vector<std::string> failures() const;
};

CurveReport verify_curve(const TropicalCurveSketch& sketch, int d, int g);

// Reads the floor diagram and the downward order of the marked points back
// off the geometry.
std::pair<FloorDiagram, Marking> extract_marking(const TropicalCurveSketch& sketch);

// Combinatorial type: per floor, the ranked elevator feet with slopes; per
// elevator, its endpoints and weight. Ranks follow the downward point order.
std::string skeleton(const TropicalCurveSketch& sketch);

// Copy with one elevator weight shifted, leaving the floors untouched.
TropicalCurveSketch perturb(const TropicalCurveSketch& sketch, std::size_t elevator, int delta = 1);

struct GalleryEntry {
  FloorDiagram diagram;
  Marking marking;
  TropicalCurveSketch sketch;
};

// Every marked diagram of degree d and genus g with its curve.
std::vector<GalleryEntry> tropical_gallery(int d, int g, std::uint64_t seed = 0);

}  // namespace floordiag
