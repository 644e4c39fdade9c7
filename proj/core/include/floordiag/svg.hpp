#pragma once

// Deterministic SVG drawings of diagrams, marked diagrams and tropical curves.

#include <filesystem>
#include <string>

#include "floordiag/diagram.hpp"
#include "floordiag/markings.hpp"
#include "floordiag/tropical.hpp"

namespace floordiag {

struct SvgStyle {
  long node_spacing = 60;
  long node_radius = 8;
  long margin = 30;
  long arc_rise = 18;
  long label_size = 12;
  // Canvas for tropical curves.
  long curve_width = 480;
  long curve_height = 640;
};

std::string render_diagram_svg(const FloorDiagram& diagram, const SvgStyle& style = {});
// The 3d + g - 1 marked vertices in a row; white circles are floors.
std::string render_marking_svg(const FloorDiagram& diagram, const Marking& marking, const SvgStyle& style = {});
std::string render_sketch_svg(const TropicalCurveSketch& sketch, const SvgStyle& style = {});

// Throws IoError when the file cannot be written.
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace floordiag
