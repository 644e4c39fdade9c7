#include "floordiag/svg.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "floordiag/errors.hpp"

namespace floordiag {

namespace {

// Exact rational rounded half-up to two decimals.
std::string fixed2(const Rational& q) {
  Rational scaled = q * 100 + Rational(1, 2);
  BigInt hundredths;
  mpz_fdiv_q(hundredths.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  const bool negative = hundredths < 0;
  BigInt mag = negative ? BigInt(-hundredths) : hundredths;
  BigInt whole = mag / 100;
  BigInt frac = mag % 100;
  std::string f = frac.get_str();
  if (f.size() < 2) f.insert(0, "0");
  return (negative ? "-" : "") + whole.get_str() + "." + f;
}

std::string fixed2(long v) { return fixed2(Rational(v)); }

std::string header(long width, long height) {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  return out.str();
}

std::string circle(long cx, long cy, long r, bool filled) {
  std::ostringstream out;
  out << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << r << "\" fill=\"" << (filled ? "black" : "white")
      << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  return out.str();
}

std::string text(const std::string& x, const std::string& y, long size, const std::string& body) {
  return "<text x=\"" + x + "\" y=\"" + y + "\" font-size=\"" + std::to_string(size) +
         "\" font-family=\"sans-serif\" text-anchor=\"middle\">" + body + "</text>\n";
}

// Straight segment for neighbours, otherwise an arc whose height grows with
// span and with the number of earlier arcs over the same pair.
std::string connector(long x1, long x2, long y, long rise, int level, long label_size, int weight,
                      bool below = false) {
  std::ostringstream out;
  const long sign = below ? 1 : -1;
  const long mid = (x1 + x2) / 2;
  long label_y = y + sign * 6;
  if (level == 0 && x2 - x1 <= rise * 4) {
    out << "<line x1=\"" << x1 << "\" y1=\"" << y << "\" x2=\"" << x2 << "\" y2=\"" << y
        << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  } else {
    const long height = rise * (level + 1) + (x2 - x1) / 8;
    out << "<path d=\"M " << x1 << ' ' << y << " Q " << mid << ' ' << y + sign * 2 * height << ' ' << x2 << ' ' << y
        << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
    label_y = y + sign * (height + 4);
  }
  if (weight != 1) out << text(std::to_string(mid), std::to_string(label_y), label_size, std::to_string(weight));
  return out.str();
}

}  // namespace

std::string render_diagram_svg(const FloorDiagram& diagram, const SvgStyle& style) {
  const int d = diagram.degree();
  const long width = 2 * style.margin + (d - 1) * style.node_spacing;
  const long height = 2 * style.margin + 6 * style.arc_rise;
  const long base = height - style.margin - style.arc_rise;
  auto x_of = [&](int v) { return style.margin + (v - 1) * style.node_spacing; };
  std::string out = header(width, height);
  std::map<std::pair<int, int>, int> seen;
  for (const auto& e : diagram.edges()) {
    const int level = seen[{e.src, e.tgt}]++;
    out += connector(x_of(e.src), x_of(e.tgt), base, style.arc_rise, level, style.label_size, e.weight);
  }
  for (int v = 1; v <= d; ++v) out += circle(x_of(v), base, style.node_radius, false);
  out += "</svg>\n";
  return out;
}

std::string render_marking_svg(const FloorDiagram& diagram, const Marking& marking, const SvgStyle& style) {
  validate_marking(diagram, marking);
  const long n = static_cast<long>(marking.order.size());
  const long step = style.node_spacing / 2;
  const long width = 2 * style.margin + (n - 1) * step;
  const long height = 2 * style.margin + 8 * style.arc_rise;
  const long base = style.margin + 4 * style.arc_rise;
  auto x_of = [&](std::size_t i) { return style.margin + static_cast<long>(i) * step; };
  std::map<int, std::size_t> floor_at;
  for (std::size_t i = 0; i < marking.order.size(); ++i) {
    if (marking.order[i].kind == ElementKind::Floor) floor_at[marking.order[i].a] = i;
  }
  std::string out = header(width, height);
  std::map<std::pair<std::size_t, std::size_t>, int> seen;
  auto link = [&](std::size_t a, std::size_t b, int weight, bool below) {
    if (a > b) std::swap(a, b);
    const int level = seen[{a, b}]++;
    const bool adjacent = b == a + 1;
    out += connector(x_of(a), x_of(b), base, style.arc_rise, adjacent ? level : level + 1, style.label_size, weight,
                     below);
  };
  for (std::size_t i = 0; i < marking.order.size(); ++i) {
    const auto& label = marking.order[i];
    if (label.kind == ElementKind::Midpoint) {
      link(floor_at.at(label.a), i, label.weight, false);
      link(i, floor_at.at(label.b), label.weight, true);
    } else if (label.kind == ElementKind::Sink) {
      link(floor_at.at(label.a), i, label.weight, false);
    }
  }
  for (std::size_t i = 0; i < marking.order.size(); ++i) {
    out += circle(x_of(i), base, style.node_radius / 2 + 2, marking.order[i].kind != ElementKind::Floor);
  }
  out += "</svg>\n";
  return out;
}

std::string render_sketch_svg(const TropicalCurveSketch& sketch, const SvgStyle& style) {
  const auto& pts = sketch.config.points;
  if (pts.empty()) throw DomainError("sketch has no configuration points");
  Rational xmin = pts.front().x, xmax = pts.back().x, ymin = pts.front().y, ymax = pts.back().y;
  const long n = static_cast<long>(pts.size());
  Rational padx = xmax > xmin ? Rational((xmax - xmin) / 4) : Rational(1);
  Rational pady = ymax > ymin ? Rational((ymax - ymin) / n) : Rational(1);
  for (const auto& floor : sketch.floors) {
    for (const auto& b : floor.breakpoints) {
      ymin = std::min(ymin, b.y);
      ymax = std::max(ymax, b.y);
    }
  }
  const Rational left = xmin - padx, right = xmax + padx, bottom = ymin - pady, top = ymax + pady;
  const Rational sx = Rational(style.curve_width - 2 * style.margin) / (right - left);
  const Rational sy = Rational(style.curve_height - 2 * style.margin) / (top - bottom);
  auto X = [&](const Rational& x) { return fixed2(Rational(style.margin) + (x - left) * sx); };
  auto Y = [&](const Rational& y) { return fixed2(Rational(style.margin) + (top - y) * sy); };

  std::string out = header(style.curve_width, style.curve_height);
  for (const auto& floor : sketch.floors) {
    out += "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
    out += X(left) + "," + Y(floor.value_at(left));
    for (const auto& b : floor.breakpoints) out += " " + X(b.x) + "," + Y(b.y);
    out += " " + X(right) + "," + Y(floor.value_at(right)) + "\"/>\n";
  }
  for (const auto& e : sketch.elevators) {
    const Rational low = e.y_bottom ? *e.y_bottom : bottom;
    out += "<line x1=\"" + X(e.x) + "\" y1=\"" + Y(e.y_top) + "\" x2=\"" + X(e.x) + "\" y2=\"" + Y(low) +
           "\" stroke=\"" + std::string(e.bottom_floor ? "darkred" : "green") + "\" stroke-width=\"" +
           std::to_string(1 + e.weight) + "\"/>\n";
    if (e.weight != 1) {
      const Rational mid = (e.y_top + low) / 2;
      out += text(X(e.x + padx / 8), Y(mid), style.label_size, std::to_string(e.weight));
    }
  }
  std::vector<bool> white(pts.size(), false);
  for (const auto& floor : sketch.floors) white[floor.point] = true;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    out += "<circle cx=\"" + X(pts[i].x) + "\" cy=\"" + Y(pts[i].y) + "\" r=\"" + fixed2(style.node_radius / 2) +
           "\" fill=\"" + (white[i] ? "white" : "black") + "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open " + path.string() + " for writing");
  file << content;
  if (!file) throw IoError("failed writing " + path.string());
}

}  // namespace floordiag
