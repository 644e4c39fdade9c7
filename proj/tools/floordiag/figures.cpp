#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "commands.hpp"
#include "floordiag/diagram.hpp"
#include "floordiag/errors.hpp"
#include "floordiag/markings.hpp"
#include "floordiag/svg.hpp"
#include "floordiag/tropical.hpp"

namespace floordiag::cli {

namespace {

Json report_json(const CurveReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return Json{{"ok", report.ok()}, {"degree", report.degree}, {"genus", report.genus}, {"checks", std::move(checks)}};
}

void print_report(std::ostream& out, const CurveReport& report) {
  for (const auto& c : report.checks) {
    out << (c.passed ? "  ok   " : "  FAIL ") << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << '\n';
  }
}

bool round_trips(const GalleryEntry& entry) {
  const auto [diagram, marking] = extract_marking(entry.sketch);
  return diagram == entry.diagram && marking == entry.marking;
}

}  // namespace

void register_tropical(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("tropical", "Tropical curves through vertically stretched points");
  cmd->require_subcommand(1, 1);

  struct ReconstructArgs {
    std::string diagram;
    std::string marking;
    std::uint64_t seed = 0;
    std::string svg;
  };
  auto rargs = std::make_shared<ReconstructArgs>();
  auto* rec = cmd->add_subcommand("reconstruct", "Build the curve of one marked diagram and verify it");
  rec->add_option("--diagram", rargs->diagram, "Diagram text")->required();
  rec->add_option("--marking", rargs->marking, "Marking labels from the highest point down")->required();
  rec->add_option("--config", rargs->seed, "Configuration seed; 0 means evenly spaced x");
  rec->add_option("--svg", rargs->svg, "Write an SVG drawing of the curve here");
  rec->callback([rargs, &ctx] {
    ctx.action = [rargs, &ctx] {
      ctx.require_format({"text", "json"});
      const FloorDiagram diagram = FloorDiagram::parse(rargs->diagram);
      const Marking marking = Marking::parse(rargs->marking);
      const StretchedConfig config = stretched_config(diagram.degree(), diagram.genus(), rargs->seed);
      const GalleryEntry entry{diagram, marking, reconstruct(diagram, marking, config)};
      const CurveReport report = verify_curve(entry.sketch, diagram.degree(), diagram.genus());
      const bool round_trip = round_trips(entry);
      if (!rargs->svg.empty()) write_text_file(rargs->svg, render_sketch_svg(entry.sketch));
      if (ctx.json()) {
        Json doc{{"command", "tropical"},
                 {"mode", "reconstruct"},
                 {"diagram", diagram.to_text()},
                 {"marking", marking.to_string()},
                 {"seed", std::to_string(rargs->seed)},
                 {"skeleton", skeleton(entry.sketch)},
                 {"round_trip", round_trip},
                 {"report", report_json(report)}};
        ctx.emit(doc);
      } else {
        *ctx.out << skeleton(entry.sketch);
        print_report(*ctx.out, report);
        *ctx.out << "round trip: " << (round_trip ? "ok" : "FAIL") << '\n';
      }
      return report.ok() && round_trip ? 0 : 1;
    };
  });

  struct GalleryArgs {
    int d = 3;
    int g = 0;
    std::uint64_t seed = 0;
    std::string out;
  };
  auto gargs = std::make_shared<GalleryArgs>();
  auto* gal = cmd->add_subcommand("gallery", "Every curve of a given degree and genus through one configuration");
  gal->add_option("--d", gargs->d, "Degree")->required()->check(CLI::Range(1, 6));
  gal->add_option("--g", gargs->g, "Genus")->check(CLI::Range(0, kMaxDegree * kMaxDegree));
  gal->add_option("--config", gargs->seed, "Configuration seed");
  gal->add_option("--out", gargs->out, "Directory for one SVG per curve");
  gal->callback([gargs, &ctx] {
    ctx.action = [gargs, &ctx] {
      ctx.require_format({"text", "json"});
      const auto gallery = tropical_gallery(gargs->d, gargs->g, gargs->seed);
      const std::filesystem::path dir = gargs->out;
      if (!gargs->out.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
      }
      bool all_ok = true;
      Json entries = Json::array();
      for (std::size_t i = 0; i < gallery.size(); ++i) {
        const auto& entry = gallery[i];
        const CurveReport report = verify_curve(entry.sketch, gargs->d, gargs->g);
        const bool round_trip = round_trips(entry);
        all_ok = all_ok && report.ok() && round_trip;
        std::ostringstream name;
        name << "curve_" << std::setw(3) << std::setfill('0') << i + 1 << ".svg";
        if (!gargs->out.empty()) write_text_file(dir / name.str(), render_sketch_svg(entry.sketch));
        if (ctx.json()) {
          Json item{{"diagram", entry.diagram.to_text()},
                    {"marking", entry.marking.to_string()},
                    {"ok", report.ok()},
                    {"round_trip", round_trip}};
          if (!gargs->out.empty()) item["svg"] = name.str();
          entries.push_back(std::move(item));
        } else {
          *ctx.out << i + 1 << '\t' << (report.ok() && round_trip ? "ok" : "FAIL") << '\t'
                   << entry.diagram.to_text() << '\t' << entry.marking.to_string() << '\n';
          if (!report.ok()) print_report(*ctx.out, report);
        }
      }
      if (ctx.json()) {
        ctx.emit(Json{{"command", "tropical"},
                      {"mode", "gallery"},
                      {"d", gargs->d},
                      {"g", gargs->g},
                      {"count", std::to_string(gallery.size())},
                      {"curves", std::move(entries)}});
      } else {
        *ctx.out << gallery.size() << " curves\n";
      }
      return all_ok ? 0 : 1;
    };
  });
}

void register_render(CLI::App& app, Context& ctx) {
  struct Args {
    std::string diagram;
    std::string marking;
    bool curve = false;
    std::uint64_t seed = 0;
    std::string out;
  };
  auto args = std::make_shared<Args>();
  auto* cmd = app.add_subcommand("render", "Draw a diagram, a marked diagram or its tropical curve as SVG");
  cmd->add_option("--diagram", args->diagram, "Diagram text")->required();
  cmd->add_option("--marking", args->marking, "Draw this marking instead of the bare diagram");
  auto* curve = cmd->add_flag("--curve", args->curve, "Draw the tropical curve of the marking");
  cmd->add_option("--config", args->seed, "Configuration seed for --curve");
  cmd->add_option("--out", args->out, "Output file; stdout when omitted");
  cmd->callback([args, &ctx, curve] {
    ctx.action = [args, &ctx, curve] {
      ctx.require_format({"text", "svg"});
      if (curve->count() > 0 && args->marking.empty()) throw UsageError("--curve needs --marking");
      const FloorDiagram diagram = FloorDiagram::parse(args->diagram);
      std::string svg;
      if (args->marking.empty()) {
        svg = render_diagram_svg(diagram);
      } else {
        const Marking marking = Marking::parse(args->marking);
        if (args->curve) {
          const auto config = stretched_config(diagram.degree(), diagram.genus(), args->seed);
          svg = render_sketch_svg(reconstruct(diagram, marking, config));
        } else {
          svg = render_marking_svg(diagram, marking);
        }
      }
      if (args->out.empty()) {
        *ctx.out << svg;
      } else {
        write_text_file(args->out, svg);
      }
      return 0;
    };
  });
}

}  // namespace floordiag::cli
