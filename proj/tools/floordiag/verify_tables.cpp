#include <iostream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "floordiag/diagram.hpp"
#include "floordiag/enumeration.hpp"
#include "floordiag/golden.hpp"
#include "floordiag/invariants.hpp"
#include "floordiag/markings.hpp"
#include "floordiag/sequences.hpp"

namespace floordiag::cli {

namespace {

struct Mismatch {
  std::string where;
  std::string expected;
  std::string actual;
};

struct SuiteResult {
  std::string suite;
  int checked = 0;
  std::vector<Mismatch> mismatches;

  void compare(std::string where, const std::string& expected, const std::string& actual) {
    ++checked;
    if (expected != actual) mismatches.push_back({std::move(where), expected, actual});
  }
};

Json load(const char* name) { return Json::parse(golden_table(name)); }

std::string at(int d, const char* key, int value) {
  return "d=" + std::to_string(d) + " " + key + "=" + std::to_string(value);
}

SuiteResult verify_gw(int max_d) {
  SuiteResult r{"gw"};
  const Json table = load("gw_table");
  for (const auto& e : table["entries"]) {
    const int d = e["d"].get<int>(), g = e["g"].get<int>();
    if (d <= max_d) r.compare(at(d, "g", g), e["value"].get<std::string>(), dec(gw(d, g)));
  }
  return r;
}

SuiteResult verify_severi(int max_d) {
  SuiteResult r{"severi"};
  const Json table = load("severi_table");
  for (const auto& e : table["entries"]) {
    const int d = e["d"].get<int>(), delta = e["delta"].get<int>();
    if (d <= max_d) r.compare(at(d, "delta", delta), e["value"].get<std::string>(), dec(severi(d, delta)));
  }
  return r;
}

SuiteResult verify_relative() {
  SuiteResult r{"relative"};
  const Json table = load("relative_d3");
  std::vector<FloorDiagram> diagrams;
  for (const auto& text : table["diagrams"]) diagrams.push_back(FloorDiagram::parse(text.get<std::string>()));
  const int d = table["d"].get<int>();
  for (const auto& column : table["columns"]) {
    const Partition lambda = Partition::parse(column["lambda"].get<std::string>());
    const Partition rho = Partition::parse(column["rho"].get<std::string>());
    const std::string tag = "lambda=" + lambda.to_string() + " rho=" + rho.to_string();
    for (std::size_t i = 0; i < diagrams.size(); ++i) {
      const auto& cell = column["cells"][i];
      const std::string where = tag + " diagram " + std::to_string(i + 1);
      r.compare(where + " mu_rho", cell["mu_rho"].get<std::string>(), dec(diagrams[i].multiplicity() * rho.product()));
      r.compare(where + " nu", cell["nu"].get<std::string>(), dec(count_relative_markings(diagrams[i], lambda, rho)));
    }
    r.compare(tag + " total", column["total"].get<std::string>(), dec(relative_gw(d, 0, lambda, rho)));
  }
  for (const auto& e : table["genus1"]) {
    const Partition lambda = Partition::parse(e["lambda"].get<std::string>());
    const Partition rho = Partition::parse(e["rho"].get<std::string>());
    r.compare("genus 1 lambda=" + lambda.to_string() + " rho=" + rho.to_string(), e["value"].get<std::string>(),
              dec(relative_gw(d, 1, lambda, rho)));
  }
  return r;
}

SuiteResult verify_max_tangency(int max_d) {
  SuiteResult r{"max-tangency"};
  const auto fixed = max_tangency_table(max_d);
  const Json table = load("max_tangency");
  for (const auto& e : table["entries"]) {
    const int d = e["d"].get<int>();
    if (d > max_d) continue;
    r.compare("d=" + std::to_string(d) + " fixed", e["fixed"].get<std::string>(), dec(fixed[d - 1]));
    r.compare("d=" + std::to_string(d) + " free", e["free"].get<std::string>(), dec(d * fixed[d - 1]));
  }
  return r;
}

SuiteResult verify_small_diagrams() {
  SuiteResult r{"small-diagrams"};
  const Json table = load("small_diagrams");
  for (const auto& c : table["counts"]) {
    const int d = c["d"].get<int>(), g = c["g"].get<int>();
    r.compare(at(d, "g", g) + " count", std::to_string(c["count"].get<int>()), dec(count_connected(d, g)));
  }
  for (const auto& e : table["entries"]) {
    const std::string text = e["diagram"].get<std::string>();
    const FloorDiagram diagram = FloorDiagram::parse(text);
    r.compare(text + " mu", e["mu"].get<std::string>(), dec(diagram.multiplicity()));
    r.compare(text + " nu", e["nu"].get<std::string>(), dec(count_markings(diagram)));
    if (e.contains("tree")) r.compare(text + " tree", e["tree"].get<std::string>(), diagram_to_tree(diagram).to_string());
  }
  return r;
}

}  // namespace

void register_verify_tables(CLI::App& app, Context& ctx) {
  struct Args {
    std::string suite = "all";
    int max_d = 5;
  };
  auto args = std::make_shared<Args>();
  auto* cmd = app.add_subcommand("verify-tables", "Recompute the shipped reference tables and report differences");
  cmd->add_option("--suite", args->suite, "Which table to check")
      ->check(CLI::IsMember({"gw", "severi", "relative", "max-tangency", "small-diagrams", "all"}));
  cmd->add_option("--max-d", args->max_d, "Largest degree for the gw, severi and max-tangency suites")
      ->check(CLI::Range(1, 16));
  cmd->callback([args, &ctx] {
    ctx.action = [args, &ctx] {
      ctx.require_format({"text", "json"});
      const bool all = args->suite == "all";
      std::vector<SuiteResult> results;
      auto wants = [&](const char* name) { return all || args->suite == name; };
      if (wants("gw")) results.push_back(verify_gw(std::min(args->max_d, 6)));
      if (wants("severi")) results.push_back(verify_severi(std::min(args->max_d, 6)));
      if (wants("relative")) results.push_back(verify_relative());
      if (wants("max-tangency")) results.push_back(verify_max_tangency(all ? 16 : args->max_d));
      if (wants("small-diagrams")) results.push_back(verify_small_diagrams());

      bool ok = true;
      for (const auto& r : results) ok = ok && r.mismatches.empty();
      if (ctx.json()) {
        Json suites = Json::array();
        for (const auto& r : results) {
          Json diffs = Json::array();
          for (const auto& m : r.mismatches) {
            diffs.push_back(Json{{"where", m.where}, {"expected", m.expected}, {"actual", m.actual}});
          }
          suites.push_back(Json{{"suite", r.suite},
                                {"checked", std::to_string(r.checked)},
                                {"ok", r.mismatches.empty()},
                                {"mismatches", std::move(diffs)}});
        }
        ctx.emit(Json{{"command", "verify-tables"}, {"ok", ok}, {"suites", std::move(suites)}});
      } else {
        for (const auto& r : results) {
          for (const auto& m : r.mismatches) {
            *ctx.out << "MISMATCH " << r.suite << ' ' << m.where << ": expected " << m.expected << ", got "
                     << m.actual << '\n';
          }
          *ctx.out << r.suite << ": " << r.checked - static_cast<int>(r.mismatches.size()) << '/' << r.checked
                   << " match\n";
        }
        *ctx.out << (ok ? "OK" : "FAILED") << '\n';
      }
      return ok ? 0 : 1;
    };
  });
}

}  // namespace floordiag::cli
