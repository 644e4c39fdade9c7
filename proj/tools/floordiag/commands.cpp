#include "commands.hpp"

#include <algorithm>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "floordiag/diagram.hpp"
#include "floordiag/enumeration.hpp"
#include "floordiag/errors.hpp"
#include "floordiag/invariants.hpp"
#include "floordiag/markings.hpp"
#include "floordiag/node_polynomials.hpp"
#include "floordiag/sequences.hpp"

namespace floordiag::cli {

void Context::require_format(std::initializer_list<const char*> allowed) const {
  std::string names;
  for (const char* name : allowed) {
    if (format == name) return;
    names += names.empty() ? name : std::string(", ") + name;
  }
  throw UsageError("format '" + format + "' is not available here (choose from " + names + ")");
}

std::string partition_arg(const Partition& p) {
  if (p.empty()) return "-";
  std::string out;
  for (int part : p.parts()) out += (out.empty() ? "" : ",") + std::to_string(part);
  return out;
}

void Context::emit(const Json& document) const { *out << document.dump(2) << '\n'; }

void Context::note(const std::string& message) const {
  if (verbosity > 0) *err << message << '\n';
}

namespace {

Json diagram_json(const FloorDiagram& diagram) {
  Json edges = Json::array();
  for (const auto& e : diagram.edges()) edges.push_back(Json::array({e.src, e.tgt, e.weight}));
  return Json{{"d", diagram.degree()}, {"edges", std::move(edges)}};
}

}  // namespace

void register_enumerate(CLI::App& app, Context& ctx) {
  struct Args {
    int d = 1;
    std::optional<int> genus;
    std::optional<int> delta;
    std::string filter;
    bool count_only = false;
  };
  auto args = std::make_shared<Args>();
  auto* cmd = app.add_subcommand("enumerate", "List labeled floor diagrams in canonical order");
  cmd->add_option("--d", args->d, "Degree")->required()->check(CLI::Range(1, kMaxDegree));
  auto* g = cmd->add_option("--genus,--g", args->genus, "Genus of connected diagrams")->check(CLI::Range(0, kMaxDegree * kMaxDegree));
  auto* c = cmd->add_option("--delta", args->delta, "Cogenus; includes disconnected diagrams")
                ->check(CLI::Range(0, kMaxDegree * kMaxDegree));
  g->excludes(c);
  cmd->add_option("--filter", args->filter,
                  "Terms joined by '+': odd, simple, maxw=N, heavy=N, sinks=N, contains=(a,b,w)...");
  cmd->add_flag("--count", args->count_only, "Print only the number of diagrams");
  cmd->callback([args, &ctx] {
    ctx.action = [args, &ctx] {
      ctx.require_format({"text", "json", "jsonl"});
      if (!args->genus && !args->delta) throw UsageError("enumerate needs --genus or --delta");
      DiagramFilter filter = DiagramFilter::parse(args->filter);
      DiagramQuery query = args->genus ? DiagramQuery::connected(args->d, *args->genus, filter)
                                       : DiagramQuery::with_cogenus(args->d, *args->delta, filter);
      const auto diagrams = DiagramStore::global().get(query);
      ctx.note("enumerated " + std::to_string(diagrams->size()) + " diagrams for " + query.key());
      if (ctx.format == "json") {
        Json list = Json::array();
        if (!args->count_only) {
          for (const auto& diagram : *diagrams) list.push_back(diagram.to_text());
        }
        Json doc{{"command", "enumerate"}, {"d", args->d}};
        if (args->genus) doc["genus"] = *args->genus;
        if (args->delta) doc["delta"] = *args->delta;
        doc["filter"] = filter.key();
        doc["count"] = std::to_string(diagrams->size());
        doc["diagrams"] = std::move(list);
        ctx.emit(doc);
      } else if (args->count_only) {
        *ctx.out << diagrams->size() << '\n';
      } else {
        for (const auto& diagram : *diagrams) {
          *ctx.out << (ctx.format == "jsonl" ? diagram_json(diagram).dump() : diagram.to_text()) << '\n';
        }
      }
      return 0;
    };
  });
}

void register_markings(CLI::App& app, Context& ctx) {
  struct Args {
    std::string diagram;
    std::string lambda = "-";
    std::string rho = "-";
    bool list = false;
  };
  auto args = std::make_shared<Args>();
  auto* cmd = app.add_subcommand("markings", "Count (and optionally list) the markings of one diagram");
  cmd->add_option("--diagram", args->diagram, "Diagram in canonical text or JSON form")->required();
  cmd->add_option("--lambda", args->lambda, "Tangency partition at fixed points, e.g. 2,1 ('-' for none)");
  cmd->add_option("--rho", args->rho, "Tangency partition at free points ('-' for none)");
  cmd->add_flag("--list", args->list, "Print every marking as a sequence of element labels");
  cmd->callback([args, &ctx] {
    ctx.action = [args, &ctx] {
      ctx.require_format({"text", "json"});
      const FloorDiagram diagram = FloorDiagram::parse(args->diagram);
      const Partition lambda = Partition::parse(args->lambda);
      const Partition rho = Partition::parse(args->rho);
      const bool ordinary = lambda.empty() && rho.empty();
      const BigInt count =
          ordinary ? count_markings(diagram) : count_relative_markings(diagram, lambda, rho);
      std::vector<Marking> list;
      if (args->list) list = ordinary ? enumerate_markings(diagram) : enumerate_markings(diagram, lambda, rho);
      if (ctx.json()) {
        Json doc{{"command", "markings"},
                 {"diagram", diagram.to_text()},
                 {"lambda", partition_arg(lambda)},
                 {"rho", partition_arg(rho)},
                 {"multiplicity", dec(diagram.multiplicity() * (ordinary ? BigInt(1) : rho.product()))},
                 {"count", dec(count)}};
        if (args->list) {
          Json items = Json::array();
          for (const auto& m : list) items.push_back(m.to_string());
          doc["markings"] = std::move(items);
        }
        ctx.emit(doc);
      } else {
        *ctx.out << dec(count) << '\n';
        for (const auto& m : list) *ctx.out << m.to_string() << '\n';
      }
      return 0;
    };
  });
}

namespace {

struct TableCell {
  int d;
  int k;
  BigInt value;
};

void print_table(const Context& ctx, const std::string& name, const char* param, int max_k,
                 const std::vector<TableCell>& cells, int max_d) {
  if (ctx.json()) {
    Json rows = Json::array();
    for (const auto& cell : cells) rows.push_back(Json{{"d", cell.d}, {param, cell.k}, {"value", dec(cell.value)}});
    ctx.emit(Json{{"command", "invariant"}, {"invariant", name}, {"table", std::move(rows)}});
    return;
  }
  *ctx.out << param;
  for (int d = 1; d <= max_d; ++d) *ctx.out << ",d=" << d;
  *ctx.out << '\n';
  for (int k = 0; k <= max_k; ++k) {
    *ctx.out << k;
    for (int d = 1; d <= max_d; ++d) {
      const auto it = std::find_if(cells.begin(), cells.end(), [&](const TableCell& c) { return c.d == d && c.k == k; });
      *ctx.out << ',' << (it == cells.end() ? std::string() : dec(it->value));
    }
    *ctx.out << '\n';
  }
}

void print_value(const Context& ctx, const std::string& name, Json params, const BigInt& value) {
  if (ctx.json()) {
    Json doc{{"command", "invariant"}, {"invariant", name}};
    for (auto& [key, v] : params.items()) doc[key] = v;
    doc["value"] = dec(value);
    ctx.emit(doc);
  } else {
    *ctx.out << dec(value) << '\n';
  }
}

}  // namespace

void register_invariant(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("invariant", "Compute one enumerative invariant or a whole table");
  cmd->require_subcommand(1, 1);

  struct Args {
    int d = 1;
    int g = 0;
    int delta = 0;
    std::string lambda = "-";
    std::string rho = "-";
    bool table = false;
    int max_d = 5;
    int max_k = 6;
  };
  auto args = std::make_shared<Args>();

  auto table_options = [&](CLI::App* sub, const char* bound_name) {
    sub->add_flag("--table", args->table, "Print the table for 1 <= d <= max-d as CSV");
    sub->add_option("--max-d", args->max_d, "Largest degree in --table mode")->check(CLI::Range(1, 8));
    sub->add_option(bound_name, args->max_k, "Largest genus or cogenus in --table mode")->check(CLI::Range(0, 12));
  };

  auto* gw_cmd = cmd->add_subcommand("gw", "Genus g plane curves of degree d through 3d-1+g points");
  auto* gw_d = gw_cmd->add_option("--d", args->d, "Degree")->check(CLI::Range(1, kMaxDegree));
  auto* gw_g = gw_cmd->add_option("--g", args->g, "Genus")->check(CLI::Range(0, kMaxDegree * kMaxDegree));
  table_options(gw_cmd, "--max-g");
  gw_cmd->callback([args, &ctx, gw_d, gw_g] {
    ctx.action = [args, &ctx, gw_d, gw_g] {
      if (args->table) {
        ctx.require_format({"text", "csv", "json"});
        std::vector<TableCell> cells;
        for (int d = 1; d <= args->max_d; ++d) {
          for (int g = 0; g <= args->max_k; ++g) {
            ctx.note("gw d=" + std::to_string(d) + " g=" + std::to_string(g));
            cells.push_back({d, g, gw(d, g)});
          }
        }
        print_table(ctx, "gw", "g", args->max_k, cells, args->max_d);
        return 0;
      }
      ctx.require_format({"text", "json"});
      if (gw_d->count() == 0 || gw_g->count() == 0) throw UsageError("invariant gw needs --d and --g");
      print_value(ctx, "gw", Json{{"d", args->d}, {"g", args->g}}, gw(args->d, args->g));
      return 0;
    };
  });

  auto* sev_cmd = cmd->add_subcommand("severi", "Possibly reducible delta-nodal curves of degree d");
  auto* sev_d = sev_cmd->add_option("--d", args->d, "Degree")->check(CLI::Range(1, kMaxDegree));
  auto* sev_delta = sev_cmd->add_option("--delta", args->delta, "Number of nodes")->check(CLI::Range(0, kMaxDegree * kMaxDegree));
  table_options(sev_cmd, "--max-delta");
  sev_cmd->callback([args, &ctx, sev_d, sev_delta] {
    ctx.action = [args, &ctx, sev_d, sev_delta] {
      if (args->table) {
        ctx.require_format({"text", "csv", "json"});
        std::vector<TableCell> cells;
        for (int d = 1; d <= args->max_d; ++d) {
          for (int delta = 0; delta <= args->max_k; ++delta) {
            ctx.note("severi d=" + std::to_string(d) + " delta=" + std::to_string(delta));
            cells.push_back({d, delta, severi(d, delta)});
          }
        }
        print_table(ctx, "severi", "delta", args->max_k, cells, args->max_d);
        return 0;
      }
      ctx.require_format({"text", "json"});
      if (sev_d->count() == 0 || sev_delta->count() == 0) throw UsageError("invariant severi needs --d and --delta");
      print_value(ctx, "severi", Json{{"d", args->d}, {"delta", args->delta}}, severi(args->d, args->delta));
      return 0;
    };
  });

  auto* rel_cmd = cmd->add_subcommand("relative", "Curves with prescribed tangency to a fixed line");
  rel_cmd->add_option("--d", args->d, "Degree")->required()->check(CLI::Range(1, kMaxDegree));
  rel_cmd->add_option("--g", args->g, "Genus")->required()->check(CLI::Range(0, kMaxDegree * kMaxDegree));
  rel_cmd->add_option("--lambda", args->lambda, "Tangency orders at fixed points on the line ('-' for none)");
  rel_cmd->add_option("--rho", args->rho, "Tangency orders at free points on the line ('-' for none)");
  rel_cmd->callback([args, &ctx] {
    ctx.action = [args, &ctx] {
      ctx.require_format({"text", "json"});
      const Partition lambda = Partition::parse(args->lambda);
      const Partition rho = Partition::parse(args->rho);
      print_value(ctx, "relative",
                  Json{{"d", args->d}, {"g", args->g}, {"lambda", partition_arg(lambda)}, {"rho", partition_arg(rho)}},
                  relative_gw(args->d, args->g, lambda, rho));
      return 0;
    };
  });

  auto* wel_cmd = cmd->add_subcommand("welschinger", "Signed count of real rational curves through real points");
  wel_cmd->add_option("--d", args->d, "Degree")->required()->check(CLI::Range(1, kMaxDegree));
  wel_cmd->callback([args, &ctx] {
    ctx.action = [args, &ctx] {
      ctx.require_format({"text", "json"});
      print_value(ctx, "welschinger", Json{{"d", args->d}}, welschinger(args->d));
      return 0;
    };
  });
}

void register_nodepoly(CLI::App& app, Context& ctx) {
  struct Args {
    int delta = 1;
    std::vector<std::string> evaluate;
    bool aj = false;
  };
  auto args = std::make_shared<Args>();
  auto* cmd = app.add_subcommand("nodepoly", "Node polynomial in d for a fixed number of nodes");
  cmd->add_option("--delta", args->delta, "Number of nodes")->required()->check(CLI::Range(0, 8));
  cmd->add_option("--evaluate", args->evaluate, "Evaluate at d=N (repeatable)");
  cmd->add_flag("--aj", args->aj, "Also print the logarithmic coefficients A_1..A_delta");
  cmd->callback([args, &ctx] {
    ctx.action = [args, &ctx] {
      ctx.require_format({"text", "json"});
      std::vector<long> points;
      for (const auto& raw : args->evaluate) {
        std::string digits = raw.rfind("d=", 0) == 0 ? raw.substr(2) : raw;
        try {
          std::size_t used = 0;
          const long d = std::stol(digits, &used);
          if (used != digits.size() || d < 1) throw std::invalid_argument(raw);
          points.push_back(d);
        } catch (const std::logic_error&) {
          throw UsageError("--evaluate expects d=N with N >= 1, got '" + raw + "'");
        }
      }
      const NodePolynomial np = node_polynomial(args->delta);
      std::vector<RatPolynomial> aj;
      if (args->aj && args->delta > 0) aj = aj_polynomials(args->delta);
      if (ctx.json()) {
        Json coeffs = Json::array();
        for (const auto& c : np.polynomial.coefficients()) coeffs.push_back(frac(c));
        Json doc{{"command", "nodepoly"},
                 {"delta", args->delta},
                 {"polynomial", np.polynomial.to_string("d")},
                 {"coefficients", std::move(coeffs)},
                 {"threshold", np.threshold}};
        Json evals = Json::array();
        for (long d : points) evals.push_back(Json{{"d", d}, {"value", frac(np.polynomial(d))}});
        doc["evaluations"] = std::move(evals);
        if (args->aj) {
          Json list = Json::array();
          for (const auto& a : aj) list.push_back(a.to_string("d"));
          doc["aj"] = std::move(list);
        }
        ctx.emit(doc);
        return 0;
      }
      *ctx.out << "N_" << args->delta << "(d) = " << np.polynomial.to_string("d") << '\n';
      *ctx.out << "valid for d >= " << np.threshold << '\n';
      for (long d : points) {
        *ctx.out << "N_" << args->delta << '(' << d << ") = " << frac(np.polynomial(d));
        if (d < np.threshold) *ctx.out << "  (below threshold)";
        *ctx.out << '\n';
      }
      for (std::size_t j = 0; j < aj.size(); ++j) {
        *ctx.out << "A_" << j + 1 << "(d) = " << aj[j].to_string("d") << '\n';
      }
      return 0;
    };
  });
}

void register_sequence(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("sequence", "Maximal-tangency counts and their generating function");
  cmd->require_subcommand(1, 1);

  auto max_d = std::make_shared<int>(16);
  auto* z = cmd->add_subcommand("z", "Rational curves maximally tangent to a line at a fixed or free point");
  z->add_option("--max-d", *max_d, "Largest degree")->check(CLI::Range(1, 64));
  z->callback([max_d, &ctx] {
    ctx.action = [max_d, &ctx] {
      ctx.require_format({"text", "csv", "json"});
      const auto fixed = max_tangency_table(*max_d);
      if (ctx.json()) {
        Json rows = Json::array();
        for (int d = 1; d <= *max_d; ++d) {
          rows.push_back(Json{{"d", d}, {"fixed", dec(fixed[d - 1])}, {"free", dec(d * fixed[d - 1])}});
        }
        ctx.emit(Json{{"command", "sequence"}, {"sequence", "z"}, {"rows", std::move(rows)}});
      } else {
        *ctx.out << "d,fixed,free\n";
        for (int d = 1; d <= *max_d; ++d) *ctx.out << d << ',' << dec(fixed[d - 1]) << ',' << dec(d * fixed[d - 1]) << '\n';
      }
      return 0;
    };
  });

  auto order = std::make_shared<int>(8);
  auto* ode = cmd->add_subcommand("ode-check", "Check the differential equation of the generating function");
  ode->add_option("--order", *order, "Number of series coefficients")->check(CLI::Range(1, 40));
  ode->callback([order, &ctx] {
    ctx.action = [order, &ctx] {
      ctx.require_format({"text", "json"});
      const auto series = ode_series(*order);
      const auto residual = ode_residual(*order);
      const bool ok = std::all_of(residual.begin(), residual.end(), [](const Rational& r) { return r == 0; });
      if (ctx.json()) {
        Json ys = Json::array();
        Json rs = Json::array();
        for (const auto& y : series) ys.push_back(frac(y));
        for (const auto& r : residual) rs.push_back(frac(r));
        ctx.emit(Json{{"command", "sequence"},
                      {"sequence", "ode-check"},
                      {"order", *order},
                      {"series", std::move(ys)},
                      {"residual", std::move(rs)},
                      {"ok", ok}});
      } else {
        for (std::size_t n = 0; n < series.size(); ++n) *ctx.out << "y_" << n << " = " << frac(series[n]) << '\n';
        *ctx.out << (ok ? "OK residual vanishes through order " : "FAIL residual nonzero below order ") << *order
                 << '\n';
      }
      return ok ? 0 : 1;
    };
  });
}

void register_bijection(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("bijection", "Genus-zero diagrams versus labeled trees");
  cmd->require_subcommand(1, 1);

  auto diagram_text = std::make_shared<std::string>();
  auto* to_tree = cmd->add_subcommand("to-tree", "Map a genus-zero diagram to its labeled tree");
  to_tree->add_option("--diagram", *diagram_text, "Diagram text")->required();
  to_tree->callback([diagram_text, &ctx] {
    ctx.action = [diagram_text, &ctx] {
      ctx.require_format({"text", "json"});
      const FloorDiagram diagram = FloorDiagram::parse(*diagram_text);
      const LabeledTree tree = diagram_to_tree(diagram);
      if (ctx.json()) {
        ctx.emit(Json{{"command", "bijection"},
                      {"direction", "to-tree"},
                      {"diagram", diagram.to_text()},
                      {"tree", tree.to_string()}});
      } else {
        *ctx.out << tree.to_string() << '\n';
      }
      return 0;
    };
  });

  auto tree_text = std::make_shared<std::string>();
  auto* to_diagram = cmd->add_subcommand("to-diagram", "Map a labeled tree to its genus-zero diagram");
  to_diagram->add_option("--tree", *tree_text, "Tree text, e.g. 'd=3; edges=(1,3);(2,3)'")->required();
  to_diagram->callback([tree_text, &ctx] {
    ctx.action = [tree_text, &ctx] {
      ctx.require_format({"text", "json"});
      const LabeledTree tree = LabeledTree::parse(*tree_text);
      const FloorDiagram diagram = tree_to_diagram(tree);
      if (ctx.json()) {
        ctx.emit(Json{{"command", "bijection"},
                      {"direction", "to-diagram"},
                      {"diagram", diagram.to_text()},
                      {"tree", tree.to_string()}});
      } else {
        *ctx.out << diagram.to_text() << '\n';
      }
      return 0;
    };
  });
}

void register_counts(CLI::App& app, Context& ctx) {
  struct Args {
    int d = 6;
    bool underlying = false;
  };
  auto args = std::make_shared<Args>();
  auto* cmd = app.add_subcommand("counts", "Closed-form diagram counts next to direct enumeration");
  cmd->add_option("--d", args->d, "Largest degree")->check(CLI::Range(1, 30));
  cmd->add_flag("--underlying", args->underlying, "Also compare underlying trees with alternating trees (d <= 8)");
  cmd->callback([args, &ctx] {
    ctx.action = [args, &ctx] {
      ctx.require_format({"text", "csv", "json"});
      auto opt = [](const std::optional<BigInt>& v) { return v ? dec(*v) : std::string(); };
      std::vector<ClosedCounts> rows;
      for (int d = 1; d <= args->d; ++d) rows.push_back(closed_counts(d));
      std::vector<UnderlyingTreeReport> reports;
      if (args->underlying) {
        for (int d = 1; d <= std::min(args->d, 8); ++d) reports.push_back(underlying_tree_report(d));
      }
      if (ctx.json()) {
        Json list = Json::array();
        for (const auto& r : rows) {
          Json row{{"d", r.d},
                   {"cayley", dec(r.cayley)},
                   {"alternating", dec(r.alternating)},
                   {"odd", dec(r.odd)},
                   {"multiplicity_free", dec(r.multiplicity_free)}};
          if (r.enumerated_genus0) row["enumerated_genus0"] = dec(*r.enumerated_genus0);
          if (r.enumerated_odd) row["enumerated_odd"] = dec(*r.enumerated_odd);
          if (r.enumerated_multiplicity_free) row["enumerated_multiplicity_free"] = dec(*r.enumerated_multiplicity_free);
          list.push_back(std::move(row));
        }
        Json doc{{"command", "counts"}, {"rows", std::move(list)}};
        if (args->underlying) {
          Json ut = Json::array();
          for (const auto& r : reports) {
            ut.push_back(Json{{"d", r.d},
                              {"underlying_trees", dec(r.underlying_trees)},
                              {"alternating_trees", dec(r.alternating_trees)},
                              {"equal", r.equal}});
          }
          doc["underlying"] = std::move(ut);
        }
        ctx.emit(doc);
        return 0;
      }
      *ctx.out << "d,cayley,alternating,odd,multiplicity_free,enumerated_genus0,enumerated_odd,"
                  "enumerated_multiplicity_free\n";
      for (const auto& r : rows) {
        *ctx.out << r.d << ',' << dec(r.cayley) << ',' << dec(r.alternating) << ',' << dec(r.odd) << ','
                 << dec(r.multiplicity_free) << ',' << opt(r.enumerated_genus0) << ',' << opt(r.enumerated_odd) << ','
                 << opt(r.enumerated_multiplicity_free) << '\n';
      }
      if (!reports.empty()) {
        *ctx.out << "\nd,underlying_trees,alternating_trees,equal\n";
        for (const auto& r : reports) {
          *ctx.out << r.d << ',' << dec(r.underlying_trees) << ',' << dec(r.alternating_trees) << ','
                   << (r.equal ? "yes" : "no") << '\n';
        }
      }
      return 0;
    };
  });
}

}  // namespace floordiag::cli
