#include <cstdlib>
#include <iostream>

#include "commands.hpp"
#include "floordiag/enumeration.hpp"
#include "floordiag/errors.hpp"
#include "floordiag/invariants.hpp"

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

int run(int argc, char** argv) {
  using namespace floordiag::cli;
  Context ctx;
  ctx.out = &std::cout;
  ctx.err = &std::cerr;

  CLI::App app{"Exact floor-diagram enumeration and plane-curve counts", "floordiag"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.set_version_flag("--version", "floordiag 0.1.0");
  app.option_defaults()->always_capture_default();
  app.add_option("--format", ctx.format, "Output format; each command accepts a subset")
      ->check(CLI::IsMember({"text", "json", "jsonl", "csv", "svg"}));
  app.add_option("--cache-dir", ctx.cache_dir, "Diagram cache directory (overrides FLOORDIAG_CACHE_DIR)");
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads (overrides FLOORDIAG_THREADS)")->check(CLI::PositiveNumber);
  app.add_flag("-v,--verbose", ctx.verbosity, "Print progress notes on stderr");

  register_enumerate(app, ctx);
  register_markings(app, ctx);
  register_invariant(app, ctx);
  register_nodepoly(app, ctx);
  register_sequence(app, ctx);
  register_bijection(app, ctx);
  register_counts(app, ctx);
  register_tropical(app, ctx);
  register_render(app, ctx);
  register_verify_tables(app, ctx);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (!ctx.cache_dir.empty()) floordiag::DiagramStore::global().set_cache_dir(ctx.cache_dir);
    if (threads > 0) floordiag::set_worker_threads(threads);
    if (!ctx.action) throw UsageError("no command selected");
    return ctx.action();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\nRun with --help for more information.\n";
    return kExitUsage;
  } catch (const floordiag::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const floordiag::RefusalError& e) {
    std::cerr << "refused: " << e.what() << '\n';
  } catch (const floordiag::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
  }
  return kExitDomain;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
