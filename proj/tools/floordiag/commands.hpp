#pragma once

#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "floordiag/arith.hpp"
#include "floordiag/diagram.hpp"

namespace floordiag::cli {

using Json = nlohmann::ordered_json;

// Upper bound accepted on the command line; real limits are enforced by the library.
inline constexpr int kMaxDegree = 64;

// Raised for argument combinations CLI11 cannot express; maps to exit 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Context {
  std::string format = "text";
  int verbosity = 0;
  std::string cache_dir;
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;
  // Set by whichever subcommand was selected; run after parsing succeeds.
  std::function<int()> action;

  void require_format(std::initializer_list<const char*> allowed) const;
  bool json() const { return format == "json"; }
  void emit(const Json& document) const;
  void note(const std::string& message) const;
};

inline std::string dec(const BigInt& value) { return value.get_str(); }
inline std::string frac(const Rational& value) { return value.get_str(); }

// Same spelling the --lambda/--rho options accept: "2,1", or "-" when empty.
std::string partition_arg(const Partition& p);

void register_enumerate(CLI::App& app, Context& ctx);
void register_markings(CLI::App& app, Context& ctx);
void register_invariant(CLI::App& app, Context& ctx);
void register_nodepoly(CLI::App& app, Context& ctx);
void register_sequence(CLI::App& app, Context& ctx);
void register_bijection(CLI::App& app, Context& ctx);
void register_counts(CLI::App& app, Context& ctx);
void register_tropical(CLI::App& app, Context& ctx);
void register_render(CLI::App& app, Context& ctx);
void register_verify_tables(CLI::App& app, Context& ctx);

}  // namespace floordiag::cli
