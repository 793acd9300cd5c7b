#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vortex/chambers.hpp"
#include "vortex/error.hpp"
#include "vortex/exactmath.hpp"
#include "vortex/pairs.hpp"

namespace vortex::cli {

inline constexpr int kSchemaVersion = 1;

enum class ExitCode : int { ok = 0, failure = 1, usage = 2 };

enum class Verb { chambers, strata, wall_report, flip_chain, pair_eval, poincare };
enum class Format { json, markdown };
enum class PoincareKind { sym, jac, proj };

std::string to_string(Verb verb);

class UsageError : public Error {
 public:
  using Error::Error;
};

/// --help or --version; what() holds the text to print before exiting 0.
class HelpRequested : public Error {
 public:
  using Error::Error;
};

struct Command {
  Verb verb = Verb::chambers;
  ModuliInput input;
  std::optional<Rational> wall;
  std::optional<std::string> pair_file;
  Format format = Format::json;
  std::optional<std::string> output;
  PoincareKind poincare_kind = PoincareKind::sym;
  int poincare_n = 0;
};

/// argv without the program name. Throws UsageError or HelpRequested.
Command parse_cli(const std::vector<std::string>& args);

struct Report {
  std::string verb;
  nlohmann::json input;
  nlohmann::json payload;
  std::vector<std::string> warnings;
};

/// Throws the module errors (vortex::Error) unchanged.
Report run_command(const Command& cmd);

/// Structured payload {"error": {"type", "message"}} for a failed computation.
Report error_report(const Command& cmd, const Error& e);

/// Canonical JSON text: sorted keys, two-space indent, trailing newline.
std::string render_json(const Report& report);
std::string render_markdown(const Report& report);

/// Writes to `out` or to cmd.output. Returns failure on an unwritable path.
ExitCode emit_report(const Report& report, Format format, const std::optional<std::string>& output,
                     std::ostream& out, std::ostream& err);

/// The whole program: parse, run, emit. Never throws.
int run_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// {"block":{"rank":r,"degree":d,"phi":bool}} | {"sum":[...]} | {"ext":{"sub":...,"quot":...,"split":bool}}
FormalObject parse_formal_object(const nlohmann::json& j);
nlohmann::json formal_object_to_json(const FormalObject& obj);

}  // namespace vortex::cli
