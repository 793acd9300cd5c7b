#include <fstream>
#include <iostream>

#include "vortex/cli/cli.hpp"

namespace vortex::cli {

ExitCode emit_report(const Report& report, Format format, const std::optional<std::string>& output,
                     std::ostream& out, std::ostream& err) {
  const std::string text = format == Format::json ? render_json(report) : render_markdown(report);
  if (!output) {
    out << text;
    out.flush();
    return out ? ExitCode::ok : ExitCode::failure;
  }
  std::ofstream file(*output, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot open '" << *output << "' for writing\n";
    return ExitCode::failure;
  }
  file << text;
  file.close();
  if (!file) {
    err << "error: failed writing '" << *output << "'\n";
    return ExitCode::failure;
  }
  return ExitCode::ok;
}

int run_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Command cmd;
  try {
    cmd = parse_cli(args);
  } catch (const HelpRequested& h) {
    out << h.what();
    return static_cast<int>(ExitCode::ok);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\nRun with --help for more information.\n";
    return static_cast<int>(ExitCode::usage);
  }

  Report report;
  try {
    report = run_command(cmd);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    emit_report(error_report(cmd, e), cmd.format, cmd.output, out, err);
    return static_cast<int>(ExitCode::failure);
  } catch (const std::exception& e) {
    const InternalError wrapped(e.what());
    err << "error: " << e.what() << "\n";
    emit_report(error_report(cmd, wrapped), cmd.format, cmd.output, out, err);
    return static_cast<int>(ExitCode::failure);
  }
  return static_cast<int>(emit_report(report, cmd.format, cmd.output, out, err));
}

}  // namespace vortex::cli
