#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "problem_io.hpp"
#include "svg.hpp"

namespace {

using tropic::cli::CliError;
using tropic::cli::ExitCode;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content)) throw CliError(ExitCode::Io, "cannot write " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear algebra over idempotent semifields: residuals, equations, inequalities."};
  app.set_version_flag("--version", "tropic 0.1.0");

  std::string command;
  std::string input;
  std::string output;
  std::string svg;
  std::optional<double> tolerance;
  std::optional<std::size_t> cap;
  bool check_uniqueness = false;

  app.add_option("command", command, "distance | solve | solve-all | inequality | system | extended | "
                                     "basis | independent | membership")
      ->required()
      ->check(CLI::IsMember(tropic::cli::kCommands));
  app.add_option("--input,-i", input, "problem document (JSON)")->required();
  app.add_option("--output,-o", output, "write the result here instead of stdout");
  app.add_option("--svg", svg, "also draw the instance (two rows, max-plus or max-times)");
  app.add_option("--tolerance", tolerance, "comparison tolerance (default 1e-9)")->check(CLI::NonNegativeNumber);
  app.add_option("--cap", cap, "column limit for minimal-generator enumeration (default 20)");
  app.add_flag("--check-uniqueness", check_uniqueness, "decide whether the solution is unique");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(ExitCode::Usage);
  }

  try {
    const auto doc = tropic::cli::read_problem(input);
    const tropic::cli::RunSettings settings{tolerance, cap, check_uniqueness};
    const auto outcome = tropic::cli::run(command, doc, settings);
    const std::string text = outcome.result.dump(2) + "\n";
    if (output.empty()) {
      std::cout << text;
    } else {
      write_file(output, text);
    }
    if (!svg.empty()) {
      const double eps = tolerance.value_or(doc.options.tolerance.value_or(tropic::kDefaultTolerance));
      write_file(svg, tropic::cli::render_svg(command, doc, eps));
    }
    return static_cast<int>(outcome.code);
  } catch (const CliError& e) {
    std::cerr << "tropic: " << e.what() << "\n";
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "tropic: internal error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::Internal);
  }
}
