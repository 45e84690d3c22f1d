#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "problem_io.hpp"

namespace tropic::cli {

inline const std::vector<std::string> kCommands = {"distance", "solve",  "solve-all",
                                                   "inequality", "system", "extended",
                                                   "basis",    "independent", "membership"};

/// Settings from the command line; each one overrides the document.
struct RunSettings {
  std::optional<double> tolerance;
  std::optional<std::size_t> cap;
  bool check_uniqueness = false;
};

struct Outcome {
  Json result;
  ExitCode code = ExitCode::Answered;
};

/// Throws CliError for unknown commands, missing fields and every library
/// error, translated to its exit code.
Outcome run(std::string_view command, const ProblemDocument& doc, const RunSettings& settings = {});

/// Reads TROPIC_CAP; nullopt when unset. Throws CliError when malformed.
std::optional<std::size_t> cap_from_environment();

}  // namespace tropic::cli
