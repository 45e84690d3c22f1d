#pragma once

// JSON problem documents. Entries are numbers or the tokens "-inf" and
// "+inf"; row and column indices are 1-based on the wire.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "tropic/linalg.hpp"
#include "tropic/semifield.hpp"

namespace tropic::cli {

using Json = nlohmann::ordered_json;

enum class ExitCode : int {
  Answered = 0,
  NoSolution = 1,
  Usage = 2,
  Io = 3,
  MalformedJson = 4,
  InvalidDocument = 5,
  DimensionMismatch = 6,
  UnknownSemifield = 7,
  CarrierError = 8,
  Capacity = 9,
  UnsupportedPlot = 10,
  Internal = 11,
};

class CliError : public std::runtime_error {
 public:
  CliError(ExitCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ExitCode code() const noexcept { return code_; }

 private:
  ExitCode code_;
};

struct DocumentOptions {
  std::optional<double> tolerance;
  std::optional<std::size_t> cap;
  std::optional<bool> check_uniqueness;

  friend bool operator==(const DocumentOptions&, const DocumentOptions&) = default;
};

/// Raw entries in the native carrier; validated against the semifield.
using RawMatrix = std::vector<std::vector<double>>;
using RawVector = std::vector<double>;

struct ProblemDocument {
  Semifield semifield = Semifield::MaxPlus;
  RawMatrix a;
  std::optional<RawVector> d;
  std::optional<RawMatrix> c;
  std::optional<RawVector> b;
  DocumentOptions options;

  friend bool operator==(const ProblemDocument&, const ProblemDocument&) = default;

  Matrix matrix_a() const;
  Vector vector_d() const;
  Matrix matrix_c() const;
  Vector vector_b() const;
};

ProblemDocument parse_problem(const std::string& text);
ProblemDocument read_problem(const std::string& path);
Json serialize_problem(const ProblemDocument& doc);

/// Integral values become JSON integers, infinities become tokens, and the
/// rest use the shortest representation that reads back bit-identical.
Json number_to_json(double v);
double number_from_json(const Json& j, const char* where);
std::string format_number(double v);

Json to_json(const Vector& v);
Json to_json(const Matrix& a);
/// 0-based indices in, 1-based out.
Json to_json(const IndexSet& s);

}  // namespace tropic::cli
