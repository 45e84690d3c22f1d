#include "problem_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "tropic/error.hpp"

namespace tropic::cli {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Doubles with magnitude below 2^53 that are integral print as integers.
constexpr double kExactIntegerLimit = 9007199254740992.0;

RawVector parse_vector(const Json& j, const char* name) {
  if (!j.is_array()) throw CliError(ExitCode::InvalidDocument, std::string(name) + " must be an array");
  RawVector v;
  v.reserve(j.size());
  for (const Json& e : j) v.push_back(number_from_json(e, name));
  return v;
}

RawMatrix parse_matrix(const Json& j, const char* name) {
  if (!j.is_array()) {
    throw CliError(ExitCode::InvalidDocument, std::string(name) + " must be an array of rows");
  }
  RawMatrix m;
  for (const Json& row : j) m.push_back(parse_vector(row, name));
  if (m.empty() || m.front().empty()) {
    throw CliError(ExitCode::DimensionMismatch, std::string(name) + " must have at least one row and column");
  }
  for (const RawVector& row : m) {
    if (row.size() != m.front().size()) {
      throw CliError(ExitCode::DimensionMismatch, std::string(name) + " has rows of different lengths");
    }
  }
  return m;
}

void check_carrier(Semifield sf, const RawMatrix& m, const char* name) {
  for (const RawVector& row : m) {
    for (double v : row) {
      if (!carrier::in_carrier(sf, v)) {
        throw CliError(ExitCode::CarrierError, std::string(name) + " entry " + format_number(v) +
                                                   " is outside the " + std::string(to_string(sf)) + " carrier");
      }
    }
  }
}

std::vector<double> flatten(const RawMatrix& m) {
  std::vector<double> out;
  for (const RawVector& row : m) out.insert(out.end(), row.begin(), row.end());
  return out;
}

Json matrix_json(const RawMatrix& m) {
  Json out = Json::array();
  for (const RawVector& row : m) {
    Json r = Json::array();
    for (double v : row) r.push_back(number_to_json(v));
    out.push_back(std::move(r));
  }
  return out;
}

Json vector_json(const RawVector& v) {
  Json out = Json::array();
  for (double x : v) out.push_back(number_to_json(x));
  return out;
}

}  // namespace

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "+inf" : "-inf";
  if (v == 0) return "0";
  if (std::trunc(v) == v && std::abs(v) < kExactIntegerLimit) {
    return std::to_string(static_cast<long long>(v));
  }
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

Json number_to_json(double v) {
  if (std::isinf(v)) return v > 0 ? "+inf" : "-inf";
  if (v == 0 && std::signbit(v)) return v;
  if (std::trunc(v) == v && std::abs(v) < kExactIntegerLimit) return static_cast<long long>(v);
  return v;
}

double number_from_json(const Json& j, const char* where) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s == "-inf") return -kInf;
    if (s == "+inf") return kInf;
    throw CliError(ExitCode::InvalidDocument,
                   std::string(where) + ": unrecognized token \"" + s + "\" (expected \"-inf\" or \"+inf\")");
  }
  throw CliError(ExitCode::InvalidDocument, std::string(where) + ": entries must be numbers or \"-inf\"/\"+inf\"");
}

ProblemDocument parse_problem(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw CliError(ExitCode::MalformedJson, std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw CliError(ExitCode::InvalidDocument, "problem must be a JSON object");

  ProblemDocument doc;
  if (!j.contains("semifield") || !j["semifield"].is_string()) {
    throw CliError(ExitCode::InvalidDocument, "missing \"semifield\" tag");
  }
  const std::string tag = j["semifield"].get<std::string>();
  const auto sf = parse_semifield(tag);
  if (!sf) {
    throw CliError(ExitCode::UnknownSemifield,
                   "unknown semifield \"" + tag + "\" (expected max-plus, min-plus, max-times or min-times)");
  }
  doc.semifield = *sf;

  if (!j.contains("A")) throw CliError(ExitCode::InvalidDocument, "missing matrix \"A\"");
  doc.a = parse_matrix(j["A"], "A");
  if (j.contains("d")) doc.d = parse_vector(j["d"], "d");
  if (j.contains("C")) doc.c = parse_matrix(j["C"], "C");
  if (j.contains("b")) doc.b = parse_vector(j["b"], "b");

  if (j.contains("options")) {
    const Json& o = j["options"];
    if (!o.is_object()) throw CliError(ExitCode::InvalidDocument, "\"options\" must be an object");
    if (o.contains("tolerance")) {
      if (!o["tolerance"].is_number() || o["tolerance"].get<double>() < 0) {
        throw CliError(ExitCode::InvalidDocument, "options.tolerance must be a non-negative number");
      }
      doc.options.tolerance = o["tolerance"].get<double>();
    }
    if (o.contains("cap")) {
      if (!o["cap"].is_number_unsigned()) {
        throw CliError(ExitCode::InvalidDocument, "options.cap must be a non-negative integer");
      }
      doc.options.cap = o["cap"].get<std::size_t>();
    }
    if (o.contains("check_uniqueness")) {
      if (!o["check_uniqueness"].is_boolean()) {
        throw CliError(ExitCode::InvalidDocument, "options.check_uniqueness must be a boolean");
      }
      doc.options.check_uniqueness = o["check_uniqueness"].get<bool>();
    }
  }

  check_carrier(doc.semifield, doc.a, "A");
  if (doc.d) check_carrier(doc.semifield, {*doc.d}, "d");
  if (doc.c) check_carrier(doc.semifield, *doc.c, "C");
  if (doc.b) check_carrier(doc.semifield, {*doc.b}, "b");
  if (doc.d && doc.d->size() != doc.a.size()) {
    throw CliError(ExitCode::DimensionMismatch, "d has " + std::to_string(doc.d->size()) +
                                                    " entries but A has " + std::to_string(doc.a.size()) + " rows");
  }
  if (doc.c && doc.c->front().size() != doc.a.front().size()) {
    throw CliError(ExitCode::DimensionMismatch, "C and A have different column counts");
  }
  return doc;
}

ProblemDocument read_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError(ExitCode::Io, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

Json serialize_problem(const ProblemDocument& doc) {
  Json j;
  j["semifield"] = std::string(to_string(doc.semifield));
  j["A"] = matrix_json(doc.a);
  if (doc.d) j["d"] = vector_json(*doc.d);
  if (doc.c) j["C"] = matrix_json(*doc.c);
  if (doc.b) j["b"] = vector_json(*doc.b);
  Json o = Json::object();
  if (doc.options.tolerance) o["tolerance"] = *doc.options.tolerance;
  if (doc.options.cap) o["cap"] = *doc.options.cap;
  if (doc.options.check_uniqueness) o["check_uniqueness"] = *doc.options.check_uniqueness;
  if (!o.empty()) j["options"] = std::move(o);
  return j;
}

Matrix ProblemDocument::matrix_a() const {
  return Matrix(semifield, a.size(), a.front().size(), flatten(a));
}

Vector ProblemDocument::vector_d() const {
  if (!d) throw CliError(ExitCode::InvalidDocument, "this command needs a vector \"d\"");
  return Vector(semifield, *d);
}

Matrix ProblemDocument::matrix_c() const {
  if (!c) throw CliError(ExitCode::InvalidDocument, "this command needs a matrix \"C\"");
  return Matrix(semifield, c->size(), c->front().size(), flatten(*c));
}

Vector ProblemDocument::vector_b() const {
  if (!b) throw CliError(ExitCode::InvalidDocument, "this command needs a vector \"b\"");
  return Vector(semifield, *b);
}

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (double x : v.entries()) out.push_back(number_to_json(x));
  return out;
}

Json to_json(const Matrix& a) {
  Json out = Json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(number_to_json(a(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const IndexSet& s) {
  Json out = Json::array();
  for (std::size_t i : s) out.push_back(i + 1);
  return out;
}

}  // namespace tropic::cli
