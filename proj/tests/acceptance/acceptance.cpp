// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Usage: tropic_acceptance [path/to/tropic]

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "problem_io.hpp"
#include "svg.hpp"
#include "tropic/dependence.hpp"
#include "tropic/distance.hpp"
#include "tropic/oracle.hpp"
#include "tropic/solver.hpp"

using namespace tropic;

namespace {

constexpr Semifield kMP = Semifield::MaxPlus;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct Verdict {
  bool ok = true;
  std::string detail;
  std::string failure;

  void fail(const std::string& why) {
    if (ok) failure = why;
    ok = false;
  }
};

std::string str(const Vector& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string str(const Matrix& a) {
  std::ostringstream os;
  os << a;
  return os.str();
}

std::string str(const Scalar& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

Matrix random_a(std::mt19937_64& rng, std::size_t max_rows, std::size_t max_cols) {
  std::uniform_int_distribution<std::size_t> rows(1, max_rows);
  std::uniform_int_distribution<std::size_t> cols(1, max_cols);
  const std::size_t m = rows(rng);
  const std::size_t n = cols(rng);
  return oracle::random_matrix(kMP, {m, n, 0.1, -10, 10}, rng);
}

Vector random_d(std::mt19937_64& rng, std::size_t m) { return oracle::random_vector(kMP, m, 0.1, -10, 10, rng); }

// 1. Delta >= one and the deviation of A x* equals Delta exactly.
Verdict residual_law() {
  Verdict v;
  auto rng = std::mt19937_64(1001);
  std::size_t infinite = 0;
  for (int it = 0; it < 500; ++it) {
    const Matrix a = random_a(rng, 6, 6);
    const Vector d = random_d(rng, a.rows());
    const auto r = distance::nearest_point(a, d);
    if (r.delta < Scalar::one(kMP)) v.fail("delta below one for A=" + str(a) + " d=" + str(d));
    if (!r.argmin_x) {
      ++infinite;
      continue;
    }
    const Scalar dev = vec_distance(a * *r.argmin_x, d);
    if (!(dev == r.delta)) {
      v.fail("rho(Ax*, d)=" + str(dev) + " but delta=" + str(r.delta) + " for A=" + str(a) + " d=" + str(d));
    }
  }
  v.detail = "500 instances, " + std::to_string(infinite) + " with infinite residual";
  return v;
}

// 2. Grid search never beats Delta and matches it when x* is a grid point.
Verdict grid_optimality() {
  Verdict v;
  auto rng = std::mt19937_64(1002);
  std::size_t on_grid = 0;
  std::size_t infinite = 0;
  for (int it = 0; it < 100; ++it) {
    const Matrix a = random_a(rng, 6, 3);
    const Vector d = random_d(rng, a.rows());
    const auto r = distance::nearest_point(a, d);
    const auto grid = oracle::GridSpec::uniform(a.cols(), -30, 30, 0.5);
    const auto g = oracle::grid_min_distance(a, d, grid);
    if (g.best < r.delta) v.fail("grid found " + str(g.best) + " below delta " + str(r.delta) + " for A=" + str(a));
    if (!r.argmin_x) ++infinite;
    if (r.argmin_x && grid.contains(kMP, *r.argmin_x)) {
      ++on_grid;
      if (!(g.best == r.delta)) {
        v.fail("x* on grid but grid best " + str(g.best) + " != delta " + str(r.delta) + " for A=" + str(a));
      }
    }
  }
  v.detail = "100 instances, x* on the grid in " + std::to_string(on_grid) + ", infinite residual in " +
             std::to_string(infinite);
  return v;
}

// 3. d := A x is solvable, the maximal solution reproduces d and dominates x.
Verdict solvable_by_construction() {
  Verdict v;
  auto rng = std::mt19937_64(1003);
  for (int it = 0; it < 500; ++it) {
    const Matrix a = random_a(rng, 6, 6);
    const Vector x = oracle::random_vector(kMP, a.cols(), 0.1, -10, 10, rng);
    const Vector d = a * x;
    const auto s = solver::solve_equation(a, d);
    if (!s.solvable) {
      v.fail("planted instance reported unsolvable, delta " + str(s.delta) + " A=" + str(a) + " x=" + str(x));
      continue;
    }
    if (!(a * *s.maximal == d)) v.fail("A * maximal != d for A=" + str(a) + " x=" + str(x));
    if (!leq(x, *s.maximal)) v.fail("maximal " + str(*s.maximal) + " not above " + str(x));
  }
  v.detail = "500 instances";
  return v;
}

// 4. Ax <= d exactly when x <= (d^- A)^-.
Verdict inequality_equivalence() {
  Verdict v;
  auto rng = std::mt19937_64(1004);
  std::uniform_int_distribution<int> drop(0, 20);
  std::uniform_int_distribution<int> start(-20, 20);
  std::bernoulli_distribution zero(0.1);
  for (int it = 0; it < 200; ++it) {
    const Matrix a = random_a(rng, 6, 6);
    const Vector d = random_d(rng, a.rows());
    const Vector bound = solver::solve_inequality(a, d).upper_bound;
    for (int k = 0; k < 20; ++k) {
      std::vector<double> x(a.cols());
      for (std::size_t j = 0; j < x.size(); ++j) {
        x[j] = zero(rng) || bound[j] == kNegInf ? kNegInf : bound[j] - 0.5 * drop(rng);
      }
      const Vector xv(kMP, x);
      if (!leq(a * xv, d)) v.fail("x=" + str(xv) + " below the bound violates Ax <= d, A=" + str(a));
    }
    // Feasible points found without the formula: lower a random start until Ax <= d.
    for (int k = 0; k < 20; ++k) {
      std::vector<double> x(a.cols());
      for (double& e : x) e = zero(rng) ? kNegInf : start(rng);
      Vector xv(kMP, x);
      while (!leq(a * xv, d)) {
        for (double& e : x) e -= 1;
        bool all_low = std::all_of(x.begin(), x.end(), [](double e) { return e < -100; });
        if (all_low) std::fill(x.begin(), x.end(), kNegInf);
        xv = Vector(kMP, x);
      }
      if (!leq(xv, bound)) v.fail("feasible x=" + str(xv) + " exceeds bound " + str(bound));
    }
  }
  v.detail = "200 instances, 40 points each";
  return v;
}

// 5. Half-space projections sit at Delta^2 and the grid cannot do better.
Verdict half_space_projections() {
  Verdict v;
  auto rng = std::mt19937_64(1005);
  int done = 0;
  while (done < 200) {
    const Matrix a = random_a(rng, 5, 3);
    const Vector d = random_d(rng, a.rows());
    const auto r = distance::nearest_point(a, d);
    if (!r.argmin_x) continue;
    ++done;
    const Scalar target = r.delta * r.delta;
    const auto below = distance::project_below(a, d);
    const auto above = distance::project_above(a, d);
    if (!leq(a * below.x, d)) v.fail("A x1 not below d for A=" + str(a) + " d=" + str(d));
    if (!leq(d, a * above.x)) v.fail("A x2 not above d for A=" + str(a) + " d=" + str(d));
    if (!(vec_distance(a * below.x, d) == target) || !(vec_distance(a * above.x, d) == target)) {
      v.fail("projection deviation differs from delta^2 for A=" + str(a) + " d=" + str(d));
    }
    for (auto side : {oracle::Feasibility::Below, oracle::Feasibility::Above}) {
      auto grid = oracle::GridSpec::uniform(a.cols(), -30, 30, 0.5);
      grid.feasibility = side;
      const auto g = oracle::grid_min_distance(a, d, grid);
      if (g.argbest && g.best < target) {
        v.fail("grid beats delta^2 on a half-space: " + str(g.best) + " < " + str(target) + " A=" + str(a));
      }
    }
  }
  v.detail = "200 instances with finite residual";
  return v;
}

// 6. Minimal generators agree with exhaustive search and every family member checks out.
Verdict family_completeness() {
  Verdict v;
  auto rng = std::mt19937_64(1006);
  std::size_t members = 0;
  for (int it = 0; it < 100; ++it) {
    const Matrix a = random_a(rng, 6, 5);
    const Vector x = oracle::random_vector(kMP, a.cols(), 0.2, -5, 5, rng);
    const Vector d = a * x;
    const auto fast = solver::enumerate_minimal_generators(a, d);
    const auto slow = oracle::exhaustive_minimal_generators(a, d);
    if (fast != slow) v.fail("generator sets differ for A=" + str(a) + " d=" + str(d));
    const auto family = solver::general_solution(a, d);
    const auto maximal = *solver::solve_equation(a, d).maximal;
    auto check_rng = std::mt19937_64(2000 + it);
    const auto report = oracle::verify_family(a, d, std::nullopt, family.members, check_rng);
    if (!report.ok) v.fail(report.message + " for A=" + str(a));
    for (const auto& m : family.members) {
      ++members;
      if (!(m.extreme() == maximal)) v.fail("member extreme differs from the maximal solution for A=" + str(a));
    }
  }
  v.detail = "100 instances, " + std::to_string(members) + " family members";
  return v;
}

// 7. The consistency transform leaves every deviation unchanged.
Verdict consistency_invariance() {
  Verdict v;
  auto rng = std::mt19937_64(1007);
  std::uniform_int_distribution<std::size_t> pick(0, 5);
  int done = 0;
  while (done < 100) {
    const Matrix a = random_a(rng, 6, 6);
    if (a.rows() < 2) continue;
    Vector d = random_d(rng, a.rows());
    d.set(pick(rng) % d.size(), kNegInf);
    if (d.is_zero() || d.is_regular()) continue;
    ++done;
    const Matrix a_hat = distance::make_consistent(a, d).a_hat;
    for (int k = 0; k < 50; ++k) {
      const Vector x = oracle::random_vector(kMP, a.cols(), 0.3, -10, 10, rng);
      if (!(vec_distance(a * x, d) == vec_distance(a_hat * x, d))) {
        v.fail("deviation changes under the transform: A=" + str(a) + " d=" + str(d) + " x=" + str(x));
      }
    }
  }
  v.detail = "100 instances with irregular d, 50 points each";
  return v;
}

// 8. Basis extraction over columns with planted duplicates and multiples.
Verdict basis_extraction() {
  Verdict v;
  auto rng = std::mt19937_64(1008);
  std::uniform_int_distribution<std::size_t> rows(2, 5);
  std::uniform_int_distribution<int> base_pick(0, 2);
  std::uniform_int_distribution<int> shift(-5, 5);
  for (int it = 0; it < 100; ++it) {
    const Matrix seed = oracle::random_matrix(kMP, {rows(rng), 3, 0.1, -10, 10}, rng);
    std::vector<Vector> cols{seed.column(0), seed.column(1), seed.column(2)};
    cols.push_back(cols[base_pick(rng)]);
    cols.push_back(Scalar(kMP, shift(rng)) * cols[base_pick(rng)]);
    cols.push_back(Scalar(kMP, shift(rng)) * cols[base_pick(rng)] + Scalar(kMP, shift(rng)) * cols[base_pick(rng)]);
    std::shuffle(cols.begin(), cols.end(), rng);
    const Matrix a = Matrix::from_columns(kMP, cols);
    const auto basis = dependence::extract_basis(a);
    if (!dependence::is_independent(basis.basis)) v.fail("extracted basis is dependent for A=" + str(a));
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!distance::membership(basis.basis, a.column(j)).member) {
        v.fail("column " + std::to_string(j + 1) + " is outside the basis span for A=" + str(a));
      }
    }
  }
  v.detail = "100 instances of 6 columns";
  return v;
}

bool close_rel(double x, double y, double rel) {
  if (std::isinf(x) || std::isinf(y) || x == 0 || y == 0) return x == y;
  return std::abs(x - y) <= rel * std::max(std::abs(x), std::abs(y));
}

bool close_rel(const Vector& x, const Vector& y, double rel) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!close_rel(x[i], y[i], rel)) return false;
  }
  return true;
}

// 9. Solving in max-times commutes with the map to max-plus.
Verdict isomorphism_commutation() {
  Verdict v;
  auto rng = std::mt19937_64(1009);
  std::bernoulli_distribution planted(0.5);
  for (int it = 0; it < 100; ++it) {
    const Matrix a = random_a(rng, 5, 5);
    const Vector d = planted(rng) ? a * oracle::random_vector(kMP, a.cols(), 0.1, -10, 10, rng)
                                  : random_d(rng, a.rows());
    const Matrix at = oracle::map_matrix(a, Semifield::MaxTimes);
    const Vector dt = oracle::map_vector(d, Semifield::MaxTimes);
    const auto native = solver::solve_equation(at, dt);
    const auto hub = solver::solve_equation(a, d);
    if (native.solvable != hub.solvable) v.fail("solvability differs for A=" + str(a) + " d=" + str(d));
    if (!close_rel(native.delta.value(), isomorphism_map(hub.delta, Semifield::MaxTimes).value(), 1e-6)) {
      v.fail("delta differs: " + str(native.delta) + " vs " + str(hub.delta) + " for A=" + str(a));
    }
    if (hub.maximal && native.maximal &&
        !close_rel(*native.maximal, oracle::map_vector(*hub.maximal, Semifield::MaxTimes), 1e-6)) {
      v.fail("maximal solutions differ for A=" + str(a));
    }
    if (hub.pseudo && native.pseudo &&
        !close_rel(*native.pseudo, oracle::map_vector(*hub.pseudo, Semifield::MaxTimes), 1e-6)) {
      v.fail("pseudo-solutions differ for A=" + str(a));
    }
    if (hub.pseudo.has_value() != native.pseudo.has_value()) v.fail("pseudo presence differs for A=" + str(a));
  }
  v.detail = "100 instances, relative tolerance 1e-6";
  return v;
}

// 10. The worked system and extended-equation examples.
Verdict desk_examples() {
  Verdict v;
  const Matrix a = Matrix::from_rows(kMP, {{0, 2}, {2, 0}});
  const Vector d(kMP, {2, 2});
  const Matrix c = Matrix::from_rows(kMP, {{0, 0}});
  const auto ok = solver::solve_system(a, d, c, Vector(kMP, {1}));
  if (ok.members.size() != 1 || !(ok.members[0].extreme() == Vector(kMP, {0, 0})) ||
      ok.members[0].kinds != std::vector<solver::ComponentKind>(2, solver::ComponentKind::Fixed)) {
    v.fail("system with b = 1 should have the single solution x = (0, 0)");
  }
  if (solver::solve_system(a, d, c, Vector(kMP, {-1})).solvable()) v.fail("system with b = -1 should be unsolvable");

  const Matrix col = Matrix::from_rows(kMP, {{0}, {0}});
  const auto ext = solver::solve_extended(col, Vector(kMP, {1, 5}), Vector(kMP, {3, 5}));
  if (ext.family.members.size() != 1 || !(ext.family.members[0].extreme() == Vector(kMP, {3})) ||
      ext.family.members[0].kinds[0] != solver::ComponentKind::Fixed) {
    v.fail("extended equation should fix x = 3");
  }
  const auto bare = solver::solve_equation(col, Vector(kMP, {3, 5}));
  if (bare.solvable || !(bare.delta == Scalar(kMP, 1))) v.fail("bare equation should have delta 1");
  v.detail = "system pair and extended equation";
  return v;
}

// Tag balance and attribute quoting; enough to catch broken output.
bool well_formed_xml(const std::string& s) {
  std::vector<std::string> stack;
  std::size_t i = 0;
  bool root_seen = false;
  while ((i = s.find('<', i)) != std::string::npos) {
    const std::size_t end = s.find('>', i);
    if (end == std::string::npos) return false;
    const std::string tag = s.substr(i + 1, end - i - 1);
    i = end + 1;
    if (tag.empty()) return false;
    if (tag[0] == '?' || tag[0] == '!') continue;
    if (std::count(tag.begin(), tag.end(), '"') % 2 != 0) return false;
    if (tag[0] == '/') {
      if (stack.empty() || stack.back() != tag.substr(1)) return false;
      stack.pop_back();
      continue;
    }
    const std::string name = tag.substr(0, tag.find_first_of(" \n/"));
    if (stack.empty()) {
      if (root_seen) return false;
      root_seen = true;
    }
    if (tag.back() != '/') stack.push_back(name);
  }
  return root_seen && stack.empty();
}

int run_exe(const std::string& exe, const std::string& args) {
  const int status = std::system(("\"" + exe + "\" " + args + " > /dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// 11. CLI round-trip, exit codes and SVG output.
Verdict cli_contract(const std::string& exe) {
  Verdict v;
  const std::string solve_doc = R"({"semifield":"max-plus","A":[[1,3],[2,1]],"d":[4,5]})";
  const std::string distance_doc = R"({"semifield":"max-plus","A":[[0],[0]],"d":[3,5]})";
  const std::string extended_doc = R"({"semifield":"max-plus","A":[[0],[0]],"b":[4,6],"d":[3,5]})";
  const std::string mixed_doc =
      R"({"semifield":"max-times","A":[[0.1,"+inf"],[3,0]],"d":[0.30000000000000004,1e-300],"options":{"tolerance":0}})";

  for (const auto& text : {solve_doc, distance_doc, extended_doc, mixed_doc}) {
    const auto doc = cli::parse_problem(text);
    const std::string once = cli::serialize_problem(doc).dump();
    if (!(cli::parse_problem(once) == doc) || cli::serialize_problem(cli::parse_problem(once)).dump() != once) {
      v.fail("round trip changed " + text);
    }
  }

  const auto solve = cli::run("solve", cli::parse_problem(solve_doc));
  if (solve.code != cli::ExitCode::Answered || solve.result["solvable"] != true ||
      solve.result["delta"].dump() != "0" || solve.result["maximal"].dump() != "[3,1]") {
    v.fail("solve example: " + solve.result.dump());
  }
  const auto dist = cli::run("distance", cli::parse_problem(distance_doc));
  if (dist.code != cli::ExitCode::Answered || dist.result["delta"].dump() != "1" ||
      dist.result["x"].dump() != "[4]" || dist.result["y"].dump() != "[4,4]") {
    v.fail("distance example: " + dist.result.dump());
  }
  const auto ext = cli::run("extended", cli::parse_problem(extended_doc));
  if (ext.code != cli::ExitCode::NoSolution || ext.result["solvable"] != false ||
      ext.result["reason"] != "b not ≤ d") {
    v.fail("extended example: " + ext.result.dump());
  }

  for (const auto& [command, text] : std::vector<std::pair<std::string, std::string>>{
           {"solve", solve_doc}, {"distance", distance_doc},
           {"extended", R"({"semifield":"max-plus","A":[[0],[0]],"b":[1,5],"d":[3,5]})"},
           {"distance", R"({"semifield":"max-times","A":[[1,2],[3,1]],"d":[4,5]})"}}) {
    const auto doc = cli::parse_problem(text);
    const std::string first = cli::render_svg(command, doc, kDefaultTolerance);
    if (first != cli::render_svg(command, doc, kDefaultTolerance)) v.fail("SVG not deterministic for " + text);
    if (!well_formed_xml(first)) v.fail("SVG not well formed for " + text);
  }

  std::size_t process_checks = 0;
  if (!exe.empty()) {
    const auto dir = std::filesystem::temp_directory_path() / "tropic_acceptance";
    std::filesystem::create_directories(dir);
    const auto write = [&](const std::string& name, const std::string& text) {
      std::ofstream(dir / name) << text;
      return (dir / name).string();
    };
    const std::vector<std::pair<std::string, int>> cases = {
        {"solve --input " + write("solve.json", solve_doc), 0},
        {"distance --input " + write("distance.json", distance_doc), 0},
        {"extended --input " + write("extended.json", extended_doc), 1},
    };
    for (const auto& [args, expected] : cases) {
      ++process_checks;
      const int got = run_exe(exe, args);
      if (got != expected) v.fail("`tropic " + args + "` exited " + std::to_string(got));
    }
  }
  v.detail = "4 documents, 3 examples, 4 figures, " + std::to_string(process_checks) + " process runs";
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string exe = argc > 1 ? argv[1] : "";
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Verdict()> check;
  };
  const std::vector<Criterion> criteria = {
      {1, "residual law", 5, residual_law},
      {2, "grid optimality", 30, grid_optimality},
      {3, "solvable by construction", 0, solvable_by_construction},
      {4, "inequality equivalence", 0, inequality_equivalence},
      {5, "half-space projections", 0, half_space_projections},
      {6, "family completeness", 0, family_completeness},
      {7, "consistency invariance", 0, consistency_invariance},
      {8, "basis extraction", 0, basis_extraction},
      {9, "isomorphism commutation", 0, isomorphism_commutation},
      {10, "combined system and extended equation", 0, desk_examples},
      {11, "CLI contract", 0, [&] { return cli_contract(exe); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "took %.2f s, limit %.0f s", secs, c.limit_seconds);
      v.fail(buf);
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << (v.ok ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.name << ": " << v.detail << " (" << timing
              << ")";
    if (!v.ok) std::cout << "\n      " << v.failure;
    std::cout << std::endl;
    if (!v.ok) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
