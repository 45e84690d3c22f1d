#include "commands.hpp"

#include <algorithm>
#include <cstdlib>

#include "tropic/dependence.hpp"
#include "tropic/distance.hpp"
#include "tropic/error.hpp"
#include "tropic/solver.hpp"

namespace tropic::cli {

namespace {

Json scalar_json(const Scalar& s) { return number_to_json(s.value()); }

Json consistency_json(const IndexSet& zero_rows, const IndexSet& forced_cols) {
  Json j;
  j["I"] = to_json(zero_rows);
  j["J"] = to_json(forced_cols);
  return j;
}

Json family_json(const std::vector<solver::FamilyMember>& members) {
  Json out = Json::array();
  for (const auto& m : members) {
    Json fixed = Json::array();
    Json bounds = Json::array();
    IndexSet free;
    for (std::size_t j = 0; j < m.kinds.size(); ++j) {
      switch (m.kinds[j]) {
        case solver::ComponentKind::Fixed:
          fixed.push_back(Json::array({j + 1, number_to_json(m.values[j])}));
          break;
        case solver::ComponentKind::Bounded:
          bounds.push_back(Json::array({j + 1, number_to_json(m.values[j])}));
          break;
        case solver::ComponentKind::Free:
          free.push_back(j);
          break;
      }
    }
    Json e;
    e["I"] = to_json(m.index_set);
    e["fixed"] = std::move(fixed);
    e["bounds"] = std::move(bounds);
    e["free"] = to_json(free);
    e["extreme"] = to_json(m.extreme());
    out.push_back(std::move(e));
  }
  return out;
}

struct Context {
  const ProblemDocument& doc;
  solver::SolveOptions options;
  bool check_uniqueness;
  Json out;
};

ExitCode run_distance(Context& ctx) {
  const Matrix a = ctx.doc.matrix_a();
  const Vector d = ctx.doc.vector_d();
  const auto r = distance::nearest_point(a, d);
  ctx.out["delta"] = scalar_json(r.delta);
  if (r.argmin_x) {
    ctx.out["x"] = to_json(*r.argmin_x);
    ctx.out["y"] = to_json(*r.nearest_y);
    const auto below = distance::project_below(a, d);
    const auto above = distance::project_above(a, d);
    Json bounds;
    bounds["x1"] = to_json(below.x);
    bounds["y1"] = to_json(below.y);
    bounds["x2"] = to_json(above.x);
    bounds["y2"] = to_json(above.y);
    bounds["rho"] = scalar_json(below.rho);
    ctx.out["bounds"] = std::move(bounds);
  }
  ctx.out["member"] = distance::is_one(r.delta, ctx.options.tolerance);
  ctx.out["row_regular"] = r.row_regular;
  ctx.out["consistency"] = consistency_json(r.zero_rows_of_d, r.forced_zero_cols);
  return ExitCode::Answered;
}

ExitCode run_solve(Context& ctx) {
  const auto s = solver::solve_equation(ctx.doc.matrix_a(), ctx.doc.vector_d(), ctx.check_uniqueness,
                                        ctx.options);
  ctx.out["solvable"] = s.solvable;
  ctx.out["delta"] = scalar_json(s.delta);
  if (s.maximal) ctx.out["maximal"] = to_json(*s.maximal);
  if (s.pseudo) ctx.out["pseudo"] = to_json(*s.pseudo);
  if (s.unique) ctx.out["unique"] = *s.unique;
  ctx.out["free_columns"] = to_json(s.free_cols);
  ctx.out["consistency"] = consistency_json(s.zero_rows_of_d, s.forced_zero_cols);
  return s.solvable ? ExitCode::Answered : ExitCode::NoSolution;
}

ExitCode emit_family(Context& ctx, const solver::SolutionFamily& family) {
  ctx.out["solvable"] = family.solvable();
  ctx.out["delta"] = scalar_json(family.delta);
  if (!family.solvable()) ctx.out["reason"] = family.reason;
  ctx.out["family"] = family_json(family.members);
  ctx.out["free_columns"] = to_json(family.free_cols);
  return family.solvable() ? ExitCode::Answered : ExitCode::NoSolution;
}

ExitCode run_solve_all(Context& ctx) {
  return emit_family(ctx, solver::general_solution(ctx.doc.matrix_a(), ctx.doc.vector_d(), ctx.options));
}

ExitCode run_inequality(Context& ctx) {
  const auto s = solver::solve_inequality(ctx.doc.matrix_a(), ctx.doc.vector_d());
  ctx.out["upper_bound"] = to_json(s.upper_bound);
  ctx.out["free_columns"] = to_json(s.free_cols);
  return ExitCode::Answered;
}

ExitCode run_system(Context& ctx) {
  const auto family = solver::solve_system(ctx.doc.matrix_a(), ctx.doc.vector_d(), ctx.doc.matrix_c(),
                                           ctx.doc.vector_b(), ctx.options);
  return emit_family(ctx, family);
}

ExitCode run_extended(Context& ctx) {
  const auto s = solver::solve_extended(ctx.doc.matrix_a(), ctx.doc.vector_b(), ctx.doc.vector_d(),
                                        ctx.options);
  if (!s.split) {
    ctx.out["solvable"] = false;
    ctx.out["reason"] = s.family.reason;
    return ExitCode::NoSolution;
  }
  const ExitCode code = emit_family(ctx, s.family);
  ctx.out["delta1"] = scalar_json(s.delta1);
  Json split;
  split["I1"] = to_json(s.split->i1);
  split["I2"] = to_json(s.split->i2);
  ctx.out["split"] = std::move(split);
  return code;
}

ExitCode run_basis(Context& ctx) {
  const auto r = dependence::extract_basis(ctx.doc.matrix_a(), ctx.options.tolerance);
  ctx.out["kept"] = to_json(r.kept);
  ctx.out["basis"] = to_json(r.basis);
  ctx.out["margin"] = scalar_json(r.margin);
  return ExitCode::Answered;
}

ExitCode run_independent(Context& ctx) {
  const Matrix a = ctx.doc.matrix_a();
  const Scalar margin = dependence::independence_margin(a);
  ctx.out["independent"] = !distance::is_one(margin, ctx.options.tolerance);
  ctx.out["margin"] = scalar_json(margin);
  return ExitCode::Answered;
}

ExitCode run_membership(Context& ctx) {
  const auto r = dependence::is_dependent(ctx.doc.vector_d(), ctx.doc.matrix_a(), ctx.options.tolerance);
  ctx.out["member"] = r.dependent;
  ctx.out["delta"] = scalar_json(r.delta);
  if (r.coefficients) ctx.out["coefficients"] = to_json(*r.coefficients);
  return ExitCode::Answered;
}

ExitCode dispatch(std::string_view command, Context& ctx) {
  if (command == "distance") return run_distance(ctx);
  if (command == "solve") return run_solve(ctx);
  if (command == "solve-all") return run_solve_all(ctx);
  if (command == "inequality") return run_inequality(ctx);
  if (command == "system") return run_system(ctx);
  if (command == "extended") return run_extended(ctx);
  if (command == "basis") return run_basis(ctx);
  if (command == "independent") return run_independent(ctx);
  if (command == "membership") return run_membership(ctx);
  throw CliError(ExitCode::Usage, "unknown command \"" + std::string(command) + "\"");
}

}  // namespace

std::optional<std::size_t> cap_from_environment() {
  const char* raw = std::getenv("TROPIC_CAP");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  const std::string s(raw);
  if (!std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) || s.size() > 9) {
    throw CliError(ExitCode::Usage, "TROPIC_CAP must be a non-negative integer, got \"" + s + "\"");
  }
  return static_cast<std::size_t>(std::stoul(s));
}

Outcome run(std::string_view command, const ProblemDocument& doc, const RunSettings& settings) {
  Context ctx{doc, {}, false, Json::object()};
  ctx.options.tolerance = settings.tolerance.value_or(doc.options.tolerance.value_or(kDefaultTolerance));
  std::optional<std::size_t> cap = settings.cap;
  if (!cap) cap = cap_from_environment();
  if (!cap) cap = doc.options.cap;
  ctx.options.enumeration_cap = cap.value_or(solver::kDefaultEnumerationCap);
  ctx.check_uniqueness = settings.check_uniqueness || doc.options.check_uniqueness.value_or(false);

  ctx.out["command"] = std::string(command);
  ctx.out["semifield"] = std::string(to_string(doc.semifield));
  ExitCode code;
  try {
    code = dispatch(command, ctx);
  } catch (const CliError&) {
    throw;
  } catch (const DimensionError& e) {
    throw CliError(ExitCode::DimensionMismatch, e.what());
  } catch (const SemifieldMismatch& e) {
    throw CliError(ExitCode::DimensionMismatch, e.what());
  } catch (const DomainError& e) {
    throw CliError(ExitCode::CarrierError, e.what());
  } catch (const CapacityError& e) {
    throw CliError(ExitCode::Capacity, e.what());
  } catch (const std::exception& e) {
    throw CliError(ExitCode::Internal, e.what());
  }
  return {std::move(ctx.out), code};
}

}  // namespace tropic::cli
