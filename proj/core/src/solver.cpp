#include "tropic/solver.hpp"

#include <algorithm>
#include <string>

#include "tropic/distance.hpp"
#include "tropic/error.hpp"

namespace tropic::solver {

namespace {

void require_shape(const Matrix& a, const Vector& d, const char* what) {
  if (a.semifield() != d.semifield()) {
    throw SemifieldMismatch(std::string(what) + ": matrix and vector semifields differ");
  }
  if (a.rows() != d.size()) {
    throw DimensionError(std::string(what) + ": matrix has " + std::to_string(a.rows()) +
                         " rows but vector has " + std::to_string(d.size()) + " entries");
  }
}

bool contains_all(const IndexSet& set, const IndexSet& subset) {
  return std::includes(set.begin(), set.end(), subset.begin(), subset.end());
}

// Upper bounds (d^- a_j)^- for the equation part, in original indexing:
// forced-zero columns get zero, free columns get top.
Vector equation_bounds(const Preprocessed& p, const Vector& d) {
  const Semifield sf = d.semifield();
  switch (p.verdict) {
    case Verdict::AllVectors:
    case Verdict::NoSolution:
      return Vector::filled(sf, p.free_cols.size(), carrier::top(sf));
    case Verdict::TrivialZero:
      return p.expand(Vector::zeros(sf, p.kept_cols.size()), carrier::top(sf));
    case Verdict::Regular:
      break;
  }
  const CoVector row = pseudo_invert(d) * p.reduced;
  std::vector<double> bounds(row.size());
  for (std::size_t k = 0; k < row.size(); ++k) {
    bounds[k] = carrier::is_zero(sf, row[k]) ? carrier::zero(sf) : carrier::inv(sf, row[k]);
  }
  return p.expand(Vector(sf, std::move(bounds)), carrier::top(sf));
}

Scalar equation_delta(const Preprocessed& p, const Vector& d) {
  const Semifield sf = d.semifield();
  switch (p.verdict) {
    case Verdict::AllVectors:
    case Verdict::TrivialZero:
      return Scalar::one(sf);
    case Verdict::NoSolution:
      return Scalar::top(sf);
    case Verdict::Regular:
      break;
  }
  return distance::nearest_point(p.reduced, d).delta;
}

FamilyMember make_member(IndexSet index_set, const Vector& bounds, const IndexSet& free_cols) {
  const Semifield sf = bounds.semifield();
  std::vector<ComponentKind> kinds(bounds.size(), ComponentKind::Bounded);
  for (std::size_t j = 0; j < bounds.size(); ++j) {
    if (carrier::is_zero(sf, bounds[j])) kinds[j] = ComponentKind::Fixed;
  }
  for (std::size_t j : free_cols) kinds[j] = ComponentKind::Free;
  for (std::size_t j : index_set) kinds[j] = ComponentKind::Fixed;
  return {std::move(index_set), std::move(kinds), bounds};
}

// Calls visit(combination) for every k-subset of `pool` in lexicographic order.
template <class Visit>
void for_each_combination(const IndexSet& pool, std::size_t k, Visit&& visit) {
  const std::size_t n = pool.size();
  if (k > n) return;
  std::vector<std::size_t> pos(k);
  for (std::size_t i = 0; i < k; ++i) pos[i] = i;
  IndexSet combo(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) combo[i] = pool[pos[i]];
    visit(combo);
    std::size_t i = k;
    while (i > 0 && pos[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++pos[i - 1];
    for (std::size_t r = i; r < k; ++r) pos[r] = pos[r - 1] + 1;
  }
}

}  // namespace

Vector Preprocessed::expand(const Vector& reduced_x, double fill) const {
  const Semifield sf = reduced_x.semifield();
  std::vector<double> out(kept_cols.size() + free_cols.size(), fill);
  for (std::size_t k = 0; k < kept_cols.size(); ++k) out[kept_cols[k]] = reduced_x[k];
  return Vector(sf, std::move(out));
}

Preprocessed preprocess(const Matrix& a, const Vector& d) {
  require_shape(a, d, "preprocess");
  distance::require_no_top(a, "matrix");
  distance::require_no_top(d, "right-hand side");
  const Semifield sf = a.semifield();

  IndexSet kept;
  IndexSet free_cols;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    (a.column_is_zero(j) ? free_cols : kept).push_back(j);
  }

  Preprocessed p{Verdict::Regular, a.select_columns(kept), kept, free_cols, {}, {}};
  const bool zero_d = d.is_zero();
  if (kept.empty()) {
    p.verdict = zero_d ? Verdict::AllVectors : Verdict::NoSolution;
    p.reduced = Matrix::zeros(sf, a.rows(), 0);
    return p;
  }
  if (zero_d) {
    p.verdict = Verdict::TrivialZero;
    return p;
  }
  distance::ConsistentForm form = distance::make_consistent(p.reduced, d);
  p.reduced = std::move(form.a_hat);
  p.zero_rows_of_d = std::move(form.zero_rows_of_d);
  for (std::size_t k : form.forced_zero_cols) p.forced_zero_cols.push_back(kept[k]);
  return p;
}

InequalitySolution solve_inequality(const Matrix& a, const Vector& d) {
  const Preprocessed p = preprocess(a, d);
  return {equation_bounds(p, d), p.free_cols};
}

EquationSolution solve_equation(const Matrix& a, const Vector& d, bool check_uniqueness,
                                const SolveOptions& options) {
  const Preprocessed p = preprocess(a, d);
  const Semifield sf = a.semifield();
  EquationSolution out{false,       Scalar::top(sf), std::nullopt,       std::nullopt,
                       std::nullopt, p.free_cols,    p.zero_rows_of_d, p.forced_zero_cols};
  switch (p.verdict) {
    case Verdict::NoSolution:
      return out;
    case Verdict::AllVectors:
    case Verdict::TrivialZero:
      out.solvable = true;
      out.delta = Scalar::one(sf);
      out.maximal = equation_bounds(p, d);
      out.pseudo = out.maximal;
      out.unique = p.free_cols.empty();
      return out;
    case Verdict::Regular:
      break;
  }

  const distance::Residual r = distance::nearest_point(p.reduced, d);
  out.delta = r.delta;
  out.solvable = distance::is_one(r.delta, options.tolerance);
  if (r.argmin_x) out.pseudo = p.expand(*r.argmin_x, carrier::top(sf));
  if (!out.solvable) return out;
  out.maximal = equation_bounds(p, d);

  if (check_uniqueness) {
    // Unique iff the only minimal generating set is every column that can
    // carry a nonzero coefficient, and no column is free.
    IndexSet active;
    for (std::size_t j : p.kept_cols) {
      if (!std::binary_search(p.forced_zero_cols.begin(), p.forced_zero_cols.end(), j)) {
        active.push_back(j);
      }
    }
    const auto generators = enumerate_minimal_generators(a, d, options);
    out.unique = p.free_cols.empty() && generators.size() == 1 && generators.front() == active;
  }
  return out;
}

BilateralBounds bilateral_bounds(const Matrix& a, const Vector& d) {
  distance::Projection below = distance::project_below(a, d);
  distance::Projection above = distance::project_above(a, d);
  return {std::move(below.x), std::move(above.x), below.rho};
}

std::vector<IndexSet> enumerate_minimal_generators(const Matrix& a, const Vector& d,
                                                   const SolveOptions& options) {
  if (a.cols() > options.enumeration_cap) throw CapacityError(a.cols(), options.enumeration_cap);
  const Preprocessed p = preprocess(a, d);
  switch (p.verdict) {
    case Verdict::NoSolution:
      return {};
    case Verdict::AllVectors:
    case Verdict::TrivialZero:
      return {IndexSet{}};
    case Verdict::Regular:
      break;
  }

  IndexSet pool;
  for (std::size_t j : p.kept_cols) {
    if (!std::binary_search(p.forced_zero_cols.begin(), p.forced_zero_cols.end(), j)) {
      pool.push_back(j);
    }
  }
  const double eps = options.tolerance;
  if (!distance::membership(a.select_columns(pool), d, eps).member) return {};

  std::vector<IndexSet> found;
  for (std::size_t k = 1; k <= pool.size(); ++k) {
    for_each_combination(pool, k, [&](const IndexSet& combo) {
      for (const IndexSet& g : found) {
        if (contains_all(combo, g)) return;
      }
      if (distance::membership(a.select_columns(combo), d, eps).member) found.push_back(combo);
    });
  }
  return found;
}

bool FamilyMember::contains(const Vector& x, double eps) const {
  if (x.size() != values.size() || x.semifield() != values.semifield()) return false;
  const Semifield sf = values.semifield();
  for (std::size_t j = 0; j < values.size(); ++j) {
    switch (kinds[j]) {
      case ComponentKind::Fixed:
        if (!carrier::approx_equal(sf, x[j], values[j], eps)) return false;
        break;
      case ComponentKind::Bounded:
        if (!carrier::approx_leq(sf, x[j], values[j], eps)) return false;
        break;
      case ComponentKind::Free:
        break;
    }
  }
  return true;
}

SolutionFamily general_solution(const Matrix& a, const Vector& d, const SolveOptions& options) {
  const auto generators = enumerate_minimal_generators(a, d, options);
  const Preprocessed p = preprocess(a, d);
  SolutionFamily family{equation_delta(p, d), {}, p.free_cols, {}};
  const Vector bounds = equation_bounds(p, d);
  for (const IndexSet& g : generators) family.members.push_back(make_member(g, bounds, p.free_cols));
  if (family.members.empty()) family.reason = "d is not in the span of the columns of A";
  return family;
}

SolutionFamily solve_system(const Matrix& a, const Vector& d, const Matrix& c, const Vector& b,
                            const SolveOptions& options) {
  require_shape(a, d, "equation");
  require_shape(c, b, "inequality");
  if (a.semifield() != c.semifield()) throw SemifieldMismatch("equation and inequality semifields differ");
  if (a.cols() != c.cols()) {
    throw DimensionError("equation has " + std::to_string(a.cols()) +
                         " unknowns but inequality has " + std::to_string(c.cols()));
  }
  const Semifield sf = a.semifield();
  const double eps = options.tolerance;
  const Vector limit = solve_inequality(c, b).upper_bound;

  SolutionFamily eq = general_solution(a, d, options);
  SolutionFamily out{eq.delta, {}, {}, {}};
  for (const FamilyMember& m : eq.members) {
    bool feasible = true;
    std::vector<double> values(m.values.entries().begin(), m.values.entries().end());
    for (std::size_t j = 0; j < values.size(); ++j) {
      if (m.kinds[j] == ComponentKind::Fixed) {
        if (!carrier::approx_leq(sf, values[j], limit[j], eps)) feasible = false;
      } else {
        values[j] = carrier::meet(sf, values[j], limit[j]);
      }
    }
    if (!feasible) continue;
    FamilyMember member{m.index_set, m.kinds, Vector(sf, std::move(values))};
    for (std::size_t j = 0; j < member.kinds.size(); ++j) {
      if (member.kinds[j] == ComponentKind::Fixed) continue;
      const double v = member.values[j];
      if (carrier::is_zero(sf, v)) {
        member.kinds[j] = ComponentKind::Fixed;
      } else {
        member.kinds[j] = v == carrier::top(sf) ? ComponentKind::Free : ComponentKind::Bounded;
      }
    }
    out.members.push_back(std::move(member));
  }
  for (std::size_t j = 0; j < a.cols(); ++j) {
    bool free_everywhere = !out.members.empty();
    for (const FamilyMember& m : out.members) {
      if (m.kinds[j] != ComponentKind::Free) free_everywhere = false;
    }
    if (free_everywhere) out.free_cols.push_back(j);
  }
  if (!eq.solvable()) {
    out.reason = eq.reason;
  } else if (out.members.empty()) {
    out.reason = "no minimal generating set is compatible with Cx <= b";
  }
  return out;
}

ExtendedSolution solve_extended(const Matrix& a, const Vector& b, const Vector& d,
                                const SolveOptions& options) {
  require_shape(a, d, "extended equation");
  require_shape(a, b, "extended equation offset");
  distance::require_no_top(b, "offset vector");
  const Semifield sf = a.semifield();
  const double eps = options.tolerance;

  if (!approx_leq(b, d, eps)) {
    SolutionFamily none{Scalar::top(sf), {}, {}, "b not ≤ d"};
    return {std::move(none), std::nullopt, Scalar::top(sf)};
  }

  ExtendedSplit split{{}, {}, a, a, d, b};
  for (std::size_t i = 0; i < d.size(); ++i) {
    const bool strictly_below =
        carrier::less(sf, b[i], d[i]) && !carrier::approx_equal(sf, b[i], d[i], eps);
    (strictly_below ? split.i1 : split.i2).push_back(i);
  }
  split.a1 = a.select_rows(split.i1);
  split.a2 = a.select_rows(split.i2);
  split.d1 = select(d, split.i1);
  split.b2 = select(b, split.i2);

  if (split.i1.empty()) {
    // Only the inequality part remains: x <= (d^- A)^-.
    const InequalitySolution ineq = solve_inequality(a, d);
    SolutionFamily family{Scalar::one(sf), {}, ineq.free_cols, {}};
    family.members.push_back(make_member({}, ineq.upper_bound, ineq.free_cols));
    return {std::move(family), std::move(split), Scalar::one(sf)};
  }

  SolutionFamily family = solve_system(split.a1, split.d1, split.a2, split.b2, options);
  Scalar delta1 = family.delta;
  return {std::move(family), std::move(split), delta1};
}

}  // namespace tropic::solver
