#pragma once

// Solution of Ax <= d, Ax = d, the system {Ax = d, Cx <= b} and the
// extended equation Ax (+) b = d.
//
// Columns of A that are zero do not influence Ax; the matching unknowns
// range over the whole semifield and are reported as free. In vectors such
// as the maximal solution a free component holds the maximal element (top),
// which is consistent with zero being absorbing.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tropic/linalg.hpp"
#include "tropic/semifield.hpp"

namespace tropic::solver {

inline constexpr std::size_t kDefaultEnumerationCap = 20;

struct SolveOptions {
  double tolerance = kDefaultTolerance;
  /// Upper limit on the column count for minimal-generator enumeration.
  std::size_t enumeration_cap = kDefaultEnumerationCap;
};

enum class Verdict {
  Regular,      ///< d != 0 and A != 0: the general machinery applies.
  AllVectors,   ///< A = 0 and d = 0: every x solves the equation.
  NoSolution,   ///< A = 0 and d != 0: the equation has no solution.
  TrivialZero,  ///< d = 0, A != 0: x = 0 on the nonzero columns.
};

struct Preprocessed {
  Verdict verdict = Verdict::Regular;
  /// Consistent form of A restricted to its nonzero columns.
  Matrix reduced;
  /// reduced column k corresponds to original column kept_cols[k].
  IndexSet kept_cols;
  /// Zero columns of A.
  IndexSet free_cols;
  /// Rows where d is zero, and columns forced to zero by them.
  IndexSet zero_rows_of_d;
  IndexSet forced_zero_cols;

  /// Original-length vector from a reduced one; free components get `fill`.
  Vector expand(const Vector& reduced_x, double fill) const;
};

/// Never throws for degenerate input; throws DimensionError,
/// SemifieldMismatch, or DomainError (maximal element among the entries).
Preprocessed preprocess(const Matrix& a, const Vector& d);

struct InequalitySolution {
  /// Ax <= d  iff  x <= upper_bound. Free components hold top.
  Vector upper_bound;
  IndexSet free_cols;
};

InequalitySolution solve_inequality(const Matrix& a, const Vector& d);

struct EquationSolution {
  bool solvable = false;
  Scalar delta;
  /// (d^- A)^-, present iff solvable.
  std::optional<Vector> maximal;
  /// Present when decided: always for degenerate input, otherwise only when
  /// uniqueness checking was requested and the equation is solvable.
  std::optional<bool> unique;
  /// Delta (d^- A)^-, present iff delta is finite.
  std::optional<Vector> pseudo;
  IndexSet free_cols;
  IndexSet zero_rows_of_d;
  IndexSet forced_zero_cols;
};

EquationSolution solve_equation(const Matrix& a, const Vector& d, bool check_uniqueness = false,
                                const SolveOptions& options = {});

struct BilateralBounds {
  Vector x1;  ///< A x1 <= d
  Vector x2;  ///< A x2 >= d
  Scalar rho; ///< deviation of both, Delta^2
};

/// Throws DomainError when the residual is infinite.
BilateralBounds bilateral_bounds(const Matrix& a, const Vector& d);

/// All minimal column sets I whose span contains d, ordered by cardinality
/// then lexicographically. Empty when Ax = d is unsolvable; {{}} when d = 0.
/// Throws CapacityError when A has more columns than the cap.
std::vector<IndexSet> enumerate_minimal_generators(const Matrix& a, const Vector& d,
                                                   const SolveOptions& options = {});

enum class ComponentKind {
  Fixed,    ///< x_i equals the stored value.
  Bounded,  ///< x_i ranges over [0, stored value].
  Free,     ///< x_i ranges over the whole semifield; stored value is top.
};

struct FamilyMember {
  IndexSet index_set;
  std::vector<ComponentKind> kinds;
  Vector values;

  /// All bounded and free components at their upper limits.
  const Vector& extreme() const noexcept { return values; }
  bool contains(const Vector& x, double eps = kDefaultTolerance) const;
};

struct SolutionFamily {
  Scalar delta;
  std::vector<FamilyMember> members;
  IndexSet free_cols;
  /// Why the family is empty; blank when solvable.
  std::string reason;

  bool solvable() const noexcept { return !members.empty(); }
};

/// Ax = d: one member per minimal generating set.
SolutionFamily general_solution(const Matrix& a, const Vector& d, const SolveOptions& options = {});

/// {Ax = d, Cx <= b}: members whose fixed components satisfy the inequality,
/// with bounds tightened by it.
SolutionFamily solve_system(const Matrix& a, const Vector& d, const Matrix& c, const Vector& b,
                            const SolveOptions& options = {});

struct ExtendedSplit {
  IndexSet i1;  ///< rows with b_i < d_i
  IndexSet i2;  ///< rows with b_i = d_i (within tolerance)
  Matrix a1;
  Matrix a2;
  Vector d1;
  Vector b2;
};

struct ExtendedSolution {
  SolutionFamily family;
  /// Absent when b is not below d.
  std::optional<ExtendedSplit> split;
  /// Residual of d1 against A1; one when the equation part is empty.
  Scalar delta1;
};

/// Ax (+) b = d, via the equivalent system {A1 x = d1, A2 x <= b2}.
ExtendedSolution solve_extended(const Matrix& a, const Vector& b, const Vector& d,
                                const SolveOptions& options = {});

}  // namespace tropic::solver
