#pragma once

// Distance from a vector d to the linear span of the columns of A, and to
// the half-spaces {Ax <= d} and {Ax >= d}.
//
// The residual
//
//   Delta_A(d) = sqrt( (A (d^- A)^-)^- d )
//
// is the minimum rho-distance from d to span(A); it is attained at
// x* = Delta (d^- A)^-. Delta = one exactly when d lies in the span.

#include <optional>

#include "tropic/linalg.hpp"
#include "tropic/semifield.hpp"

namespace tropic::distance {

/// A paired with d so that columns meeting a zero row of d are zeroed
/// everywhere else.
struct ConsistentForm {
  Matrix a_hat;
  /// J: columns with a nonzero entry in a zero row of d.
  IndexSet forced_zero_cols;
  /// I: rows where d is zero.
  IndexSet zero_rows_of_d;
};

struct Residual {
  Scalar delta;
  /// x* = Delta (d^- A)^-, present iff delta is finite.
  std::optional<Vector> argmin_x;
  /// y* = A x*, present iff delta is finite.
  std::optional<Vector> nearest_y;
  /// Row regularity of A restricted to the nonzero rows of d.
  bool row_regular = false;
  /// d had zero rows, so A was replaced by its consistent form.
  bool consistent_form_applied = false;
  IndexSet zero_rows_of_d;
  IndexSet forced_zero_cols;
};

struct Projection {
  Vector x;
  Vector y;  ///< A x
  Scalar rho;
};

struct Membership {
  bool member = false;
  Scalar delta;
  /// (d^- A)^-, present iff member; A * witness reproduces d.
  std::optional<Vector> witness;
};

/// Throws DomainError for zero d, DimensionError on shape mismatch.
ConsistentForm make_consistent(const Matrix& a, const Vector& d);

/// Requires A already consistent with d (ContractViolation otherwise) and
/// d != 0 (DomainError).
Residual residual(const Matrix& a, const Vector& d);

/// Applies the consistency transform, then evaluates the residual. For zero
/// d the distance is one with witness x = 0. Forced-zero columns get x_j = 0.
Residual nearest_point(const Matrix& a, const Vector& d);

/// Minimum over {Ax <= d}: x1 = (d^- A)^-, deviation Delta^2.
Projection project_below(const Matrix& a, const Vector& d);
/// Minimum over {Ax >= d}: x2 = Delta^2 (d^- A)^-, deviation Delta^2.
/// Throws DomainError when Delta is infinite.
Projection project_above(const Matrix& a, const Vector& d);

/// d in span(A) iff Delta == one within eps (in the additive image).
Membership membership(const Matrix& a, const Vector& d, double eps = kDefaultTolerance);

/// True when x == one within eps in the additive image.
bool is_one(const Scalar& x, double eps = kDefaultTolerance);

/// Throws DomainError if any entry is the adjoined maximal element, which is
/// not a valid coefficient of a problem instance.
void require_no_top(const Matrix& a, const char* what);
void require_no_top(const Vector& v, const char* what);

}  // namespace tropic::distance
