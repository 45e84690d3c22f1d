#pragma once

#include <optional>

#include "tropic/linalg.hpp"
#include "tropic/semifield.hpp"

namespace tropic::dependence {

struct DependenceReport {
  bool dependent = false;
  /// Residual of the tested vector against the system.
  Scalar delta;
  /// (d^- A)^-, present iff dependent; reproduces d.
  std::optional<Vector> coefficients;
};

struct BasisResult {
  /// Retained column indices of the input, ascending.
  IndexSet kept;
  Matrix basis;
  /// Independence margin of the retained system (top for a single column).
  Scalar margin;
};

/// Is d a linear combination of the columns of A?
DependenceReport is_dependent(const Vector& d, const Matrix& a, double eps = kDefaultTolerance);

/// Minimum over columns of the residual of each column against the others.
/// A single column is independent by convention and yields top. Throws
/// DomainError for an empty matrix or a zero column.
Scalar independence_margin(const Matrix& a);

/// margin > one, strictly beyond eps.
bool is_independent(const Matrix& a, double eps = kDefaultTolerance);

/// Scans columns in ascending order and drops each column generated by the
/// columns still retained. Of two mutually generating columns the later one
/// survives. Throws DomainError for a zero column.
BasisResult extract_basis(const Matrix& a, double eps = kDefaultTolerance);

}  // namespace tropic::dependence
