#pragma once

// Dense vectors, co-vectors and matrices over an idempotent semifield.
//
// Indices are 0-based in the API. Linear spans are never materialized; a
// span is always represented by its generator matrix.

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "tropic/semifield.hpp"

namespace tropic {

/// Sorted, duplicate-free 0-based row or column indices.
using IndexSet = std::vector<std::size_t>;

struct ColumnOrientation {};
struct RowOrientation {};

/// Column vectors (ColumnOrientation) and row co-vectors (RowOrientation)
/// share one representation but are distinct types.
template <class Orientation>
class BasicVector {
 public:
  /// Throws DomainError if an entry lies outside the carrier.
  BasicVector(Semifield sf, std::vector<double> entries);
  BasicVector(Semifield sf, std::initializer_list<double> entries)
      : BasicVector(sf, std::vector<double>(entries)) {}

  static BasicVector zeros(Semifield sf, std::size_t size);
  static BasicVector filled(Semifield sf, std::size_t size, double value);

  Semifield semifield() const noexcept { return sf_; }
  std::size_t size() const noexcept { return entries_.size(); }
  std::span<const double> entries() const noexcept { return entries_; }

  double operator[](std::size_t i) const noexcept { return entries_[i]; }
  Scalar at(std::size_t i) const;
  /// Throws DomainError if `value` lies outside the carrier.
  void set(std::size_t i, double value);

  bool is_zero() const noexcept;
  /// No zero entries.
  bool is_regular() const noexcept;

  friend bool operator==(const BasicVector& a, const BasicVector& b) noexcept {
    return a.sf_ == b.sf_ && a.entries_ == b.entries_;
  }

 private:
  Semifield sf_;
  std::vector<double> entries_;
};

using Vector = BasicVector<ColumnOrientation>;
using CoVector = BasicVector<RowOrientation>;

extern template class BasicVector<ColumnOrientation>;
extern template class BasicVector<RowOrientation>;

class Matrix {
 public:
  /// Row-major entries. Throws DimensionError / DomainError.
  Matrix(Semifield sf, std::size_t rows, std::size_t cols, std::vector<double> row_major);

  static Matrix from_rows(Semifield sf, const std::vector<std::vector<double>>& rows);
  /// All columns must share a length and semifield.
  static Matrix from_columns(Semifield sf, const std::vector<Vector>& columns);
  static Matrix zeros(Semifield sf, std::size_t rows, std::size_t cols);
  static Matrix identity(Semifield sf, std::size_t n);

  Semifield semifield() const noexcept { return sf_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double operator()(std::size_t i, std::size_t j) const noexcept {
    return entries_[i * cols_ + j];
  }
  void set(std::size_t i, std::size_t j, double value);

  Vector column(std::size_t j) const;
  CoVector row(std::size_t i) const;

  Matrix select_columns(const IndexSet& cols) const;
  Matrix select_rows(const IndexSet& rows) const;
  Matrix without_column(std::size_t j) const;

  bool is_zero() const noexcept;
  bool column_is_zero(std::size_t j) const noexcept;
  bool row_is_zero(std::size_t i) const noexcept;

  friend bool operator==(const Matrix& a, const Matrix& b) noexcept {
    return a.sf_ == b.sf_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.entries_ == b.entries_;
  }

 private:
  Semifield sf_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> entries_;
};

struct Regularity {
  bool row_regular;
  bool column_regular;
};

Vector vec_add(const Vector& a, const Vector& b);
Vector scalar_mul(const Scalar& x, const Vector& a);
Vector mat_vec_mul(const Matrix& a, const Vector& x);
Matrix mat_mul(const Matrix& b, const Matrix& c);

/// Row-by-column product, a single scalar.
Scalar inner(const CoVector& row, const Vector& col);
/// Row vector times matrix.
CoVector covec_mat_mul(const CoVector& row, const Matrix& a);

/// x^- : entries x_i^{-1} on the support of x, zero elsewhere.
/// Throws DomainError for the zero vector.
CoVector pseudo_invert(const Vector& x);
/// The transpose rule for row vectors, giving a column vector.
Vector pseudo_invert(const CoVector& x);

IndexSet support(const Vector& a);
Regularity regularity(const Matrix& a);

/// b^- a (+) a^- b when supp(a) = supp(b); top when supports differ;
/// one when both are zero.
Scalar vec_distance(const Vector& a, const Vector& b);

/// Component-wise semiring order.
bool leq(const Vector& a, const Vector& b);
bool approx_leq(const Vector& a, const Vector& b, double eps = kDefaultTolerance);
bool approx_equal(const Vector& a, const Vector& b, double eps = kDefaultTolerance);
/// Component-wise order-minimum.
Vector meet(const Vector& a, const Vector& b);
Vector select(const Vector& a, const IndexSet& indices);

inline Vector operator+(const Vector& a, const Vector& b) { return vec_add(a, b); }
inline Vector operator*(const Scalar& x, const Vector& a) { return scalar_mul(x, a); }
inline Vector operator*(const Matrix& a, const Vector& x) { return mat_vec_mul(a, x); }
inline Matrix operator*(const Matrix& b, const Matrix& c) { return mat_mul(b, c); }
inline Scalar operator*(const CoVector& r, const Vector& c) { return inner(r, c); }
inline CoVector operator*(const CoVector& r, const Matrix& a) { return covec_mat_mul(r, a); }

std::ostream& operator<<(std::ostream& os, const Vector& v);
std::ostream& operator<<(std::ostream& os, const CoVector& v);
std::ostream& operator<<(std::ostream& os, const Matrix& a);

}  // namespace tropic
