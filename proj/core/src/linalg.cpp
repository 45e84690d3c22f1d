#include "tropic/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "tropic/error.hpp"

namespace tropic {

namespace {

void require_same(Semifield a, Semifield b) {
  if (a != b) {
    throw SemifieldMismatch(std::string("semifield mismatch: ") + std::string(to_string(a)) +
                            " vs " + std::string(to_string(b)));
  }
}

void require_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": " + std::to_string(a) + " vs " +
                         std::to_string(b));
  }
}

void check_carrier(Semifield sf, double v) {
  if (!carrier::in_carrier(sf, v)) {
    throw DomainError("value " + std::to_string(v) + " is outside the carrier of " +
                      std::string(to_string(sf)));
  }
}

void print_value(std::ostream& os, double v) {
  if (std::isinf(v)) {
    os << (v > 0 ? "+inf" : "-inf");
  } else {
    os << v;
  }
}

template <class V>
void print_entries(std::ostream& os, const V& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    print_value(os, v[i]);
  }
  os << ')';
}

}  // namespace

template <class Orientation>
BasicVector<Orientation>::BasicVector(Semifield sf, std::vector<double> entries)
    : sf_(sf), entries_(std::move(entries)) {
  for (double v : entries_) check_carrier(sf_, v);
}

template <class Orientation>
BasicVector<Orientation> BasicVector<Orientation>::zeros(Semifield sf, std::size_t size) {
  return filled(sf, size, carrier::zero(sf));
}

template <class Orientation>
BasicVector<Orientation> BasicVector<Orientation>::filled(Semifield sf, std::size_t size,
                                                          double value) {
  return BasicVector(sf, std::vector<double>(size, value));
}

template <class Orientation>
Scalar BasicVector<Orientation>::at(std::size_t i) const {
  if (i >= entries_.size()) throw DimensionError("vector index out of range");
  return Scalar(sf_, entries_[i]);
}

template <class Orientation>
void BasicVector<Orientation>::set(std::size_t i, double value) {
  if (i >= entries_.size()) throw DimensionError("vector index out of range");
  check_carrier(sf_, value);
  entries_[i] = value;
}

template <class Orientation>
bool BasicVector<Orientation>::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(),
                     [&](double v) { return carrier::is_zero(sf_, v); });
}

template <class Orientation>
bool BasicVector<Orientation>::is_regular() const noexcept {
  return std::none_of(entries_.begin(), entries_.end(),
                      [&](double v) { return carrier::is_zero(sf_, v); });
}

template class BasicVector<ColumnOrientation>;
template class BasicVector<RowOrientation>;

Matrix::Matrix(Semifield sf, std::size_t rows, std::size_t cols, std::vector<double> row_major)
    : sf_(sf), rows_(rows), cols_(cols), entries_(std::move(row_major)) {
  require_size(entries_.size(), rows * cols, "matrix entry count");
  for (double v : entries_) check_carrier(sf_, v);
}

Matrix Matrix::from_rows(Semifield sf, const std::vector<std::vector<double>>& rows) {
  const std::size_t m = rows.size();
  const std::size_t n = m ? rows.front().size() : 0;
  std::vector<double> data;
  data.reserve(m * n);
  for (const auto& r : rows) {
    require_size(r.size(), n, "ragged matrix rows");
    data.insert(data.end(), r.begin(), r.end());
  }
  return Matrix(sf, m, n, std::move(data));
}

Matrix Matrix::from_columns(Semifield sf, const std::vector<Vector>& columns) {
  const std::size_t n = columns.size();
  const std::size_t m = n ? columns.front().size() : 0;
  std::vector<double> data(m * n);
  for (std::size_t j = 0; j < n; ++j) {
    require_same(sf, columns[j].semifield());
    require_size(columns[j].size(), m, "column length");
    for (std::size_t i = 0; i < m; ++i) data[i * n + j] = columns[j][i];
  }
  return Matrix(sf, m, n, std::move(data));
}

Matrix Matrix::zeros(Semifield sf, std::size_t rows, std::size_t cols) {
  return Matrix(sf, rows, cols, std::vector<double>(rows * cols, carrier::zero(sf)));
}

Matrix Matrix::identity(Semifield sf, std::size_t n) {
  Matrix a = zeros(sf, n, n);
  for (std::size_t i = 0; i < n; ++i) a.entries_[i * n + i] = carrier::one(sf);
  return a;
}

void Matrix::set(std::size_t i, std::size_t j, double value) {
  if (i >= rows_ || j >= cols_) throw DimensionError("matrix index out of range");
  check_carrier(sf_, value);
  entries_[i * cols_ + j] = value;
}

Vector Matrix::column(std::size_t j) const {
  if (j >= cols_) throw DimensionError("column index out of range");
  std::vector<double> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return Vector(sf_, std::move(v));
}

CoVector Matrix::row(std::size_t i) const {
  if (i >= rows_) throw DimensionError("row index out of range");
  return CoVector(sf_, std::vector<double>(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                           entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)));
}

Matrix Matrix::select_columns(const IndexSet& cols) const {
  std::vector<double> data;
  data.reserve(rows_ * cols.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j : cols) {
      if (j >= cols_) throw DimensionError("column index out of range");
      data.push_back((*this)(i, j));
    }
  }
  return Matrix(sf_, rows_, cols.size(), std::move(data));
}

Matrix Matrix::select_rows(const IndexSet& rows) const {
  std::vector<double> data;
  data.reserve(rows.size() * cols_);
  for (std::size_t i : rows) {
    if (i >= rows_) throw DimensionError("row index out of range");
    for (std::size_t j = 0; j < cols_; ++j) data.push_back((*this)(i, j));
  }
  return Matrix(sf_, rows.size(), cols_, std::move(data));
}

Matrix Matrix::without_column(std::size_t j) const {
  if (j >= cols_) throw DimensionError("column index out of range");
  IndexSet keep;
  for (std::size_t k = 0; k < cols_; ++k) {
    if (k != j) keep.push_back(k);
  }
  return select_columns(keep);
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(),
                     [&](double v) { return carrier::is_zero(sf_, v); });
}

bool Matrix::column_is_zero(std::size_t j) const noexcept {
  for (std::size_t i = 0; i < rows_; ++i) {
    if (!carrier::is_zero(sf_, (*this)(i, j))) return false;
  }
  return true;
}

bool Matrix::row_is_zero(std::size_t i) const noexcept {
  for (std::size_t j = 0; j < cols_; ++j) {
    if (!carrier::is_zero(sf_, (*this)(i, j))) return false;
  }
  return true;
}

Vector vec_add(const Vector& a, const Vector& b) {
  require_same(a.semifield(), b.semifield());
  require_size(a.size(), b.size(), "vector length");
  const Semifield sf = a.semifield();
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = carrier::add(sf, a[i], b[i]);
  return Vector(sf, std::move(out));
}

Vector scalar_mul(const Scalar& x, const Vector& a) {
  require_same(x.semifield(), a.semifield());
  const Semifield sf = a.semifield();
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = carrier::mul(sf, x.value(), a[i]);
  return Vector(sf, std::move(out));
}

Vector mat_vec_mul(const Matrix& a, const Vector& x) {
  require_same(a.semifield(), x.semifield());
  require_size(a.cols(), x.size(), "matrix-vector product");
  const Semifield sf = a.semifield();
  std::vector<double> out(a.rows(), carrier::zero(sf));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double acc = carrier::zero(sf);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      acc = carrier::add(sf, acc, carrier::mul(sf, a(i, j), x[j]));
    }
    out[i] = acc;
  }
  return Vector(sf, std::move(out));
}

Matrix mat_mul(const Matrix& b, const Matrix& c) {
  require_same(b.semifield(), c.semifield());
  require_size(b.cols(), c.rows(), "matrix product");
  const Semifield sf = b.semifield();
  std::vector<double> out(b.rows() * c.cols(), carrier::zero(sf));
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < c.cols(); ++j) {
      double acc = carrier::zero(sf);
      for (std::size_t k = 0; k < b.cols(); ++k) {
        acc = carrier::add(sf, acc, carrier::mul(sf, b(i, k), c(k, j)));
      }
      out[i * c.cols() + j] = acc;
    }
  }
  return Matrix(sf, b.rows(), c.cols(), std::move(out));
}

Scalar inner(const CoVector& row, const Vector& col) {
  require_same(row.semifield(), col.semifield());
  require_size(row.size(), col.size(), "inner product");
  const Semifield sf = row.semifield();
  double acc = carrier::zero(sf);
  for (std::size_t i = 0; i < row.size(); ++i) {
    acc = carrier::add(sf, acc, carrier::mul(sf, row[i], col[i]));
  }
  return Scalar(sf, acc);
}

CoVector covec_mat_mul(const CoVector& row, const Matrix& a) {
  require_same(row.semifield(), a.semifield());
  require_size(row.size(), a.rows(), "co-vector-matrix product");
  const Semifield sf = a.semifield();
  std::vector<double> out(a.cols(), carrier::zero(sf));
  for (std::size_t j = 0; j < a.cols(); ++j) {
    double acc = carrier::zero(sf);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      acc = carrier::add(sf, acc, carrier::mul(sf, row[i], a(i, j)));
    }
    out[j] = acc;
  }
  return CoVector(sf, std::move(out));
}

namespace {

template <class To, class From>
To pseudo_invert_impl(const From& x) {
  if (x.is_zero()) throw DomainError("pseudo-inverse of the zero vector is undefined");
  const Semifield sf = x.semifield();
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = carrier::is_zero(sf, x[i]) ? carrier::zero(sf) : carrier::inv(sf, x[i]);
  }
  return To(sf, std::move(out));
}

}  // namespace

CoVector pseudo_invert(const Vector& x) { return pseudo_invert_impl<CoVector>(x); }
Vector pseudo_invert(const CoVector& x) { return pseudo_invert_impl<Vector>(x); }

IndexSet support(const Vector& a) {
  IndexSet s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!carrier::is_zero(a.semifield(), a[i])) s.push_back(i);
  }
  return s;
}

Regularity regularity(const Matrix& a) {
  Regularity r{true, true};
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (a.row_is_zero(i)) r.row_regular = false;
  }
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (a.column_is_zero(j)) r.column_regular = false;
  }
  return r;
}

Scalar vec_distance(const Vector& a, const Vector& b) {
  require_same(a.semifield(), b.semifield());
  require_size(a.size(), b.size(), "vector length");
  const Semifield sf = a.semifield();
  double acc = carrier::one(sf);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const bool za = carrier::is_zero(sf, a[i]);
    const bool zb = carrier::is_zero(sf, b[i]);
    if (za != zb) return Scalar::top(sf);
    if (za) continue;
    acc = carrier::add(sf, acc, carrier::distance(sf, a[i], b[i]));
  }
  return Scalar(sf, acc);
}

bool leq(const Vector& a, const Vector& b) { return approx_leq(a, b, 0.0); }

bool approx_leq(const Vector& a, const Vector& b, double eps) {
  require_same(a.semifield(), b.semifield());
  require_size(a.size(), b.size(), "vector length");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!carrier::approx_leq(a.semifield(), a[i], b[i], eps)) return false;
  }
  return true;
}

bool approx_equal(const Vector& a, const Vector& b, double eps) {
  require_same(a.semifield(), b.semifield());
  require_size(a.size(), b.size(), "vector length");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!carrier::approx_equal(a.semifield(), a[i], b[i], eps)) return false;
  }
  return true;
}

Vector meet(const Vector& a, const Vector& b) {
  require_same(a.semifield(), b.semifield());
  require_size(a.size(), b.size(), "vector length");
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = carrier::meet(a.semifield(), a[i], b[i]);
  return Vector(a.semifield(), std::move(out));
}

Vector select(const Vector& a, const IndexSet& indices) {
  std::vector<double> out;
  out.reserve(indices.size());
  for (std::size_t i : indices) {
    if (i >= a.size()) throw DimensionError("vector index out of range");
    out.push_back(a[i]);
  }
  return Vector(a.semifield(), std::move(out));
}

std::ostream& operator<<(std::ostream& os, const Vector& v) {
  print_entries(os, v);
  return os << "^T";
}

std::ostream& operator<<(std::ostream& os, const CoVector& v) {
  print_entries(os, v);
  return os;
}

std::ostream& operator<<(std::ostream& os, const Matrix& a) {
  os << '[';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) os << ", ";
      print_value(os, a(i, j));
    }
    os << ']';
  }
  return os << ']';
}

}  // namespace tropic
