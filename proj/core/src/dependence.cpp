#include "tropic/dependence.hpp"

#include <string>

#include "tropic/distance.hpp"
#include "tropic/error.hpp"

namespace tropic::dependence {

namespace {

void require_nonzero_columns(const Matrix& a) {
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (a.column_is_zero(j)) {
      throw DomainError("column " + std::to_string(j + 1) + " is zero");
    }
  }
}

// Residual of column `i` against the columns listed in `others`.
Scalar column_residual(const Matrix& a, std::size_t i, const IndexSet& others) {
  return distance::nearest_point(a.select_columns(others), a.column(i)).delta;
}

}  // namespace

DependenceReport is_dependent(const Vector& d, const Matrix& a, double eps) {
  distance::Membership m = distance::membership(a, d, eps);
  return {m.member, m.delta, std::move(m.witness)};
}

Scalar independence_margin(const Matrix& a) {
  if (a.cols() == 0) throw DomainError("independence margin of an empty system");
  require_nonzero_columns(a);
  const Semifield sf = a.semifield();
  if (a.cols() == 1) return Scalar::top(sf);
  double margin = carrier::top(sf);
  for (std::size_t i = 0; i < a.cols(); ++i) {
    IndexSet others;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j != i) others.push_back(j);
    }
    margin = carrier::meet(sf, margin, column_residual(a, i, others).value());
  }
  return Scalar(sf, margin);
}

bool is_independent(const Matrix& a, double eps) {
  return !distance::is_one(independence_margin(a), eps);
}

BasisResult extract_basis(const Matrix& a, double eps) {
  require_nonzero_columns(a);
  std::vector<bool> retained(a.cols(), true);
  for (std::size_t i = 0; i < a.cols(); ++i) {
    IndexSet others;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j != i && retained[j]) others.push_back(j);
    }
    if (others.empty()) continue;
    if (distance::is_one(column_residual(a, i, others), eps)) retained[i] = false;
  }
  IndexSet kept;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (retained[j]) kept.push_back(j);
  }
  Matrix basis = a.select_columns(kept);
  Scalar margin = kept.empty() ? Scalar::top(a.semifield()) : independence_margin(basis);
  return {std::move(kept), std::move(basis), margin};
}

}  // namespace tropic::dependence
