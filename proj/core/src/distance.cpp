#include "tropic/distance.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "tropic/error.hpp"

namespace tropic::distance {

namespace {

void require_shape(const Matrix& a, const Vector& d) {
  if (a.semifield() != d.semifield()) throw SemifieldMismatch("matrix and vector semifields differ");
  if (a.rows() != d.size()) {
    throw DimensionError("matrix has " + std::to_string(a.rows()) + " rows but vector has " +
                         std::to_string(d.size()) + " entries");
  }
}

// Same as make_consistent but also accepts zero d (then every row is in I
// and no entry is zeroed).
ConsistentForm consistent_form(const Matrix& a, const Vector& d) {
  const Semifield sf = a.semifield();
  ConsistentForm form{a, {}, {}};
  std::vector<bool> in_j(a.cols(), false);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!carrier::is_zero(sf, d[i])) continue;
    form.zero_rows_of_d.push_back(i);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!carrier::is_zero(sf, a(i, j))) in_j[j] = true;
    }
  }
  std::vector<bool> in_i(d.size(), false);
  for (std::size_t i : form.zero_rows_of_d) in_i[i] = true;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (!in_j[j]) continue;
    form.forced_zero_cols.push_back(j);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (!in_i[i]) form.a_hat.set(i, j, carrier::zero(sf));
    }
  }
  return form;
}

// (p)^- applied component-wise; the zero row maps to the zero column.
Vector conjugate(const CoVector& p) {
  if (p.is_zero()) return Vector::zeros(p.semifield(), p.size());
  return pseudo_invert(p);
}

struct Core {
  bool row_regular = false;
  Vector x1;  // (d^- A)^-
  Vector y1;  // A x1
  double delta_sq;
};

// Requires A consistent with d and d != 0.
Core evaluate(const Matrix& a, const Vector& d) {
  const Semifield sf = a.semifield();
  Core core{false, conjugate(pseudo_invert(d) * a), Vector::zeros(sf, d.size()),
            carrier::top(sf)};
  core.y1 = a * core.x1;
  core.row_regular = true;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!carrier::is_zero(sf, d[i]) && a.row_is_zero(i)) core.row_regular = false;
  }
  if (!core.row_regular) return core;
  double acc = carrier::zero(sf);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (carrier::is_zero(sf, d[i])) continue;
    acc = carrier::add(sf, acc, carrier::mul(sf, carrier::inv(sf, core.y1[i]), d[i]));
  }
  core.delta_sq = acc;
  return core;
}

Residual to_residual(const Core& core, const Matrix& a) {
  const Semifield sf = a.semifield();
  Residual r{Scalar::top(sf), std::nullopt, std::nullopt, core.row_regular, false, {}, {}};
  if (!core.row_regular) return r;
  r.delta = rational_power(Scalar(sf, core.delta_sq), {1, 2});
  Vector x = r.delta * core.x1;
  r.nearest_y = a * x;
  r.argmin_x = std::move(x);
  return r;
}

}  // namespace

bool is_one(const Scalar& x, double eps) {
  return carrier::approx_equal(x.semifield(), x.value(), carrier::one(x.semifield()), eps);
}

void require_no_top(const Matrix& a, const char* what) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == carrier::top(a.semifield())) {
        throw DomainError(std::string(what) + " contains the maximal element");
      }
    }
  }
}

void require_no_top(const Vector& v, const char* what) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == carrier::top(v.semifield())) {
      throw DomainError(std::string(what) + " contains the maximal element");
    }
  }
}

ConsistentForm make_consistent(const Matrix& a, const Vector& d) {
  require_shape(a, d);
  if (d.is_zero()) throw DomainError("consistency transform requires a nonzero vector");
  return consistent_form(a, d);
}

Residual residual(const Matrix& a, const Vector& d) {
  require_shape(a, d);
  require_no_top(a, "matrix");
  require_no_top(d, "vector");
  if (d.is_zero()) throw DomainError("residual requires a nonzero vector");
  if (!(consistent_form(a, d).a_hat == a)) {
    throw ContractViolation("matrix is not consistent with the vector; apply make_consistent");
  }
  return to_residual(evaluate(a, d), a);
}

Residual nearest_point(const Matrix& a, const Vector& d) {
  require_shape(a, d);
  require_no_top(a, "matrix");
  require_no_top(d, "vector");
  const Semifield sf = a.semifield();
  if (d.is_zero()) {
    IndexSet all_rows(d.size());
    std::iota(all_rows.begin(), all_rows.end(), std::size_t{0});
    return Residual{Scalar::one(sf),          Vector::zeros(sf, a.cols()),
                    Vector::zeros(sf, a.rows()), true, false, std::move(all_rows), {}};
  }
  ConsistentForm form = consistent_form(a, d);
  Residual r = to_residual(evaluate(form.a_hat, d), form.a_hat);
  r.consistent_form_applied = !form.zero_rows_of_d.empty();
  r.zero_rows_of_d = std::move(form.zero_rows_of_d);
  r.forced_zero_cols = std::move(form.forced_zero_cols);
  return r;
}

Projection project_below(const Matrix& a, const Vector& d) {
  require_shape(a, d);
  require_no_top(a, "matrix");
  require_no_top(d, "vector");
  const Semifield sf = a.semifield();
  if (d.is_zero()) {
    Vector x = Vector::zeros(sf, a.cols());
    Vector y = a * x;
    return {std::move(x), std::move(y), Scalar::one(sf)};
  }
  const ConsistentForm form = consistent_form(a, d);
  Core core = evaluate(form.a_hat, d);
  Scalar rho = vec_distance(core.y1, d);
  return {std::move(core.x1), std::move(core.y1), rho};
}

Projection project_above(const Matrix& a, const Vector& d) {
  require_shape(a, d);
  require_no_top(a, "matrix");
  require_no_top(d, "vector");
  const Semifield sf = a.semifield();
  if (d.is_zero()) {
    Vector x = Vector::zeros(sf, a.cols());
    Vector y = a * x;
    return {std::move(x), std::move(y), Scalar::one(sf)};
  }
  const ConsistentForm form = consistent_form(a, d);
  const Core core = evaluate(form.a_hat, d);
  if (!core.row_regular) {
    throw DomainError("no vector of the span dominates d at finite distance (residual is infinite)");
  }
  Vector x = Scalar(sf, core.delta_sq) * core.x1;
  Vector y = form.a_hat * x;
  Scalar rho = vec_distance(y, d);
  return {std::move(x), std::move(y), rho};
}

Membership membership(const Matrix& a, const Vector& d, double eps) {
  require_shape(a, d);
  require_no_top(a, "matrix");
  require_no_top(d, "vector");
  const Semifield sf = a.semifield();
  if (d.is_zero()) return {true, Scalar::one(sf), Vector::zeros(sf, a.cols())};
  const ConsistentForm form = consistent_form(a, d);
  const Core core = evaluate(form.a_hat, d);
  const Residual r = to_residual(core, form.a_hat);
  Membership out{is_one(r.delta, eps), r.delta, std::nullopt};
  if (out.member) out.witness = core.x1;
  return out;
}

}  // namespace tropic::distance
