#include "tropic/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "tropic/distance.hpp"

namespace tropic::oracle {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::size_t levels(const GridSpec& g, std::size_t j) {
  return static_cast<std::size_t>(std::floor((g.upper[j] - g.lower[j]) / g.step[j] + 1e-9)) + 1;
}

std::string describe(const Vector& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

GridSpec GridSpec::uniform(std::size_t n, double lower, double upper, double step,
                           bool include_zero) {
  GridSpec g;
  g.lower.assign(n, lower);
  g.upper.assign(n, upper);
  g.step.assign(n, step);
  g.include_zero = include_zero;
  return g;
}

std::size_t GridSpec::point_count() const {
  std::size_t total = 1;
  for (std::size_t j = 0; j < lower.size(); ++j) {
    const std::size_t per = levels(*this, j) + (include_zero ? 1 : 0);
    if (total > budget / std::max<std::size_t>(per, 1) + 1) return budget + 1;
    total *= per;
  }
  return total;
}

bool GridSpec::contains(Semifield sf, const Vector& x) const {
  if (x.size() != lower.size()) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (carrier::is_zero(sf, x[j])) {
      if (!include_zero) return false;
      continue;
    }
    const double v = carrier::to_additive(sf, x[j]);
    if (v < lower[j] - 1e-12 || v > upper[j] + 1e-12) return false;
    const double k = (v - lower[j]) / step[j];
    if (std::abs(k - std::round(k)) > 1e-9) return false;
  }
  return true;
}

GridResult grid_min_distance(const Matrix& a, const Vector& d, const GridSpec& grid) {
  const std::size_t n = a.cols();
  if (grid.lower.size() != n || grid.upper.size() != n || grid.step.size() != n) {
    throw std::invalid_argument("grid dimension does not match the column count");
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!(grid.step[j] > 0) || grid.lower[j] > grid.upper[j]) {
      throw std::invalid_argument("grid requires lower <= upper and step > 0");
    }
  }
  if (grid.point_count() > grid.budget) throw std::length_error("grid exceeds its point budget");

  const Semifield sf = a.semifield();
  const std::size_t m = a.rows();

  // Native carrier values per component.
  std::vector<std::vector<double>> axis(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (grid.include_zero) axis[j].push_back(carrier::from_additive(sf, kNegInf));
    const std::size_t k = levels(grid, j);
    for (std::size_t t = 0; t < k; ++t) {
      axis[j].push_back(carrier::from_additive(sf, grid.lower[j] + static_cast<double>(t) * grid.step[j]));
    }
  }

  GridResult result{Scalar::top(sf), std::nullopt, 0};
  double best = carrier::top(sf);
  std::vector<std::size_t> idx(n, 0);
  std::vector<double> x(n);
  std::vector<double> y(m);
  bool done = n > 0 && std::any_of(axis.begin(), axis.end(), [](const auto& v) { return v.empty(); });
  while (!done) {
    for (std::size_t j = 0; j < n; ++j) x[j] = axis[j][idx[j]];
    for (std::size_t i = 0; i < m; ++i) {
      double acc = carrier::zero(sf);
      for (std::size_t j = 0; j < n; ++j) acc = carrier::add(sf, acc, carrier::mul(sf, a(i, j), x[j]));
      y[i] = acc;
    }
    ++result.evaluated;

    bool feasible = true;
    if (grid.feasibility != Feasibility::Any) {
      for (std::size_t i = 0; i < m && feasible; ++i) {
        feasible = grid.feasibility == Feasibility::Below ? carrier::leq(sf, y[i], d[i])
                                                          : carrier::leq(sf, d[i], y[i]);
      }
    }
    if (feasible) {
      double rho = carrier::one(sf);
      for (std::size_t i = 0; i < m; ++i) {
        const bool zy = carrier::is_zero(sf, y[i]);
        const bool zd = carrier::is_zero(sf, d[i]);
        if (zy != zd) {
          rho = carrier::top(sf);
          break;
        }
        if (!zy) rho = carrier::add(sf, rho, carrier::distance(sf, y[i], d[i]));
      }
      if (!result.argbest || carrier::less(sf, rho, best)) {
        best = rho;
        result.argbest = Vector(sf, x);
      }
    }

    std::size_t j = 0;
    while (j < n) {
      if (++idx[j] < axis[j].size()) break;
      idx[j] = 0;
      ++j;
    }
    if (j == n) done = true;
  }
  result.best = Scalar(sf, best);
  return result;
}

std::vector<IndexSet> exhaustive_minimal_generators(const Matrix& a, const Vector& d, double eps) {
  const std::size_t n = a.cols();
  if (n > kExhaustiveCap) {
    throw std::invalid_argument("exhaustive enumeration is limited to " +
                                std::to_string(kExhaustiveCap) + " columns");
  }
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<bool> generates(subsets, false);
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    IndexSet cols;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask & (std::size_t{1} << j)) cols.push_back(j);
    }
    generates[mask] = cols.empty() ? d.is_zero()
                                   : distance::membership(a.select_columns(cols), d, eps).member;
  }

  std::vector<IndexSet> minimal;
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    if (!generates[mask]) continue;
    bool is_minimal = true;
    // Every proper submask, including the empty one.
    for (std::size_t sub = (mask - 1) & mask;; sub = (sub - 1) & mask) {
      if (sub != mask && generates[sub]) {
        is_minimal = false;
        break;
      }
      if (sub == 0) break;
    }
    if (mask == 0) is_minimal = true;
    if (!is_minimal) continue;
    IndexSet cols;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask & (std::size_t{1} << j)) cols.push_back(j);
    }
    minimal.push_back(std::move(cols));
  }
  std::sort(minimal.begin(), minimal.end(), [](const IndexSet& x, const IndexSet& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return minimal;
}

Vector sample_member(const solver::FamilyMember& member, std::mt19937_64& rng) {
  const Semifield sf = member.values.semifield();
  std::uniform_int_distribution<int> drop(0, 20);
  std::uniform_int_distribution<int> free_value(-40, 40);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<double> x(member.values.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double v = member.values[j];
    switch (member.kinds[j]) {
      case solver::ComponentKind::Fixed:
        x[j] = v;
        break;
      case solver::ComponentKind::Bounded:
        if (coin(rng) < 0.1) {
          x[j] = carrier::zero(sf);
        } else {
          x[j] = carrier::from_additive(sf, carrier::to_additive(sf, v) - 0.5 * drop(rng));
        }
        break;
      case solver::ComponentKind::Free:
        x[j] = coin(rng) < 0.1 ? carrier::zero(sf)
                               : carrier::from_additive(sf, 0.5 * free_value(rng));
        break;
    }
  }
  return Vector(sf, std::move(x));
}

namespace {

template <class Check>
FamilyReport verify_members(const std::vector<solver::FamilyMember>& family, std::mt19937_64& rng,
                            std::size_t samples_per_member, Check&& check) {
  FamilyReport report;
  for (std::size_t k = 0; k < family.size(); ++k) {
    const auto& member = family[k];
    for (std::size_t s = 0; s <= samples_per_member; ++s) {
      const Vector x = s == 0 ? member.extreme() : sample_member(member, rng);
      ++report.checked;
      std::string why = check(x);
      if (!why.empty()) {
        report.ok = false;
        report.message = "member " + std::to_string(k) + (s == 0 ? " (extreme)" : "") +
                         " at x = " + describe(x) + ": " + why;
        return report;
      }
    }
  }
  return report;
}

}  // namespace

FamilyReport verify_family(const Matrix& a, const Vector& d, const std::optional<Inequality>& ineq,
                           const std::vector<solver::FamilyMember>& family, std::mt19937_64& rng,
                           std::size_t samples_per_member, double eps) {
  return verify_members(family, rng, samples_per_member, [&](const Vector& x) -> std::string {
    const Vector y = a * x;
    if (!approx_equal(y, d, eps)) return "Ax = " + describe(y) + " differs from d";
    if (ineq) {
      const Vector z = ineq->c * x;
      if (!approx_leq(z, ineq->b, eps)) return "Cx = " + describe(z) + " exceeds b";
    }
    return {};
  });
}

FamilyReport verify_extended_family(const Matrix& a, const Vector& b, const Vector& d,
                                    const std::vector<solver::FamilyMember>& family,
                                    std::mt19937_64& rng, std::size_t samples_per_member,
                                    double eps) {
  return verify_members(family, rng, samples_per_member, [&](const Vector& x) -> std::string {
    const Vector y = a * x + b;
    if (!approx_equal(y, d, eps)) return "Ax + b = " + describe(y) + " differs from d";
    return {};
  });
}

Matrix random_matrix(Semifield sf, const InstanceShape& shape, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> value(shape.lo, shape.hi);
  std::bernoulli_distribution zero(shape.zero_prob);
  while (true) {
    std::vector<double> data(shape.rows * shape.cols);
    for (double& v : data) {
      v = zero(rng) ? carrier::zero(sf) : carrier::from_additive(sf, value(rng));
    }
    Matrix a(sf, shape.rows, shape.cols, std::move(data));
    if (regularity(a).column_regular) return a;
  }
}

Vector random_vector(Semifield sf, std::size_t size, double zero_prob, int lo, int hi,
                     std::mt19937_64& rng) {
  std::uniform_int_distribution<int> value(lo, hi);
  std::bernoulli_distribution zero(zero_prob);
  while (true) {
    std::vector<double> data(size);
    for (double& v : data) v = zero(rng) ? carrier::zero(sf) : carrier::from_additive(sf, value(rng));
    Vector d(sf, std::move(data));
    if (!d.is_zero()) return d;
  }
}

Matrix map_matrix(const Matrix& a, Semifield target) {
  std::vector<double> data;
  data.reserve(a.rows() * a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      data.push_back(isomorphism_map(Scalar(a.semifield(), a(i, j)), target).value());
    }
  }
  return Matrix(target, a.rows(), a.cols(), std::move(data));
}

Vector map_vector(const Vector& v, Semifield target) {
  std::vector<double> data(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    data[i] = isomorphism_map(Scalar(v.semifield(), v[i]), target).value();
  }
  return Vector(target, std::move(data));
}

}  // namespace tropic::oracle
