#pragma once

// Brute-force verifiers for tests and the acceptance suite. Nothing in the
// solver path depends on this header.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tropic/linalg.hpp"
#include "tropic/semifield.hpp"
#include "tropic/solver.hpp"

namespace tropic::oracle {

enum class Feasibility {
  Any,    ///< every grid point
  Below,  ///< only points with Ax <= d
  Above,  ///< only points with Ax >= d
};

/// Per-component grid in the additive (max-plus) image of the semifield.
struct GridSpec {
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<double> step;
  /// Also try the zero element in every component.
  bool include_zero = true;
  Feasibility feasibility = Feasibility::Any;
  /// Maximum number of grid points.
  std::size_t budget = 50'000'000;

  static GridSpec uniform(std::size_t n, double lower, double upper, double step,
                          bool include_zero = true);
  std::size_t point_count() const;
  /// True when `x` (native carrier) is a grid point.
  bool contains(Semifield sf, const Vector& x) const;
};

struct GridResult {
  /// Smallest deviation found; top when no point qualified.
  Scalar best;
  std::optional<Vector> argbest;
  std::size_t evaluated = 0;
};

/// Exhaustive sweep of rho(Ax, d) over the grid. Throws std::length_error
/// when the grid exceeds its budget, std::invalid_argument on a bad spec.
GridResult grid_min_distance(const Matrix& a, const Vector& d, const GridSpec& grid);

/// Minimal generating sets by testing all 2^n column subsets. n <= 12.
/// Ordered by cardinality, then lexicographically.
std::vector<IndexSet> exhaustive_minimal_generators(const Matrix& a, const Vector& d,
                                                    double eps = kDefaultTolerance);

inline constexpr std::size_t kExhaustiveCap = 12;

struct FamilyReport {
  bool ok = true;
  std::size_t checked = 0;
  /// First violation, blank when ok.
  std::string message;
};

struct Inequality {
  Matrix c;
  Vector b;
};

/// Samples the extreme point and random points of every member and checks
/// Ax = d (and Cx <= b when given).
FamilyReport verify_family(const Matrix& a, const Vector& d, const std::optional<Inequality>& ineq,
                           const std::vector<solver::FamilyMember>& family, std::mt19937_64& rng,
                           std::size_t samples_per_member = 20, double eps = kDefaultTolerance);

/// Same for Ax (+) b = d.
FamilyReport verify_extended_family(const Matrix& a, const Vector& b, const Vector& d,
                                    const std::vector<solver::FamilyMember>& family,
                                    std::mt19937_64& rng, std::size_t samples_per_member = 20,
                                    double eps = kDefaultTolerance);

/// Draws a point of a family member, in the additive image: bounded
/// components move down by a multiple of 0.5 or drop to zero.
Vector sample_member(const solver::FamilyMember& member, std::mt19937_64& rng);

/// Integer entries uniform in [lo, hi] (additive image), each zero with
/// probability `zero_prob`.
struct InstanceShape {
  std::size_t rows;
  std::size_t cols;
  double zero_prob = 0.1;
  int lo = -10;
  int hi = 10;
};

/// Resamples until every column is nonzero.
Matrix random_matrix(Semifield sf, const InstanceShape& shape, std::mt19937_64& rng);
/// Resamples until the vector is nonzero.
Vector random_vector(Semifield sf, std::size_t size, double zero_prob, int lo, int hi,
                     std::mt19937_64& rng);

/// Maps every entry through the semifield isomorphism.
Matrix map_matrix(const Matrix& a, Semifield target);
Vector map_vector(const Vector& v, Semifield target);

}  // namespace tropic::oracle
