#pragma once

// Scalar algebra over the four linearly ordered radicable idempotent
// semifields max-plus, min-plus, max-times and min-times.
//
// Every value is carried as an IEEE double. The semifield zero and the
// adjoined maximal element are the native infinities (or 0 for the
// multiplicative semifields):
//
//   semifield   zero   one   top (maximal element)
//   max-plus    -inf   0     +inf
//   min-plus    +inf   0     -inf
//   max-times   0      1     +inf
//   min-times   +inf   1     0
//
// The order used throughout is the one induced by the idempotent addition,
// x <= y  iff  x (+) y == y, which reverses the conventional order for the
// min-* semifields.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>

namespace tropic {

enum class Semifield { MaxPlus, MinPlus, MaxTimes, MinTimes };

inline constexpr Semifield kAllSemifields[] = {Semifield::MaxPlus, Semifield::MinPlus,
                                               Semifield::MaxTimes, Semifield::MinTimes};

/// "max-plus" | "min-plus" | "max-times" | "min-times".
std::string_view to_string(Semifield sf) noexcept;
std::optional<Semifield> parse_semifield(std::string_view tag) noexcept;

/// True for max-plus and min-plus, where (x) is conventional addition.
constexpr bool is_additive(Semifield sf) noexcept {
  return sf == Semifield::MaxPlus || sf == Semifield::MinPlus;
}

/// Default tolerance for comparisons, measured in the additive (max-plus)
/// image of a value. For the multiplicative semifields this is a relative
/// tolerance.
inline constexpr double kDefaultTolerance = 1e-9;

/// Exponent for rational powers. Compared by value; need not be reduced.
struct RationalExponent {
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;

  double value() const noexcept {
    return static_cast<double>(numerator) / static_cast<double>(denominator);
  }
  int sign() const noexcept {
    const bool neg = (numerator < 0) != (denominator < 0);
    return numerator == 0 ? 0 : (neg ? -1 : 1);
  }
};

/// Operations on raw carrier values. Vectors and matrices store doubles and
/// use these directly; Scalar wraps them with a semifield tag.
namespace carrier {

double zero(Semifield sf) noexcept;
double one(Semifield sf) noexcept;
double top(Semifield sf) noexcept;

bool is_zero(Semifield sf, double x) noexcept;
bool in_carrier(Semifield sf, double x) noexcept;

double add(Semifield sf, double x, double y) noexcept;
/// Zero is absorbing, including against the maximal element.
double mul(Semifield sf, double x, double y) noexcept;
/// Throws DomainError for zero.
double inv(Semifield sf, double x);
/// Throws DomainError for zero with a non-positive exponent.
double pow(Semifield sf, double x, RationalExponent q);

bool leq(Semifield sf, double x, double y) noexcept;
bool less(Semifield sf, double x, double y) noexcept;
/// Order-minimum (the dual of add).
double meet(Semifield sf, double x, double y) noexcept;

/// y^{-1} x (+) x^{-1} y, with rho(0,0) = 1 and rho(0,y) = top for y != 0.
double distance(Semifield sf, double x, double y) noexcept;

/// Image in max-plus and back.
double to_additive(Semifield sf, double x) noexcept;
double from_additive(Semifield sf, double a) noexcept;

/// Equal within `eps` in the additive image. Infinite values must match
/// exactly. eps = 0 gives exact comparison.
bool approx_equal(Semifield sf, double x, double y, double eps) noexcept;
/// x <= y, or x and y equal within eps.
bool approx_leq(Semifield sf, double x, double y, double eps) noexcept;

}  // namespace carrier

class Scalar {
 public:
  /// Throws DomainError if `value` is outside the semifield's carrier.
  Scalar(Semifield sf, double value);

  static Scalar zero(Semifield sf) noexcept;
  static Scalar one(Semifield sf) noexcept;
  static Scalar top(Semifield sf) noexcept;

  Semifield semifield() const noexcept { return sf_; }
  double value() const noexcept { return value_; }

  bool is_zero() const noexcept { return carrier::is_zero(sf_, value_); }
  bool is_one() const noexcept { return value_ == carrier::one(sf_); }
  bool is_top() const noexcept { return value_ == carrier::top(sf_); }

  friend bool operator==(const Scalar& a, const Scalar& b) noexcept {
    return a.sf_ == b.sf_ && a.value_ == b.value_;
  }

 private:
  struct Unchecked {};
  Scalar(Semifield sf, double value, Unchecked) noexcept : sf_(sf), value_(value) {}

  friend Scalar add(const Scalar&, const Scalar&);
  friend Scalar mul(const Scalar&, const Scalar&);
  friend Scalar invert(const Scalar&);
  friend Scalar rational_power(const Scalar&, RationalExponent);
  friend Scalar scalar_distance(const Scalar&, const Scalar&);
  friend Scalar isomorphism_map(const Scalar&, Semifield);

  Semifield sf_;
  double value_;
};

/// x (+) y. Throws SemifieldMismatch.
Scalar add(const Scalar& x, const Scalar& y);
/// x (x) y. Throws SemifieldMismatch.
Scalar mul(const Scalar& x, const Scalar& y);
/// x^{-1}. Throws DomainError for zero.
Scalar invert(const Scalar& x);
/// x^q; x^0 = 1. Throws DomainError for zero with q <= 0.
Scalar rational_power(const Scalar& x, RationalExponent q);
/// rho(x, y). Always >= one.
Scalar scalar_distance(const Scalar& x, const Scalar& y);
/// Applies the isomorphism between semifields; zero and top map to zero and top.
Scalar isomorphism_map(const Scalar& x, Semifield target);

inline Scalar operator+(const Scalar& x, const Scalar& y) { return add(x, y); }
inline Scalar operator*(const Scalar& x, const Scalar& y) { return mul(x, y); }

/// Semiring order. Throws SemifieldMismatch.
bool leq(const Scalar& x, const Scalar& y);
inline bool operator<=(const Scalar& x, const Scalar& y) { return leq(x, y); }
inline bool operator<(const Scalar& x, const Scalar& y) { return leq(x, y) && !(x == y); }
inline bool operator>=(const Scalar& x, const Scalar& y) { return leq(y, x); }
inline bool operator>(const Scalar& x, const Scalar& y) { return y < x; }

bool approx_equal(const Scalar& x, const Scalar& y, double eps = kDefaultTolerance);

std::ostream& operator<<(std::ostream& os, Semifield sf);
std::ostream& operator<<(std::ostream& os, const Scalar& x);

}  // namespace tropic
