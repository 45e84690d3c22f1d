#include "tropic/semifield.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "tropic/error.hpp"

namespace tropic {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_max(Semifield sf) noexcept {
  return sf == Semifield::MaxPlus || sf == Semifield::MaxTimes;
}

void require_same(Semifield a, Semifield b) {
  if (a != b) {
    throw SemifieldMismatch(std::string("semifield mismatch: ") + std::string(to_string(a)) +
                            " vs " + std::string(to_string(b)));
  }
}

}  // namespace

std::string_view to_string(Semifield sf) noexcept {
  switch (sf) {
    case Semifield::MaxPlus:
      return "max-plus";
    case Semifield::MinPlus:
      return "min-plus";
    case Semifield::MaxTimes:
      return "max-times";
    case Semifield::MinTimes:
      return "min-times";
  }
  return "?";
}

std::optional<Semifield> parse_semifield(std::string_view tag) noexcept {
  for (Semifield sf : kAllSemifields) {
    if (to_string(sf) == tag) return sf;
  }
  return std::nullopt;
}

namespace carrier {

double zero(Semifield sf) noexcept {
  switch (sf) {
    case Semifield::MaxPlus:
      return -kInf;
    case Semifield::MinPlus:
      return kInf;
    case Semifield::MaxTimes:
      return 0.0;
    case Semifield::MinTimes:
      return kInf;
  }
  return 0.0;
}

double one(Semifield sf) noexcept { return is_additive(sf) ? 0.0 : 1.0; }

double top(Semifield sf) noexcept {
  switch (sf) {
    case Semifield::MaxPlus:
      return kInf;
    case Semifield::MinPlus:
      return -kInf;
    case Semifield::MaxTimes:
      return kInf;
    case Semifield::MinTimes:
      return 0.0;
  }
  return 0.0;
}

bool is_zero(Semifield sf, double x) noexcept { return x == zero(sf); }

bool in_carrier(Semifield sf, double x) noexcept {
  if (std::isnan(x)) return false;
  return is_additive(sf) || x >= 0.0;
}

double add(Semifield sf, double x, double y) noexcept {
  return is_max(sf) ? std::max(x, y) : std::min(x, y);
}

double meet(Semifield sf, double x, double y) noexcept {
  return is_max(sf) ? std::min(x, y) : std::max(x, y);
}

double mul(Semifield sf, double x, double y) noexcept {
  if (is_zero(sf, x) || is_zero(sf, y)) return zero(sf);
  return is_additive(sf) ? x + y : x * y;
}

double inv(Semifield sf, double x) {
  if (is_zero(sf, x)) throw DomainError("zero has no inverse");
  return is_additive(sf) ? 0.0 - x : 1.0 / x;
}

double pow(Semifield sf, double x, RationalExponent q) {
  if (q.denominator == 0) throw DomainError("rational exponent with zero denominator");
  const int s = q.sign();
  if (is_zero(sf, x) && s <= 0) {
    throw DomainError("zero raised to a non-positive power");
  }
  if (s == 0) return one(sf);
  if (is_zero(sf, x)) return zero(sf);
  if (is_additive(sf)) {
    return x * static_cast<double>(q.numerator) / static_cast<double>(q.denominator) + 0.0;
  }
  return std::pow(x, q.value());
}

bool leq(Semifield sf, double x, double y) noexcept { return is_max(sf) ? x <= y : x >= y; }

bool less(Semifield sf, double x, double y) noexcept { return is_max(sf) ? x < y : x > y; }

double distance(Semifield sf, double x, double y) noexcept {
  const bool zx = is_zero(sf, x);
  const bool zy = is_zero(sf, y);
  if (zx && zy) return one(sf);
  if (zx || zy) return top(sf);
  if (x == y) return one(sf);
  return add(sf, mul(sf, inv(sf, y), x), mul(sf, inv(sf, x), y));
}

double to_additive(Semifield sf, double x) noexcept {
  switch (sf) {
    case Semifield::MaxPlus:
      return x;
    case Semifield::MinPlus:
      return 0.0 - x;
    case Semifield::MaxTimes:
      return std::log(x);
    case Semifield::MinTimes:
      return 0.0 - std::log(x);
  }
  return x;
}

double from_additive(Semifield sf, double a) noexcept {
  switch (sf) {
    case Semifield::MaxPlus:
      return a;
    case Semifield::MinPlus:
      return 0.0 - a;
    case Semifield::MaxTimes:
      return std::exp(a);
    case Semifield::MinTimes:
      return std::exp(-a);
  }
  return a;
}

bool approx_equal(Semifield sf, double x, double y, double eps) noexcept {
  if (x == y) return true;
  const double ax = to_additive(sf, x);
  const double ay = to_additive(sf, y);
  if (std::isinf(ax) || std::isinf(ay)) return false;
  return std::abs(ax - ay) <= eps;
}

bool approx_leq(Semifield sf, double x, double y, double eps) noexcept {
  return leq(sf, x, y) || approx_equal(sf, x, y, eps);
}

}  // namespace carrier

Scalar::Scalar(Semifield sf, double value) : sf_(sf), value_(value) {
  if (!carrier::in_carrier(sf, value)) {
    throw DomainError("value " + std::to_string(value) + " is outside the carrier of " +
                      std::string(to_string(sf)));
  }
}

Scalar Scalar::zero(Semifield sf) noexcept { return {sf, carrier::zero(sf), Unchecked{}}; }
Scalar Scalar::one(Semifield sf) noexcept { return {sf, carrier::one(sf), Unchecked{}}; }
Scalar Scalar::top(Semifield sf) noexcept { return {sf, carrier::top(sf), Unchecked{}}; }

Scalar add(const Scalar& x, const Scalar& y) {
  require_same(x.sf_, y.sf_);
  return {x.sf_, carrier::add(x.sf_, x.value_, y.value_), Scalar::Unchecked{}};
}

Scalar mul(const Scalar& x, const Scalar& y) {
  require_same(x.sf_, y.sf_);
  return {x.sf_, carrier::mul(x.sf_, x.value_, y.value_), Scalar::Unchecked{}};
}

Scalar invert(const Scalar& x) {
  return {x.sf_, carrier::inv(x.sf_, x.value_), Scalar::Unchecked{}};
}

Scalar rational_power(const Scalar& x, RationalExponent q) {
  return {x.sf_, carrier::pow(x.sf_, x.value_, q), Scalar::Unchecked{}};
}

Scalar scalar_distance(const Scalar& x, const Scalar& y) {
  require_same(x.sf_, y.sf_);
  return {x.sf_, carrier::distance(x.sf_, x.value_, y.value_), Scalar::Unchecked{}};
}

Scalar isomorphism_map(const Scalar& x, Semifield target) {
  if (x.sf_ == target) return x;
  const double a = carrier::to_additive(x.sf_, x.value_);
  return {target, carrier::from_additive(target, a), Scalar::Unchecked{}};
}

bool leq(const Scalar& x, const Scalar& y) {
  require_same(x.semifield(), y.semifield());
  return carrier::leq(x.semifield(), x.value(), y.value());
}

bool approx_equal(const Scalar& x, const Scalar& y, double eps) {
  require_same(x.semifield(), y.semifield());
  return carrier::approx_equal(x.semifield(), x.value(), y.value(), eps);
}

std::ostream& operator<<(std::ostream& os, Semifield sf) { return os << to_string(sf); }

std::ostream& operator<<(std::ostream& os, const Scalar& x) {
  if (std::isinf(x.value())) return os << (x.value() > 0 ? "+inf" : "-inf");
  return os << x.value();
}

}  // namespace tropic
