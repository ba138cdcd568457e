#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace spinecheck {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q" in lowest terms with the sign on the numerator; integers print without "/1".
std::string format_fraction(const Rational& r);

// Throws Error(ValidationError) when the value does not fit.
std::int64_t to_int64(const BigInt& value);

// Closed integer interval [lo, hi]; a point when lo == hi.
struct IntInterval {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  static constexpr IntInterval point(std::int64_t v) { return {v, v}; }
  constexpr bool is_point() const { return lo == hi; }
  constexpr bool contains(std::int64_t v) const { return lo <= v && v <= hi; }
  constexpr IntInterval operator+(std::int64_t d) const { return {lo + d, hi + d}; }
  friend constexpr bool operator==(const IntInterval&, const IntInterval&) = default;
};

std::string to_string(const IntInterval& iv);

}  // namespace spinecheck
