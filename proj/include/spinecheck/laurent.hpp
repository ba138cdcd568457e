#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "spinecheck/numeric.hpp"

namespace spinecheck {

/// Integer Laurent polynomial in one variable t, stored sparsely as
/// exponent -> nonzero coefficient. The zero polynomial has empty support.
class LaurentPoly {
 public:
  using Exponent = std::int64_t;
  using Terms = std::map<Exponent, BigInt>;

  LaurentPoly() = default;
  explicit LaurentPoly(Terms terms);
  LaurentPoly(std::initializer_list<std::pair<Exponent, long long>> terms);

  static LaurentPoly constant(const BigInt& c);
  static LaurentPoly monomial(const BigInt& c, Exponent e);

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  BigInt coeff(Exponent e) const;

  // Both throw Error(ZeroPolynomial) on the zero polynomial.
  Exponent min_exponent() const;
  Exponent max_exponent() const;

  LaurentPoly shifted(Exponent by) const;

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  // Human-readable form, e.g. "t^-1 - 1 + t".
  std::string to_string() const;

 private:
  Terms terms_;
};

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b);

/// Quotient q with q * den == num. Throws NotDivisible if the division leaves
/// a remainder (including non-integral quotient coefficients).
LaurentPoly lp_exact_div(const LaurentPoly& num, const LaurentPoly& den);

/// Exact value at a nonzero integer.
Rational lp_eval_int(const LaurentPoly& p, std::int64_t x);

/// The unique shift t^m * p whose coefficients satisfy a_j = a_{-j}.
/// Throws NotSymmetrizable when the support has odd width or is not palindromic.
LaurentPoly lp_symmetrize(const LaurentPoly& p);

bool is_symmetric(const LaurentPoly& p);

}  // namespace spinecheck
