#include "spinecheck/numeric.hpp"

#include <limits>

#include "spinecheck/error.hpp"

namespace spinecheck {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::NotSymmetrizable: return "NotSymmetrizable";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::NonPlanar: return "NonPlanar";
    case ErrorKind::NotAlternating: return "NotAlternating";
    case ErrorKind::DegenerateForm: return "DegenerateForm";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::Unknown: return "Unknown";
    case ErrorKind::NotLSpace: return "NotLSpace";
    case ErrorKind::OddSignature: return "OddSignature";
    case ErrorKind::IntervalValued: return "IntervalValued";
    case ErrorKind::MirrorVUnavailable: return "MirrorVUnavailable";
    case ErrorKind::InvalidSpinC: return "InvalidSpinC";
    case ErrorKind::NotApplicable: return "NotApplicable";
  }
  return "Error";
}

std::string format_fraction(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::int64_t to_int64(const BigInt& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorKind::ValidationError, "integer " + value.str() + " exceeds 64 bits");
  }
  return value.convert_to<std::int64_t>();
}

std::string to_string(const IntInterval& iv) {
  if (iv.is_point()) return std::to_string(iv.lo);
  return "[" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) + "]";
}

}  // namespace spinecheck
