#include "spinecheck/laurent.hpp"

#include <sstream>

#include "spinecheck/error.hpp"

namespace spinecheck {

namespace {

void accumulate(LaurentPoly::Terms& terms, LaurentPoly::Exponent e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

}  // namespace

LaurentPoly::LaurentPoly(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<Exponent, long long>> terms) {
  for (const auto& [e, c] : terms) accumulate(terms_, e, BigInt(c));
}

LaurentPoly LaurentPoly::constant(const BigInt& c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(const BigInt& c, Exponent e) {
  Terms t;
  if (c != 0) t.emplace(e, c);
  return LaurentPoly(std::move(t));
}

BigInt LaurentPoly::coeff(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

LaurentPoly::Exponent LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw Error(ErrorKind::ZeroPolynomial, "degree of the zero polynomial");
  return terms_.begin()->first;
}

LaurentPoly::Exponent LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw Error(ErrorKind::ZeroPolynomial, "degree of the zero polynomial");
  return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::shifted(Exponent by) const {
  Terms t;
  for (const auto& [e, c] : terms_) t.emplace_hint(t.end(), e + by, c);
  return LaurentPoly(std::move(t));
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly::Terms t = a.terms_;
  for (const auto& [e, c] : b.terms_) accumulate(t, e, c);
  return LaurentPoly(std::move(t));
}

LaurentPoly LaurentPoly::operator-() const {
  Terms t;
  for (const auto& [e, c] : terms_) t.emplace_hint(t.end(), e, -c);
  return LaurentPoly(std::move(t));
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly::Terms t;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) accumulate(t, ea + eb, ca * cb);
  }
  return LaurentPoly(std::move(t));
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag << "*";
    out << "t";
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }

LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

LaurentPoly lp_exact_div(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw Error(ErrorKind::NotDivisible, "division by the zero polynomial");
  if (num.is_zero()) return {};

  const auto lowest_allowed = num.min_exponent() - den.min_exponent();
  const auto den_top = den.max_exponent();
  const BigInt& den_lead = den.terms().rbegin()->second;

  LaurentPoly::Terms quotient;
  LaurentPoly rem = num;
  while (!rem.is_zero()) {
    const auto [rem_top, rem_lead] = *rem.terms().rbegin();
    const auto qe = rem_top - den_top;
    if (qe < lowest_allowed || rem_lead % den_lead != 0) {
      throw Error(ErrorKind::NotDivisible,
                  "(" + num.to_string() + ") / (" + den.to_string() + ") leaves a remainder");
    }
    const BigInt qc = rem_lead / den_lead;
    quotient.emplace(qe, qc);
    rem = rem - LaurentPoly::monomial(qc, qe) * den;
  }
  return LaurentPoly(std::move(quotient));
}

Rational lp_eval_int(const LaurentPoly& p, std::int64_t x) {
  if (x == 0) throw Error(ErrorKind::ValidationError, "evaluation point must be nonzero");
  Rational sum = 0;
  for (const auto& [e, c] : p.terms()) {
    BigInt power = boost::multiprecision::pow(BigInt(x), static_cast<unsigned>(e < 0 ? -e : e));
    if (e >= 0) {
      sum += Rational(c * power);
    } else {
      sum += Rational(c) / Rational(power);
    }
  }
  return sum;
}

bool is_symmetric(const LaurentPoly& p) {
  for (const auto& [e, c] : p.terms()) {
    if (p.coeff(-e) != c) return false;
  }
  return true;
}

LaurentPoly lp_symmetrize(const LaurentPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::NotSymmetrizable, "zero polynomial");
  const auto width = p.max_exponent() - p.min_exponent();
  if (width % 2 != 0) {
    throw Error(ErrorKind::NotSymmetrizable, p.to_string() + " has odd support width");
  }
  const auto center = p.min_exponent() + width / 2;
  LaurentPoly q = p.shifted(-center);
  if (!is_symmetric(q)) {
    throw Error(ErrorKind::NotSymmetrizable, p.to_string() + " is not palindromic");
  }
  return q;
}

}  // namespace spinecheck
