#include "spinecheck/dinv.hpp"

#include <algorithm>

#include "spinecheck/error.hpp"

namespace spinecheck {

namespace {

std::int64_t exact_at(const VFunction& v, std::int64_t s) {
  const IntInterval iv = v_eval(v, s);
  if (!iv.is_point()) {
    throw Error(ErrorKind::IntervalValued, "V_" + std::to_string(s) + " is only known to lie in " + to_string(iv));
  }
  return iv.lo;
}

}  // namespace

SpinCIndex::SpinCIndex(std::int64_t k, std::int64_t n) : k_(k), n_(n) {
  if (n == 0) throw Error(ErrorKind::InvalidSpinC, "framing must be nonzero");
  const std::int64_t m = n < 0 ? -n : n;
  // -m/2 < k <= m/2  <=>  -m < 2k <= m
  if (!(-m < 2 * k && 2 * k <= m)) {
    throw Error(ErrorKind::InvalidSpinC,
                "k = " + std::to_string(k) + " outside (-" + std::to_string(m) + "/2, " + std::to_string(m) + "/2]");
  }
}

std::vector<SpinCIndex> spinc_range(std::int64_t n) {
  if (n <= 0) throw Error(ErrorKind::InvalidSpinC, "spinc_range needs n > 0");
  std::vector<SpinCIndex> out;
  for (std::int64_t k = -((n - 1) / 2); 2 * k <= n; ++k) out.emplace_back(k, n);
  return out;
}

Rational surgery_shift(std::int64_t n, std::int64_t k) {
  const BigInt twice = BigInt(2 * k - n);
  return Rational(twice * twice - n, BigInt(4) * n);
}

Rational d_surgery_s3(const VFunction& v, std::int64_t n, const SpinCIndex& k) {
  if (n <= 0 || k.n() != n) throw Error(ErrorKind::InvalidSpinC, "d_surgery_s3 needs n > 0 matching the index");
  return surgery_shift(n, k.k()) - 2 * exact_at(v, k.k());
}

DInvariants d_circle_sum(const VFunction& v, std::int64_t g, std::int64_t n, const SpinCIndex& k) {
  if (g < 0) throw Error(ErrorKind::ValidationError, "surface genus must be >= 0");
  if (n <= 0 || k.n() != n) throw Error(ErrorKind::InvalidSpinC, "d_circle_sum needs n > 0 matching the index");
  std::int64_t lo = exact_at(v, k.k() - g);
  std::int64_t hi = lo;
  for (std::int64_t a = 1; a <= g; ++a) {
    const std::int64_t term = a + exact_at(v, k.k() - g + 2 * a);
    lo = std::min(lo, term);
    hi = std::max(hi, term);
  }
  const Rational base = Rational(g) + surgery_shift(n, k.k());
  return DInvariants{base - 2 * lo, base - 2 * hi};
}

DInvariants d_negative_framing(const VFunction& v_mirror, std::int64_t g, std::int64_t n, const SpinCIndex& k) {
  if (n >= 0 || k.n() != n) throw Error(ErrorKind::InvalidSpinC, "d_negative_framing needs n < 0 matching the index");
  const DInvariants positive = d_circle_sum(v_mirror, g, -n, SpinCIndex(k.k(), -n));
  return DInvariants{-positive.d_bot, -positive.d_top};
}

}  // namespace spinecheck
