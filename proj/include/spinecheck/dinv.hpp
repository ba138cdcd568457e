#pragma once

#include <cstdint>
#include <vector>

#include "spinecheck/numeric.hpp"
#include "spinecheck/vfunc.hpp"

namespace spinecheck {

/// Torsion Spin^c label k of an n-framed surgery, -|n|/2 < k <= |n|/2.
class SpinCIndex {
 public:
  /// Throws InvalidSpinC when n == 0 or k is out of range.
  SpinCIndex(std::int64_t k, std::int64_t n);

  std::int64_t k() const { return k_; }
  std::int64_t n() const { return n_; }

 private:
  std::int64_t k_;
  std::int64_t n_;
};

struct DInvariants {
  Rational d_top;
  Rational d_bot;
  friend bool operator==(const DInvariants&, const DInvariants&) = default;
};

/// All k in (-n/2, n/2], ascending. Requires n > 0.
std::vector<SpinCIndex> spinc_range(std::int64_t n);

/// ((2k-n)^2 - n) / 4n.
Rational surgery_shift(std::int64_t n, std::int64_t k);

/// d(S^3_n(K), k) = ((2k-n)^2 - n)/4n - 2 V_k. Throws IntervalValued.
Rational d_surgery_s3(const VFunction& v, std::int64_t n, const SpinCIndex& k);

/// d_top / d_bot of n-surgery on K # B in #^{2g} S^2 x S^1, for n > 0:
/// g + ((2k-n)^2 - n)/4n - 2 min/max_{a=0..g} {a + V_{k-g+2a}}.
DInvariants d_circle_sum(const VFunction& v, std::int64_t g, std::int64_t n, const SpinCIndex& k);

/// n < 0 via the mirror: d_top(n,k) = -d_bot(-n,k; mirror), d_bot(n,k) = -d_top(-n,k; mirror).
DInvariants d_negative_framing(const VFunction& v_mirror, std::int64_t g, std::int64_t n, const SpinCIndex& k);

}  // namespace spinecheck
