#pragma once

#include <cstdint>
#include <vector>

#include "spinecheck/knots.hpp"
#include "spinecheck/laurent.hpp"
#include "spinecheck/numeric.hpp"

namespace spinecheck {

/// Knowledge of V_s(K) for every integer s, stored on the window s = 0..genus.
/// Outside the window: V_s = 0 for s >= genus and V_{-s} = V_s + s.
class VFunction {
 public:
  /// Throws ValidationError unless 0 <= lo <= hi, V_genus = [0,0], and both
  /// endpoint sequences are nonincreasing with steps of at most one.
  VFunction(std::int64_t genus, std::vector<IntInterval> values);

  static VFunction exact(std::int64_t genus, const std::vector<std::int64_t>& values);

  std::int64_t genus() const { return genus_; }
  const std::vector<IntInterval>& values() const { return values_; }
  bool is_exact() const;

  friend bool operator==(const VFunction&, const VFunction&) = default;

 private:
  std::int64_t genus_;
  std::vector<IntInterval> values_;
};

/// R_K(j) = V_{g-j}(K) stored for j = 0..2g; R(j) = R(2g) + (j - 2g) beyond.
class RFunction {
 public:
  RFunction(std::int64_t genus, std::vector<std::int64_t> values);

  std::int64_t genus() const { return genus_; }
  const std::vector<std::int64_t>& values() const { return values_; }
  /// Defined for all integers; R(j) = R(0) for j < 0.
  std::int64_t at(std::int64_t j) const;

  friend bool operator==(const RFunction&, const RFunction&) = default;

 private:
  std::int64_t genus_;
  std::vector<std::int64_t> values_;
};

struct VOptions {
  /// Assumed genus bound for knots known only by signature.
  std::int64_t horizon = 64;
};

IntInterval v_eval(const VFunction& v, std::int64_t s);

VFunction v_unknot();

/// t_s = sum_{j >= 1} j * a_{s+j} for s = 0..g. Throws NotSymmetric.
std::vector<BigInt> torsion_coeffs(const LaurentPoly& delta, std::int64_t g);

/// Exact V-function of a torus knot from its torsion coefficients.
/// Throws NotLSpace for anything classify() does not verify as L-space.
VFunction v_lspace(const KnotExpr& k);

/// V_0 from the alternating-knot signature table.
std::int64_t alternating_v0(std::int64_t sigma);

/// Interval knowledge for an alternating knot of signature sigma. Throws OddSignature.
VFunction v_alternating(std::int64_t sigma, const VOptions& options = {});

/// Throws IntervalValued unless v is exact.
RFunction r_from_v(const VFunction& v);

/// (a ⊞ b)(j) = min over j1 + j2 = j of a(j1) + b(j2), evaluated for j = 0..max_j.
std::vector<std::int64_t> min_plus_convolve(const std::vector<std::int64_t>& a,
                                            const std::vector<std::int64_t>& b);

/// V-function of a connected sum via min-plus convolution of R-functions.
VFunction v_sum(const std::vector<VFunction>& parts);

/// Dispatches on the knot shape. Throws Unsupported, MirrorVUnavailable, or
/// IntervalValued (sums with interval-valued summands).
VFunction v_of(const KnotExpr& k, const VOptions& options = {});

}  // namespace spinecheck
