#include "spinecheck/vfunc.hpp"

#include <algorithm>
#include <limits>

#include "spinecheck/error.hpp"

namespace spinecheck {

namespace {

void check_steps(const std::vector<std::int64_t>& seq, const char* which) {
  for (std::size_t s = 1; s < seq.size(); ++s) {
    const auto drop = seq[s - 1] - seq[s];
    if (drop != 0 && drop != 1) {
      throw Error(ErrorKind::ValidationError, std::string("V-function ") + which + " bound drops by " +
                                                  std::to_string(drop) + " at s=" + std::to_string(s));
    }
  }
}

}  // namespace

VFunction::VFunction(std::int64_t genus, std::vector<IntInterval> values)
    : genus_(genus), values_(std::move(values)) {
  if (genus_ < 0) throw Error(ErrorKind::ValidationError, "V-function genus must be >= 0");
  if (static_cast<std::int64_t>(values_.size()) != genus_ + 1) {
    throw Error(ErrorKind::ValidationError, "V-function needs genus+1 values");
  }
  if (!(values_.back() == IntInterval::point(0))) {
    throw Error(ErrorKind::ValidationError, "V-function must vanish at s = genus");
  }
  std::vector<std::int64_t> lo, hi;
  for (const auto& iv : values_) {
    if (iv.lo < 0 || iv.lo > iv.hi) {
      throw Error(ErrorKind::ValidationError, "bad V interval " + to_string(iv));
    }
    lo.push_back(iv.lo);
    hi.push_back(iv.hi);
  }
  check_steps(lo, "lower");
  check_steps(hi, "upper");
}

VFunction VFunction::exact(std::int64_t genus, const std::vector<std::int64_t>& values) {
  std::vector<IntInterval> iv;
  iv.reserve(values.size());
  for (auto v : values) iv.push_back(IntInterval::point(v));
  return VFunction(genus, std::move(iv));
}

bool VFunction::is_exact() const {
  return std::all_of(values_.begin(), values_.end(), [](const IntInterval& iv) { return iv.is_point(); });
}

RFunction::RFunction(std::int64_t genus, std::vector<std::int64_t> values)
    : genus_(genus), values_(std::move(values)) {
  if (static_cast<std::int64_t>(values_.size()) != 2 * genus_ + 1) {
    throw Error(ErrorKind::ValidationError, "R-function needs 2g+1 values");
  }
}

std::int64_t RFunction::at(std::int64_t j) const {
  if (j <= 0) return values_.front();
  const auto top = static_cast<std::int64_t>(values_.size()) - 1;
  if (j <= top) return values_[j];
  return values_.back() + (j - top);
}

IntInterval v_eval(const VFunction& v, std::int64_t s) {
  if (s >= v.genus()) return IntInterval::point(0);
  if (s >= 0) return v.values()[s];
  return v_eval(v, -s) + (-s);
}

VFunction v_unknot() { return VFunction::exact(0, {0}); }

std::vector<BigInt> torsion_coeffs(const LaurentPoly& delta, std::int64_t g) {
  if (!is_symmetric(delta)) {
    throw Error(ErrorKind::NotSymmetric, delta.to_string() + " is not symmetrized");
  }
  if (delta.is_zero() || delta.max_exponent() != g) {
    throw Error(ErrorKind::NotSymmetric, "top exponent of " + delta.to_string() + " is not " + std::to_string(g));
  }
  std::vector<BigInt> t(g + 1, 0);
  for (std::int64_t s = 0; s <= g; ++s) {
    for (std::int64_t j = 1; s + j <= g; ++j) t[s] += j * delta.coeff(s + j);
  }
  return t;
}

VFunction v_lspace(const KnotExpr& k) {
  if (!classify(k).is_lspace_knot_verified || !k.is<node::Torus>()) {
    throw Error(ErrorKind::NotLSpace, "not a verified L-space knot");
  }
  const std::int64_t g = genus(k);
  const auto t = torsion_coeffs(alexander(k), g);
  std::vector<std::int64_t> values;
  values.reserve(t.size());
  for (const auto& c : t) values.push_back(to_int64(c));
  if (g >= 1 && (values[g - 1] != 1 || values[g] != 0)) {
    throw Error(ErrorKind::ValidationError, "L-space V-function must end with V_{g-1} = 1, V_g = 0");
  }
  return VFunction::exact(g, values);
}

std::int64_t alternating_v0(std::int64_t sigma) {
  if (sigma % 2 != 0) throw Error(ErrorKind::OddSignature, std::to_string(sigma));
  if (sigma > 0) return 0;
  const std::int64_t m = -sigma;
  const std::int64_t k = m / 8;
  switch (m % 8) {
    case 0: return 2 * k;
    case 2: return 2 * k + 1;
    case 4: return 2 * k + 1;
    default: return 2 * k + 2;  // 6
  }
}

VFunction v_alternating(std::int64_t sigma, const VOptions& options) {
  const std::int64_t v0 = alternating_v0(sigma);
  if (v0 == 0) return v_unknot();
  const std::int64_t h = options.horizon;
  if (h < v0) {
    throw Error(ErrorKind::ValidationError, "horizon " + std::to_string(h) + " is below V_0 = " +
                                                std::to_string(v0));
  }
  // Nonincreasing with unit steps from V_0, and zero from s = h on.
  std::vector<IntInterval> values(h + 1);
  for (std::int64_t s = 0; s <= h; ++s) {
    values[s] = IntInterval{std::max<std::int64_t>(0, v0 - s), std::min(v0, h - s)};
  }
  return VFunction(h, std::move(values));
}

RFunction r_from_v(const VFunction& v) {
  if (!v.is_exact()) throw Error(ErrorKind::IntervalValued, "R-function needs an exact V-function");
  const std::int64_t g = v.genus();
  std::vector<std::int64_t> r(2 * g + 1);
  for (std::int64_t j = 0; j <= 2 * g; ++j) r[j] = v_eval(v, g - j).lo;
  return RFunction(g, std::move(r));
}

std::vector<std::int64_t> min_plus_convolve(const std::vector<std::int64_t>& a,
                                            const std::vector<std::int64_t>& b) {
  const std::size_t len = std::min(a.size(), b.size());
  std::vector<std::int64_t> out(len, std::numeric_limits<std::int64_t>::max());
  for (std::size_t j = 0; j < len; ++j) {
    for (std::size_t x = 0; x <= j; ++x) out[j] = std::min(out[j], a[x] + b[j - x]);
  }
  return out;
}

VFunction v_sum(const std::vector<VFunction>& parts) {
  if (parts.empty()) throw Error(ErrorKind::ValidationError, "connected sum of no knots");
  std::int64_t total_genus = 0;
  std::vector<RFunction> rs;
  rs.reserve(parts.size());
  for (const auto& v : parts) {
    rs.push_back(r_from_v(v));
    total_genus += v.genus();
  }
  // Splits with negative j_i never help since R is nondecreasing and R(j) = R(0) for j < 0.
  const std::int64_t window = 2 * total_genus + 1;
  auto sample = [window](const RFunction& r) {
    std::vector<std::int64_t> out(window);
    for (std::int64_t j = 0; j < window; ++j) out[j] = r.at(j);
    return out;
  };
  std::vector<std::int64_t> acc = sample(rs.front());
  for (std::size_t i = 1; i < rs.size(); ++i) acc = min_plus_convolve(acc, sample(rs[i]));

  std::vector<std::int64_t> values(total_genus + 1);
  for (std::int64_t j = 0; j <= total_genus; ++j) values[j] = acc[total_genus + j] - j;
  return VFunction::exact(total_genus, values);
}

VFunction v_of(const KnotExpr& k, const VOptions& options) {
  if (is_trivial(k)) return v_unknot();
  if (k.is<node::Torus>()) return v_lspace(k);
  if (k.is<node::AltSignature>()) return v_alternating(k.as<node::AltSignature>().sigma, options);
  if (k.is<node::AltDiagram>()) return v_alternating(signature_alt(k.as<node::AltDiagram>().pd), options);
  if (k.is<node::ExplicitV>()) {
    const auto& e = k.as<node::ExplicitV>();
    return VFunction::exact(e.genus, e.values);
  }
  if (k.is<node::Sum>()) {
    std::vector<VFunction> parts;
    for (const auto& part : k.as<node::Sum>().parts) {
      VFunction v = v_of(part, options);
      if (!v.is_exact()) {
        throw Error(ErrorKind::IntervalValued, "connected sums need exact V-functions for every summand");
      }
      parts.push_back(std::move(v));
    }
    return v_sum(parts);
  }
  // Mirror: only the alternating-signature route and sums of those survive.
  const KnotExpr& inner = *k.as<node::Mirror>().inner;
  if (inner.is<node::Mirror>()) return v_of(*inner.as<node::Mirror>().inner, options);
  if (inner.is<node::AltSignature>()) return v_alternating(-inner.as<node::AltSignature>().sigma, options);
  if (inner.is<node::AltDiagram>()) return v_alternating(-signature_alt(inner.as<node::AltDiagram>().pd), options);
  if (inner.is<node::Sum>()) {
    std::vector<KnotExpr> mirrored;
    for (const auto& part : inner.as<node::Sum>().parts) mirrored.push_back(KnotExpr::mirror(part));
    return v_of(KnotExpr::sum(std::move(mirrored)), options);
  }
  throw Error(ErrorKind::MirrorVUnavailable,
              "the V-function of the mirror of this knot cannot be derived from its description");
}

}  // namespace spinecheck
