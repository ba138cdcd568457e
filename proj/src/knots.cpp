#include "spinecheck/knots.hpp"

#include <numeric>

#include "spinecheck/error.hpp"

namespace spinecheck {

namespace node {

bool operator==(const Mirror& a, const Mirror& b) { return *a.inner == *b.inner; }
bool operator==(const Sum& a, const Sum& b) { return a.parts == b.parts; }

}  // namespace node

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

[[noreturn]] void unsupported(const char* what, const char* node_name) {
  throw Error(ErrorKind::Unsupported, std::string(what) + " is not available for " + node_name + " knots");
}

LaurentPoly torus_alexander(std::int64_t p, std::int64_t q) {
  auto t_pow_minus_one = [](std::int64_t e) { return LaurentPoly{{e, 1}, {0, -1}}; };
  const LaurentPoly num = t_pow_minus_one(p * q) * t_pow_minus_one(1);
  const LaurentPoly den = t_pow_minus_one(p) * t_pow_minus_one(q);
  return lp_symmetrize(lp_exact_div(num, den));
}

}  // namespace

KnotExpr KnotExpr::unknot() { return KnotExpr(node::Unknot{}); }

KnotExpr KnotExpr::torus(std::int64_t p, std::int64_t q) {
  if (p < 2 || q <= p) {
    throw Error(ErrorKind::ValidationError,
                "torus knot T(" + std::to_string(p) + "," + std::to_string(q) + ") needs 2 <= p < q");
  }
  if (std::gcd(p, q) != 1) {
    throw Error(ErrorKind::ValidationError,
                "T(" + std::to_string(p) + "," + std::to_string(q) + ") is a link: gcd(p,q) != 1");
  }
  if (q > 100000) throw Error(ErrorKind::ValidationError, "torus parameters too large");
  return KnotExpr(node::Torus{p, q});
}

KnotExpr KnotExpr::alt_diagram(PDCode pd) {
  if (!is_alternating(pd)) throw Error(ErrorKind::NotAlternating, pd.to_string() + " is not alternating");
  return KnotExpr(node::AltDiagram{std::move(pd)});
}

KnotExpr KnotExpr::alt_signature(std::int64_t sigma) {
  if (sigma % 2 != 0) {
    throw Error(ErrorKind::OddSignature, "knot signatures are even, got " + std::to_string(sigma));
  }
  return KnotExpr(node::AltSignature{sigma});
}

KnotExpr KnotExpr::explicit_v(std::int64_t genus, std::vector<std::int64_t> values,
                              std::optional<int> arf, std::optional<bool> slice) {
  auto invalid = [](const std::string& why) { throw Error(ErrorKind::ValidationError, "vtable: " + why); };
  if (genus < 0) invalid("genus must be >= 0");
  if (static_cast<std::int64_t>(values.size()) != genus + 1) {
    invalid("expected " + std::to_string(genus + 1) + " values V_0..V_g, got " +
            std::to_string(values.size()));
  }
  if (values.back() != 0) invalid("V_g must be 0");
  for (std::size_t s = 0; s < values.size(); ++s) {
    if (values[s] < 0) invalid("V-values are nonnegative");
    if (s > 0) {
      const auto drop = values[s - 1] - values[s];
      if (drop != 0 && drop != 1) {
        invalid("V_" + std::to_string(s - 1) + " - V_" + std::to_string(s) + " must be 0 or 1");
      }
    }
  }
  if (arf && *arf != 0 && *arf != 1) invalid("arf must be 0 or 1");
  if (slice.value_or(false)) {
    if (values.front() != 0) invalid("a smoothly slice knot has V_0 = 0");
    if (arf.value_or(0) != 0) invalid("a smoothly slice knot has Arf invariant 0");
  }
  return KnotExpr(node::ExplicitV{genus, std::move(values), arf, slice});
}

KnotExpr KnotExpr::mirror(KnotExpr inner) {
  return KnotExpr(node::Mirror{std::make_shared<const KnotExpr>(std::move(inner))});
}

KnotExpr KnotExpr::sum(std::vector<KnotExpr> parts) {
  std::vector<KnotExpr> flat;
  for (auto& part : parts) {
    if (part.is<node::Sum>()) {
      for (const auto& sub : part.as<node::Sum>().parts) flat.push_back(sub);
    } else {
      flat.push_back(std::move(part));
    }
  }
  if (flat.empty()) throw Error(ErrorKind::ValidationError, "connected sum of no knots");
  if (flat.size() == 1) return std::move(flat.front());
  return KnotExpr(node::Sum{std::move(flat)});
}

LaurentPoly alexander(const KnotExpr& k) {
  return std::visit(
      overloaded{
          [](const node::Unknot&) { return LaurentPoly::constant(1); },
          [](const node::Torus& t) { return torus_alexander(t.p, t.q); },
          [](const node::AltDiagram& d) { return alexander_from_pd(d.pd); },
          [](const node::AltSignature&) -> LaurentPoly { unsupported("Alexander polynomial", "alt(sigma)"); },
          [](const node::ExplicitV&) -> LaurentPoly { unsupported("Alexander polynomial", "vtable"); },
          [](const node::Mirror& m) { return alexander(*m.inner); },
          [](const node::Sum& s) {
            LaurentPoly product = LaurentPoly::constant(1);
            for (const auto& part : s.parts) product = product * alexander(part);
            return product;
          },
      },
      k.node());
}

std::int64_t genus(const KnotExpr& k) {
  return std::visit(
      overloaded{
          [](const node::Unknot&) -> std::int64_t { return 0; },
          [](const node::Torus& t) -> std::int64_t { return (t.p - 1) * (t.q - 1) / 2; },
          [](const node::AltDiagram&) -> std::int64_t { unsupported("genus", "pd(...)"); },
          [](const node::AltSignature&) -> std::int64_t { unsupported("genus", "alt(sigma)"); },
          [](const node::ExplicitV& v) -> std::int64_t { return v.genus; },
          [](const node::Mirror& m) { return genus(*m.inner); },
          [](const node::Sum& s) {
            std::int64_t total = 0;
            for (const auto& part : s.parts) total += genus(part);
            return total;
          },
      },
      k.node());
}

int arf_torus_formula(std::int64_t p, std::int64_t q) {
  const BigInt value = BigInt(p * p - 1) * BigInt(q * q - 1) / 24;
  return static_cast<int>(value % 2);
}

int arf_from_alexander(const LaurentPoly& delta) {
  const Rational at_minus_one = lp_eval_int(delta, -1);
  BigInt d = boost::multiprecision::numerator(at_minus_one);
  BigInt r = d % 8;
  if (r < 0) r += 8;
  if (r == 1 || r == 7) return 0;
  if (r == 3 || r == 5) return 1;
  throw Error(ErrorKind::ValidationError, "Delta(-1) = " + d.str() + " is even; not a knot polynomial");
}

namespace {

int arf_from_determinant(const BigInt& det) {
  BigInt r = det % 8;
  if (r < 0) r += 8;
  if (r == 1 || r == 7) return 0;
  if (r == 3 || r == 5) return 1;
  throw Error(ErrorKind::ValidationError, "even determinant " + det.str());
}

}  // namespace

int arf(const KnotExpr& k) {
  return std::visit(
      overloaded{
          [](const node::Unknot&) { return 0; },
          [](const node::Torus& t) { return arf_torus_formula(t.p, t.q); },
          [&k](const node::AltDiagram&) { return arf_from_determinant(determinant(k)); },
          [](const node::AltSignature&) -> int {
            throw Error(ErrorKind::Unknown, "Arf invariant is not determined by the signature alone");
          },
          [](const node::ExplicitV& v) -> int {
            if (!v.arf) throw Error(ErrorKind::Unknown, "vtable knot given without arf");
            return *v.arf;
          },
          [](const node::Mirror& m) { return arf(*m.inner); },
          [](const node::Sum& s) {
            int total = 0;
            for (const auto& part : s.parts) total ^= arf(part);
            return total;
          },
      },
      k.node());
}

BigInt determinant(const KnotExpr& k) {
  return std::visit(
      overloaded{
          [](const node::Unknot&) { return BigInt(1); },
          [](const node::Torus& t) {
            BigInt d = boost::multiprecision::numerator(lp_eval_int(torus_alexander(t.p, t.q), -1));
            return d < 0 ? BigInt(-d) : d;
          },
          [](const node::AltDiagram& d) {
            BigInt det = matrix_determinant(goeritz(d.pd).matrix);
            return det < 0 ? BigInt(-det) : det;
          },
          [](const node::AltSignature&) -> BigInt { unsupported("determinant", "alt(sigma)"); },
          [](const node::ExplicitV&) -> BigInt { unsupported("determinant", "vtable"); },
          [](const node::Mirror& m) { return determinant(*m.inner); },
          [](const node::Sum& s) {
            BigInt product = 1;
            for (const auto& part : s.parts) product *= determinant(part);
            return product;
          },
      },
      k.node());
}

std::optional<std::int64_t> known_signature(const KnotExpr& k) {
  return std::visit(
      overloaded{
          [](const node::Unknot&) -> std::optional<std::int64_t> { return 0; },
          [](const node::Torus&) -> std::optional<std::int64_t> { return std::nullopt; },
          [](const node::AltDiagram& d) -> std::optional<std::int64_t> { return signature_alt(d.pd); },
          [](const node::AltSignature& a) -> std::optional<std::int64_t> { return a.sigma; },
          [](const node::ExplicitV&) -> std::optional<std::int64_t> { return std::nullopt; },
          [](const node::Mirror& m) -> std::optional<std::int64_t> {
            auto inner = known_signature(*m.inner);
            if (!inner) return std::nullopt;
            return -*inner;
          },
          [](const node::Sum& s) -> std::optional<std::int64_t> {
            std::int64_t total = 0;
            for (const auto& part : s.parts) {
              auto sig = known_signature(part);
              if (!sig) return std::nullopt;
              total += *sig;
            }
            return total;
          },
      },
      k.node());
}

bool is_trivial(const KnotExpr& k) {
  if (k.is<node::Unknot>()) return true;
  if (k.is<node::Mirror>()) return is_trivial(*k.as<node::Mirror>().inner);
  if (k.is<node::Sum>()) {
    for (const auto& part : k.as<node::Sum>().parts) {
      if (!is_trivial(part)) return false;
    }
    return true;
  }
  return false;
}

namespace {

void finish(KnotClass& c) {
  c.is_generic = !c.is_unknot && !c.is_lspace_knot_verified && !c.is_sum_of_nontrivial_lspace &&
                 !c.alternating_signature && !c.is_slice_known;
}

}  // namespace

KnotClass classify(const KnotExpr& k) {
  KnotClass c;
  if (is_trivial(k)) {
    c.is_unknot = true;
    c.is_slice_known = true;
    finish(c);
    return c;
  }
  std::visit(
      overloaded{
          [](const node::Unknot&) {},
          [&c](const node::Torus&) { c.is_lspace_knot_verified = true; },
          [&c](const node::AltDiagram& d) { c.alternating_signature = signature_alt(d.pd); },
          [&c](const node::AltSignature& a) { c.alternating_signature = a.sigma; },
          [&c](const node::ExplicitV& v) { c.is_slice_known = v.slice.value_or(false); },
          [&c](const node::Mirror& m) {
            // Mirrors of nontrivial L-space knots are not L-space knots.
            const KnotClass inner = classify(*m.inner);
            c.is_slice_known = inner.is_slice_known;
            if (inner.alternating_signature) c.alternating_signature = -*inner.alternating_signature;
          },
          [&c](const node::Sum& s) {
            std::vector<const KnotExpr*> nontrivial;
            bool all_slice = true;
            for (const auto& part : s.parts) {
              if (!is_trivial(part)) nontrivial.push_back(&part);
              all_slice = all_slice && classify(part).is_slice_known;
            }
            if (nontrivial.size() == 1) {
              c = classify(*nontrivial.front());
              return;
            }
            c.is_slice_known = all_slice;
            c.is_sum_of_nontrivial_lspace = true;
            for (const KnotExpr* part : nontrivial) {
              if (!classify(*part).is_lspace_knot_verified) c.is_sum_of_nontrivial_lspace = false;
            }
          },
      },
      k.node());
  finish(c);
  return c;
}

}  // namespace spinecheck
