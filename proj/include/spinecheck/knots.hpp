#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "spinecheck/diagram.hpp"
#include "spinecheck/laurent.hpp"

namespace spinecheck {

class KnotExpr;

namespace node {

struct Unknot {
  friend bool operator==(const Unknot&, const Unknot&) = default;
};

/// Positive torus knot T(p,q), 2 <= p < q, gcd(p,q) = 1.
struct Torus {
  std::int64_t p = 2;
  std::int64_t q = 3;
  friend bool operator==(const Torus&, const Torus&) = default;
};

/// Alternating knot given by a diagram.
struct AltDiagram {
  PDCode pd;
  friend bool operator==(const AltDiagram&, const AltDiagram&) = default;
};

/// Alternating knot known only through its (even) signature.
struct AltSignature {
  std::int64_t sigma = 0;
  friend bool operator==(const AltSignature&, const AltSignature&) = default;
};

/// Knot given by its V-function table V_0..V_genus, with optional Arf
/// invariant and smooth-sliceness flag.
struct ExplicitV {
  std::int64_t genus = 0;
  std::vector<std::int64_t> values;
  std::optional<int> arf;
  std::optional<bool> slice;
  friend bool operator==(const ExplicitV&, const ExplicitV&) = default;
};

struct Mirror {
  std::shared_ptr<const KnotExpr> inner;
  friend bool operator==(const Mirror& a, const Mirror& b);
};

/// Connected sum; always flattened, at least two parts.
struct Sum {
  std::vector<KnotExpr> parts;
  friend bool operator==(const Sum& a, const Sum& b);
};

}  // namespace node

/// Immutable symbolic knot. Construct through the static factories, which
/// validate every node invariant.
class KnotExpr {
 public:
  using Node = std::variant<node::Unknot, node::Torus, node::AltDiagram, node::AltSignature,
                            node::ExplicitV, node::Mirror, node::Sum>;

  static KnotExpr unknot();
  static KnotExpr torus(std::int64_t p, std::int64_t q);
  static KnotExpr alt_diagram(PDCode pd);
  static KnotExpr alt_signature(std::int64_t sigma);
  static KnotExpr explicit_v(std::int64_t genus, std::vector<std::int64_t> values,
                             std::optional<int> arf = std::nullopt,
                             std::optional<bool> slice = std::nullopt);
  static KnotExpr mirror(KnotExpr inner);
  /// Flattens nested sums. A single part is returned as is.
  static KnotExpr sum(std::vector<KnotExpr> parts);

  const Node& node() const { return node_; }

  template <class T>
  bool is() const {
    return std::holds_alternative<T>(node_);
  }
  template <class T>
  const T& as() const {
    return std::get<T>(node_);
  }

  friend bool operator==(const KnotExpr& a, const KnotExpr& b) { return a.node_ == b.node_; }

 private:
  explicit KnotExpr(Node n) : node_(std::move(n)) {}
  Node node_;
};

struct KnotClass {
  bool is_unknot = false;
  bool is_lspace_knot_verified = false;
  bool is_sum_of_nontrivial_lspace = false;
  std::optional<std::int64_t> alternating_signature;
  bool is_slice_known = false;
  bool is_generic = false;
};

/// Symmetrized Alexander polynomial. Unsupported for AltSignature / ExplicitV.
LaurentPoly alexander(const KnotExpr& k);

/// Seifert genus. Unsupported for alternating inputs.
std::int64_t genus(const KnotExpr& k);

/// Arf invariant in {0,1}. Throws Unknown when no rule determines it.
int arf(const KnotExpr& k);

/// (p^2-1)(q^2-1)/24 mod 2.
int arf_torus_formula(std::int64_t p, std::int64_t q);

/// Arf from Delta(-1): 0 when Delta(-1) = +-1 mod 8, 1 when +-3 mod 8.
int arf_from_alexander(const LaurentPoly& delta);

/// |Delta(-1)|, or |det Goeritz| for diagrams.
BigInt determinant(const KnotExpr& k);

/// Signature when it is known from the expression (alternating inputs).
std::optional<std::int64_t> known_signature(const KnotExpr& k);

KnotClass classify(const KnotExpr& k);

/// True for Unknot, mirrors of it, and sums made only of those.
bool is_trivial(const KnotExpr& k);

}  // namespace spinecheck
