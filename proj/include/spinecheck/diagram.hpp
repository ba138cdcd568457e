#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "spinecheck/laurent.hpp"
#include "spinecheck/numeric.hpp"

namespace spinecheck {

using IntMatrix = std::vector<std::vector<BigInt>>;

/// A single crossing X(i,j,k,l): edge labels counterclockwise, starting from
/// the incoming under-strand, so the under-strand runs i -> k.
using Crossing = std::array<int, 4>;

/// Validated planar-diagram code of a one-component knot diagram.
class PDCode {
 public:
  /// Throws ValidationError when labels are not 1..2n each used twice, the
  /// diagram is disconnected, or the strands do not close up into a single
  /// consistently oriented component.
  explicit PDCode(std::vector<Crossing> crossings);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  std::size_t size() const { return crossings_.size(); }

  /// +1 / -1 per crossing, with the orientation induced by the under-strand
  /// direction i -> k.
  const std::vector<int>& crossing_signs() const { return signs_; }
  int writhe() const;

  /// Mirror diagram: every crossing switched.
  PDCode mirrored() const;

  /// Canonical text "PD[X(a,b,c,d),...]".
  std::string to_string() const;

  friend bool operator==(const PDCode& a, const PDCode& b) { return a.crossings_ == b.crossings_; }

 private:
  std::vector<Crossing> crossings_;
  std::vector<int> signs_;
};

/// PD code of the closure of a braid on `strands` strands. Letter +i is the
/// positive crossing sigma_i between positions i and i+1, -i its inverse.
/// Throws ValidationError if the closure is not a single knot.
PDCode braid_closure_pd(int strands, const std::vector<int>& word);

/// Grammar: PD[X(i,j,k,l)(,X(i,j,k,l))*], whitespace-insensitive.
/// Throws SyntaxError on malformed text, ValidationError on bad codes.
PDCode parse_pd(std::string_view text);

/// A corner is the wedge at crossing c between slots p and p+1 (mod 4).
struct Corner {
  int crossing = 0;
  int slot = 0;
  friend bool operator==(const Corner&, const Corner&) = default;
};

using Face = std::vector<Corner>;

/// Faces of the planar 4-valent graph from the rotation system.
/// Throws NonPlanar if the Euler count f = n + 2 fails.
std::vector<Face> faces(const PDCode& pd);

bool is_alternating(const PDCode& pd);

struct GoeritzData {
  /// Goeritz form on the white regions, last white region deleted.
  IntMatrix matrix;
  /// Gordon-Litherland correction; signature = sign(matrix) - mu.
  std::int64_t mu = 0;
  /// true = white, per face in the order returned by faces().
  std::vector<bool> white;
};

/// Checkerboard coloring with every white corner an A-corner (the wedge swept
/// counterclockwise by the over-strand). Throws NotAlternating.
GoeritzData goeritz(const PDCode& pd);

/// Positive minus negative eigenvalue count by exact rational congruence
/// diagonalization. Zero eigenvalues are not counted.
std::int64_t matrix_signature(const IntMatrix& m);

BigInt matrix_determinant(const IntMatrix& m);

/// Knot signature, normalized so the positive (right-handed) trefoil has
/// signature -2. Throws NotAlternating, or DegenerateForm for singular forms.
std::int64_t signature_alt(const PDCode& pd);

/// Alexander polynomial from the Wirtinger presentation of the diagram,
/// symmetrized and normalized to Delta(1) = 1.
LaurentPoly alexander_from_pd(const PDCode& pd);

}  // namespace spinecheck
