#pragma once

#include <string>
#include <string_view>

#include "spinecheck/knots.hpp"

namespace spinecheck {

// Knot expression text:
//   expr := term ("#" term)*
//   term := "U" | "T(" p "," q ")" | "mirror(" expr ")" | "alt(sigma=" int ")"
//         | "pd(" PD[...] ")"
//         | "vtable(g=" int ";v=" int ("," int)* [";arf=" 0|1] [";slice=" true|false] ")"
// Whitespace between tokens is ignored.

/// Throws SyntaxError on malformed text and the constructor errors
/// (ValidationError, OddSignature, NotAlternating) on invalid knots.
KnotExpr parse_knot(std::string_view text);

/// Canonical text; parse_knot(to_text(k)) == k.
std::string to_text(const KnotExpr& k);

}  // namespace spinecheck
