#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spinecheck/knots.hpp"
#include "spinecheck/numeric.hpp"
#include "spinecheck/vfunc.hpp"

namespace spinecheck {

/// Compact 4-manifold with a PL spine: genus-g surface, normal Euler number e,
/// one singular point with singularity knot K.
struct SpineProblem {
  KnotExpr knot;
  std::int64_t genus = 0;
  std::int64_t euler = 0;
};

enum class CheckOutcome { Obstructs, Passes, Indeterminate, NoMatch, NotApplicable, Certifies };
enum class VerdictStatus { Obstructed, SmoothSpineExists, Inconclusive };

std::string_view to_string(CheckOutcome outcome);
std::string_view to_string(VerdictStatus status);

struct Evidence {
  std::string test;
  std::string citation;
  CheckOutcome outcome = CheckOutcome::NotApplicable;
  /// Ordered name -> value pairs sufficient to redo the decision by hand.
  std::vector<std::pair<std::string, std::string>> values;
  std::string detail;
};

struct Verdict {
  VerdictStatus status = VerdictStatus::Inconclusive;
  std::vector<Evidence> evidence;
  std::vector<std::string> notes;
};

/// Tightest interval containing min_{a=0..g} {a + V_{-g+2a}}.
IntInterval min_formula(const VFunction& v, std::int64_t g);

/// ceil(g/2) for g >= 0.
constexpr std::int64_t half_ceil(std::int64_t g) { return (g + 1) / 2; }

Evidence check_slice(const SpineProblem& p);
Evidence check_dinv(const SpineProblem& p, const VOptions& options = {});
Evidence check_arf(const SpineProblem& p);
Evidence check_class(const SpineProblem& p);

/// Runs every check and aggregates. Never throws on knot-level failures;
/// those become NOT_APPLICABLE evidence.
Verdict analyze(const SpineProblem& p, const VOptions& options = {});

}  // namespace spinecheck
