#include "spinecheck/obstruct.hpp"

#include <algorithm>

#include "spinecheck/error.hpp"

namespace spinecheck {

namespace {

constexpr std::string_view kSliceCitation =
    "a smoothly slice singularity knot bounds a smooth disk replacing the cone point";
constexpr std::string_view kDinvCitation =
    "e >= 0 and a smooth spine force min_{a=0..g} {a + V_{-g+2a}(K)} = ceil(g/2); "
    "equivalently V_0(K) = 0 for even g and V_1(K) = 0 for odd g";
constexpr std::string_view kArfCitation = "a singularity knot with nonzero Arf invariant admits no smooth spine";
constexpr std::string_view kClassCitation =
    "nontrivial L-space knots, nontrivial connected sums of nontrivial L-space knots, and "
    "alternating knots of signature < -4 admit no smooth spine";

std::string bit(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string_view to_string(CheckOutcome outcome) {
  switch (outcome) {
    case CheckOutcome::Obstructs: return "OBSTRUCTS";
    case CheckOutcome::Passes: return "PASSES";
    case CheckOutcome::Indeterminate: return "INDETERMINATE";
    case CheckOutcome::NoMatch: return "NO_MATCH";
    case CheckOutcome::NotApplicable: return "NOT_APPLICABLE";
    case CheckOutcome::Certifies: return "CERTIFIES";
  }
  return "NOT_APPLICABLE";
}

std::string_view to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::Obstructed: return "Obstructed";
    case VerdictStatus::SmoothSpineExists: return "SmoothSpineExists";
    case VerdictStatus::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

IntInterval min_formula(const VFunction& v, std::int64_t g) {
  if (g < 0) throw Error(ErrorKind::ValidationError, "surface genus must be >= 0");
  IntInterval best = v_eval(v, -g);
  for (std::int64_t a = 1; a <= g; ++a) {
    const IntInterval term = v_eval(v, -g + 2 * a) + a;
    best.lo = std::min(best.lo, term.lo);
    best.hi = std::min(best.hi, term.hi);
  }
  return best;
}

Evidence check_slice(const SpineProblem& p) {
  Evidence ev{"slice", std::string(kSliceCitation), CheckOutcome::NoMatch, {}, {}};
  const KnotClass c = classify(p.knot);
  ev.values.emplace_back("unknot", bit(c.is_unknot));
  ev.values.emplace_back("slice_known", bit(c.is_slice_known));
  if (c.is_slice_known) {
    ev.outcome = CheckOutcome::Certifies;
    ev.detail = c.is_unknot ? "the singularity knot is trivial" : "the singularity knot is declared smoothly slice";
  } else {
    ev.detail = "no slice certificate";
  }
  return ev;
}

Evidence check_dinv(const SpineProblem& p, const VOptions& options) {
  Evidence ev{"d-invariant", std::string(kDinvCitation), CheckOutcome::NotApplicable, {}, {}};
  ev.values.emplace_back("genus", std::to_string(p.genus));
  ev.values.emplace_back("euler", std::to_string(p.euler));
  if (p.euler < 0) {
    ev.detail = "requires e >= 0";
    return ev;
  }
  VFunction v = v_unknot();
  try {
    v = v_of(p.knot, options);
  } catch (const Error& e) {
    ev.detail = e.what();
    return ev;
  }

  const std::int64_t target = half_ceil(p.genus);
  const IntInterval m = min_formula(v, p.genus);
  const std::int64_t parity_index = p.genus % 2;
  const IntInterval v_parity = v_eval(v, parity_index);
  ev.values.emplace_back("min_formula", to_string(m));
  ev.values.emplace_back("target", std::to_string(target));
  ev.values.emplace_back(parity_index == 0 ? "V_0" : "V_1", to_string(v_parity));

  if (m.lo > target) {
    ev.outcome = CheckOutcome::Obstructs;
    ev.detail = "min formula " + to_string(m) + " exceeds ceil(g/2) = " + std::to_string(target);
  } else if (v_parity.lo >= 1) {
    ev.outcome = CheckOutcome::Obstructs;
    ev.detail = std::string(parity_index == 0 ? "V_0" : "V_1") + " >= 1 while a smooth spine needs it to vanish";
  } else if (m == IntInterval::point(target)) {
    ev.outcome = CheckOutcome::Passes;
    ev.detail = "min formula equals ceil(g/2)";
  } else {
    ev.outcome = CheckOutcome::Indeterminate;
    ev.detail = "min formula " + to_string(m) + " straddles ceil(g/2) = " + std::to_string(target);
  }
  return ev;
}

Evidence check_arf(const SpineProblem& p) {
  Evidence ev{"arf", std::string(kArfCitation), CheckOutcome::NotApplicable, {}, {}};
  int value = 0;
  try {
    value = arf(p.knot);
  } catch (const Error& e) {
    ev.detail = e.what();
    return ev;
  }
  ev.values.emplace_back("arf", std::to_string(value));
  if (value == 1) {
    ev.outcome = CheckOutcome::Obstructs;
    ev.detail = "Arf invariant is 1";
  } else {
    ev.outcome = CheckOutcome::Passes;
    ev.detail = "Arf invariant is 0; then W x S^1 has a locally flat spine, so this test cannot obstruct";
  }
  return ev;
}

Evidence check_class(const SpineProblem& p) {
  Evidence ev{"knot-class", std::string(kClassCitation), CheckOutcome::NoMatch, {}, {}};
  KnotClass c;
  try {
    c = classify(p.knot);
  } catch (const Error& e) {
    ev.outcome = CheckOutcome::NotApplicable;
    ev.detail = e.what();
    return ev;
  }
  ev.values.emplace_back("lspace", bit(c.is_lspace_knot_verified));
  ev.values.emplace_back("sum_of_nontrivial_lspace", bit(c.is_sum_of_nontrivial_lspace));
  ev.values.emplace_back("alternating_signature",
                         c.alternating_signature ? std::to_string(*c.alternating_signature) : "none");
  if (c.is_lspace_knot_verified) {
    ev.outcome = CheckOutcome::Obstructs;
    ev.detail = "nontrivial L-space knot";
  } else if (c.is_sum_of_nontrivial_lspace) {
    ev.outcome = CheckOutcome::Obstructs;
    ev.detail = "connected sum of nontrivial L-space knots";
  } else if (c.alternating_signature && *c.alternating_signature < -4) {
    ev.outcome = CheckOutcome::Obstructs;
    ev.detail = "alternating with signature " + std::to_string(*c.alternating_signature) + " < -4";
  } else {
    ev.detail = "no hypothesis class matches";
  }
  return ev;
}

Verdict analyze(const SpineProblem& p, const VOptions& options) {
  if (p.genus < 0) throw Error(ErrorKind::ValidationError, "surface genus must be >= 0");
  Verdict verdict;

  verdict.evidence.push_back(check_slice(p));

  if (p.euler >= 0) {
    verdict.evidence.push_back(check_dinv(p, options));
  } else {
    // Reversing orientation mirrors K and negates e.
    const SpineProblem flipped{KnotExpr::mirror(p.knot), p.genus, -p.euler};
    Evidence ev = check_dinv(flipped, options);
    ev.values.insert(ev.values.begin(), {"knot_used", "mirror"});
    verdict.notes.push_back("e < 0: the d-invariant test was run on the mirror knot with e = " +
                            std::to_string(-p.euler));
    if (ev.outcome == CheckOutcome::NotApplicable) {
      verdict.notes.push_back("d-invariant test skipped: " + ev.detail);
    }
    verdict.evidence.push_back(std::move(ev));
  }

  verdict.evidence.push_back(check_arf(p));
  if (verdict.evidence.back().outcome == CheckOutcome::Passes) {
    verdict.notes.push_back("zero Arf invariant: W x S^1 carries a locally flat spine");
  }
  verdict.evidence.push_back(check_class(p));

  const bool sliced = verdict.evidence.front().outcome == CheckOutcome::Certifies;
  const bool obstructed = std::any_of(verdict.evidence.begin(), verdict.evidence.end(),
                                      [](const Evidence& e) { return e.outcome == CheckOutcome::Obstructs; });
  if (sliced && obstructed) {
    // Unreachable for validated inputs; report rather than pick a side.
    verdict.status = VerdictStatus::Inconclusive;
    verdict.notes.push_back("contradictory input: slice certificate alongside an obstruction");
  } else if (sliced) {
    verdict.status = VerdictStatus::SmoothSpineExists;
  } else if (obstructed) {
    verdict.status = VerdictStatus::Obstructed;
  } else {
    verdict.status = VerdictStatus::Inconclusive;
    verdict.notes.push_back("all tested conditions are necessary, not sufficient, for a smooth spine");
  }
  return verdict;
}

}  // namespace spinecheck
