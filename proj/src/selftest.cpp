#include "spinecheck/selftest.hpp"

#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "spinecheck/dinv.hpp"
#include "spinecheck/error.hpp"
#include "spinecheck/knot_text.hpp"
#include "spinecheck/obstruct.hpp"
#include "spinecheck/vfunc.hpp"

namespace spinecheck {

namespace {

// Collects failures; the first few are kept for the report.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checked_;
    if (ok) return;
    if (failures_.size() < 3) failures_.push_back(what);
    ++failed_;
  }

  bool passed() const { return failed_ == 0 && checked_ > 0; }

  std::string summary() const {
    std::ostringstream out;
    out << checked_ - failed_ << "/" << checked_ << " assertions";
    for (const auto& f : failures_) out << "; FAILED " << f;
    return out.str();
  }

 private:
  std::size_t checked_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

std::vector<std::pair<int, int>> coprime_pairs(int max_q) {
  std::vector<std::pair<int, int>> out;
  for (int q = 3; q <= max_q; ++q) {
    for (int p = 2; p < q; ++p) {
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
    }
  }
  return out;
}

// Both endpoint sequences must satisfy V_{-s} = V_s + s and
// V_{s-1} - V_s in {0,1} for s in [-2g, 2g].
void expect_vproperties(Tally& t, const VFunction& v, const std::string& label) {
  const std::int64_t g = v.genus();
  for (std::int64_t s = -2 * g; s <= 2 * g; ++s) {
    const IntInterval here = v_eval(v, s);
    const IntInterval mirror = v_eval(v, -s);
    const IntInterval prev = v_eval(v, s - 1);
    const bool symmetric = s < 0 || (mirror.lo == here.lo + s && mirror.hi == here.hi + s);
    const auto dlo = prev.lo - here.lo;
    const auto dhi = prev.hi - here.hi;
    const bool steps = (dlo == 0 || dlo == 1) && (dhi == 0 || dhi == 1);
    t.expect(symmetric && steps && here.lo >= 0, label + " at s=" + std::to_string(s));
  }
}

SelfCheck alternating_table() {
  Tally t;
  const std::int64_t expected[] = {1, 1, 2, 2, 3, 3, 4, 4};
  for (int i = 0; i < 8; ++i) {
    const std::int64_t sigma = -2 * (i + 1);
    const VFunction v = v_alternating(sigma);
    t.expect(v_eval(v, 0) == IntInterval::point(expected[i]), "V_0 at sigma=" + std::to_string(sigma));
  }
  for (std::int64_t sigma = 2; sigma <= 16; sigma += 2) {
    const VFunction v = v_alternating(sigma);
    for (std::int64_t s = 0; s <= 10; ++s) {
      t.expect(v_eval(v, s) == IntInterval::point(0), "V_s = 0 at sigma=" + std::to_string(sigma));
    }
  }
  return {"alternating V_0 table (sigma = -2..-16 -> 1,1,2,2,3,3,4,4; sigma > 0 -> 0)", "published",
          t.passed(), t.summary()};
}

SelfCheck unknot_identity() {
  Tally t;
  const VFunction u = v_unknot();
  for (std::int64_t g = 0; g <= 50; ++g) {
    t.expect(min_formula(u, g) == IntInterval::point(half_ceil(g)), "g=" + std::to_string(g));
  }
  return {"unknot: min_{a}{a + V_{-g+2a}(U)} = ceil(g/2) for g = 0..50", "published", t.passed(), t.summary()};
}

SelfCheck lspace_anchors() {
  Tally t;
  for (const auto& [p, q] : coprime_pairs(9)) {
    const VFunction v = v_lspace(KnotExpr::torus(p, q));
    const auto g = v.genus();
    const std::string label = "T(" + std::to_string(p) + "," + std::to_string(q) + ")";
    t.expect(v_eval(v, g - 1) == IntInterval::point(1), label + " V_{g-1}");
    t.expect(v_eval(v, g) == IntInterval::point(0), label + " V_g");
  }
  t.expect(v_eval(v_lspace(KnotExpr::torus(2, 3)), 0) == IntInterval::point(1), "V_0(T(2,3))");
  return {"L-space anchors: V_{g-1} = 1, V_g = 0 for T(p,q), q <= 9; V_0(T(2,3)) = 1", "published", t.passed(),
          t.summary()};
}

SelfCheck vproperty_suite() {
  Tally t;
  expect_vproperties(t, v_unknot(), "U");
  for (const auto& [p, q] : coprime_pairs(13)) {
    expect_vproperties(t, v_lspace(KnotExpr::torus(p, q)),
                       "T(" + std::to_string(p) + "," + std::to_string(q) + ")");
  }
  for (std::int64_t sigma = -20; sigma <= 20; sigma += 2) {
    expect_vproperties(t, v_alternating(sigma, VOptions{24}), "alt(" + std::to_string(sigma) + ")");
  }
  expect_vproperties(t, v_of(parse_knot("T(2,3)#T(2,3)")), "T(2,3)#T(2,3)");
  expect_vproperties(t, v_of(parse_knot("T(2,5)#T(3,4)#T(2,7)")), "T(2,5)#T(3,4)#T(2,7)");
  expect_vproperties(t, v_of(parse_knot("vtable(g=3;v=2,1,0,0)")), "vtable");
  expect_vproperties(t, v_of(KnotExpr::alt_diagram(braid_closure_pd(3, {1, -2, 1, -2}))), "figure-eight");
  expect_vproperties(t, v_of(KnotExpr::alt_diagram(braid_closure_pd(2, {1, 1, 1, 1, 1, 1, 1}))), "T(2,7) diagram");
  return {"V_{-s} = V_s + s and V_{s-1} - V_s in {0,1} on [-2g, 2g] for every construction", "published",
          t.passed(), t.summary()};
}

SelfCheck cross_module() {
  Tally t;
  const VFunction from_torsion = v_lspace(KnotExpr::torus(2, 7));
  const VFunction from_table = v_alternating(-6);
  t.expect(v_eval(from_torsion, 0) == IntInterval::point(2), "torsion V_0(T(2,7)) = 2");
  t.expect(v_eval(from_table, 0) == IntInterval::point(2), "table V_0(sigma=-6) = 2");
  const PDCode t27 = braid_closure_pd(2, {1, 1, 1, 1, 1, 1, 1});
  t.expect(signature_alt(t27) == -6, "signature of the T(2,7) diagram");
  return {"T(2,7): torsion V_0 = table V_0 = 2 and diagram signature = -6", "derived", t.passed(), t.summary()};
}

SelfCheck arf_cross_check() {
  Tally t;
  for (const auto& [p, q] : coprime_pairs(13)) {
    const int formula = arf_torus_formula(p, q);
    const int murasugi = arf_from_alexander(alexander(KnotExpr::torus(p, q)));
    t.expect(formula == murasugi, "T(" + std::to_string(p) + "," + std::to_string(q) + ")");
  }
  return {"Arf: (p^2-1)(q^2-1)/24 mod 2 agrees with the Delta(-1) mod 8 rule for q <= 13", "published",
          t.passed(), t.summary()};
}

SelfCheck dinv_properties() {
  Tally t;
  std::vector<std::pair<std::string, VFunction>> knots = {
      {"U", v_unknot()},
      {"T(2,3)", v_lspace(KnotExpr::torus(2, 3))},
      {"T(2,5)", v_lspace(KnotExpr::torus(2, 5))},
      {"T(3,4)", v_lspace(KnotExpr::torus(3, 4))},
      {"T(2,7)", v_lspace(KnotExpr::torus(2, 7))},
      {"T(3,5)", v_lspace(KnotExpr::torus(3, 5))},
      {"T(2,3)#T(2,5)", v_of(parse_knot("T(2,3)#T(2,5)"))},
      {"vtable", v_of(parse_knot("vtable(g=3;v=2,1,0,0)"))},
  };
  for (const auto& [name, v] : knots) {
    for (std::int64_t n = 1; n <= 8; ++n) {
      for (const auto& idx : spinc_range(n)) {
        const auto k = idx.k();
        for (std::int64_t g = 0; g <= 4; ++g) {
          const DInvariants d = d_circle_sum(v, g, n, idx);
          const std::string label = name + " g=" + std::to_string(g) + " n=" + std::to_string(n) +
                                    " k=" + std::to_string(k);
          t.expect(d.d_bot <= d.d_top, label + " d_bot <= d_top");
          if (2 * k < n && 2 * k > -n) {
            const DInvariants mirror = d_circle_sum(v, g, n, SpinCIndex(-k, n));
            t.expect(d == mirror, label + " conjugation symmetry");
          }
        }
        if (2 * k < n) {
          t.expect(d_surgery_s3(v, n, idx) == d_surgery_s3(v, n, SpinCIndex(-k, n)),
                   name + " S^3 conjugation n=" + std::to_string(n));
        }
      }
    }
  }
  t.expect(d_surgery_s3(v_unknot(), 1, SpinCIndex(0, 1)) == 0, "d(S^3_1(U)) = 0");
  return {"d-invariants: conjugation symmetry, d_bot <= d_top, d(S^3_1(U), 0) = 0", "derived", t.passed(),
          t.summary()};
}

SelfCheck connected_sums() {
  Tally t;
  const std::vector<KnotExpr> pool = {KnotExpr::torus(2, 3), KnotExpr::torus(2, 5), KnotExpr::torus(2, 7),
                                      KnotExpr::torus(3, 4), KnotExpr::torus(3, 5)};
  std::mt19937 rng(20211015);
  std::uniform_int_distribution<int> count(2, 4);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<VFunction> parts;
    std::string label;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
      const KnotExpr& k = pool[pick(rng)];
      parts.push_back(v_of(k));
      label += (i ? "#" : "") + to_text(k);
    }
    const VFunction v = v_sum(parts);
    t.expect(v_eval(v, 0).lo >= 1 && v_eval(v, 1).lo >= 1, label);
  }
  for (const auto& k : pool) {
    const VFunction v = v_of(k);
    t.expect(v_sum({v, v_unknot()}) == v, "unknot identity for " + to_text(k));
  }
  return {"connected sums of torus knots: V_0 >= 1 and V_1 >= 1; unknot is the sum identity", "published",
          t.passed(), t.summary()};
}

SelfCheck verdict_regressions() {
  Tally t;
  auto status = [](const std::string& knot, std::int64_t g, std::int64_t e) {
    return analyze(SpineProblem{parse_knot(knot), g, e});
  };
  t.expect(status("T(2,5)", 0, 5).status == VerdictStatus::Obstructed, "(T(2,5),0,5)");

  const Verdict trefoil = status("T(2,3)", 1, 0);
  auto outcome_of = [](const Verdict& v, const std::string& test) {
    for (const auto& e : v.evidence) {
      if (e.test == test) return e.outcome;
    }
    return CheckOutcome::NotApplicable;
  };
  t.expect(trefoil.status == VerdictStatus::Obstructed, "(T(2,3),1,0) status");
  t.expect(outcome_of(trefoil, "d-invariant") == CheckOutcome::Passes, "(T(2,3),1,0) d-check passes");
  t.expect(outcome_of(trefoil, "arf") == CheckOutcome::Obstructs, "(T(2,3),1,0) Arf obstructs");

  for (std::int64_t g = 0; g <= 5; ++g) {
    for (std::int64_t e = -5; e <= 5; ++e) {
      t.expect(status("U", g, e).status == VerdictStatus::SmoothSpineExists,
               "(U," + std::to_string(g) + "," + std::to_string(e) + ")");
    }
    for (std::int64_t e = 0; e <= 5; ++e) {
      t.expect(status("alt(sigma=-6)", g, e).status == VerdictStatus::Obstructed,
               "(alt -6," + std::to_string(g) + "," + std::to_string(e) + ")");
    }
  }
  t.expect(status("vtable(g=2;v=2,1,0;slice=false)", 0, 1).status == VerdictStatus::Obstructed,
           "(V_0 = 2 topologically slice knot, 0, 1)");
  return {"verdict regressions: torus, trefoil route, unknot, alternating sigma=-6, V_0=2 table knot", "published",
          t.passed(), t.summary()};
}

SelfCheck min_formula_bound() {
  Tally t;
  std::vector<std::pair<std::string, VFunction>> knots = {{"U", v_unknot()}};
  for (const auto& [p, q] : coprime_pairs(9)) {
    knots.emplace_back("T(" + std::to_string(p) + "," + std::to_string(q) + ")", v_lspace(KnotExpr::torus(p, q)));
  }
  for (std::int64_t sigma = -16; sigma <= 16; sigma += 2) {
    knots.emplace_back("alt(" + std::to_string(sigma) + ")", v_alternating(sigma));
  }
  knots.emplace_back("T(2,3)#T(3,4)", v_of(parse_knot("T(2,3)#T(3,4)")));
  knots.emplace_back("vtable", v_of(parse_knot("vtable(g=4;v=2,1,1,0,0)")));
  for (const auto& [name, v] : knots) {
    for (std::int64_t g = 0; g <= 20; ++g) {
      t.expect(min_formula(v, g).lo >= half_ceil(g), name + " g=" + std::to_string(g));
    }
  }
  return {"min formula lower bound >= ceil(g/2) for g <= 20", "derived", t.passed(), t.summary()};
}

}  // namespace

std::vector<SelfCheck> run_selftest() {
  const std::vector<std::function<SelfCheck()>> checks = {
      alternating_table, unknot_identity,     lspace_anchors,      vproperty_suite,   cross_module,
      arf_cross_check,   dinv_properties,     connected_sums,      verdict_regressions, min_formula_bound,
  };
  std::vector<SelfCheck> results;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    try {
      results.push_back(checks[i]());
    } catch (const std::exception& e) {
      results.push_back({"check " + std::to_string(i + 1), "derived", false, std::string("threw: ") + e.what()});
    }
  }
  return results;
}

}  // namespace spinecheck
