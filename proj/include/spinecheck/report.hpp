#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "spinecheck/dinv.hpp"
#include "spinecheck/obstruct.hpp"
#include "spinecheck/vfunc.hpp"

namespace spinecheck {

using Json = nlohmann::ordered_json;

std::string_view version();

struct VRow {
  std::int64_t s;
  IntInterval value;
};

/// V_s for s in [smin, smax]. Throws whatever v_of throws.
std::vector<VRow> vtable_rows(const KnotExpr& k, std::int64_t smin, std::int64_t smax,
                              const VOptions& options = {});

struct DRow {
  std::int64_t k;
  DInvariants d;
};

/// d_top/d_bot for each Spin^c label of the framing (or only `only_k`).
/// For g = 0 and n > 0 both entries hold the S^3 surgery d-invariant. Negative
/// framings use the V-function of the mirror knot.
std::vector<DRow> dinv_rows(const KnotExpr& k, std::int64_t g, std::int64_t n,
                            std::optional<std::int64_t> only_k = std::nullopt,
                            const VOptions& options = {});

/// Full analysis report. Field order is fixed; the document is a pure
/// function of the problem, the options and the version string.
Json make_report(const SpineProblem& p, const VOptions& options = {});

/// Plain-text rendering of a report produced by make_report.
std::string render_text(const Json& report);

}  // namespace spinecheck
