#include "spinecheck/report.hpp"

#include <sstream>

#include "spinecheck/error.hpp"
#include "spinecheck/knot_text.hpp"

#ifndef SPINECHECK_VERSION
#define SPINECHECK_VERSION "0.0.0"
#endif

namespace spinecheck {

std::string_view version() { return SPINECHECK_VERSION; }

std::vector<VRow> vtable_rows(const KnotExpr& k, std::int64_t smin, std::int64_t smax,
                              const VOptions& options) {
  if (smin > smax) throw Error(ErrorKind::ValidationError, "smin must not exceed smax");
  const VFunction v = v_of(k, options);
  std::vector<VRow> rows;
  for (std::int64_t s = smin; s <= smax; ++s) rows.push_back({s, v_eval(v, s)});
  return rows;
}

std::vector<DRow> dinv_rows(const KnotExpr& k, std::int64_t g, std::int64_t n,
                            std::optional<std::int64_t> only_k, const VOptions& options) {
  if (g < 0) throw Error(ErrorKind::ValidationError, "surface genus must be >= 0");
  if (n == 0) throw Error(ErrorKind::InvalidSpinC, "framing must be nonzero");
  const std::int64_t m = n < 0 ? -n : n;
  std::vector<std::int64_t> labels;
  if (only_k) {
    labels.push_back(SpinCIndex(*only_k, n).k());
  } else {
    for (const auto& idx : spinc_range(m)) labels.push_back(idx.k());
  }

  const VFunction v = n > 0 ? v_of(k, options) : v_of(KnotExpr::mirror(k), options);
  std::vector<DRow> rows;
  for (const auto label : labels) {
    const SpinCIndex idx(label, n);
    if (n > 0 && g == 0) {
      const Rational d = d_surgery_s3(v, n, idx);
      rows.push_back({label, {d, d}});
    } else if (n > 0) {
      rows.push_back({label, d_circle_sum(v, g, n, idx)});
    } else {
      rows.push_back({label, d_negative_framing(v, g, n, idx)});
    }
  }
  return rows;
}

namespace {

Json evidence_json(const Evidence& e) {
  Json values = Json::object();
  for (const auto& [name, value] : e.values) values[name] = value;
  Json out;
  out["test"] = e.test;
  out["citation"] = e.citation;
  out["outcome"] = std::string(to_string(e.outcome));
  out["values"] = std::move(values);
  out["detail"] = e.detail;
  return out;
}

Json v_function_json(const VFunction& v) {
  Json values = Json::array();
  for (std::int64_t s = 0; s <= v.genus(); ++s) {
    const IntInterval iv = v.values()[s];
    Json row;
    row["s"] = s;
    row["lo"] = iv.lo;
    row["hi"] = iv.hi;
    values.push_back(std::move(row));
  }
  Json out;
  out["genus"] = v.genus();
  out["exact"] = v.is_exact();
  out["values"] = std::move(values);
  return out;
}

// Each optional invariant is skipped when the knot description cannot supply it.
template <class F>
void try_set(Json& obj, const char* key, F&& compute) {
  try {
    obj[key] = compute();
  } catch (const Error&) {
  }
}

}  // namespace

Json make_report(const SpineProblem& p, const VOptions& options) {
  Json report;
  Json input;
  input["knot"] = to_text(p.knot);
  input["genus"] = p.genus;
  input["euler"] = p.euler;
  report["input"] = std::move(input);

  Json inv = Json::object();
  try_set(inv, "alexander", [&] { return alexander(p.knot).to_string(); });
  try_set(inv, "determinant", [&] { return determinant(p.knot).str(); });
  try_set(inv, "arf", [&] { return arf(p.knot); });
  try_set(inv, "signature", [&]() -> Json {
    auto s = known_signature(p.knot);
    if (!s) throw Error(ErrorKind::Unknown, "signature");
    return *s;
  });
  try_set(inv, "genus", [&] { return genus(p.knot); });
  try_set(inv, "v_function", [&] { return v_function_json(v_of(p.knot, options)); });
  report["invariants"] = std::move(inv);

  if (p.euler != 0) {
    try {
      Json table = Json::array();
      for (const auto& row : dinv_rows(p.knot, p.genus, p.euler, std::nullopt, options)) {
        Json r;
        r["k"] = row.k;
        r["d_top"] = format_fraction(row.d.d_top);
        r["d_bot"] = format_fraction(row.d.d_bot);
        table.push_back(std::move(r));
      }
      Json d;
      d["framing"] = p.euler;
      d["surface_genus"] = p.genus;
      d["table"] = std::move(table);
      report["d_invariants"] = std::move(d);
    } catch (const Error&) {
    }
  }

  const Verdict verdict = analyze(p, options);
  Json v;
  v["status"] = std::string(to_string(verdict.status));
  Json evidence = Json::array();
  for (const auto& e : verdict.evidence) evidence.push_back(evidence_json(e));
  v["evidence"] = std::move(evidence);
  v["notes"] = verdict.notes;
  report["verdict"] = std::move(v);
  report["version"] = std::string(version());
  return report;
}

std::string render_text(const Json& report) {
  std::ostringstream out;
  const Json& input = report.at("input");
  out << "knot:   " << input.at("knot").get<std::string>() << "\n";
  out << "genus:  " << input.at("genus").get<std::int64_t>() << "\n";
  out << "euler:  " << input.at("euler").get<std::int64_t>() << "\n";

  const Json& inv = report.at("invariants");
  if (inv.contains("alexander")) out << "alexander:   " << inv["alexander"].get<std::string>() << "\n";
  if (inv.contains("determinant")) out << "determinant: " << inv["determinant"].get<std::string>() << "\n";
  if (inv.contains("arf")) out << "arf:         " << inv["arf"].get<int>() << "\n";
  if (inv.contains("signature")) out << "signature:   " << inv["signature"].get<std::int64_t>() << "\n";
  if (inv.contains("genus")) out << "knot genus:  " << inv["genus"].get<std::int64_t>() << "\n";
  if (inv.contains("v_function")) {
    out << "V_s:        ";
    const Json& values = inv["v_function"]["values"];
    const std::size_t shown = std::min<std::size_t>(values.size(), 8);
    for (std::size_t i = 0; i < shown; ++i) {
      const IntInterval iv{values[i]["lo"].get<std::int64_t>(), values[i]["hi"].get<std::int64_t>()};
      out << " " << to_string(iv);
    }
    if (shown < values.size()) out << " ... (V_s = 0 from s = " << values.size() - 1 << ")";
    out << "\n";
  }
  if (report.contains("d_invariants")) {
    out << "d-invariants (framing " << report["d_invariants"]["framing"].get<std::int64_t>() << "):\n";
    for (const auto& row : report["d_invariants"]["table"]) {
      out << "  k=" << row["k"].get<std::int64_t>() << "  d_top=" << row["d_top"].get<std::string>()
          << "  d_bot=" << row["d_bot"].get<std::string>() << "\n";
    }
  }

  const Json& verdict = report.at("verdict");
  out << "verdict: " << verdict.at("status").get<std::string>() << "\n";
  for (const auto& e : verdict.at("evidence")) {
    out << "  [" << e["outcome"].get<std::string>() << "] " << e["test"].get<std::string>();
    if (!e["values"].empty()) {
      out << " (";
      bool first = true;
      for (const auto& [name, value] : e["values"].items()) {
        out << (first ? "" : ", ") << name << "=" << value.get<std::string>();
        first = false;
      }
      out << ")";
    }
    out << ": " << e["detail"].get<std::string>() << "\n";
  }
  for (const auto& note : verdict.at("notes")) out << "  note: " << note.get<std::string>() << "\n";
  return out.str();
}

}  // namespace spinecheck
