#include "spinecheck/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "spinecheck/error.hpp"
#include "spinecheck/knot_text.hpp"
#include "spinecheck/report.hpp"
#include "spinecheck/selftest.hpp"

namespace spinecheck::cli {

namespace {

struct AnalyzeArgs {
  std::string knot;
  std::int64_t genus = 0;
  std::int64_t euler = 0;
  std::string format = "json";
  bool exit_status = false;
};

struct VtableArgs {
  std::string knot;
  std::int64_t smin = 0;
  std::int64_t smax = 0;
  std::string format = "text";
};

struct DinvArgs {
  std::string knot;
  std::int64_t genus = 0;
  std::int64_t framing = 0;
  std::optional<std::int64_t> k;
  std::string format = "text";
};

struct BatchArgs {
  std::string cases;
  std::size_t parallel = 1;
};

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
  const VOptions options = options_from_env();
  const SpineProblem p{parse_knot(a.knot), a.genus, a.euler};
  if (p.genus < 0) throw Error(ErrorKind::ValidationError, "--genus must be >= 0");
  const Json report = make_report(p, options);
  if (a.format == "json") {
    out << report.dump(2) << "\n";
  } else {
    out << render_text(report);
  }
  if (!a.exit_status) return kExitOk;
  const auto status = report["verdict"]["status"].get<std::string>();
  if (status == to_string(VerdictStatus::SmoothSpineExists)) return kExitSmoothSpine;
  if (status == to_string(VerdictStatus::Obstructed)) return kExitObstructed;
  return kExitInconclusive;
}

int cmd_vtable(const VtableArgs& a, std::ostream& out) {
  const auto rows = vtable_rows(parse_knot(a.knot), a.smin, a.smax, options_from_env());
  if (a.format == "json") {
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json row;
      row["s"] = r.s;
      row["lo"] = r.value.lo;
      row["hi"] = r.value.hi;
      arr.push_back(std::move(row));
    }
    out << arr.dump() << "\n";
  } else {
    for (const auto& r : rows) out << r.s << "\t" << to_string(r.value) << "\n";
  }
  return kExitOk;
}

int cmd_dinv(const DinvArgs& a, std::ostream& out) {
  if (a.genus < 0) throw Error(ErrorKind::ValidationError, "--genus must be >= 0");
  const auto rows = dinv_rows(parse_knot(a.knot), a.genus, a.framing, a.k, options_from_env());
  const bool single = a.genus == 0 && a.framing > 0;
  if (a.format == "json") {
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json row;
      row["k"] = r.k;
      if (single) {
        row["d"] = format_fraction(r.d.d_top);
      } else {
        row["d_top"] = format_fraction(r.d.d_top);
        row["d_bot"] = format_fraction(r.d.d_bot);
      }
      arr.push_back(std::move(row));
    }
    out << arr.dump() << "\n";
  } else {
    for (const auto& r : rows) {
      out << "k=" << r.k;
      if (single) {
        out << "\td=" << format_fraction(r.d.d_top) << "\n";
      } else {
        out << "\td_top=" << format_fraction(r.d.d_top) << "\td_bot=" << format_fraction(r.d.d_bot) << "\n";
      }
    }
  }
  return kExitOk;
}

int cmd_selftest(std::ostream& out) {
  const auto results = run_selftest();
  std::size_t failed = 0;
  for (const auto& r : results) {
    out << (r.passed ? "PASS" : "FAIL") << " [" << r.source << "] " << r.name << " -- " << r.detail << "\n";
    if (!r.passed) ++failed;
  }
  out << (results.size() - failed) << "/" << results.size() << " checks passed\n";
  return failed == 0 ? kExitOk : kExitSelftestFailed;
}

// One output line for one input line.
std::string process_case(const std::string& line, std::size_t line_no, const VOptions& options, bool& ok) {
  try {
    const Json c = Json::parse(line);
    if (!c.is_object() || !c.contains("knot") || !c.contains("genus") || !c.contains("euler")) {
      throw Error(ErrorKind::ValidationError, "case needs knot, genus and euler");
    }
    if (!c["knot"].is_string() || !c["genus"].is_number_integer() || !c["euler"].is_number_integer()) {
      throw Error(ErrorKind::ValidationError, "knot must be a string, genus and euler integers");
    }
    const SpineProblem p{parse_knot(c["knot"].get<std::string>()), c["genus"].get<std::int64_t>(),
                         c["euler"].get<std::int64_t>()};
    if (p.genus < 0) throw Error(ErrorKind::ValidationError, "genus must be >= 0");
    ok = true;
    return make_report(p, options).dump();
  } catch (const std::exception& e) {
    ok = false;
    Json err;
    err["line"] = line_no;
    err["error"] = e.what();
    return err.dump();
  }
}

}  // namespace

VOptions options_from_env() {
  VOptions options;
  if (const char* env = std::getenv("SPINECHECK_HORIZON")) {
    const std::string text(env);
    std::int64_t value = 0;
    std::size_t used = 0;
    try {
      value = std::stoll(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size() || value < 1) {
      throw Error(ErrorKind::ValidationError, "SPINECHECK_HORIZON must be a positive integer, got '" + text + "'");
    }
    options.horizon = value;
  }
  return options;
}

int run_batch(std::istream& in, std::ostream& out, std::size_t parallel, const VOptions& options) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.emplace_back(no, line);
  }

  std::vector<std::string> results(lines.size());
  std::vector<char> ok(lines.size(), 0);
  const std::size_t workers = std::max<std::size_t>(1, std::min(parallel, lines.size()));
  auto work = [&](std::size_t first) {
    for (std::size_t i = first; i < lines.size(); i += workers) {
      bool good = false;
      results[i] = process_case(lines[i].second, lines[i].first, options, good);
      ok[i] = good;
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 0; w < workers; ++w) jobs.push_back(std::async(std::launch::async, work, w));
    for (auto& j : jobs) j.get();
  }

  for (const auto& r : results) out << r << "\n";
  return std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; }) ? kExitOk : kExitBatchErrors;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"spinecheck: smooth-spine obstructions from knot concordance invariants"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(version()));

  AnalyzeArgs analyze_args;
  auto* analyze = app.add_subcommand("analyze", "Decide the smooth-spine question for (knot, genus, euler)");
  analyze->add_option("--knot", analyze_args.knot, "Singularity knot expression")->required();
  analyze->add_option("--genus", analyze_args.genus, "Genus of the spine surface")->required();
  analyze->add_option("--euler", analyze_args.euler, "Normal Euler number")->required();
  analyze->add_option("--format", analyze_args.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  analyze->add_flag("--exit-status", analyze_args.exit_status,
                    "Exit 0 smooth spine exists, 10 obstructed, 20 inconclusive");

  VtableArgs vtable_args;
  auto* vtable = app.add_subcommand("vtable", "Print V_s for a range of s");
  vtable->add_option("--knot", vtable_args.knot, "Knot expression")->required();
  vtable->add_option("--smin", vtable_args.smin, "First s")->required();
  vtable->add_option("--smax", vtable_args.smax, "Last s")->required();
  vtable->add_option("--format", vtable_args.format, "text or json")->check(CLI::IsMember({"json", "text"}));

  DinvArgs dinv_args;
  auto* dinv = app.add_subcommand("dinv", "d-invariants of framed surgery on K # B");
  dinv->add_option("--knot", dinv_args.knot, "Knot expression")->required();
  dinv->add_option("--genus", dinv_args.genus, "Surface genus g")->required();
  dinv->add_option("--framing", dinv_args.framing, "Nonzero integer framing n")->required();
  dinv->add_option("--k", dinv_args.k, "Single Spin^c label");
  dinv->add_option("--format", dinv_args.format, "text or json")->check(CLI::IsMember({"json", "text"}));

  BatchArgs batch_args;
  auto* batch = app.add_subcommand("batch", "Analyze JSON-lines cases {knot, genus, euler}");
  batch->add_option("--cases", batch_args.cases, "Input file")->required();
  batch->add_option("--parallel", batch_args.parallel, "Worker threads")->check(CLI::PositiveNumber);

  auto* selftest = app.add_subcommand("selftest", "Run the built-in acceptance checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      app.exit(e, out, err);
      return kExitOk;
    }
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*analyze) return cmd_analyze(analyze_args, out);
    if (*vtable) return cmd_vtable(vtable_args, out);
    if (*dinv) return cmd_dinv(dinv_args, out);
    if (*selftest) return cmd_selftest(out);
    if (*batch) {
      const VOptions options = options_from_env();
      std::ifstream in(batch_args.cases);
      if (!in) {
        err << "error: cannot open " << batch_args.cases << "\n";
        return kExitUsage;
      }
      return run_batch(in, out, batch_args.parallel, options);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace spinecheck::cli
