#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vsasm/genfun.hpp"
#include "vsasm/mt.hpp"
#include "vsasm/parallel.hpp"
#include "vsasm/refined.hpp"
#include "vsasm/report.hpp"
#include "vsasm/suites.hpp"
#include "vsasm/symmetrize.hpp"

namespace {

using namespace vsasm;

std::optional<Family> parse_family(const std::string& s) {
  static const std::map<std::string, Family> names{
      {"A", Family::kA}, {"B", Family::kB}, {"Bstar", Family::kBstar}, {"C", Family::kC}, {"D", Family::kD}};
  auto it = names.find(s);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

struct Bounds {
  std::string suite;
  SuiteOptions opts;
  std::string family;
  std::string json;
  std::string csv;
  std::string format = "text";
};

void add_bounds(CLI::App* cmd, Bounds& b) {
  cmd->add_option("--max-vars", b.opts.max_vars, "conjecture-1: largest s+t-1 (<= 7)");
  cmd->add_option("--n", b.opts.max_n, "largest n for les, cd, symmetry-c and genfun");
  cmd->add_option("--d", b.opts.max_d, "largest d for the C^(d) systems");
  cmd->add_option("--family", b.family, "les: restrict to family A, B or C");
  cmd->add_option("--seeds", b.opts.seeds, "random instances per configuration");
  cmd->add_option("--max-word-length", b.opts.max_word_length, "words: longest word swept");
  cmd->add_flag("--timings", b.opts.timings, "record elapsed_ms (reports are then not byte-stable)");
  cmd->add_option("--json", b.json, "write the report as JSON");
  cmd->add_option("--csv", b.csv, "write the report as CSV");
}

int finish(const VerificationReport& r, const Bounds& b, bool print) {
  if (!b.json.empty()) emit_report(r, ReportFormat::kJson, b.json);
  if (!b.csv.empty()) emit_report(r, ReportFormat::kCsv, b.csv);
  if (print) {
    ReportFormat f = b.format == "json" ? ReportFormat::kJson : b.format == "csv" ? ReportFormat::kCsv : ReportFormat::kText;
    std::cout << render(r, f);
    if (f != ReportFormat::kCsv) std::cout << "\n";
  }
  return r.ok() ? 0 : 1;
}

VerificationReport run(Bounds& b, int threads, std::uint64_t seed) {
  b.opts.threads = threads;
  b.opts.seed = seed;
  if (!b.family.empty()) {
    b.opts.family = parse_family(b.family);
    if (!b.opts.family) throw std::invalid_argument("unknown family: " + b.family);
  }
  return run_suite(b.suite, b.opts);
}

Table numbers_table(Family f, int n, int d) {
  Table t{{"family", "n", "d", "i", "value"}, {}};
  auto add = [&](int i, const Rational& v) {
    t.rows.push_back({family_name(f), std::to_string(n), std::to_string(d), std::to_string(i), v.to_string()});
  };
  switch (f) {
    case Family::kA: {
      auto c = cd_numbers(n, 1, Family::kC);
      for (int i = 0; i < n; ++i) add(i + 1, c.at(i));
      break;
    }
    case Family::kB:
      for (int i = 1; i <= n; ++i) add(i, b_formula(n, i));
      break;
    case Family::kBstar:
      for (int i = 1; i <= 2 * n + 1; ++i) add(i, bstar_formula(n, i));
      break;
    case Family::kC:
    case Family::kD:
      for (const auto& [i, v] : cd_numbers(n, d, f).values) add(i, v);
      break;
  }
  return t;
}

void write_golden(const std::string& dir, int max_vars) {
  std::filesystem::create_directories(dir);
  for (int n = 1; n <= max_vars; ++n) {
    for (int s = 0; s <= n; ++s) {
      const int t = n + 1 - s;
      const std::string path = dir + "/R_s" + std::to_string(s) + "_t" + std::to_string(t) + ".txt";
      std::ofstream out(path);
      out << to_string(build_R(s, t)) << "\n";
      if (!out) throw std::runtime_error("cannot write " + path);
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of refined ASM and VSASM enumeration identities"};
  app.require_subcommand(1);
  int threads = 0;
  std::uint64_t seed = 1;
  app.add_option("--threads", threads, "worker threads (default: VSASM_THREADS or all cores)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", seed, "base seed for randomized checks");

  Bounds verify;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite and print the report");
  verify_cmd->add_option("suite", verify.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--format", verify.format, "stdout format")->check(CLI::IsMember({"text", "json", "csv"}));
  add_bounds(verify_cmd, verify);

  Bounds report;
  report.suite = "all";
  auto* report_cmd = app.add_subcommand("report", "run a suite and write the report to a file");
  report_cmd->add_option("--suite", report.suite, "suite name (default all)")->check(CLI::IsMember(suite_names()));
  add_bounds(report_cmd, report);

  auto* count_cmd = app.add_subcommand("count", "count combinatorial objects");
  auto* mt_cmd = count_cmd->add_subcommand("mt", "monotone triangles with a given bottom row");
  count_cmd->require_subcommand(1);
  std::vector<int> bottom;
  std::optional<int> top;
  std::optional<int> left_eq;
  bool patterns = false;
  mt_cmd->add_option("--bottom", bottom, "strictly increasing bottom row")->required()->delimiter(',');
  mt_cmd->add_option("--top", top, "only triangles with this top entry");
  mt_cmd->add_option("--left-eq", left_eq, "only triangles whose left diagonal has this many bottom-left entries");
  mt_cmd->add_flag("--patterns", patterns, "print the generating function by pattern count");

  std::string family;
  int n = 0;
  int d = 2;
  auto* numbers_cmd = app.add_subcommand("numbers", "print refined numbers as CSV");
  numbers_cmd->add_option("--family", family, "A, B, Bstar, C or D")->required()->check(
      CLI::IsMember({"A", "B", "Bstar", "C", "D"}));
  numbers_cmd->add_option("--n", n, "size")->required()->check(CLI::Range(1, 12));
  numbers_cmd->add_option("--d", d, "d for C and D")->check(CLI::Range(1, 8));

  std::string golden_dir = "data/golden";
  int golden_vars = 4;
  auto* golden_cmd = app.add_subcommand("golden", "write R_{s,t} golden files");
  golden_cmd->add_option("--dir", golden_dir, "output directory");
  golden_cmd->add_option("--max-vars", golden_vars, "largest s+t-1")->check(CLI::Range(1, 6));

  CLI11_PARSE(app, argc, argv);
  if (threads > 0) set_default_threads(threads);

  try {
    if (*verify_cmd) return finish(run(verify, threads, seed), verify, true);
    if (*report_cmd) {
      if (report.json.empty() == report.csv.empty()) {
        std::cerr << "report: give exactly one of --json PATH or --csv PATH\n";
        return 2;
      }
      VerificationReport r = run(report, threads, seed);
      const int code = finish(r, report, false);
      std::cout << r.count(Status::kPass) << " pass, " << r.count(Status::kFail) << " fail, "
                << r.count(Status::kFinding) << " finding\n";
      return code;
    }
    if (*mt_cmd) {
      if (patterns) {
        if (top) {
          std::cout << pattern_genfun(bottom, *top).to_string() << "\n";
        } else {
          XPoly total;
          for (int t = bottom.front(); t <= bottom.back(); ++t) total += pattern_genfun(bottom, t);
          std::cout << total.to_string() << "\n";
        }
        return 0;
      }
      if (!top && !left_eq) {
        std::cout << count_mt(bottom) << "\n";
        return 0;
      }
      MTFilter filter = [&](const MTStatistics& s) {
        return (!top || s.top_entry == *top) && (!left_eq || s.left_diag_eq_first == *left_eq);
      };
      std::cout << enumerate_mt(bottom, filter) << "\n";
      return 0;
    }
    if (*numbers_cmd) {
      std::cout << to_csv(numbers_table(*parse_family(family), n, d));
      return 0;
    }
    if (*golden_cmd) {
      write_golden(golden_dir, golden_vars);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
