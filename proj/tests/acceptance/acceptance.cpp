// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failing criteria.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "vsasm/suites.hpp"

namespace {

using namespace vsasm;

struct Selector {
  std::string check_id;
  Params where;  // entries must match these params
  int at_least = 1;
  Status want = Status::kPass;
};

// Problems found for one selector; empty if it holds.
std::string inspect(const VerificationReport& r, const Selector& s) {
  int matched = 0;
  for (const auto& e : r.entries) {
    if (e.check_id != s.check_id) continue;
    bool ok = true;
    for (const auto& [k, v] : s.where) {
      auto it = e.params.find(k);
      if (it == e.params.end() || it->second != v) ok = false;
    }
    if (!ok) continue;
    ++matched;
    if (e.status != s.want) {
      std::string params;
      for (const auto& [k, v] : e.params) params += k + "=" + v + " ";
      return s.check_id + " [" + params + "] is " + status_name(e.status) + (e.witness.empty() ? "" : ": " + e.witness);
    }
  }
  if (matched < s.at_least) {
    return s.check_id + ": " + std::to_string(matched) + " entries, need " + std::to_string(s.at_least);
  }
  return {};
}

struct Criterion {
  int number;
  std::string title;
  std::string suite;
  std::vector<Selector> selectors;
};

int env_int(const char* name, int fallback) {
  const char* v = std::getenv(name);
  return v ? std::atoi(v) : fallback;
}

// Pairs 0 <= s <= t with s + t - 1 <= max_vars.
int rst_cases(int max_vars) {
  int count = 0;
  for (int n = 1; n <= max_vars; ++n) count += (n + 1) / 2 + 1;
  return count;
}

}  // namespace

int main() {
  // VSASM_ACCEPT_MAX_VARS=7 runs the 7-variable stretch (minutes, ~3 GB).
  const int max_vars = env_int("VSASM_ACCEPT_MAX_VARS", 6);
  const int cases = rst_cases(max_vars);
  const Params formula{{"source", "formula"}};
  const Params brute{{"source", "bruteforce"}};
  const std::vector<Criterion> criteria{
      {1, "inversion invariance and gamma expansion of R(s,t), s+t-1 <= " + std::to_string(max_vars), "conjecture-1",
       {{"conjecture-1.inversion", {}, cases},
        {"conjecture-1.gamma-expansion", {}, cases},
        {"conjecture-1.gamma-nonnegative", {}, cases, Status::kFinding}}},
      {2, "monotone triangle counts", "identities",
       {{"identities.mt-count", {{"bottom", "1,2,3"}}, 1},
        {"identities.asm-count", {}, 5},
        {"identities.vsasm-count", {}, 6}}},
      {3, "refined identities", "identities",
       {{"identities.b-bruteforce", {}, 5}, {"identities.cross", formula, 7}, {"identities.cross", brute, 4}}},
      {4, "linear equation systems, solution dimension, DPP determinant", "les",
       {{"les.A14", brute, 5},
        {"les.B1516", formula, 10},
        {"les.B65", formula, 10},
        {"les.prop31", {}, 15},
        {"les.solution-dimension", {}, 18},
        {"les.dpp-determinant", {}, 7}}},
      {5, "operator calculus on random instances", "identities",
       {{"identities.right-inverse", {{"samples", "50"}}, 1},
        {"identities.delta-conversion", {{"samples", "50"}}, 1},
        {"identities.lemma51", {{"samples", "50"}}, 60},
        {"identities.lemma71", {{"samples", "50"}}, 20}}},
      {6, "C numbers: symmetry, hypergeometric identity, C = D", "",
       {{"symmetry-c.d2", {}, 5},
        {"symmetry-c.prop61", {{"samples", "25"}}, 1},
        {"cd.hypergeom", {}, 21},
        {"cd.equal", {}, 5}}},
      {7, "diagonal operator conjecture instances", "conjecture-6.2",
       {{"conjecture-6.2.alpha", {}, 5}, {"conjecture-6.2.random", {{"samples", "10"}}, 5}}},
      {8, "operator words", "words",
       {{"words.example-pair", {}, 1},
        {"words.endpoint-invariance", {{"max_length", "5"}}, 1},
        {"words.last-letter-invariance", {{"max_length", "5"}}, 1},
        {"words.commutations", {{"samples", "20"}}, 9},
        {"words.sym-recursion", {{"samples", "20"}}, 10}}},
      {9, "generating functions", "genfun",
       {{"genfun.prop91", {{"k", "1,2,3"}}, 4},
        {"genfun.prop91", {{"k", "0,2,4"}}, 4},
        {"genfun.cor92", {{"bottom", "0,2"}}, 3},
        {"genfun.cor92", {{"bottom", "0,2,4"}}, 5},
        {"genfun.cor92", {{"bottom", "1,2,3"}}, 3},
        {"genfun.recursive", {}, 10},
        {"genfun.t-family.closed-form", {}, 3},
        {"genfun.t-family.a-zero", {{"samples", "10"}}, 3}}},
  };

  const int many = env_int("VSASM_ACCEPT_THREADS", 4);
  std::map<std::string, VerificationReport> serial;
  auto report = [&](const std::string& suite) -> const VerificationReport& {
    auto it = serial.find(suite);
    if (it == serial.end()) {
      SuiteOptions o;
      o.threads = 1;
      o.max_vars = max_vars;
      it = serial.emplace(suite, run_suite(suite, o)).first;
    }
    return it->second;
  };

  int failures = 0;
  auto line = [&](int n, const std::string& title, const std::string& problem) {
    std::cout << (problem.empty() ? "PASS" : "FAIL") << "  " << n << "  " << title;
    if (!problem.empty()) std::cout << "  (" << problem << ")";
    std::cout << std::endl;
    if (!problem.empty()) ++failures;
  };

  for (const auto& c : criteria) {
    std::string problem;
    try {
      for (const auto& s : c.selectors) {
        const std::string suite = c.suite.empty() ? s.check_id.substr(0, s.check_id.find('.')) : c.suite;
        problem = inspect(report(suite), s);
        if (!problem.empty()) break;
      }
    } catch (const std::exception& e) {
      problem = e.what();
    }
    line(c.number, c.title, problem);
  }

  std::string problem;
  for (const auto& name : suite_names()) {
    if (name == "all") continue;
    SuiteOptions o;
    o.threads = many;
    o.max_vars = max_vars;
    if (to_json(run_suite(name, o)) != to_json(report(name))) {
      problem = name + " differs between 1 and " + std::to_string(many) + " workers";
      break;
    }
  }
  line(10, "reports identical with 1 and " + std::to_string(many) + " workers", problem);
  return failures;
}
