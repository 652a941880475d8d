#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vsasm/refined.hpp"
#include "vsasm/report.hpp"

namespace vsasm {

// Bounds for run_suite. Zero means the suite's own default.
struct SuiteOptions {
  int max_vars = 6;          // conjecture-1: s + t - 1 <= max_vars (at most 7)
  int max_n = 0;             // les formula side (10), cd/symmetry-c (5), genfun (5)
  int max_d = 3;             // les: C^(d) and the C/D system
  std::optional<Family> family;  // les: A, B or C only
  int seeds = 0;             // randomized checks per configuration
  int max_word_length = 5;   // words
  std::uint64_t seed = 1;
  int threads = 0;
  bool timings = false;      // fill elapsed_ms (otherwise 0, keeping reports byte-stable)
};

const std::vector<std::string>& suite_names();

// Runs a registered suite ("all" runs every one). Throws std::invalid_argument
// for an unknown name or out-of-range bounds.
VerificationReport run_suite(const std::string& name, const SuiteOptions& opts = {});

}  // namespace vsasm
