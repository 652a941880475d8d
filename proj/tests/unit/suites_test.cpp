#include <gtest/gtest.h>

#include <algorithm>

#include "vsasm/suites.hpp"

namespace vsasm {
namespace {

TEST(Suites, Registry) {
  const auto& names = suite_names();
  for (const char* n : {"conjecture-1", "conjecture-6.2", "les", "cd", "symmetry-c", "words", "genfun", "identities", "all"}) {
    EXPECT_NE(std::find(names.begin(), names.end(), n), names.end()) << n;
  }
  EXPECT_THROW(run_suite("nope"), std::invalid_argument);
}

TEST(Suites, InvalidBounds) {
  SuiteOptions o;
  o.max_vars = 8;
  EXPECT_THROW(run_suite("conjecture-1", o), std::invalid_argument);
  o = {};
  o.family = Family::kD;
  EXPECT_THROW(run_suite("les", o), std::invalid_argument);
  o = {};
  o.seeds = -1;
  EXPECT_THROW(run_suite("cd", o), std::invalid_argument);
}

TEST(Suites, SmallConjectureOneSweep) {
  SuiteOptions o;
  o.max_vars = 3;
  o.threads = 1;
  auto r = run_suite("conjecture-1", o);
  EXPECT_TRUE(r.ok());
  int inversions = 0;
  for (const auto& e : r.entries) {
    if (e.check_id == "conjecture-1.inversion") {
      ++inversions;
      EXPECT_EQ(e.status, Status::kPass);
    }
    if (e.check_id == "conjecture-1.s-greater-than-t") EXPECT_EQ(e.status, Status::kFinding);
    EXPECT_EQ(e.elapsed_ms, 0);
  }
  // (0,2), (1,1), (0,3), (1,2), (0,4), (1,3), (2,2)
  EXPECT_EQ(inversions, 7);
  EXPECT_TRUE(std::is_sorted(r.entries.begin(), r.entries.end(), entry_less));
}

TEST(Suites, LesFamilyFilterAndDeterminism) {
  SuiteOptions o;
  o.family = Family::kB;
  o.max_n = 6;
  o.threads = 1;
  auto serial = run_suite("les", o);
  for (const auto& e : serial.entries) EXPECT_EQ(e.check_id.rfind("les.B", 0) == 0 || e.check_id == "les.solution-dimension" ||
                                                     e.check_id == "les.eigen-rank",
                                                 true)
      << e.check_id;
  o.threads = 3;
  EXPECT_EQ(to_json(run_suite("les", o)), to_json(serial));
}

TEST(Suites, SeedChangesRandomInstancesOnly) {
  SuiteOptions o;
  o.threads = 2;
  auto a = run_suite("symmetry-c", o);
  o.seed = 7;
  auto b = run_suite("symmetry-c", o);
  EXPECT_TRUE(a.ok());
  EXPECT_TRUE(b.ok());
  ASSERT_EQ(a.entries.size(), b.entries.size());
  EXPECT_NE(to_json(a), to_json(b));  // the seed is part of the params
}

}  // namespace
}  // namespace vsasm
