#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "vsasm/report.hpp"

namespace vsasm {
namespace {

ReportEntry make(std::string id, Params p, Status s = Status::kPass) {
  ReportEntry e;
  e.check_id = std::move(id);
  e.params = std::move(p);
  e.status = s;
  return e;
}

TEST(Report, EmptyJson) { EXPECT_EQ(to_json(VerificationReport{}), R"({"entries":[]})"); }

TEST(Report, OneEntryHasEveryFieldWithSortedKeys) {
  VerificationReport r;
  r.entries.push_back(make("x.y", {{"n", "3"}}));
  r.entries.back().actual = "7";
  EXPECT_EQ(to_json(r),
            R"({"entries":[{"actual":"7","check_id":"x.y","elapsed_ms":0,"expected":"",)"
            R"("params":{"n":"3"},"status":"pass","witness":null}]})");
  r.entries.back().witness = "z1^-2";
  r.entries.back().status = Status::kFail;
  EXPECT_NE(to_json(r).find(R"("status":"fail","witness":"z1^-2")"), std::string::npos);
}

TEST(Report, SortIsNumericInParams) {
  VerificationReport r;
  r.entries.push_back(make("b", {{"n", "10"}}));
  r.entries.push_back(make("b", {{"n", "9"}}));
  r.entries.push_back(make("a", {{"n", "2"}}));
  r.entries.push_back(make("b", {{"n", "-1"}}));
  r.sort();
  std::vector<std::string> order;
  for (const auto& e : r.entries) order.push_back(e.check_id + e.params.at("n"));
  EXPECT_EQ(order, (std::vector<std::string>{"a2", "b-1", "b9", "b10"}));
}

TEST(Report, NaturalLess) {
  EXPECT_TRUE(natural_less("n=2", "n=10"));
  EXPECT_FALSE(natural_less("n=10", "n=2"));
  EXPECT_TRUE(natural_less("-2", "-1"));
  EXPECT_TRUE(natural_less("1,2,3", "1,2,4"));
  EXPECT_TRUE(natural_less("0,2", "0,2,4"));
  EXPECT_TRUE(natural_less("PS", "PT"));
  EXPECT_FALSE(natural_less("a", "a"));
  // a-1 is text followed by 1, not minus one.
  EXPECT_TRUE(natural_less("a-1", "a-2"));
}

TEST(Report, CsvQuotesAndCounts) {
  VerificationReport r;
  r.entries.push_back(make("k", {{"bottom", "0,2"}, {"top", "1"}}, Status::kFinding));
  r.entries.back().actual = "say \"hi\"";
  EXPECT_EQ(to_csv(r),
            "check_id,params,status,expected,actual,witness,elapsed_ms\n"
            "k,\"bottom=0,2;top=1\",finding,,\"say \"\"hi\"\"\",,0\n");
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.count(Status::kFinding), 1);
  r.entries.push_back(make("k", {}, Status::kFail));
  EXPECT_FALSE(r.ok());
}

TEST(Report, TableRowsSorted) {
  Table t{{"n", "i", "value"}, {{"3", "10", "1"}, {"3", "2", "5"}, {"2", "1", "1"}}};
  EXPECT_EQ(to_csv(t), "n,i,value\n2,1,1\n3,2,5\n3,10,1\n");
}

TEST(Report, EmitWritesAndReportsIoErrors) {
  auto path = std::filesystem::temp_directory_path() / "vsasm_report_test.json";
  emit_report(VerificationReport{}, ReportFormat::kJson, path.string());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), "{\"entries\":[]}\n");
  std::filesystem::remove(path);
  EXPECT_THROW(emit_report(VerificationReport{}, ReportFormat::kJson, "/nonexistent-dir/x.json"), std::runtime_error);
}

TEST(Report, EntryFromOutcome) {
  auto e = entry_from(CheckOutcome::fail("1", "2", "w"));
  EXPECT_EQ(e.status, Status::kFail);
  EXPECT_EQ(e.expected, "1");
  EXPECT_EQ(e.actual, "2");
  EXPECT_EQ(e.witness, "w");
  EXPECT_EQ(entry_from(CheckOutcome::pass("ok")).actual, "ok");
}

}  // namespace
}  // namespace vsasm
