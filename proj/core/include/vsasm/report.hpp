#pragma once

#include <map>
#include <string>
#include <vector>

#include "vsasm/check.hpp"

namespace vsasm {

// pass: identity or conjecture instance holds. fail: it breaks. finding: an
// exploratory observation; never fails a run.
enum class Status { kPass, kFail, kFinding };

std::string status_name(Status s);

using Params = std::map<std::string, std::string>;

struct ReportEntry {
  std::string check_id;
  Params params;
  Status status = Status::kPass;
  std::string expected;
  std::string actual;
  std::string witness;
  long long elapsed_ms = 0;
};

// Entry status from a check; expected/actual/witness are copied, and for a
// pass with no rendered actual the detail is used.
ReportEntry entry_from(const CheckOutcome& c);

// Orders by check_id, then params with digit runs compared numerically.
bool entry_less(const ReportEntry& a, const ReportEntry& b);

struct VerificationReport {
  std::vector<ReportEntry> entries;

  void sort();
  int count(Status s) const;
  bool ok() const { return count(Status::kFail) == 0; }
};

enum class ReportFormat { kJson, kCsv, kText };

std::string to_json(const VerificationReport& r);
std::string to_csv(const VerificationReport& r);
std::string to_text(const VerificationReport& r);
std::string render(const VerificationReport& r, ReportFormat f);

// Writes render(r, f) plus a trailing newline; throws std::runtime_error if the
// file cannot be written.
void emit_report(const VerificationReport& r, ReportFormat f, const std::string& path);

// A plain table (e.g. refined numbers); rows are sorted on output.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string to_csv(const Table& t);
std::string to_text(const Table& t);

// a < b with digit runs (and a leading minus sign) compared as integers.
bool natural_less(const std::string& a, const std::string& b);

}  // namespace vsasm
