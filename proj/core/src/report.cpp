#include "vsasm/report.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

namespace vsasm {

namespace {

bool starts_number(const std::string& s, std::size_t i) {
  if (std::isdigit(static_cast<unsigned char>(s[i]))) return true;
  return s[i] == '-' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1])) &&
         (i == 0 || !std::isalnum(static_cast<unsigned char>(s[i - 1])));
}

// Compares the integer starting at a[i] with the one at b[j]; advances both.
int compare_number(const std::string& a, std::size_t& i, const std::string& b, std::size_t& j) {
  auto take = [](const std::string& s, std::size_t& k, bool& neg) {
    neg = s[k] == '-';
    if (neg) ++k;
    while (k + 1 < s.size() && s[k] == '0' && std::isdigit(static_cast<unsigned char>(s[k + 1]))) ++k;
    std::size_t start = k;
    while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
    return s.substr(start, k - start);
  };
  bool na = false;
  bool nb = false;
  std::string da = take(a, i, na);
  std::string db = take(b, j, nb);
  if (da == "0") na = false;
  if (db == "0") nb = false;
  if (na != nb) return na ? -1 : 1;
  int mag = da.size() != db.size() ? (da.size() < db.size() ? -1 : 1) : da.compare(db);
  if (mag != 0) mag = mag < 0 ? -1 : 1;
  return na ? -mag : mag;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string params_text(const Params& p) {
  std::string out;
  for (const auto& [k, v] : p) out += (out.empty() ? "" : ";") + k + "=" + v;
  return out;
}

bool params_less(const Params& a, const Params& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) return natural_less(ia->second, ib->second);
  }
  return ia == a.end() && ib != b.end();
}

bool row_less(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  for (std::size_t k = 0; k < std::min(a.size(), b.size()); ++k) {
    if (a[k] != b[k]) return natural_less(a[k], b[k]);
  }
  return a.size() < b.size();
}

}  // namespace

std::string status_name(Status s) {
  switch (s) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kFinding: return "finding";
  }
  return "?";
}

bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (starts_number(a, i) && starts_number(b, j)) {
      int c = compare_number(a, i, b, j);
      if (c != 0) return c < 0;
      continue;
    }
    if (a[i] != b[j]) return a[i] < b[j];
    ++i;
    ++j;
  }
  if ((i == a.size()) != (j == b.size())) return i == a.size();
  return a < b;
}

ReportEntry entry_from(const CheckOutcome& c) {
  ReportEntry e;
  e.status = c.passed ? Status::kPass : Status::kFail;
  e.expected = c.expected;
  e.actual = c.actual.empty() && c.passed ? c.detail : c.actual;
  e.witness = c.witness;
  return e;
}

bool entry_less(const ReportEntry& a, const ReportEntry& b) {
  if (a.check_id != b.check_id) return a.check_id < b.check_id;
  return params_less(a.params, b.params);
}

void VerificationReport::sort() { std::stable_sort(entries.begin(), entries.end(), entry_less); }

int VerificationReport::count(Status s) const {
  return static_cast<int>(std::count_if(entries.begin(), entries.end(), [&](const auto& e) { return e.status == s; }));
}

std::string to_json(const VerificationReport& r) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : r.entries) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : e.params) params[k] = v;
    entries.push_back({{"check_id", e.check_id},
                       {"params", params},
                       {"status", status_name(e.status)},
                       {"expected", e.expected},
                       {"actual", e.actual},
                       {"witness", e.witness.empty() ? nlohmann::json(nullptr) : nlohmann::json(e.witness)},
                       {"elapsed_ms", e.elapsed_ms}});
  }
  return nlohmann::json{{"entries", entries}}.dump();
}

std::string to_csv(const VerificationReport& r) {
  std::string out = "check_id,params,status,expected,actual,witness,elapsed_ms\n";
  for (const auto& e : r.entries) {
    out += csv_field(e.check_id) + "," + csv_field(params_text(e.params)) + "," + status_name(e.status) + "," +
           csv_field(e.expected) + "," + csv_field(e.actual) + "," + csv_field(e.witness) + "," +
           std::to_string(e.elapsed_ms) + "\n";
  }
  return out;
}

std::string to_text(const VerificationReport& r) {
  std::ostringstream out;
  for (const auto& e : r.entries) {
    out << status_name(e.status) << "  " << e.check_id;
    if (!e.params.empty()) out << " [" << params_text(e.params) << "]";
    if (e.status != Status::kPass || !e.actual.empty()) {
      if (!e.expected.empty()) out << "  expected " << e.expected;
      if (!e.actual.empty()) out << "  actual " << e.actual;
    }
    if (!e.witness.empty()) out << "  witness " << e.witness;
    out << "\n";
  }
  out << r.count(Status::kPass) << " pass, " << r.count(Status::kFail) << " fail, " << r.count(Status::kFinding)
      << " finding";
  return out.str();
}

std::string render(const VerificationReport& r, ReportFormat f) {
  switch (f) {
    case ReportFormat::kJson: return to_json(r);
    case ReportFormat::kCsv: return to_csv(r);
    case ReportFormat::kText: return to_text(r);
  }
  return {};
}

void emit_report(const VerificationReport& r, ReportFormat f, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << render(r, f);
  if (f != ReportFormat::kCsv) out << "\n";
  out.flush();
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

std::string to_csv(const Table& t) {
  auto rows = t.rows;
  std::stable_sort(rows.begin(), rows.end(), row_less);
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t k = 0; k < cells.size(); ++k) out += (k ? "," : "") + csv_field(cells[k]);
    out += "\n";
  };
  line(t.header);
  for (const auto& r : rows) line(r);
  return out;
}

std::string to_text(const Table& t) {
  auto rows = t.rows;
  std::stable_sort(rows.begin(), rows.end(), row_less);
  std::vector<std::size_t> width(t.header.size(), 0);
  auto grow = [&](const std::vector<std::string>& cells) {
    for (std::size_t k = 0; k < cells.size() && k < width.size(); ++k) width[k] = std::max(width[k], cells[k].size());
  };
  grow(t.header);
  for (const auto& r : rows) grow(r);
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (k) out += "  ";
      std::string cell = cells[k];
      if (k < width.size()) cell = std::string(width[k] - cell.size(), ' ') + cell;
      out += cell;
    }
    out += "\n";
  };
  line(t.header);
  for (const auto& r : rows) line(r);
  return out;
}

}  // namespace vsasm
