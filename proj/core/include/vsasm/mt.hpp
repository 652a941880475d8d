#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "vsasm/xpoly.hpp"

namespace vsasm {

// rows[0] is the top row (length 1); rows[n-1] is the bottom row.
struct MonotoneTriangle {
  std::vector<std::vector<int>> rows;

  int size() const { return static_cast<int>(rows.size()); }
  bool valid() const;
};

struct MTStatistics {
  // Entries of the left-most NE-diagonal equal to the bottom-left entry.
  int left_diag_eq_first = 0;
  // Entries of the right-most SE-diagonal equal to the bottom-right entry.
  int right_diag_eq_last = 0;
  int top_entry = 0;
  // Positions with a_{i+1,j} < a_{i,j} < a_{i+1,j+1}.
  int pattern_count = 0;
};

MTStatistics statistics(const MonotoneTriangle& t);

using MTFilter = std::function<bool(const MTStatistics&)>;

// Number of monotone triangles with the given strictly increasing bottom row.
std::uint64_t count_mt(std::span<const int> bottom);

// h[c] = number of triangles with left_diag_eq_first == c (index 0 unused).
std::vector<std::uint64_t> left_diagonal_histogram(std::span<const int> bottom);
std::vector<std::uint64_t> right_diagonal_histogram(std::span<const int> bottom);
std::map<int, std::uint64_t> top_entry_histogram(std::span<const int> bottom);

// Visits every triangle; stops early if the visitor returns false.
void for_each_mt(std::span<const int> bottom, const std::function<bool(const MonotoneTriangle&)>& visit);

// Count matching the filter; DP when no filter is given, streaming otherwise.
std::uint64_t enumerate_mt(std::span<const int> bottom, const MTFilter& filter = nullptr);

// sum over triangles with the given top entry of X^{pattern_count}.
XPoly pattern_genfun(std::span<const int> bottom, int top);

}  // namespace vsasm
