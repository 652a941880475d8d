#include "vsasm/mt.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>

namespace vsasm {

namespace {

struct RowHash {
  std::size_t operator()(const std::vector<int>& r) const {
    std::size_t h = r.size();
    for (int v : r) h = h * 1000003u ^ static_cast<std::size_t>(static_cast<unsigned>(v));
    return h;
  }
};

void check_bottom(std::span<const int> bottom) {
  if (bottom.empty()) throw std::invalid_argument("bottom row must be non-empty");
  for (std::size_t i = 1; i < bottom.size(); ++i) {
    if (bottom[i] <= bottom[i - 1]) throw std::invalid_argument("bottom row must be strictly increasing");
  }
}

std::uint64_t add_checked(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("monotone triangle count overflows 64 bits");
  return r;
}

// Calls f(row) for every strictly increasing row interlacing `below`.
template <class F>
void for_each_row_above(const std::vector<int>& below, F&& f) {
  const std::size_t m = below.size() - 1;
  std::vector<int> row(m);
  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j == m) {
      f(row);
      return;
    }
    int lo = below[j];
    if (j > 0) lo = std::max(lo, row[j - 1] + 1);
    for (int v = lo; v <= below[j + 1]; ++v) {
      row[j] = v;
      self(self, j + 1);
    }
  };
  rec(rec, 0);
}

class Counter {
 public:
  std::uint64_t count(const std::vector<int>& row) {
    if (row.size() <= 1) return 1;
    if (auto it = memo_.find(row); it != memo_.end()) return it->second;
    std::uint64_t total = 0;
    for_each_row_above(row, [&](const std::vector<int>& up) { total = add_checked(total, count(up)); });
    memo_.emplace(row, total);
    return total;
  }

 private:
  std::unordered_map<std::vector<int>, std::uint64_t, RowHash> memo_;
};

// Histogram of how many rows (from this one upwards) keep the tracked end
// value: rows whose first (or last) entry equals `value`.
class DiagonalCounter {
 public:
  DiagonalCounter(int value, bool left) : value_(value), left_(left) {}

  std::vector<std::uint64_t> histogram(const std::vector<int>& row) {
    const int end = left_ ? row.front() : row.back();
    if (end != value_) return {counter_.count(row)};
    if (auto it = memo_.find(row); it != memo_.end()) return it->second;
    std::vector<std::uint64_t> h;
    if (row.size() == 1) {
      h = {0, 1};
    } else {
      h.assign(1, 0);
      for_each_row_above(row, [&](const std::vector<int>& up) {
        auto sub = histogram(up);
        if (h.size() < sub.size() + 1) h.resize(sub.size() + 1, 0);
        for (std::size_t c = 0; c < sub.size(); ++c) h[c + 1] = add_checked(h[c + 1], sub[c]);
      });
    }
    memo_.emplace(row, h);
    return h;
  }

 private:
  int value_;
  bool left_;
  Counter counter_;
  std::unordered_map<std::vector<int>, std::vector<std::uint64_t>, RowHash> memo_;
};

class TopCounter {
 public:
  const std::map<int, std::uint64_t>& histogram(const std::vector<int>& row) {
    if (auto it = memo_.find(row); it != memo_.end()) return it->second;
    std::map<int, std::uint64_t> h;
    if (row.size() == 1) {
      h[row[0]] = 1;
    } else {
      for_each_row_above(row, [&](const std::vector<int>& up) {
        for (const auto& [top, c] : histogram(up)) h[top] = add_checked(h[top], c);
      });
    }
    return memo_.emplace(row, std::move(h)).first->second;
  }

 private:
  std::unordered_map<std::vector<int>, std::map<int, std::uint64_t>, RowHash> memo_;
};

std::vector<std::uint64_t> diagonal_histogram(std::span<const int> bottom, bool left) {
  check_bottom(bottom);
  std::vector<int> row(bottom.begin(), bottom.end());
  DiagonalCounter dc(left ? row.front() : row.back(), left);
  auto h = dc.histogram(row);
  h.resize(bottom.size() + 1, 0);
  return h;
}

}  // namespace

bool MonotoneTriangle::valid() const {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != i + 1) return false;
    for (std::size_t j = 1; j < rows[i].size(); ++j) {
      if (rows[i][j] <= rows[i][j - 1]) return false;
    }
    if (i + 1 < rows.size()) {
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        if (rows[i + 1][j] > rows[i][j] || rows[i][j] > rows[i + 1][j + 1]) return false;
      }
    }
  }
  return !rows.empty();
}

MTStatistics statistics(const MonotoneTriangle& t) {
  MTStatistics s;
  const int n = t.size();
  const auto& bottom = t.rows.back();
  for (int i = n - 1; i >= 0 && t.rows[static_cast<std::size_t>(i)].front() == bottom.front(); --i) {
    ++s.left_diag_eq_first;
  }
  for (int i = n - 1; i >= 0 && t.rows[static_cast<std::size_t>(i)].back() == bottom.back(); --i) {
    ++s.right_diag_eq_last;
  }
  s.top_entry = t.rows.front().front();
  for (std::size_t i = 0; i + 1 < t.rows.size(); ++i) {
    for (std::size_t j = 0; j < t.rows[i].size(); ++j) {
      if (t.rows[i + 1][j] < t.rows[i][j] && t.rows[i][j] < t.rows[i + 1][j + 1]) ++s.pattern_count;
    }
  }
  return s;
}

std::uint64_t count_mt(std::span<const int> bottom) {
  check_bottom(bottom);
  Counter c;
  return c.count(std::vector<int>(bottom.begin(), bottom.end()));
}

std::vector<std::uint64_t> left_diagonal_histogram(std::span<const int> bottom) {
  return diagonal_histogram(bottom, true);
}

std::vector<std::uint64_t> right_diagonal_histogram(std::span<const int> bottom) {
  return diagonal_histogram(bottom, false);
}

std::map<int, std::uint64_t> top_entry_histogram(std::span<const int> bottom) {
  check_bottom(bottom);
  TopCounter tc;
  return tc.histogram(std::vector<int>(bottom.begin(), bottom.end()));
}

void for_each_mt(std::span<const int> bottom, const std::function<bool(const MonotoneTriangle&)>& visit) {
  check_bottom(bottom);
  const std::size_t n = bottom.size();
  MonotoneTriangle t;
  t.rows.resize(n);
  t.rows[n - 1].assign(bottom.begin(), bottom.end());
  bool stop = false;
  auto rec = [&](auto&& self, std::size_t level) -> void {
    if (stop) return;
    if (level == 0) {
      if (!visit(t)) stop = true;
      return;
    }
    for_each_row_above(t.rows[level], [&](const std::vector<int>& up) {
      if (stop) return;
      t.rows[level - 1] = up;
      self(self, level - 1);
    });
  };
  rec(rec, n - 1);
}

std::uint64_t enumerate_mt(std::span<const int> bottom, const MTFilter& filter) {
  if (!filter) return count_mt(bottom);
  std::uint64_t total = 0;
  for_each_mt(bottom, [&](const MonotoneTriangle& t) {
    if (filter(statistics(t))) ++total;
    return true;
  });
  return total;
}

XPoly pattern_genfun(std::span<const int> bottom, int top) {
  check_bottom(bottom);
  if (top < bottom.front() || top > bottom.back()) {
    throw std::invalid_argument("top entry " + std::to_string(top) + " outside the bottom row range");
  }
  std::vector<Rational> coeffs;
  for_each_mt(bottom, [&](const MonotoneTriangle& t) {
    if (t.rows.front().front() != top) return true;
    auto k = static_cast<std::size_t>(statistics(t).pattern_count);
    if (coeffs.size() <= k) coeffs.resize(k + 1, Rational(0));
    coeffs[k] += Rational(1);
    return true;
  });
  return XPoly(std::move(coeffs));
}

}  // namespace vsasm
