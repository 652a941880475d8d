#include "vsasm/exponent.hpp"

#include <limits>
#include <stdexcept>

namespace vsasm {

void ExponentVector::set(int slot, long long v) {
  if (slot < 0 || slot >= kMaxVars) throw std::out_of_range("ExponentVector: slot out of range");
  if (v < std::numeric_limits<value_type>::min() || v > std::numeric_limits<value_type>::max()) {
    throw std::overflow_error("ExponentVector: exponent out of range");
  }
  e_[static_cast<std::size_t>(slot)] = static_cast<value_type>(v);
}

void ExponentVector::throw_overflow() { throw std::overflow_error("ExponentVector: exponent out of range"); }

long long ExponentVector::total_degree(int nvars) const {
  long long d = 0;
  for (int i = 0; i < nvars; ++i) d += e_[static_cast<std::size_t>(i)];
  return d;
}

std::string ExponentVector::to_string(int nvars) const {
  std::string s = "(";
  for (int i = 0; i < nvars; ++i) {
    if (i) s += ",";
    s += std::to_string(e_[static_cast<std::size_t>(i)]);
  }
  return s + ")";
}

}  // namespace vsasm
