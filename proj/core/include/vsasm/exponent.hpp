#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <functional>
#include <string>

namespace vsasm {

// Maximum number of variable slots any polynomial in the library may use.
inline constexpr int kMaxVars = 12;

// Signed exponents for up to kMaxVars variables. Slots beyond the owning
// polynomial's variable count are always zero, so comparison and hashing can
// look at the whole array. Ordering is lexicographic by slot.
class ExponentVector {
 public:
  using value_type = std::int16_t;

  ExponentVector() = default;

  int operator[](int slot) const { return e_[static_cast<std::size_t>(slot)]; }
  // Throws std::overflow_error if v does not fit the slot type.
  void set(int slot, long long v);
  void add(int slot, long long v) { set(slot, static_cast<long long>(e_[static_cast<std::size_t>(slot)]) + v); }

  ExponentVector& operator+=(const ExponentVector& rhs) {
    bool overflow = false;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      int s = int{e_[i]} + int{rhs.e_[i]};
      overflow |= s != static_cast<value_type>(s);
      e_[i] = static_cast<value_type>(s);
    }
    if (overflow) throw_overflow();
    return *this;
  }
  ExponentVector& operator-=(const ExponentVector& rhs) {
    bool overflow = false;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      int s = int{e_[i]} - int{rhs.e_[i]};
      overflow |= s != static_cast<value_type>(s);
      e_[i] = static_cast<value_type>(s);
    }
    if (overflow) throw_overflow();
    return *this;
  }
  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
  friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) { return a -= b; }

  friend bool operator==(const ExponentVector& a, const ExponentVector& b) { return a.e_ == b.e_; }
  friend std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b) {
    for (std::size_t i = 0; i < a.e_.size(); ++i) {
      if (a.e_[i] != b.e_[i]) return a.e_[i] <=> b.e_[i];
    }
    return std::strong_ordering::equal;
  }

  bool is_zero() const { return *this == ExponentVector{}; }
  long long total_degree(int nvars) const;

  std::size_t hash() const {
    std::uint64_t words[3];
    static_assert(sizeof(words) == sizeof(e_));
    std::memcpy(words, e_.data(), sizeof(words));
    std::uint64_t h = words[0] * 0x9E3779B97F4A7C15ull;
    h = (h ^ (h >> 29)) + words[1] * 0xBF58476D1CE4E5B9ull;
    h = (h ^ (h >> 31)) + words[2] * 0x94D049BB133111EBull;
    return static_cast<std::size_t>(h ^ (h >> 32));
  }

  std::string to_string(int nvars) const;

  // Order-preserving 120-bit key (10 bits per slot, slot 0 most significant).
  // Valid only when every exponent lies in [-kPackOffset, kPackOffset).
  static constexpr int kPackOffset = 512;
  using Packed = unsigned __int128;
  bool packable() const {
    for (auto v : e_) {
      if (v < -kPackOffset || v >= kPackOffset) return false;
    }
    return true;
  }
  Packed packed() const {
    Packed k = 0;
    for (auto v : e_) k = (k << 10) | static_cast<Packed>(v + kPackOffset);
    return k;
  }

 private:
  [[noreturn]] static void throw_overflow();
  std::array<value_type, kMaxVars> e_{};
};

struct ExponentHash {
  std::size_t operator()(const ExponentVector& e) const noexcept { return e.hash(); }
};

}  // namespace vsasm
