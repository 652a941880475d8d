#include "vsasm/permutation.hpp"

#include <algorithm>
#include <stdexcept>

namespace vsasm {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::from_one_based(const std::vector<int>& images) {
  std::vector<int> zero;
  zero.reserve(images.size());
  for (int v : images) zero.push_back(v - 1);
  return Permutation(std::move(zero));
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
  Permutation p;
  p.images_ = std::move(v);
  return p;
}

Permutation Permutation::transposition(int n, int a, int b) {
  Permutation p = identity(n);
  if (a < 0 || b < 0 || a >= n || b >= n) throw std::out_of_range("transposition: index out of range");
  std::swap(p.images_[static_cast<std::size_t>(a)], p.images_[static_cast<std::size_t>(b)]);
  return p;
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::out_of_range("factorial: argument out of range");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

Permutation Permutation::unrank(int n, std::uint64_t rank) {
  if (rank >= factorial(n)) throw std::out_of_range("unrank: rank out of range");
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = n; i >= 1; --i) {
    std::uint64_t f = factorial(i - 1);
    std::size_t idx = static_cast<std::size_t>(rank / f);
    rank %= f;
    out.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

int Permutation::sign() const {
  std::vector<bool> visited(images_.size(), false);
  int s = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (visited[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !visited[j]; j = static_cast<std::size_t>(images_[j])) {
      visited[j] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

Permutation Permutation::inverse() const {
  Permutation p = *this;
  for (std::size_t i = 0; i < images_.size(); ++i) p.images_[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return p;
}

Permutation Permutation::compose(const Permutation& b) const {
  if (b.size() != size()) throw std::invalid_argument("compose: size mismatch");
  Permutation p = b;
  for (std::size_t i = 0; i < images_.size(); ++i) p.images_[i] = images_[static_cast<std::size_t>(b.images_[i])];
  return p;
}

bool Permutation::next() { return std::next_permutation(images_.begin(), images_.end()); }

std::string Permutation::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(images_[i] + 1);
  }
  return s + "]";
}

}  // namespace vsasm
