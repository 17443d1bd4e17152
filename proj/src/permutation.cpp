#include "atheory/permutation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace atheory {

Permutation::Permutation(std::vector<int> one_line) : entries_(std::move(one_line)) {
  const int n = static_cast<int>(entries_.size());
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : entries_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("Permutation: entries must be a bijection on {1..n}");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("Permutation::identity: negative size");
  std::vector<int> e(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(e));
}

int Permutation::value_at(int pos) const {
  if (pos < 1 || pos > size()) throw std::invalid_argument("Permutation::value_at: position out of range");
  return entries_[static_cast<std::size_t>(pos - 1)];
}

int Permutation::position_of(int value) const {
  if (value < 1 || value > size()) throw std::invalid_argument("Permutation::position_of: value out of range");
  for (int i = 0; i < size(); ++i) {
    if (entries_[static_cast<std::size_t>(i)] == value) return i + 1;
  }
  throw std::logic_error("Permutation::position_of: corrupt state");
}

bool Permutation::is_even() const {
  // Count inversions; fine at these sizes.
  int inv = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (entries_[static_cast<std::size_t>(i)] > entries_[static_cast<std::size_t>(j)]) ++inv;
  return inv % 2 == 0;
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::invalid_argument("factorial: out of uint64 range");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t Permutation::lex_rank() const {
  const int n = size();
  std::uint64_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j) {
      if (entries_[static_cast<std::size_t>(j)] < entries_[static_cast<std::size_t>(i)]) ++smaller;
    }
    rank += static_cast<std::uint64_t>(smaller) * factorial(n - 1 - i);
  }
  return rank;
}

Permutation Permutation::from_lex_rank(int n, std::uint64_t rank) {
  if (rank >= factorial(n)) throw std::invalid_argument("Permutation::from_lex_rank: rank out of range");
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
  std::vector<int> e;
  e.reserve(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    const std::uint64_t f = factorial(i);
    const std::size_t k = static_cast<std::size_t>(rank / f);
    rank %= f;
    e.push_back(pool[k]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return Permutation(std::move(e));
}

Permutation Permutation::apply_generator(int j) const {
  if (j < 1 || j >= size()) throw std::invalid_argument("apply_generator: index out of [1, n-1]");
  std::vector<int> e = entries_;
  std::swap(e[static_cast<std::size_t>(j - 1)], e[static_cast<std::size_t>(j)]);
  return Permutation(std::move(e));
}

Permutation apply_generator(const Permutation& p, int j) { return p.apply_generator(j); }

std::string Permutation::to_string() const {
  std::ostringstream os;
  if (size() <= 9) {
    for (int v : entries_) os << v;
  } else {
    for (int i = 0; i < size(); ++i) {
      if (i) os << ',';
      os << entries_[static_cast<std::size_t>(i)];
    }
  }
  return os.str();
}

Permutation Permutation::parse(const std::string& text) {
  std::vector<int> e;
  if (text.find(',') != std::string::npos) {
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) e.push_back(std::stoi(tok));
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw std::invalid_argument("Permutation::parse: bad digit");
      e.push_back(c - '0');
    }
  }
  return Permutation(std::move(e));
}

}  // namespace atheory
