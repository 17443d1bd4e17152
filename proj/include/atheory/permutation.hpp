#ifndef ATHEORY_PERMUTATION_HPP
#define ATHEORY_PERMUTATION_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace atheory {

// A permutation of {1..n} in one-line notation.  Values and positions are
// 1-based throughout, matching the usual combinatorial conventions.
//
// Generators act on the right and permute positions: p * s_j swaps the
// entries at positions j and j+1.  With this convention the level of a
// permutation (position of the value n) is preserved by all generators
// except s_{level-1} and s_{level}.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);
  static Permutation from_lex_rank(int n, std::uint64_t rank);

  int size() const { return static_cast<int>(entries_.size()); }
  int value_at(int pos) const;     // entry at 1-based position
  int position_of(int value) const;  // 1-based position of a value

  // Position of the largest value n; the "level" in the layered graph.
  int level() const { return position_of(size()); }

  bool is_even() const;

  // Rank in lexicographic order over all permutations of the same size,
  // starting at 0.  Doubles as the canonical vertex index.
  std::uint64_t lex_rank() const;

  // Right multiplication by the adjacent transposition s_j (swap of
  // positions j and j+1).  Involutive.  Throws on j out of [1, n-1].
  Permutation apply_generator(int j) const;

  const std::vector<int>& entries() const { return entries_; }

  // One-line string: digits for n <= 9 ("2134"), comma-separated otherwise.
  std::string to_string() const;
  static Permutation parse(const std::string& text);

  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) = default;

 private:
  std::vector<int> entries_;
};

// Free-function form of the right action, matching the operation name used
// elsewhere in the library.
Permutation apply_generator(const Permutation& p, int j);

std::uint64_t factorial(int n);

}  // namespace atheory

#endif
