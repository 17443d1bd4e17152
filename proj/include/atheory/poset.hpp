#ifndef ATHEORY_POSET_HPP
#define ATHEORY_POSET_HPP

#include <string>
#include <vector>

namespace atheory {

// Default size cap for constructions with factorial growth (n! vertices).
// n = 8 still completes at desk scale; anything larger needs an explicit
// override.
inline constexpr int kDefaultSizeCap = 8;

// A finite graded poset given by its cover relation.  Ranks are derived
// from the covers (longest chain from a minimal element) and every cover
// must raise rank by exactly one.
class GradedPoset {
 public:
  GradedPoset(std::size_t n_elements, std::vector<std::pair<int, int>> covers);

  std::size_t size() const { return rank_.size(); }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  int rank(int element) const { return rank_[static_cast<std::size_t>(element)]; }
  int top_rank() const { return top_rank_; }

  const std::vector<int>& upper_covers(int element) const {
    return upper_[static_cast<std::size_t>(element)];
  }
  const std::vector<int>& lower_covers(int element) const {
    return lower_[static_cast<std::size_t>(element)];
  }

  // Bounded = unique minimum and unique maximum.
  bool is_bounded() const;
  int bottom() const;  // throws when not bounded
  int top() const;

 private:
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> upper_, lower_;
  std::vector<int> rank_;
  int top_rank_ = 0;
};

// Subsets of {1..n} ordered by inclusion; element ids are the bitmasks, so
// rank and cover tests are O(1) popcount work.
GradedPoset boolean_lattice(int n, bool force_large = false);

// A maximal chain restricted to the proper part (ranks 1..r-1); the empty
// chain for a rank-1 poset.
struct MaximalChain {
  std::vector<int> elements;  // increasing rank, consecutive covers

  std::string to_string() const;  // element ids comma-separated
  friend bool operator==(const MaximalChain&, const MaximalChain&) = default;
  friend auto operator<=>(const MaximalChain&, const MaximalChain&) = default;
};

// All maximal chains, in lexicographic element order.  With proper=true the
// bounding elements are stripped.  Throws when the poset is not bounded or
// some maximal chain has the wrong length (not graded).
std::vector<MaximalChain> maximal_chains(const GradedPoset& p, bool proper);

}  // namespace atheory

#endif
