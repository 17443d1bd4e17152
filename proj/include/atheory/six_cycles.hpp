#ifndef ATHEORY_SIX_CYCLES_HPP
#define ATHEORY_SIX_CYCLES_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "atheory/permutation.hpp"
#include "atheory/word.hpp"

namespace atheory {

// A primitive 6-cycle of the permutahedron graph: the right coset
// rep * <s_i, s_{i+1}>, six permutations traced by the edge word
// (s_i s_{i+1})^3.  rep is the lexicographically least coset member, i.e.
// the one whose entries at positions i, i+1, i+2 are sorted.
struct SixCycle {
  Permutation rep;
  int i = 0;

  friend bool operator==(const SixCycle&, const SixCycle&) = default;
};

// Lexicographically least member of the coset of p under <s_i, s_{i+1}>.
Permutation canonical_coset_rep(const Permutation& p, int i);

// All (n-2) * n!/6 primitive 6-cycles, ordered by i then by rep.
std::vector<SixCycle> enumerate_six_cycles(int n, bool force_large = false);

// The six vertices in cycle order, starting at rep and alternating
// s_i, s_{i+1}.
std::array<Permutation, 6> six_cycle_vertices(const SixCycle& c);

GenWord six_cycle_word(int i, int n);  // (s_i s_{i+1})^3

// Horizontal cycles sit inside one level (the position of n avoids the
// moving window); vertical cycles span three consecutive levels and are
// identified by the middle one, always i+1.
struct Orientation {
  enum Kind { kHorizontal, kVertical } kind;
  int level;  // the common level, or the middle level

  friend bool operator==(const Orientation&, const Orientation&) = default;
};

Orientation orientation(const SixCycle& c);

// Generators whose supports avoid both s_i and s_{i+1}: j <= i-2 or j >= i+3.
std::vector<int> disjoint_generators(int i, int n);

struct HorizontalRow {
  int level = 0;
  std::int64_t cycles = 0;
  std::int64_t classes = 0;  // classes whose canonical member sits at this level
};

struct VerticalRow {
  int middle_level = 0;
  std::int64_t cycles = 0;
  std::int64_t classes = 0;
  std::int64_t class_size = 0;
};

struct GeneratorClassRows {
  int i = 0;
  std::vector<HorizontalRow> horizontal;
  std::vector<VerticalRow> vertical;
};

struct ClassReport {
  int n = 0;
  std::vector<GeneratorClassRows> per_i;
  std::int64_t total_classes = 0;
  std::int64_t vertical_total = 0;
  std::int64_t horizontal_total = 0;
  std::int64_t rank_formula_value = 0;
  std::optional<std::size_t> rank_linear_algebra;

  nlohmann::json to_json() const;
};

// Orbit partition of the 6-cycles under right multiplication by disjoint
// generators, which is exactly the homotopy equivalence of primitive
// 6-cycles.  Orbits never mix distinct i (parity of the letters s_i in the
// loop words rules that out).
struct SixCycleClasses {
  std::vector<SixCycle> cycles;
  std::vector<std::int32_t> class_of;               // cycle index -> class id
  std::vector<std::vector<std::int32_t>> members;   // class id -> cycle indices
  ClassReport report;
};

SixCycleClasses equivalence_classes(int n, bool force_large = false);

// Closed form 2^{n-3} (n^2 - 5n + 8) - 1, cross-evaluated against the
// partial sum sum_{k=3}^{n} 2^{k-3} C(k-1, 2); the two must agree.
std::int64_t rank_formula(int n);

// rank(n) == rank(n-1) + number of vertical classes of the n-graph.
bool recursion_check(int n);

// A checkable positive witness that two 6-cycles with the same generator
// index are homotopic: the pair of based loop words
//   W1 = w (s_i s_{i+1})^3 w^rev
//   W2 = w m (s_i s_{i+1})^3 m^rev w^rev
// where w walks from the identity to rep(c1) and m is the move word.  The
// two are accepted by words_equivalent.  Throws when the moves are not
// disjoint from the cycle pair or do not carry c1's coset onto c2's.
std::pair<BasedWord, BasedWord> homotopy_certificate(const SixCycle& c1, const SixCycle& c2,
                                                     const std::vector<int>& moves);

// A move word connecting the two cosets, when one exists (breadth-first
// search through the orbit); nullopt otherwise.
std::optional<std::vector<int>> connecting_moves(const SixCycle& c1, const SixCycle& c2);

}  // namespace atheory

#endif
