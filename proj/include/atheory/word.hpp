#ifndef ATHEORY_WORD_HPP
#define ATHEORY_WORD_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "atheory/permutation.hpp"

namespace atheory {

// A word over the generators s_1 .. s_{n-1}.  The group they generate here
// is the quotient by s_j^2 = 1 and the distant commutations
// s_j s_k = s_k s_j for |j-k| >= 2; the braid relations are deliberately
// *not* part of the word engine.  Since generators are involutions, the
// inverse of a word is its reverse.
struct GenWord {
  std::vector<int> letters;  // generator indices, each in 1..alphabet-1
  int alphabet = 1;          // the n of s_1..s_{n-1}

  GenWord() = default;
  GenWord(std::vector<int> ls, int n);

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  GenWord reversed() const;
  GenWord concat(const GenWord& other) const;

  std::string to_string() const;  // space-separated, e.g. "1 2 1 2 1 2"
  static GenWord parse(const std::string& text, int alphabet);

  friend bool operator==(const GenWord& a, const GenWord& b) = default;
};

// A word anchored at a base permutation; evaluating the word letter by
// letter walks through the permutation graph.  A loop word returns to base.
struct BasedWord {
  Permutation base;
  GenWord word;

  bool is_loop() const;
};

// Compose the letters left to right starting from the identity.
Permutation evaluate_word(const GenWord& w);
Permutation evaluate_from(const Permutation& base, const GenWord& w);

// Number of occurrences of each generator mod 2; invariant under the word
// moves, which is what makes the parity argument on loop words work.
std::vector<int> letter_parity(const GenWord& w);

// Canonical geodesic representative.  Two-phase: delete any pair of equal
// letters separated only by letters commuting with them, to a geodesic;
// then repeatedly emit the smallest generator that commutes to the front.
// Deterministic and unique per group element.
GenWord racg_normal_form(const GenWord& w);

bool words_equivalent(const GenWord& w1, const GenWord& w2);

// --- independent search oracle ------------------------------------------

enum class OracleResult { kEquivalent, kNotEquivalent, kInconclusive };

inline int default_oracle_bound(const GenWord& w1, const GenWord& w2) {
  return static_cast<int>(w1.size() + w2.size()) + 4;
}

// Breadth-first search over the words reachable from w1 by single
// insert/delete-s_j^2 and adjacent-commutation moves, never exceeding
// max_len letters.  kNotEquivalent means the bounded component of w1 was
// exhausted; kInconclusive means the node budget ran out first.
OracleResult bfs_oracle_equivalent(const GenWord& w1, const GenWord& w2, int max_len,
                                   std::size_t node_budget = 2'000'000);

// Single-move neighbors in the word-rewriting graph, capped at max_len
// letters.  Shared by the oracle and by exhaustive sweeps in the tests.
std::vector<std::vector<int>> word_move_neighbors(const std::vector<int>& letters, int alphabet,
                                                  int max_len);

}  // namespace atheory

#endif
