#ifndef ATHEORY_HOMOTOPY_RANK_HPP
#define ATHEORY_HOMOTOPY_RANK_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "atheory/graph.hpp"

namespace atheory {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Fundamental cycle basis from a breadth-first spanning forest rooted at
// the least-index vertex of each component.  Each non-tree edge indexes one
// basis coordinate; dimension = |E| - |V| + components.
struct CycleBasis {
  std::vector<char> edge_in_tree;          // per edge index
  std::vector<std::int32_t> coord_of_edge; // -1 for tree edges
  std::size_t dimension = 0;
  std::size_t components = 0;
};

CycleBasis fundamental_cycle_basis(const LabeledGraph& g);

// A 3- or 4-cycle in canonical form: least vertex first, oriented toward
// its smaller neighbor.
struct ShortCycle {
  std::vector<Vertex> vertices;
};

// Every triangle and every 4-cycle, each exactly once.  Triangles come from
// sorted neighbor pairs, 4-cycles from common-neighbor counting over vertex
// pairs, which is O(sum of squared degrees).
std::vector<ShortCycle> enumerate_short_cycles(const LabeledGraph& g);

// Signed count of non-tree edge traversals of a closed walk (given as a
// vertex sequence whose last vertex repeats the first).  Traversing edge
// {u,v} from min to max counts +1.
std::vector<std::int64_t> cycle_coordinates(std::span<const Vertex> closed_walk,
                                            const LabeledGraph& g, const CycleBasis& basis);

// Rows are sparse (column, coefficient) lists.
struct SparseIntMatrix {
  std::size_t ncols = 0;
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> rows;
};

SparseIntMatrix relation_matrix(const LabeledGraph& g, const CycleBasis& basis,
                                const std::vector<ShortCycle>& cycles);

// Row rank over Z/p; stops early once the rank is full.
std::size_t rank_mod_prime(const SparseIntMatrix& m, std::uint64_t p);

// Exact rank by fraction-free (Bareiss) elimination over the integers.
std::size_t rank_exact(const SparseIntMatrix& m);

// Nonzero invariant factors d_1 | d_2 | ... of an integer matrix.
std::vector<BigInt> smith_invariant_factors(const SparseIntMatrix& m);

struct RankOptions {
  std::uint64_t prime1 = 1048583;  // both primes exceed 2^20
  std::uint64_t prime2 = 1048589;
};

struct RankReport {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t components = 0;
  std::size_t cycle_dim = 0;
  std::size_t n_short_cycles = 0;
  std::size_t relation_rank = 0;
  std::size_t a1_rank = 0;
  std::optional<std::vector<BigInt>> invariant_factors;

  nlohmann::json to_json() const;
};

// rank of the abelianized discrete fundamental group:
// (|E| - |V| + components) - rank(relation matrix of 3- and 4-cycles).
// The relation rank is taken mod prime1 and, when that is not already full
// (full modular rank is exact), cross-checked mod prime2 with escalation to
// fraction-free elimination on disagreement.
RankReport a1_rank_report(const LabeledGraph& g, const RankOptions& opts = {});
std::size_t a1_rank(const LabeledGraph& g, const RankOptions& opts = {});

// Invariant factors of the relation matrix; all 1 means the group is free
// of the reported rank.  Refuses when the basis dimension exceeds the guard.
std::vector<BigInt> torsion_check(const LabeledGraph& g, std::size_t dimension_guard = 2000);

// Reduction of cycle coordinates against a fixed row-reduced form of the
// relation matrix.  Equal outputs <=> homologous (the span is saturated for
// the graphs handled here, which torsion_check verifies); distinct outputs
// certify non-homotopic loops.
class HomologyReducer {
 public:
  explicit HomologyReducer(const LabeledGraph& g);

  const CycleBasis& basis() const { return basis_; }
  std::vector<BigRational> reduce(const std::vector<std::int64_t>& coords) const;
  std::vector<BigRational> h1_class(std::span<const Vertex> closed_walk) const;

 private:
  const LabeledGraph* g_;
  CycleBasis basis_;
  std::vector<std::pair<std::size_t, std::vector<BigRational>>> echelon_;  // (pivot col, row)
};

}  // namespace atheory

#endif
