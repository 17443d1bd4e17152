#ifndef ATHEORY_GAMMA_HPP
#define ATHEORY_GAMMA_HPP

#include <vector>

#include "atheory/graph.hpp"
#include "atheory/permutation.hpp"
#include "atheory/poset.hpp"

namespace atheory {

// Vertices are the maximal chains of the proper part of a graded poset.
struct GammaGraph {
  LabeledGraph graph;
  std::vector<MaximalChain> chains;  // index-aligned with graph vertices
};

// Two chains are adjacent when their simplices share a q-face, i.e. they
// agree in at least q+1 elements.  Since all proper chains have the same
// length d+1, that is Hamming distance at most d-q over the rank-indexed
// element vectors.  Adjacency is found by grouping chains on deleted
// rank-subsets rather than comparing all pairs.
GammaGraph gamma_graph(const GradedPoset& p, int q);

// The top graph (adjacent iff the chains differ in exactly one element).
// For a poset of rank >= 3 this equals gamma_graph(p, rank-3); it is also
// defined for rank 1 and 2, where it is a single vertex or an edgeless /
// trivial graph and the q-grading is out of range.
GammaGraph chain_graph(const GradedPoset& p);

// The word of elements added at each rank step, read as a permutation.
// For B_n this is the canonical chain <-> permutation bijection.
Permutation chain_to_permutation(const MaximalChain& chain, const GradedPoset& bn, int n);

// The 1-skeleton of the permutahedron built directly: vertices are the n!
// permutations in lexicographic order, with an edge {p, p*s_j} labeled s_j.
struct PermutahedronGraph {
  LabeledGraph graph;
  std::vector<Permutation> perms;  // index-aligned; index == lex_rank
  int n = 0;

  Vertex index_of(const Permutation& p) const { return static_cast<Vertex>(p.lex_rank()); }
  std::vector<int> levels() const;
};

PermutahedronGraph permutahedron_graph(int n, bool force_large = false);

// Horizontal edges stay inside a level; vertical edges connect consecutive
// levels and always carry the label of the lower level.
struct EdgeClass {
  enum Kind { kHorizontal, kVertical } kind;
  int level;  // the common level, or the lower of the two
};

EdgeClass edge_class(const Permutation& a, const Permutation& b);
EdgeClass edge_class(const PermutahedronGraph& g, const Edge& e);

}  // namespace atheory

#endif
