#ifndef ATHEORY_SHUFFLE_HPP
#define ATHEORY_SHUFFLE_HPP

#include <vector>

#include "atheory/gamma.hpp"
#include "atheory/graph.hpp"
#include "atheory/permutation.hpp"
#include "atheory/poset.hpp"

namespace atheory {

// A shuffle of a length-k chain with a length-l chain, named by its
// k-sequence: the weakly increasing labels a_1..a_k where a_i counts the
// edges of the second chain lying below the i-th edge of the first.
struct KSequence {
  std::vector<int> entries;  // weakly increasing, each in [0, l]
  int l = 0;

  KSequence() = default;
  KSequence(std::vector<int> es, int l_bound);

  int k() const { return static_cast<int>(entries.size()); }
  bool contains(int value) const;  // membership as a multiset of values
};

// The dual l-sequence: lambda_j = #{ i : a_i < j } for 1 <= j <= l.
std::vector<int> dual_l_sequence(const KSequence& kappa);

struct ShuffleVertex {
  KSequence kappa;
  std::vector<int> lambda;

  explicit ShuffleVertex(KSequence k);
  std::string to_string() const;  // "kappa/lambda", entries comma-separated
};

// C(k+l, k) vertices; two shuffles are adjacent when their k-sequences
// differ by +-1 in exactly one coordinate.
struct ShuffleGraph {
  LabeledGraph graph;
  std::vector<ShuffleVertex> vertices;
  int k = 0, l = 0;
};

ShuffleGraph shuffle_graph(int k, int l);

// --- the three-step product construction -----------------------------------

enum class ProductEdgeType { kShuffleMove = 1, kChain2Move = 2, kChain1Move = 3 };

struct ProductEdgeInfo {
  ProductEdgeType type;
  int diff_rank = 0;  // the rank where the moving chain pair differs (types 2 and 3)
};

// The box product of the two chain graphs with the shuffle graph.  Vertices
// are (C1, C2, shuffle) triples, one per maximal chain of L1 x L2, labeled
// "chain|chain|kappa".  Each edge records its type and differing rank so
// pruning is a single pass.
struct IntermediateGraph {
  LabeledGraph graph;
  std::vector<ProductEdgeInfo> edge_info;  // parallel to graph.edges()
  std::vector<MaximalChain> chains1, chains2;
  std::vector<ShuffleVertex> shuffles;
  int k = 0, l = 0;

  // vertex index decomposition: v = (c1 * |chains2| + c2) * |shuffles| + sh
  struct Triple {
    std::size_t c1, c2, sh;
  };
  Triple triple_of(Vertex v) const;
};

IntermediateGraph intermediate_graph(const GradedPoset& l1, const GradedPoset& l2);

// Keeps all shuffle-move edges; drops a type-2 edge iff the differing rank
// lies in kappa, and a type-3 edge iff it lies in lambda.  The result is
// the chain graph of L1 x L2.
LabeledGraph prune_edges(const IntermediateGraph& gt);

// Specialization to L1 = B_{n-1}, L2 = B_1: insert the value n into the
// chain's permutation so that it lands at position a+1, where a is the
// single entry of the l-sequence.  The level of the image is a+1.
Permutation triple_to_permutation(const Permutation& pi, int a);
Permutation triple_to_permutation(const IntermediateGraph& gt, const GradedPoset& l1, Vertex v);

}  // namespace atheory

#endif
