#ifndef ATHEORY_REPORT_HPP
#define ATHEORY_REPORT_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "atheory/homotopy_rank.hpp"

namespace atheory {

// Checks that the three-step product construction of the n-permutahedron
// from B_{n-1} x B_1 lands on the directly built graph, edge for edge,
// under the shuffle-position-to-permutation map.
struct ProductVerification {
  std::size_t vertices = 0;
  std::size_t direct_edges = 0;
  std::size_t pruned_edges = 0;
  bool vertex_sets_match = false;
  bool edge_sets_match = false;

  bool ok() const { return vertex_sets_match && edge_sets_match; }
};

ProductVerification verify_product_construction(int n, bool force_large = false);

// Exact edge-set equality of the chain-based graph and the direct
// construction under the chain <-> permutation bijection.
bool verify_gamma_isomorphism(int n, bool force_large = false);

struct PipelineOptions {
  int n = 4;
  int q_offset = 3;  // q = n - q_offset; 3 is the permutahedron case
  bool force_large = false;
  RankOptions rank;
  bool with_torsion = false;
};

// Runs the whole pipeline for one n and emits a single JSON document with a
// top-level all_consistent flag.  For q = n-3: direct graph, chain-graph
// isomorphism, product construction, linear-algebra rank vs the closed
// formula, class counts and the recursion.  For q = n-4: the rank must be 0.
nlohmann::json run_report(const PipelineOptions& opts);

}  // namespace atheory

#endif
