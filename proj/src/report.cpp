#include "atheory/report.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "atheory/gamma.hpp"
#include "atheory/shuffle.hpp"
#include "atheory/six_cycles.hpp"

namespace atheory {

ProductVerification verify_product_construction(int n, bool force_large) {
  if (n < 2) throw std::invalid_argument("verify_product_construction: need n >= 2");
  ProductVerification v;

  const PermutahedronGraph direct = permutahedron_graph(n, force_large);
  const GradedPoset l1 = boolean_lattice(n - 1, force_large);
  const GradedPoset l2 = boolean_lattice(1);
  const IntermediateGraph gt = intermediate_graph(l1, l2);
  const LabeledGraph pruned = prune_edges(gt);

  v.vertices = direct.graph.vertex_count();
  v.direct_edges = direct.graph.edge_count();
  v.pruned_edges = pruned.edge_count();
  if (pruned.vertex_count() != direct.graph.vertex_count()) return v;

  // map each triple vertex to its permutation's index in the direct graph
  std::vector<Vertex> to_direct(pruned.vertex_count());
  std::vector<char> hit(pruned.vertex_count(), 0);
  for (Vertex t = 0; t < pruned.vertex_count(); ++t) {
    const Permutation p = triple_to_permutation(gt, l1, t);
    const Vertex d = direct.index_of(p);
    to_direct[t] = d;
    hit[d] = 1;
  }
  v.vertex_sets_match = std::all_of(hit.begin(), hit.end(), [](char c) { return c == 1; });
  if (!v.vertex_sets_match) return v;

  std::set<std::pair<Vertex, Vertex>> direct_edges, mapped_edges;
  for (const Edge& e : direct.graph.edges()) direct_edges.insert(std::minmax(e.u, e.v));
  for (const Edge& e : pruned.edges()) {
    mapped_edges.insert(std::minmax(to_direct[e.u], to_direct[e.v]));
  }
  v.edge_sets_match = direct_edges == mapped_edges;
  return v;
}

bool verify_gamma_isomorphism(int n, bool force_large) {
  const PermutahedronGraph direct = permutahedron_graph(n, force_large);
  const GradedPoset bn = boolean_lattice(n, force_large);
  const GammaGraph gamma = (n >= 3) ? gamma_graph(bn, n - 3) : chain_graph(bn);
  if (gamma.graph.vertex_count() != direct.graph.vertex_count()) return false;

  std::vector<Vertex> to_direct(gamma.chains.size());
  std::vector<char> hit(gamma.chains.size(), 0);
  for (std::size_t c = 0; c < gamma.chains.size(); ++c) {
    const Vertex d = direct.index_of(chain_to_permutation(gamma.chains[c], bn, n));
    to_direct[c] = d;
    hit[d] = 1;
  }
  if (!std::all_of(hit.begin(), hit.end(), [](char c) { return c == 1; })) return false;

  std::set<std::pair<Vertex, Vertex>> direct_edges, mapped_edges;
  for (const Edge& e : direct.graph.edges()) direct_edges.insert(std::minmax(e.u, e.v));
  for (const Edge& e : gamma.graph.edges()) {
    mapped_edges.insert(std::minmax(to_direct[e.u], to_direct[e.v]));
  }
  return direct_edges == mapped_edges;
}

nlohmann::json run_report(const PipelineOptions& opts) {
  const int n = opts.n;
  if (n < 2) throw std::invalid_argument("run_report: need n >= 2");
  if (opts.q_offset != 3 && opts.q_offset != 4) {
    throw std::invalid_argument("run_report: q must be n-3 or n-4");
  }
  const int q = n - opts.q_offset;

  nlohmann::json j{{"schema_version", 1},
                   {"n", n},
                   {"q", q},
                   {"q_symbolic", "n-" + std::to_string(opts.q_offset)}};
  bool consistent = true;

  if (opts.q_offset == 4) {
    if (q < 0) throw std::invalid_argument("run_report: q = n-4 needs n >= 4");
    const GradedPoset bn = boolean_lattice(n, opts.force_large);
    const GammaGraph gamma = gamma_graph(bn, q);
    const RankReport rank = a1_rank_report(gamma.graph, opts.rank);
    j["graph"] = {{"vertices", gamma.graph.vertex_count()}, {"edges", gamma.graph.edge_count()}};
    j["rank"] = rank.to_json();
    const bool trivial = rank.a1_rank == 0;
    j["checks"] = {{"rank_is_zero", trivial}};
    consistent = trivial;
    j["all_consistent"] = consistent;
    return j;
  }

  const PermutahedronGraph direct = permutahedron_graph(n, opts.force_large);
  j["graph"] = {{"vertices", direct.graph.vertex_count()}, {"edges", direct.graph.edge_count()}};

  const bool gamma_iso = verify_gamma_isomorphism(n, opts.force_large);
  const ProductVerification product = verify_product_construction(n, opts.force_large);

  RankReport rank = a1_rank_report(direct.graph, opts.rank);
  if (opts.with_torsion) rank.invariant_factors = torsion_check(direct.graph);
  j["rank"] = rank.to_json();

  nlohmann::json checks{{"gamma_label_isomorphic", gamma_iso},
                        {"product_construction_matches", product.ok()}};
  consistent = gamma_iso && product.ok();

  if (opts.with_torsion && rank.invariant_factors) {
    const bool torsion_free = std::all_of(rank.invariant_factors->begin(),
                                          rank.invariant_factors->end(),
                                          [](const BigInt& f) { return f == 1; });
    checks["torsion_free"] = torsion_free;
    consistent = consistent && torsion_free;
  }

  if (n >= 3) {
    SixCycleClasses classes = equivalence_classes(n, opts.force_large);
    classes.report.rank_linear_algebra = rank.a1_rank;
    j["classes"] = classes.report.to_json();
    const bool formula_matches =
        classes.report.rank_formula_value == static_cast<std::int64_t>(rank.a1_rank);
    checks["formula_matches_rank"] = formula_matches;
    consistent = consistent && formula_matches;
    const bool classes_at_least_rank =
        classes.report.total_classes >= static_cast<std::int64_t>(rank.a1_rank);
    checks["classes_at_least_rank"] = classes_at_least_rank;
    consistent = consistent && classes_at_least_rank;
    if (n >= 4) {
      const bool rec = recursion_check(n);
      checks["recursion_holds"] = rec;
      consistent = consistent && rec;
    }
  }

  j["checks"] = std::move(checks);
  j["all_consistent"] = consistent;
  return j;
}

}  // namespace atheory
