#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "atheory/report.hpp"
#include "atheory/shuffle.hpp"
#include "test_support.hpp"

using namespace atheory;

namespace {

std::set<std::pair<Vertex, Vertex>> edge_pairs(const LabeledGraph& g) {
  std::set<std::pair<Vertex, Vertex>> out;
  for (const Edge& e : g.edges()) out.insert({e.u, e.v});
  return out;
}

}  // namespace

TEST_CASE("k-sequences and their duals") {
  CHECK_THROWS_AS(KSequence({2, 1}, 2), std::invalid_argument);
  CHECK_THROWS_AS(KSequence({0, 3}, 2), std::invalid_argument);

  const KSequence kappa({1, 2, 2}, 2);
  CHECK(dual_l_sequence(kappa) == std::vector<int>{0, 1});
  CHECK(kappa.contains(2));
  CHECK_FALSE(kappa.contains(0));

  const ShuffleVertex v(KSequence({0, 1, 1}, 2));
  CHECK(v.to_string() == "0,1,1/1,3");
}

TEST_CASE("shuffle graph sizes and structure") {
  const ShuffleGraph s32 = shuffle_graph(3, 2);
  CHECK(s32.graph.vertex_count() == 10);

  const ShuffleGraph s31 = shuffle_graph(3, 1);
  CHECK(s31.graph.vertex_count() == 4);
  CHECK(s31.graph.edge_count() == 3);
  int endpoints = 0;
  for (Vertex v = 0; v < 4; ++v) endpoints += s31.graph.degree(v) == 1;
  CHECK(endpoints == 2);  // a path
  // its 1-sequences are 0..3 in some order
  std::set<int> ones;
  for (const auto& sv : s31.vertices) ones.insert(sv.lambda[0]);
  CHECK(ones == std::set<int>{0, 1, 2, 3});

  const ShuffleGraph s05 = shuffle_graph(0, 5);
  CHECK(s05.graph.vertex_count() == 1);
  CHECK(s05.graph.edge_count() == 0);

  for (int k = 0; k <= 8; ++k) {
    for (int l = 0; k + l <= 8; ++l) {
      CHECK(shuffle_graph(k, l).graph.vertex_count() == testsupport::binomial(k + l, k));
    }
  }
}

TEST_CASE("adjacent k-sequences have adjacent l-sequences") {
  const ShuffleGraph s = shuffle_graph(3, 2);
  auto l_adjacent = [](const std::vector<int>& a, const std::vector<int>& b) {
    int diffs = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const int d = a[i] - b[i];
      if (d != 0) {
        if (d != 1 && d != -1) return false;
        ++diffs;
      }
    }
    return diffs == 1;
  };
  for (std::size_t a = 0; a < s.vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < s.vertices.size(); ++b) {
      const bool adj = s.graph.adjacent(static_cast<Vertex>(a), static_cast<Vertex>(b));
      CHECK(adj == l_adjacent(s.vertices[a].lambda, s.vertices[b].lambda));
    }
  }
}

TEST_CASE("box product basics") {
  const LabeledGraph c5 = cycle_graph(5);
  LabeledGraph k1(1);
  k1.set_vertex_label(0, "pt");
  const LabeledGraph same = box_product(c5, k1);
  CHECK(same.vertex_count() == 5);
  CHECK(same.edge_count() == 5);
  for (const Edge& e : c5.edges()) CHECK(same.adjacent(e.u, e.v));

  const LabeledGraph c6 = cycle_graph(6);
  const LabeledGraph prod = box_product(c5, c6);
  CHECK(prod.vertex_count() == 30);
  CHECK(prod.edge_count() == c5.vertex_count() * c6.edge_count() + c6.vertex_count() * c5.edge_count());

  const LabeledGraph square = box_product(path_graph(1), path_graph(1));
  CHECK(square.vertex_count() == 4);
  CHECK(square.edge_count() == 4);
  for (Vertex v = 0; v < 4; ++v) CHECK(square.degree(v) == 2);
}

TEST_CASE("intermediate graph vertex counts") {
  const GradedPoset b1 = boolean_lattice(1);
  const GradedPoset b2 = boolean_lattice(2);
  const GradedPoset b3 = boolean_lattice(3);

  const IntermediateGraph g31 = intermediate_graph(b3, b1);
  CHECK(g31.graph.vertex_count() == 24);
  for (const auto& info : g31.edge_info) {
    CHECK(info.type != ProductEdgeType::kChain2Move);  // single-vertex second factor
  }

  const IntermediateGraph g21 = intermediate_graph(b2, b1);
  CHECK(g21.graph.vertex_count() == 6);

  // counts match the maximal chains of the materialized product poset
  const auto pairs = {std::pair{&b2, &b1}, std::pair{&b3, &b1}, std::pair{&b2, &b2}};
  for (const auto& [l1, l2] : pairs) {
    const IntermediateGraph gt = intermediate_graph(*l1, *l2);
    const GradedPoset prod = testsupport::product_poset(*l1, *l2);
    CHECK(gt.graph.vertex_count() == maximal_chains(prod, true).size());
  }
}

TEST_CASE("intermediate graph is the triple box product") {
  const GradedPoset b3 = boolean_lattice(3);
  const GradedPoset b2 = boolean_lattice(2);
  const IntermediateGraph gt = intermediate_graph(b3, b2);
  const LabeledGraph boxed = box_product(
      box_product(chain_graph(b3).graph, chain_graph(b2).graph), shuffle_graph(3, 2).graph);
  CHECK(gt.graph.vertex_count() == boxed.vertex_count());
  CHECK(edge_pairs(gt.graph) == edge_pairs(boxed));
}

TEST_CASE("pruning the intermediate graph") {
  const GradedPoset b1 = boolean_lattice(1);

  // B_1 x B_1: two shuffles of two one-edge chains, one surviving edge
  const IntermediateGraph g11 = intermediate_graph(b1, b1);
  CHECK(g11.graph.vertex_count() == 2);
  CHECK(g11.graph.edge_count() == 1);
  CHECK(g11.edge_info[0].type == ProductEdgeType::kShuffleMove);
  const LabeledGraph pruned11 = prune_edges(g11);
  CHECK(pruned11.edge_count() == 1);

  // shuffle-move edges always survive
  const GradedPoset b3 = boolean_lattice(3);
  const GradedPoset b2 = boolean_lattice(2);
  const IntermediateGraph gt = intermediate_graph(b3, b2);
  const LabeledGraph pruned = prune_edges(gt);
  for (std::size_t i = 0; i < gt.graph.edge_count(); ++i) {
    if (gt.edge_info[i].type == ProductEdgeType::kShuffleMove) {
      CHECK(pruned.adjacent(gt.graph.edge(i).u, gt.graph.edge(i).v));
    }
  }

  // a second-factor diamond at rank 1 survives the (0,2,2) shuffle and is
  // cut by the (0,1,1) shuffle
  std::size_t sh_022 = gt.shuffles.size(), sh_011 = gt.shuffles.size();
  for (std::size_t s = 0; s < gt.shuffles.size(); ++s) {
    if (gt.shuffles[s].kappa.entries == std::vector<int>{0, 2, 2}) sh_022 = s;
    if (gt.shuffles[s].kappa.entries == std::vector<int>{0, 1, 1}) sh_011 = s;
  }
  REQUIRE(sh_022 < gt.shuffles.size());
  REQUIRE(sh_011 < gt.shuffles.size());
  int checked = 0;
  for (std::size_t i = 0; i < gt.graph.edge_count(); ++i) {
    const auto& info = gt.edge_info[i];
    if (info.type != ProductEdgeType::kChain2Move || info.diff_rank != 1) continue;
    const Edge& e = gt.graph.edge(i);
    const auto t = gt.triple_of(e.u);
    if (t.sh == sh_022) {
      CHECK(pruned.adjacent(e.u, e.v));
      ++checked;
    } else if (t.sh == sh_011) {
      CHECK_FALSE(pruned.adjacent(e.u, e.v));
      ++checked;
    }
  }
  CHECK(checked > 0);

  // metadata is required
  IntermediateGraph broken = intermediate_graph(b1, b1);
  broken.edge_info.clear();
  CHECK_THROWS_AS(prune_edges(broken), std::runtime_error);
}

TEST_CASE("position rule for the B_1 specialization") {
  const Permutation pi = Permutation::parse("123");
  CHECK(triple_to_permutation(pi, 3).to_string() == "1234");
  CHECK(triple_to_permutation(pi, 0).to_string() == "4123");
  CHECK_THROWS_AS(triple_to_permutation(pi, 4), std::invalid_argument);

  const GradedPoset b3 = boolean_lattice(3);
  const GradedPoset b1 = boolean_lattice(1);
  const IntermediateGraph gt = intermediate_graph(b3, b1);
  for (Vertex v = 0; v < gt.graph.vertex_count(); ++v) {
    const auto t = gt.triple_of(v);
    const int a = gt.shuffles[t.sh].lambda[0];
    CHECK(triple_to_permutation(gt, b3, v).level() == a + 1);
  }
}

TEST_CASE("the pruned product reproduces the permutahedron") {
  for (int n : {3, 4, 5}) {
    const ProductVerification v = verify_product_construction(n);
    CHECK(v.vertex_sets_match);
    CHECK(v.edge_sets_match);
    CHECK(v.pruned_edges == v.direct_edges);
  }
  const ProductVerification v4 = verify_product_construction(4);
  CHECK(v4.vertices == 24);
  CHECK(v4.direct_edges == 36);
}

namespace {

// Interleave the two bounded chains as the k-sequence dictates and read off
// the resulting maximal chain of the product poset (ids x * |L2| + y).
MaximalChain product_chain_of_triple(const IntermediateGraph& gt, const GradedPoset& l1,
                                     const GradedPoset& l2, Vertex v) {
  const auto t = gt.triple_of(v);
  std::vector<int> full1{l1.bottom()};
  for (int e : gt.chains1[t.c1].elements) full1.push_back(e);
  full1.push_back(l1.top());
  std::vector<int> full2{l2.bottom()};
  for (int e : gt.chains2[t.c2].elements) full2.push_back(e);
  full2.push_back(l2.top());

  const auto& kappa = gt.shuffles[t.sh].kappa.entries;
  std::set<int> c1_positions;  // the i-th first-chain edge sits after kappa_i second-chain edges
  for (int i = 1; i <= static_cast<int>(kappa.size()); ++i) {
    c1_positions.insert(i + kappa[static_cast<std::size_t>(i - 1)]);
  }
  MaximalChain out;
  std::size_t f1 = 0, f2 = 0;
  for (int p = 1; p <= gt.k + gt.l - 1; ++p) {  // proper part only
    if (c1_positions.contains(p)) {
      ++f1;
    } else {
      ++f2;
    }
    out.elements.push_back(full1[f1] * static_cast<int>(l2.size()) + full2[f2]);
  }
  return out;
}

}  // namespace

TEST_CASE("pruned product equals the chain graph of the materialized product") {
  // exercises the second-factor pruning too, which the B_1 case never does
  const GradedPoset b1 = boolean_lattice(1);
  const GradedPoset b2 = boolean_lattice(2);
  const GradedPoset b3 = boolean_lattice(3);
  const auto cases = {std::pair{&b2, &b1}, std::pair{&b3, &b1}, std::pair{&b2, &b2},
                      std::pair{&b3, &b2}};
  for (const auto& [l1, l2] : cases) {
    const IntermediateGraph gt = intermediate_graph(*l1, *l2);
    const LabeledGraph pruned = prune_edges(gt);
    const GradedPoset prod = testsupport::product_poset(*l1, *l2);
    const GammaGraph reference = chain_graph(prod);
    REQUIRE(pruned.vertex_count() == reference.graph.vertex_count());

    std::map<std::string, Vertex> ref_index;
    for (std::size_t c = 0; c < reference.chains.size(); ++c) {
      ref_index.emplace(reference.chains[c].to_string(), static_cast<Vertex>(c));
    }
    std::vector<Vertex> to_ref(pruned.vertex_count());
    std::set<Vertex> hit;
    for (Vertex v = 0; v < pruned.vertex_count(); ++v) {
      const MaximalChain chain = product_chain_of_triple(gt, *l1, *l2, v);
      REQUIRE(ref_index.contains(chain.to_string()));
      to_ref[v] = ref_index.at(chain.to_string());
      hit.insert(to_ref[v]);
    }
    CHECK(hit.size() == pruned.vertex_count());

    CHECK(pruned.edge_count() == reference.graph.edge_count());
    for (const Edge& e : pruned.edges()) {
      CHECK(reference.graph.adjacent(to_ref[e.u], to_ref[e.v]));
    }
  }
}
