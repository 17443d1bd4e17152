#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "atheory/gamma.hpp"
#include "atheory/poset.hpp"
#include "atheory/report.hpp"
#include "test_support.hpp"

using namespace atheory;

TEST_CASE("boolean lattice counts") {
  const GradedPoset b1 = boolean_lattice(1);
  CHECK(b1.size() == 2);
  CHECK(b1.covers().size() == 1);

  const GradedPoset b3 = boolean_lattice(3);
  CHECK(b3.size() == 8);
  CHECK(b3.covers().size() == 12);

  const GradedPoset b4 = boolean_lattice(4);
  CHECK(b4.size() == 16);
  // sum over k of k * C(4, k), counted independently
  std::uint64_t expected = 0;
  for (int k = 1; k <= 4; ++k) expected += static_cast<std::uint64_t>(k) * testsupport::binomial(4, k);
  CHECK(b4.covers().size() == expected);
  CHECK(expected == 32);

  CHECK(b4.is_bounded());
  CHECK(b4.rank(0b1111) == 4);
  CHECK(b4.top_rank() == 4);
  CHECK_THROWS_AS(boolean_lattice(0), std::invalid_argument);
  CHECK_THROWS_AS(boolean_lattice(9), std::runtime_error);
  CHECK(boolean_lattice(9, /*force_large=*/true).size() == 512);
}

TEST_CASE("poset validation") {
  // a cover skipping a rank level
  CHECK_THROWS_AS(GradedPoset(4, {{0, 1}, {1, 2}, {0, 3}, {3, 2}, {1, 3}}), std::invalid_argument);
  // two maximal elements: not bounded
  const GradedPoset v(3, {{0, 1}, {0, 2}});
  CHECK_FALSE(v.is_bounded());
  CHECK_THROWS_AS(maximal_chains(v, true), std::runtime_error);
}

TEST_CASE("maximal chains of the boolean lattice") {
  CHECK(maximal_chains(boolean_lattice(3), true).size() == 6);
  const GradedPoset b4 = boolean_lattice(4);
  const auto chains = maximal_chains(b4, true);
  CHECK(chains.size() == 24);
  for (const auto& c : chains) CHECK(c.elements.size() == 3);

  // {1} < {1,2} < {1,2,3} corresponds to 1234
  const MaximalChain probe{{0b0001, 0b0011, 0b0111}};
  CHECK(chain_to_permutation(probe, b4, 4).to_string() == "1234");

  // every chain has a distinct permutation; together they exhaust S_4
  std::set<std::string> images;
  for (const auto& c : chains) images.insert(chain_to_permutation(c, b4, 4).to_string());
  CHECK(images.size() == 24);

  // the rank-1 poset has exactly one (empty) proper chain
  const auto b1_chains = maximal_chains(boolean_lattice(1), true);
  CHECK(b1_chains.size() == 1);
  CHECK(b1_chains[0].elements.empty());
}

TEST_CASE("gamma graphs of small boolean lattices") {
  const GradedPoset b3 = boolean_lattice(3);
  const GammaGraph hexagon = gamma_graph(b3, 0);
  CHECK(hexagon.graph.vertex_count() == 6);
  CHECK(hexagon.graph.edge_count() == 6);
  for (Vertex v = 0; v < 6; ++v) CHECK(hexagon.graph.degree(v) == 2);

  const GradedPoset b4 = boolean_lattice(4);
  const GammaGraph g1 = gamma_graph(b4, 1);
  CHECK(g1.graph.vertex_count() == 24);
  CHECK(g1.graph.edge_count() == 36);

  const GammaGraph g0 = gamma_graph(b4, 0);
  CHECK(g0.graph.vertex_count() == 24);
  CHECK(g0.graph.edge_count() > g1.graph.edge_count());
  CHECK(g0.graph.edge_count() == 120);
  // every edge of the sparser graph survives in the denser one
  for (const Edge& e : g1.graph.edges()) CHECK(g0.graph.adjacent(e.u, e.v));

  CHECK_THROWS_AS(gamma_graph(b4, 3), std::invalid_argument);
  CHECK_THROWS_AS(gamma_graph(b4, -1), std::invalid_argument);
}

TEST_CASE("permutahedron graph basics") {
  const PermutahedronGraph p3 = permutahedron_graph(3);
  CHECK(p3.graph.vertex_count() == 6);
  CHECK(p3.graph.edge_count() == 6);

  const PermutahedronGraph p4 = permutahedron_graph(4);
  CHECK(p4.graph.vertex_count() == 24);
  CHECK(p4.graph.edge_count() == 36);
  for (Vertex v = 0; v < 24; ++v) CHECK(p4.graph.degree(v) == 3);

  const PermutahedronGraph p5 = permutahedron_graph(5);
  CHECK(p5.graph.vertex_count() == 120);
  CHECK(p5.graph.edge_count() == 240);

  CHECK_THROWS_AS(permutahedron_graph(9), std::runtime_error);

  // vertex order is lexicographic on one-line notation
  CHECK(p4.graph.vertex_label(0) == "1234");
  CHECK(p4.graph.vertex_label(23) == "4321");
  CHECK(p4.index_of(Permutation::parse("1243")) == 1);

  // bipartite by permutation parity
  for (const Edge& e : p4.graph.edges()) {
    CHECK(p4.perms[e.u].is_even() != p4.perms[e.v].is_even());
  }

  // each level holds (n-1)! vertices
  for (int n : {4, 5}) {
    const PermutahedronGraph pg = permutahedron_graph(n);
    std::vector<int> per_level(static_cast<std::size_t>(n) + 1, 0);
    for (const Permutation& p : pg.perms) ++per_level[static_cast<std::size_t>(p.level())];
    for (int lv = 1; lv <= n; ++lv) {
      CHECK(per_level[static_cast<std::size_t>(lv)] == static_cast<int>(factorial(n - 1)));
    }
  }
}

TEST_CASE("edge classification") {
  const PermutahedronGraph p4 = permutahedron_graph(4);
  const EdgeClass horizontal = edge_class(Permutation::parse("1234"), Permutation::parse("2134"));
  CHECK(horizontal.kind == EdgeClass::kHorizontal);
  CHECK(horizontal.level == 4);

  const EdgeClass vertical = edge_class(Permutation::parse("1243"), Permutation::parse("1234"));
  CHECK(vertical.kind == EdgeClass::kVertical);
  CHECK(vertical.level == 3);

  CHECK_THROWS_AS(edge_class(Permutation::parse("1243"), Permutation::parse("2134")),
                  std::invalid_argument);

  // vertical edges between levels i and i+1 always carry the label s_i, and
  // every s_3 edge at a level-4 vertex leaves the level
  for (const Edge& e : p4.graph.edges()) {
    const EdgeClass c = edge_class(p4, e);
    if (c.kind == EdgeClass::kVertical) CHECK(e.label == c.level);
    if (e.label == 3 && (p4.perms[e.u].level() == 4 || p4.perms[e.v].level() == 4)) {
      CHECK(c.kind == EdgeClass::kVertical);
    }
  }
}

TEST_CASE("chain graph agrees with the direct construction") {
  for (int n : {3, 4, 5}) CHECK(verify_gamma_isomorphism(n));
}

TEST_CASE("coarser gamma graph joins chains two ranks apart") {
  const int n = 5;
  const GradedPoset bn = boolean_lattice(n);
  const GammaGraph g = gamma_graph(bn, n - 4);
  // map permutations onto gamma vertices through the chain bijection
  std::vector<Vertex> by_rank(g.chains.size());
  for (std::size_t c = 0; c < g.chains.size(); ++c) {
    by_rank[chain_to_permutation(g.chains[c], bn, n).lex_rank()] = static_cast<Vertex>(c);
  }
  for (std::uint64_t r = 0; r < factorial(n); ++r) {
    const Permutation sigma = Permutation::from_lex_rank(n, r);
    for (int i = 1; i <= n - 2; ++i) {
      const Permutation tau = sigma.apply_generator(i).apply_generator(i + 1).apply_generator(i);
      CHECK(g.graph.adjacent(by_rank[sigma.lex_rank()], by_rank[tau.lex_rank()]));
    }
  }
}
