#include "atheory/gamma.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <unordered_map>

namespace atheory {

namespace {

int proper_chain_length(const GradedPoset& p) { return p.top_rank() - 1; }

// Rank difference count between two equal-length chains.
int chain_distance(const MaximalChain& a, const MaximalChain& b) {
  int d = 0;
  for (std::size_t r = 0; r < a.elements.size(); ++r) d += a.elements[r] != b.elements[r];
  return d;
}

GammaGraph build_chain_graph(const GradedPoset& p, int max_diff) {
  GammaGraph out;
  out.chains = maximal_chains(p, /*proper=*/true);
  const std::size_t nv = out.chains.size();
  out.graph = LabeledGraph(nv);
  for (Vertex v = 0; v < nv; ++v) out.graph.set_vertex_label(v, out.chains[v].to_string());
  if (nv == 0 || out.chains[0].elements.empty() || max_diff <= 0) return out;

  const std::size_t len = out.chains[0].elements.size();
  const int t = std::min<int>(max_diff, static_cast<int>(len));

  // Keys are chains with a t-subset of ranks wildcarded; chains sharing a
  // key differ in at most t ranks.  Every pair at distance <= t shares at
  // least one key, and add_edge dedups the repeats.
  std::unordered_map<std::string, std::vector<Vertex>> groups;

  std::vector<int> subset(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) subset[static_cast<std::size_t>(i)] = i;
  while (true) {
    groups.clear();
    for (Vertex v = 0; v < nv; ++v) {
      std::string key;
      key.reserve(len * 4);
      std::size_t si = 0;
      for (std::size_t r = 0; r < len; ++r) {
        if (si < subset.size() && subset[si] == static_cast<int>(r)) {
          key += "*;";
          ++si;
        } else {
          key += std::to_string(out.chains[v].elements[r]);
          key += ';';
        }
      }
      groups[key].push_back(v);
    }
    for (const auto& [key, members] : groups) {
      for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = a + 1; b < members.size(); ++b) {
          const int d = chain_distance(out.chains[members[a]], out.chains[members[b]]);
          int label = kUnlabeled;
          if (d == 1) {
            // Differing in one rank corresponds to one adjacent swap in the
            // permutation word, labeled by that rank.
            for (std::size_t r = 0; r < len; ++r) {
              if (out.chains[members[a]].elements[r] != out.chains[members[b]].elements[r]) {
                label = static_cast<int>(r) + 1;
                break;
              }
            }
          }
          out.graph.add_edge(members[a], members[b], label);
        }
      }
    }
    // next t-subset of {0..len-1}
    int i = t - 1;
    while (i >= 0 && subset[static_cast<std::size_t>(i)] == static_cast<int>(len) - t + i) --i;
    if (i < 0) break;
    ++subset[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < t; ++j)
      subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace

GammaGraph gamma_graph(const GradedPoset& p, int q) {
  const int d = proper_chain_length(p) - 1;  // chains of d+1 elements are d-simplices
  if (q < 0 || q > d) throw std::invalid_argument("gamma_graph: q out of [0, dim]");
  return build_chain_graph(p, d - q);
}

GammaGraph chain_graph(const GradedPoset& p) { return build_chain_graph(p, 1); }

Permutation chain_to_permutation(const MaximalChain& chain, const GradedPoset& bn, int n) {
  // The chain's elements are subsets as bitmasks; each rank step adds one
  // value and the top step adds the missing one.
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(n));
  unsigned prev = 0;
  for (int el : chain.elements) {
    const unsigned cur = static_cast<unsigned>(el);
    const unsigned added = cur & ~prev;
    if (std::popcount(added) != 1 || bn.rank(el) != static_cast<int>(word.size()) + 1) {
      throw std::invalid_argument("chain_to_permutation: not a proper chain of the boolean lattice");
    }
    word.push_back(std::countr_zero(added) + 1);
    prev = cur;
  }
  const unsigned full = (n >= 32) ? ~0u : ((1u << n) - 1);
  const unsigned missing = full & ~prev;
  if (std::popcount(missing) != 1) {
    throw std::invalid_argument("chain_to_permutation: chain has the wrong length for n");
  }
  word.push_back(std::countr_zero(missing) + 1);
  return Permutation(std::move(word));
}

PermutahedronGraph permutahedron_graph(int n, bool force_large) {
  if (n < 2) throw std::invalid_argument("permutahedron_graph: need n >= 2");
  if (n > kDefaultSizeCap && !force_large) {
    throw std::runtime_error("permutahedron_graph: n = " + std::to_string(n) +
                             " exceeds the size cap " + std::to_string(kDefaultSizeCap) +
                             "; pass force_large to override");
  }
  PermutahedronGraph out;
  out.n = n;
  const std::uint64_t nv = factorial(n);
  out.perms.reserve(nv);
  out.graph = LabeledGraph(nv);
  for (std::uint64_t r = 0; r < nv; ++r) {
    Permutation p = Permutation::from_lex_rank(n, r);
    out.graph.set_vertex_label(static_cast<Vertex>(r), p.to_string());
    out.perms.push_back(std::move(p));
  }
  for (Vertex v = 0; v < nv; ++v) {
    for (int j = 1; j <= n - 1; ++j) {
      const Permutation q = out.perms[v].apply_generator(j);
      const Vertex w = static_cast<Vertex>(q.lex_rank());
      if (v < w) out.graph.add_edge(v, w, j);
    }
  }
  return out;
}

std::vector<int> PermutahedronGraph::levels() const {
  std::vector<int> ls(perms.size());
  for (std::size_t v = 0; v < perms.size(); ++v) ls[v] = perms[v].level();
  return ls;
}

EdgeClass edge_class(const Permutation& a, const Permutation& b) {
  bool is_swap = false;
  if (a.size() == b.size()) {
    for (int j = 1; j <= a.size() - 1 && !is_swap; ++j) {
      is_swap = a.apply_generator(j) == b;
    }
  }
  if (!is_swap) throw std::invalid_argument("edge_class: endpoints are not adjacent");
  const int la = a.level(), lb = b.level();
  if (la == lb) return EdgeClass{EdgeClass::kHorizontal, la};
  return EdgeClass{EdgeClass::kVertical, std::min(la, lb)};
}

EdgeClass edge_class(const PermutahedronGraph& g, const Edge& e) {
  return edge_class(g.perms[e.u], g.perms[e.v]);
}

}  // namespace atheory
