#include "atheory/shuffle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace atheory {

KSequence::KSequence(std::vector<int> es, int l_bound) : entries(std::move(es)), l(l_bound) {
  if (l < 0) throw std::invalid_argument("KSequence: negative bound");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] < 0 || entries[i] > l) throw std::invalid_argument("KSequence: entry out of [0, l]");
    if (i > 0 && entries[i] < entries[i - 1]) {
      throw std::invalid_argument("KSequence: entries must be weakly increasing");
    }
  }
}

bool KSequence::contains(int value) const {
  return std::binary_search(entries.begin(), entries.end(), value);
}

std::vector<int> dual_l_sequence(const KSequence& kappa) {
  std::vector<int> lambda(static_cast<std::size_t>(kappa.l));
  for (int j = 1; j <= kappa.l; ++j) {
    int count = 0;
    for (int a : kappa.entries) count += (a < j);
    lambda[static_cast<std::size_t>(j - 1)] = count;
  }
  return lambda;
}

ShuffleVertex::ShuffleVertex(KSequence k) : kappa(std::move(k)), lambda(dual_l_sequence(kappa)) {}

std::string ShuffleVertex::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < kappa.entries.size(); ++i) {
    if (i) os << ',';
    os << kappa.entries[i];
  }
  os << '/';
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (i) os << ',';
    os << lambda[i];
  }
  return os.str();
}

namespace {

void enumerate_ksequences(int k, int l, std::vector<int>& cur, std::vector<KSequence>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.emplace_back(cur, l);
    return;
  }
  const int lo = cur.empty() ? 0 : cur.back();
  for (int a = lo; a <= l; ++a) {
    cur.push_back(a);
    enumerate_ksequences(k, l, cur, out);
    cur.pop_back();
  }
}

}  // namespace

ShuffleGraph shuffle_graph(int k, int l) {
  if (k < 0 || l < 0) throw std::invalid_argument("shuffle_graph: need k, l >= 0");
  ShuffleGraph out;
  out.k = k;
  out.l = l;
  std::vector<KSequence> seqs;
  std::vector<int> cur;
  enumerate_ksequences(k, l, cur, seqs);
  out.graph = LabeledGraph(seqs.size());
  out.vertices.reserve(seqs.size());
  for (std::size_t v = 0; v < seqs.size(); ++v) {
    out.vertices.emplace_back(seqs[v]);
    out.graph.set_vertex_label(static_cast<Vertex>(v), out.vertices.back().to_string());
  }
  // adjacency: +-1 in exactly one coordinate
  for (std::size_t a = 0; a < seqs.size(); ++a) {
    for (std::size_t b = a + 1; b < seqs.size(); ++b) {
      int diffs = 0;
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) {
        const int d = seqs[b].entries[static_cast<std::size_t>(i)] -
                      seqs[a].entries[static_cast<std::size_t>(i)];
        if (d != 0) {
          ++diffs;
          if (d != 1 && d != -1) ok = false;
        }
      }
      if (ok && diffs == 1) out.graph.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
  }
  return out;
}

IntermediateGraph::Triple IntermediateGraph::triple_of(Vertex v) const {
  const std::size_t ns = shuffles.size(), n2 = chains2.size();
  return Triple{v / (n2 * ns), (v / ns) % n2, v % ns};
}

IntermediateGraph intermediate_graph(const GradedPoset& l1, const GradedPoset& l2) {
  IntermediateGraph out;
  out.k = l1.top_rank();
  out.l = l2.top_rank();
  out.chains1 = maximal_chains(l1, /*proper=*/true);
  out.chains2 = maximal_chains(l2, /*proper=*/true);
  ShuffleGraph sh = shuffle_graph(out.k, out.l);
  out.shuffles = std::move(sh.vertices);

  const std::size_t n1 = out.chains1.size(), n2 = out.chains2.size(), ns = out.shuffles.size();
  out.graph = LabeledGraph(n1 * n2 * ns);
  auto vid = [&](std::size_t c1, std::size_t c2, std::size_t s) {
    return static_cast<Vertex>((c1 * n2 + c2) * ns + s);
  };
  std::vector<std::string> kappa_strings(ns);
  for (std::size_t s = 0; s < ns; ++s) {
    std::ostringstream os;
    const auto& entries = out.shuffles[s].kappa.entries;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (i) os << ',';
      os << entries[i];
    }
    kappa_strings[s] = os.str();
  }
  for (std::size_t c1 = 0; c1 < n1; ++c1) {
    for (std::size_t c2 = 0; c2 < n2; ++c2) {
      for (std::size_t s = 0; s < ns; ++s) {
        out.graph.set_vertex_label(vid(c1, c2, s), out.chains1[c1].to_string() + "|" +
                                                       out.chains2[c2].to_string() + "|" +
                                                       kappa_strings[s]);
      }
    }
  }

  // Chain adjacency inside each factor, with the differing rank recorded.
  auto chain_moves = [](const std::vector<MaximalChain>& chains) {
    std::vector<std::tuple<std::size_t, std::size_t, int>> moves;  // (a, b, rank)
    for (std::size_t a = 0; a < chains.size(); ++a) {
      for (std::size_t b = a + 1; b < chains.size(); ++b) {
        int diff = 0, rank = 0;
        for (std::size_t r = 0; r < chains[a].elements.size(); ++r) {
          if (chains[a].elements[r] != chains[b].elements[r]) {
            ++diff;
            rank = static_cast<int>(r) + 1;
          }
        }
        if (diff == 1) moves.emplace_back(a, b, rank);
      }
    }
    return moves;
  };
  const auto moves1 = chain_moves(out.chains1);
  const auto moves2 = chain_moves(out.chains2);

  auto add_typed_edge = [&](Vertex a, Vertex b, ProductEdgeType type, int rank) {
    if (!out.graph.add_edge(a, b)) throw std::logic_error("intermediate_graph: duplicate edge");
    out.edge_info.push_back({type, rank});
  };
  // Type 1: shuffle moves.
  for (const Edge& e : sh.graph.edges()) {
    for (std::size_t c1 = 0; c1 < n1; ++c1) {
      for (std::size_t c2 = 0; c2 < n2; ++c2) {
        add_typed_edge(vid(c1, c2, e.u), vid(c1, c2, e.v), ProductEdgeType::kShuffleMove, 0);
      }
    }
  }
  // Type 2: second-chain moves.
  for (const auto& [a, b, rank] : moves2) {
    for (std::size_t c1 = 0; c1 < n1; ++c1) {
      for (std::size_t s = 0; s < ns; ++s) {
        add_typed_edge(vid(c1, a, s), vid(c1, b, s), ProductEdgeType::kChain2Move, rank);
      }
    }
  }
  // Type 3: first-chain moves.
  for (const auto& [a, b, rank] : moves1) {
    for (std::size_t c2 = 0; c2 < n2; ++c2) {
      for (std::size_t s = 0; s < ns; ++s) {
        add_typed_edge(vid(a, c2, s), vid(b, c2, s), ProductEdgeType::kChain1Move, rank);
      }
    }
  }
  return out;
}

LabeledGraph prune_edges(const IntermediateGraph& gt) {
  if (gt.edge_info.size() != gt.graph.edge_count()) {
    throw std::runtime_error("prune_edges: edge type metadata is missing or stale");
  }
  LabeledGraph out(gt.graph.vertex_count());
  for (Vertex v = 0; v < gt.graph.vertex_count(); ++v) {
    out.set_vertex_label(v, gt.graph.vertex_label(v));
  }
  for (std::size_t i = 0; i < gt.graph.edge_count(); ++i) {
    const Edge& e = gt.graph.edge(i);
    const ProductEdgeInfo& info = gt.edge_info[i];
    const auto t = gt.triple_of(e.u);  // shuffle coordinates agree for types 2 and 3
    bool keep = true;
    switch (info.type) {
      case ProductEdgeType::kShuffleMove:
        keep = true;
        break;
      case ProductEdgeType::kChain2Move:
        keep = !gt.shuffles[t.sh].kappa.contains(info.diff_rank);
        break;
      case ProductEdgeType::kChain1Move: {
        const auto& lambda = gt.shuffles[t.sh].lambda;
        keep = !std::binary_search(lambda.begin(), lambda.end(), info.diff_rank);
        break;
      }
    }
    if (keep) out.add_edge(e.u, e.v, e.label);
  }
  return out;
}

Permutation triple_to_permutation(const Permutation& pi, int a) {
  const int n = pi.size() + 1;
  if (a < 0 || a > pi.size()) throw std::invalid_argument("triple_to_permutation: position out of range");
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= pi.size(); ++i) {
    if (i == a + 1) word.push_back(n);
    word.push_back(pi.value_at(i));
  }
  if (a == pi.size()) word.push_back(n);
  return Permutation(std::move(word));
}

Permutation triple_to_permutation(const IntermediateGraph& gt, const GradedPoset& l1, Vertex v) {
  if (gt.l != 1) throw std::invalid_argument("triple_to_permutation: the second factor must be B_1");
  const auto t = gt.triple_of(v);
  const int n_minus_1 = gt.k;
  const Permutation pi = chain_to_permutation(gt.chains1[t.c1], l1, n_minus_1);
  const int a = gt.shuffles[t.sh].lambda[0];
  return triple_to_permutation(pi, a);
}

}  // namespace atheory
