#ifndef ATHEORY_GRAPH_HPP
#define ATHEORY_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace atheory {

using Vertex = std::uint32_t;

// Edges carry an optional generator label: label j stands for s_j, 0 means
// unlabeled.  Endpoints are stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  int label = 0;
};

inline constexpr int kUnlabeled = 0;

// A simple undirected graph with string vertex labels.  No loops, no
// parallel edges; add_edge silently ignores duplicates so that grouping
// constructions can emit candidate pairs freely.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  explicit LabeledGraph(std::size_t n_vertices);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  void set_vertex_label(Vertex v, std::string label);
  const std::string& vertex_label(Vertex v) const;

  // Returns true if the edge is new.  Throws on a loop or a bad endpoint.
  bool add_edge(Vertex u, Vertex v, int label = kUnlabeled);

  bool adjacent(Vertex u, Vertex v) const;
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t idx) const { return edges_[idx]; }

  // -1 when not adjacent.
  std::int64_t edge_index(Vertex u, Vertex v) const;

  const std::vector<Vertex>& neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return adj_[v].size(); }

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;        // sorted neighbor lists
  std::vector<std::vector<std::uint32_t>> inc_; // edge index parallel to adj_
};

// Cartesian (box) product: (a,b) ~ (a',b') iff one coordinate is equal and
// the other adjacent.  Vertex (a,b) gets index a*|V2|+b and label "la|lb";
// edges inherit the moving factor's label.
LabeledGraph box_product(const LabeledGraph& g1, const LabeledGraph& g2);

LabeledGraph cycle_graph(int k);
LabeledGraph path_graph(int n_edges);  // the path I_n on n_edges+1 vertices
LabeledGraph complete_graph(int n);

// --- serialization ---------------------------------------------------------

// "# vertices N" header, then one line per edge: "u v s3" or "u v -".
void write_edge_list(const LabeledGraph& g, std::ostream& os);
LabeledGraph read_edge_list(std::istream& is);

void write_dot(const LabeledGraph& g, std::ostream& os);

// Vertex table plus edges; levels, when given, must be index-aligned.
nlohmann::json graph_to_json(const LabeledGraph& g, const std::vector<int>* levels = nullptr);

}  // namespace atheory

#endif
