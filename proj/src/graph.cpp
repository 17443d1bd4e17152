#include "atheory/graph.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace atheory {

LabeledGraph::LabeledGraph(std::size_t n_vertices)
    : labels_(n_vertices), adj_(n_vertices), inc_(n_vertices) {}

void LabeledGraph::check_vertex(Vertex v) const {
  if (v >= vertex_count()) throw std::invalid_argument("LabeledGraph: vertex out of range");
}

void LabeledGraph::set_vertex_label(Vertex v, std::string label) {
  check_vertex(v);
  labels_[v] = std::move(label);
}

const std::string& LabeledGraph::vertex_label(Vertex v) const {
  check_vertex(v);
  return labels_[v];
}

bool LabeledGraph::add_edge(Vertex u, Vertex v, int label) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("LabeledGraph: loops are not allowed");
  if (u > v) std::swap(u, v);
  auto& nu = adj_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) return false;
  const auto idx = static_cast<std::uint32_t>(edges_.size());
  inc_[u].insert(inc_[u].begin() + (it - nu.begin()), idx);
  nu.insert(it, v);
  auto& nv = adj_[v];
  auto jt = std::lower_bound(nv.begin(), nv.end(), u);
  inc_[v].insert(inc_[v].begin() + (jt - nv.begin()), idx);
  nv.insert(jt, u);
  edges_.push_back(Edge{u, v, label});
  return true;
}

bool LabeledGraph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& nu = adj_[u];
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::int64_t LabeledGraph::edge_index(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& nu = adj_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it == nu.end() || *it != v) return -1;
  return inc_[u][static_cast<std::size_t>(it - nu.begin())];
}

const std::vector<Vertex>& LabeledGraph::neighbors(Vertex v) const {
  check_vertex(v);
  return adj_[v];
}

LabeledGraph box_product(const LabeledGraph& g1, const LabeledGraph& g2) {
  const std::size_t n1 = g1.vertex_count(), n2 = g2.vertex_count();
  LabeledGraph out(n1 * n2);
  for (Vertex a = 0; a < n1; ++a) {
    for (Vertex b = 0; b < n2; ++b) {
      out.set_vertex_label(static_cast<Vertex>(a * n2 + b),
                           g1.vertex_label(a) + "|" + g2.vertex_label(b));
    }
  }
  for (const Edge& e : g2.edges()) {
    for (Vertex a = 0; a < n1; ++a) {
      out.add_edge(static_cast<Vertex>(a * n2 + e.u), static_cast<Vertex>(a * n2 + e.v), e.label);
    }
  }
  for (const Edge& e : g1.edges()) {
    for (Vertex b = 0; b < n2; ++b) {
      out.add_edge(static_cast<Vertex>(e.u * n2 + b), static_cast<Vertex>(e.v * n2 + b), e.label);
    }
  }
  return out;
}

LabeledGraph cycle_graph(int k) {
  if (k < 3) throw std::invalid_argument("cycle_graph: need k >= 3");
  LabeledGraph g(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) g.set_vertex_label(static_cast<Vertex>(i), std::to_string(i));
  for (int i = 0; i < k; ++i) {
    g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % k));
  }
  return g;
}

LabeledGraph path_graph(int n_edges) {
  if (n_edges < 0) throw std::invalid_argument("path_graph: negative length");
  LabeledGraph g(static_cast<std::size_t>(n_edges) + 1);
  for (int i = 0; i <= n_edges; ++i) g.set_vertex_label(static_cast<Vertex>(i), std::to_string(i));
  for (int i = 0; i < n_edges; ++i) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return g;
}

LabeledGraph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete_graph: need n >= 1");
  LabeledGraph g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g.set_vertex_label(static_cast<Vertex>(i), std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return g;
}

namespace {

std::vector<std::size_t> sorted_edge_order(const LabeledGraph& g) {
  std::vector<std::size_t> order(g.edge_count());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Edge& ea = g.edge(a);
    const Edge& eb = g.edge(b);
    return std::pair(ea.u, ea.v) < std::pair(eb.u, eb.v);
  });
  return order;
}

std::string label_token(int label) {
  return label == kUnlabeled ? std::string("-") : "s" + std::to_string(label);
}

}  // namespace

void write_edge_list(const LabeledGraph& g, std::ostream& os) {
  os << "# vertices " << g.vertex_count() << "\n";
  os << "# edges " << g.edge_count() << "\n";
  for (std::size_t i : sorted_edge_order(g)) {
    const Edge& e = g.edge(i);
    os << e.u << ' ' << e.v << ' ' << label_token(e.label) << "\n";
  }
}

LabeledGraph read_edge_list(std::istream& is) {
  std::size_t n_vertices = 0;
  bool have_count = false;
  std::vector<std::array<std::int64_t, 3>> edges;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream ls(line.substr(1));
      std::string key;
      if (ls >> key && key == "vertices" && (ls >> n_vertices)) have_count = true;
      continue;
    }
    std::istringstream ls(line);
    std::int64_t u, v;
    std::string tok;
    if (!(ls >> u >> v)) throw std::invalid_argument("read_edge_list: malformed line: " + line);
    int label = kUnlabeled;
    if (ls >> tok && tok != "-") {
      if (tok.size() < 2 || tok[0] != 's')
        throw std::invalid_argument("read_edge_list: bad edge label: " + tok);
      label = std::stoi(tok.substr(1));
    }
    edges.push_back({u, v, label});
  }
  if (!have_count) {
    for (const auto& e : edges) n_vertices = std::max({n_vertices, static_cast<std::size_t>(e[0] + 1),
                                                       static_cast<std::size_t>(e[1] + 1)});
  }
  LabeledGraph g(n_vertices);
  for (std::size_t i = 0; i < n_vertices; ++i)
    g.set_vertex_label(static_cast<Vertex>(i), std::to_string(i));
  for (const auto& e : edges) {
    if (e[0] < 0 || e[1] < 0 || e[0] >= static_cast<std::int64_t>(n_vertices) ||
        e[1] >= static_cast<std::int64_t>(n_vertices)) {
      throw std::invalid_argument("read_edge_list: endpoint out of range");
    }
    g.add_edge(static_cast<Vertex>(e[0]), static_cast<Vertex>(e[1]), static_cast<int>(e[2]));
  }
  return g;
}

void write_dot(const LabeledGraph& g, std::ostream& os) {
  os << "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    os << "  v" << v << " [label=\"" << g.vertex_label(v) << "\"];\n";
  }
  for (std::size_t i : sorted_edge_order(g)) {
    const Edge& e = g.edge(i);
    os << "  v" << e.u << " -- v" << e.v;
    if (e.label != kUnlabeled) os << " [label=\"s" << e.label << "\"]";
    os << ";\n";
  }
  os << "}\n";
}

nlohmann::json graph_to_json(const LabeledGraph& g, const std::vector<int>* levels) {
  nlohmann::json vertices = nlohmann::json::array();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    nlohmann::json entry{{"index", v}, {"label", g.vertex_label(v)}};
    if (levels) entry["level"] = (*levels)[v];
    vertices.push_back(std::move(entry));
  }
  nlohmann::json edges = nlohmann::json::array();
  for (std::size_t i : sorted_edge_order(g)) {
    const Edge& e = g.edge(i);
    edges.push_back({{"u", e.u}, {"v", e.v}, {"label", label_token(e.label)}});
  }
  return nlohmann::json{{"schema_version", 1},
                        {"vertex_count", g.vertex_count()},
                        {"edge_count", g.edge_count()},
                        {"vertices", std::move(vertices)},
                        {"edges", std::move(edges)}};
}

}  // namespace atheory
