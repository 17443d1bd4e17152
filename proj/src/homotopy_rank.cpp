#include "atheory/homotopy_rank.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace atheory {

CycleBasis fundamental_cycle_basis(const LabeledGraph& g) {
  CycleBasis b;
  b.edge_in_tree.assign(g.edge_count(), 0);
  b.coord_of_edge.assign(g.edge_count(), -1);
  std::vector<char> seen(g.vertex_count(), 0);
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (seen[root]) continue;
    ++b.components;
    seen[root] = 1;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex v : g.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = 1;
          b.edge_in_tree[static_cast<std::size_t>(g.edge_index(u, v))] = 1;
          queue.push_back(v);
        }
      }
    }
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!b.edge_in_tree[e]) b.coord_of_edge[e] = static_cast<std::int32_t>(b.dimension++);
  }
  return b;
}

std::vector<ShortCycle> enumerate_short_cycles(const LabeledGraph& g) {
  std::vector<ShortCycle> out;
  // triangles: u < v < w with all three edges present
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    const auto& nb = g.neighbors(u);
    for (std::size_t a = 0; a < nb.size(); ++a) {
      if (nb[a] <= u) continue;
      for (std::size_t c = a + 1; c < nb.size(); ++c) {
        if (g.adjacent(nb[a], nb[c])) out.push_back({{u, nb[a], nb[c]}});
      }
    }
  }
  // 4-cycles: least vertex u, opposite vertex w, remaining diagonal {x, y}
  // taken from the common neighbors of u and w that exceed u
  std::unordered_map<Vertex, std::vector<Vertex>> common;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    common.clear();
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      for (Vertex w : g.neighbors(v)) {
        if (w > u && w != u) common[w].push_back(v);
      }
    }
    std::vector<Vertex> opposites;
    opposites.reserve(common.size());
    for (const auto& [w, xs] : common) {
      if (xs.size() >= 2) opposites.push_back(w);
    }
    std::sort(opposites.begin(), opposites.end());
    for (Vertex w : opposites) {
      auto xs = common[w];
      std::sort(xs.begin(), xs.end());
      for (std::size_t a = 0; a < xs.size(); ++a) {
        for (std::size_t c = a + 1; c < xs.size(); ++c) {
          out.push_back({{u, xs[a], w, xs[c]}});
        }
      }
    }
  }
  return out;
}

std::vector<std::int64_t> cycle_coordinates(std::span<const Vertex> closed_walk,
                                            const LabeledGraph& g, const CycleBasis& basis) {
  if (closed_walk.size() < 2 || closed_walk.front() != closed_walk.back()) {
    throw std::invalid_argument("cycle_coordinates: walk is not closed");
  }
  std::vector<std::int64_t> coords(basis.dimension, 0);
  for (std::size_t t = 0; t + 1 < closed_walk.size(); ++t) {
    const Vertex u = closed_walk[t], v = closed_walk[t + 1];
    const std::int64_t e = g.edge_index(u, v);
    if (e < 0) throw std::invalid_argument("cycle_coordinates: walk uses a non-edge");
    const std::int32_t c = basis.coord_of_edge[static_cast<std::size_t>(e)];
    if (c >= 0) coords[static_cast<std::size_t>(c)] += (u < v) ? 1 : -1;
  }
  return coords;
}

SparseIntMatrix relation_matrix(const LabeledGraph& g, const CycleBasis& basis,
                                const std::vector<ShortCycle>& cycles) {
  SparseIntMatrix m;
  m.ncols = basis.dimension;
  m.rows.reserve(cycles.size());
  for (const ShortCycle& c : cycles) {
    std::vector<Vertex> walk(c.vertices.begin(), c.vertices.end());
    walk.push_back(c.vertices.front());
    const auto coords = cycle_coordinates(walk, g, basis);
    std::vector<std::pair<std::uint32_t, std::int64_t>> row;
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (coords[i] != 0) row.emplace_back(static_cast<std::uint32_t>(i), coords[i]);
    }
    m.rows.push_back(std::move(row));
  }
  return m;
}

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1;
  base %= mod;
  while (exp) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

// Incremental echelon over Z/p.  Pivot rows are stored normalized (leading
// coefficient 1) and only from their pivot column onward.
class ModPivotTable {
 public:
  ModPivotTable(std::size_t ncols, std::uint64_t p)
      : ncols_(ncols), p_(p), pivot_row_of_col_(ncols, -1) {}

  std::size_t rank() const { return tails_.size(); }

  // Reduces the row in place; returns true when it contributed a new pivot.
  bool insert(const std::vector<std::pair<std::uint32_t, std::int64_t>>& sparse) {
    std::vector<std::uint64_t> dense(ncols_, 0);
    for (auto [c, val] : sparse) {
      const std::int64_t r = val % static_cast<std::int64_t>(p_);
      dense[c] = static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p_) : r);
    }
    for (std::size_t c = 0; c < ncols_; ++c) {
      if (dense[c] == 0) continue;
      const auto pr = pivot_row_of_col_[c];
      if (pr < 0) {
        // normalize and keep the tail
        const std::uint64_t inv = pow_mod(dense[c], p_ - 2, p_);
        std::vector<std::uint32_t> tail(ncols_ - c);
        for (std::size_t j = c; j < ncols_; ++j) {
          tail[j - c] = static_cast<std::uint32_t>(dense[j] * inv % p_);
        }
        pivot_row_of_col_[c] = static_cast<std::int64_t>(tails_.size());
        tails_.push_back(std::move(tail));
        return true;
      }
      const std::uint64_t factor = dense[c];
      const auto& tail = tails_[static_cast<std::size_t>(pr)];
      for (std::size_t j = c; j < ncols_; ++j) {
        const std::uint64_t sub = factor * tail[j - c] % p_;
        dense[j] = (dense[j] + p_ - sub) % p_;
      }
    }
    return false;
  }

 private:
  std::size_t ncols_;
  std::uint64_t p_;
  std::vector<std::int64_t> pivot_row_of_col_;
  std::vector<std::vector<std::uint32_t>> tails_;
};

}  // namespace

std::size_t rank_mod_prime(const SparseIntMatrix& m, std::uint64_t p) {
  if (p < 2) throw std::invalid_argument("rank_mod_prime: p must be a prime");
  const std::size_t full = std::min(m.ncols, m.rows.size());
  ModPivotTable table(m.ncols, p);
  for (const auto& row : m.rows) {
    table.insert(row);
    if (table.rank() == full) break;
  }
  return table.rank();
}

std::size_t rank_exact(const SparseIntMatrix& m) {
  const std::size_t nrows = m.rows.size(), ncols = m.ncols;
  std::vector<std::vector<BigInt>> a(nrows, std::vector<BigInt>(ncols, 0));
  for (std::size_t i = 0; i < nrows; ++i) {
    for (auto [c, val] : m.rows[i]) a[i][c] = val;
  }
  // Bareiss fraction-free elimination; every division is exact.
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t piv = r;
    while (piv < nrows && a[piv][c] == 0) ++piv;
    if (piv == nrows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < nrows; ++i) {
      for (std::size_t j = c + 1; j < ncols; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

std::vector<BigInt> smith_invariant_factors(const SparseIntMatrix& m) {
  const std::size_t nrows = m.rows.size(), ncols = m.ncols;
  if (nrows == 0 || ncols == 0) return {};
  std::vector<std::vector<BigInt>> a(nrows, std::vector<BigInt>(ncols, 0));
  for (std::size_t i = 0; i < nrows; ++i) {
    for (auto [c, val] : m.rows[i]) a[i][c] = val;
  }

  auto abs_big = [](const BigInt& x) { return x < 0 ? BigInt(-x) : x; };
  std::vector<BigInt> diag;
  std::size_t t = 0;
  while (t < nrows && t < ncols) {
    // choose the smallest-magnitude nonzero entry in the trailing block
    std::size_t bi = nrows, bj = ncols;
    for (std::size_t i = t; i < nrows; ++i) {
      for (std::size_t j = t; j < ncols; ++j) {
        if (a[i][j] != 0 && (bi == nrows || abs_big(a[i][j]) < abs_big(a[bi][bj]))) {
          bi = i;
          bj = j;
        }
      }
    }
    if (bi == nrows) break;  // trailing block all zero
    std::swap(a[t], a[bi]);
    for (std::size_t i = t; i < nrows; ++i) std::swap(a[i][t], a[i][bj]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < nrows; ++i) {
        if (a[i][t] == 0) continue;
        const BigInt q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < ncols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {  // remainder smaller than pivot: promote it
          std::swap(a[t], a[i]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < ncols; ++j) {
        if (a[t][j] == 0) continue;
        const BigInt q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < nrows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (std::size_t i = t; i < nrows; ++i) std::swap(a[i][t], a[i][j]);
          clean = false;
        }
      }
      if (clean) {
        // the pivot must divide the whole trailing block
        for (std::size_t i = t + 1; i < nrows && clean; ++i) {
          for (std::size_t j = t + 1; j < ncols && clean; ++j) {
            if (a[i][j] % a[t][t] != 0) {
              for (std::size_t jj = t; jj < ncols; ++jj) a[t][jj] += a[i][jj];
              clean = false;
            }
          }
        }
      }
    }
    diag.push_back(abs_big(a[t][t]));
    ++t;
  }
  return diag;
}

namespace {

std::size_t certified_relation_rank(const SparseIntMatrix& m, const RankOptions& opts) {
  if (m.ncols == 0 || m.rows.empty()) return 0;
  const std::size_t full = std::min(m.ncols, m.rows.size());
  const std::size_t r1 = rank_mod_prime(m, opts.prime1);
  if (r1 == full) return r1;  // modular rank never exceeds the exact rank
  const std::size_t r2 = rank_mod_prime(m, opts.prime2);
  if (r1 == r2) return r1;
  return rank_exact(m);
}

}  // namespace

RankReport a1_rank_report(const LabeledGraph& g, const RankOptions& opts) {
  RankReport rep;
  rep.vertices = g.vertex_count();
  rep.edges = g.edge_count();
  const CycleBasis basis = fundamental_cycle_basis(g);
  rep.components = basis.components;
  rep.cycle_dim = basis.dimension;
  const auto cycles = enumerate_short_cycles(g);
  rep.n_short_cycles = cycles.size();
  const SparseIntMatrix m = relation_matrix(g, basis, cycles);
  rep.relation_rank = certified_relation_rank(m, opts);
  rep.a1_rank = rep.cycle_dim - rep.relation_rank;
  return rep;
}

std::size_t a1_rank(const LabeledGraph& g, const RankOptions& opts) {
  return a1_rank_report(g, opts).a1_rank;
}

std::vector<BigInt> torsion_check(const LabeledGraph& g, std::size_t dimension_guard) {
  const CycleBasis basis = fundamental_cycle_basis(g);
  if (basis.dimension > dimension_guard) {
    throw std::runtime_error("torsion_check: basis dimension " + std::to_string(basis.dimension) +
                             " exceeds the dense Smith normal form guard " +
                             std::to_string(dimension_guard));
  }
  const auto cycles = enumerate_short_cycles(g);
  return smith_invariant_factors(relation_matrix(g, basis, cycles));
}

nlohmann::json RankReport::to_json() const {
  nlohmann::json j{{"schema_version", 1},
                   {"vertices", vertices},
                   {"edges", edges},
                   {"cycle_dim", cycle_dim},
                   {"n_short_cycles", n_short_cycles},
                   {"relation_rank", relation_rank},
                   {"a1_rank", a1_rank}};
  if (invariant_factors) {
    nlohmann::json fs = nlohmann::json::array();
    for (const BigInt& f : *invariant_factors) fs.push_back(f.str());
    j["invariant_factors"] = std::move(fs);
  }
  return j;
}

HomologyReducer::HomologyReducer(const LabeledGraph& g)
    : g_(&g), basis_(fundamental_cycle_basis(g)) {
  const auto cycles = enumerate_short_cycles(g);
  const SparseIntMatrix m = relation_matrix(g, basis_, cycles);
  // row-reduced echelon form over the rationals
  for (const auto& sparse : m.rows) {
    std::vector<BigRational> row(basis_.dimension, 0);
    for (auto [c, val] : sparse) row[c] = val;
    for (const auto& [pc, prow] : echelon_) {
      if (row[pc] != 0) {
        const BigRational f = row[pc];
        for (std::size_t j = 0; j < row.size(); ++j) row[j] -= f * prow[j];
      }
    }
    std::size_t lead = row.size();
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] != 0) {
        lead = j;
        break;
      }
    }
    if (lead == row.size()) continue;
    const BigRational inv = row[lead];
    for (auto& x : row) x /= inv;
    for (auto& [pc, prow] : echelon_) {
      if (prow[lead] != 0) {
        const BigRational f = prow[lead];
        for (std::size_t j = 0; j < prow.size(); ++j) prow[j] -= f * row[j];
      }
    }
    echelon_.emplace_back(lead, std::move(row));
  }
}

std::vector<BigRational> HomologyReducer::reduce(const std::vector<std::int64_t>& coords) const {
  if (coords.size() != basis_.dimension) {
    throw std::invalid_argument("HomologyReducer::reduce: coordinate size mismatch");
  }
  std::vector<BigRational> v(coords.begin(), coords.end());
  for (const auto& [pc, prow] : echelon_) {
    if (v[pc] != 0) {
      const BigRational f = v[pc];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * prow[j];
    }
  }
  return v;
}

std::vector<BigRational> HomologyReducer::h1_class(std::span<const Vertex> closed_walk) const {
  return reduce(cycle_coordinates(closed_walk, *g_, basis_));
}

}  // namespace atheory
