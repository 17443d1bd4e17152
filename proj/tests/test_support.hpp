#ifndef ATHEORY_TEST_SUPPORT_HPP
#define ATHEORY_TEST_SUPPORT_HPP

// Brute-force oracles kept independent of the library code paths they check.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "atheory/graph.hpp"
#include "atheory/poset.hpp"
#include "atheory/word.hpp"

namespace testsupport {

// Rotate the least vertex to the front, then orient toward its smaller
// neighbor; shared canonical form for comparing cycle enumerations.
inline std::vector<atheory::Vertex> canonical_cycle(std::vector<atheory::Vertex> c) {
  const std::size_t k = c.size();
  const auto least = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), least, c.end());
  if (c[k - 1] < c[1]) {
    std::reverse(c.begin() + 1, c.end());
  }
  return c;
}

// All 3- or 4-cycles by exhaustive vertex-subset enumeration.
inline std::vector<std::vector<atheory::Vertex>> brute_force_cycles(const atheory::LabeledGraph& g,
                                                                    int k) {
  using atheory::Vertex;
  std::vector<std::vector<Vertex>> out;
  const auto nv = static_cast<Vertex>(g.vertex_count());
  if (k == 3) {
    for (Vertex a = 0; a < nv; ++a)
      for (Vertex b = a + 1; b < nv; ++b)
        for (Vertex c = b + 1; c < nv; ++c)
          if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)) {
            out.push_back(canonical_cycle({a, b, c}));
          }
    return out;
  }
  if (k != 4) throw std::invalid_argument("brute_force_cycles: k must be 3 or 4");
  for (Vertex a = 0; a < nv; ++a) {
    for (Vertex b = a + 1; b < nv; ++b) {
      for (Vertex c = b + 1; c < nv; ++c) {
        for (Vertex d = c + 1; d < nv; ++d) {
          const std::vector<std::array<Vertex, 4>> orders = {
              {a, b, c, d}, {a, b, d, c}, {a, c, b, d}};
          for (const auto& o : orders) {
            if (g.adjacent(o[0], o[1]) && g.adjacent(o[1], o[2]) && g.adjacent(o[2], o[3]) &&
                g.adjacent(o[3], o[0])) {
              out.push_back(canonical_cycle({o[0], o[1], o[2], o[3]}));
            }
          }
        }
      }
    }
  }
  return out;
}

inline std::vector<std::string> cycle_keys(std::vector<std::vector<atheory::Vertex>> cycles) {
  std::vector<std::string> keys;
  keys.reserve(cycles.size());
  for (auto& c : cycles) {
    std::string k;
    for (auto v : canonical_cycle(std::move(c))) k += std::to_string(v) + ",";
    keys.push_back(std::move(k));
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

// Direct product poset, materialized only here: the construction under test
// exists to avoid building this.
inline atheory::GradedPoset product_poset(const atheory::GradedPoset& a,
                                          const atheory::GradedPoset& b) {
  const std::size_t nb = b.size();
  std::vector<std::pair<int, int>> covers;
  for (const auto& [lo, hi] : a.covers()) {
    for (std::size_t j = 0; j < nb; ++j) {
      covers.emplace_back(lo * static_cast<int>(nb) + static_cast<int>(j),
                          hi * static_cast<int>(nb) + static_cast<int>(j));
    }
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (const auto& [lo, hi] : b.covers()) {
      covers.emplace_back(static_cast<int>(i * nb) + lo, static_cast<int>(i * nb) + hi);
    }
  }
  return atheory::GradedPoset(a.size() * nb, std::move(covers));
}

inline atheory::LabeledGraph petersen_graph() {
  atheory::LabeledGraph g(10);
  for (atheory::Vertex v = 0; v < 10; ++v) g.set_vertex_label(v, std::to_string(v));
  const std::pair<int, int> edges[] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                       {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                       {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}};
  for (auto [u, v] : edges) {
    g.add_edge(static_cast<atheory::Vertex>(u), static_cast<atheory::Vertex>(v));
  }
  return g;
}

// Connected components of the move graph on all words of length <= max_len:
// the exhaustive, all-pairs form of the bounded search oracle.
class WordUniverse {
 public:
  WordUniverse(int alphabet, int max_len) : alphabet_(alphabet), max_len_(max_len) {
    std::vector<int> cur;
    enumerate(cur);
    parent_.resize(words_.size());
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    for (std::size_t i = 0; i < words_.size(); ++i) {
      for (const auto& nb : atheory::word_move_neighbors(words_[i], alphabet_, max_len_)) {
        unite(i, index_.at(encode(nb)));
      }
    }
  }

  std::size_t size() const { return words_.size(); }
  const std::vector<int>& word(std::size_t i) const { return words_[i]; }

  std::size_t component_of(const std::vector<int>& w) { return find(index_.at(encode(w))); }

  bool same_component(const std::vector<int>& a, const std::vector<int>& b) {
    return component_of(a) == component_of(b);
  }

  // least word length present in the component of w
  int min_length_in_component(const std::vector<int>& w) {
    const std::size_t root = component_of(w);
    int best = max_len_ + 1;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (find(i) == root) best = std::min(best, static_cast<int>(words_[i].size()));
    }
    return best;
  }

 private:
  static std::string encode(const std::vector<int>& w) {
    std::string s;
    s.reserve(w.size());
    for (int l : w) s.push_back(static_cast<char>(l));
    return s;
  }
  void enumerate(std::vector<int>& cur) {
    index_.emplace(encode(cur), words_.size());
    words_.push_back(cur);
    if (static_cast<int>(cur.size()) == max_len_) return;
    for (int l = 1; l <= alphabet_ - 1; ++l) {
      cur.push_back(l);
      enumerate(cur);
      cur.pop_back();
    }
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[a] = b;
  }

  int alphabet_;
  int max_len_;
  std::vector<std::vector<int>> words_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::size_t> parent_;
};

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace testsupport

#endif
