#include "atheory/six_cycles.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "atheory/gamma.hpp"
#include "atheory/poset.hpp"

namespace atheory {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<std::int32_t>(i);
  }
  std::int32_t find(std::int32_t x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] =
          parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[static_cast<std::size_t>(a)] = b;
  }

 private:
  std::vector<std::int32_t> parent_;
};

bool window_sorted(const Permutation& p, int i) {
  return p.value_at(i) < p.value_at(i + 1) && p.value_at(i + 1) < p.value_at(i + 2);
}

// Generator word taking the identity to p (bubble sort read backwards).
GenWord word_for_permutation(const Permutation& p) {
  const int n = p.size();
  Permutation cur = p;
  std::vector<int> sorting;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int j = 1; j <= n - 1; ++j) {
      if (cur.value_at(j) > cur.value_at(j + 1)) {
        cur = cur.apply_generator(j);
        sorting.push_back(j);
        moved = true;
      }
    }
  }
  std::reverse(sorting.begin(), sorting.end());
  return GenWord(std::move(sorting), n);
}

}  // namespace

Permutation canonical_coset_rep(const Permutation& p, int i) {
  if (i < 1 || i > p.size() - 2) throw std::invalid_argument("canonical_coset_rep: i out of [1, n-2]");
  std::vector<int> e = p.entries();
  std::sort(e.begin() + (i - 1), e.begin() + (i + 2));
  return Permutation(std::move(e));
}

std::vector<SixCycle> enumerate_six_cycles(int n, bool force_large) {
  if (n < 3) throw std::invalid_argument("enumerate_six_cycles: need n >= 3");
  if (n > kDefaultSizeCap && !force_large) {
    throw std::runtime_error("enumerate_six_cycles: n = " + std::to_string(n) +
                             " exceeds the size cap; pass force_large to override");
  }
  std::vector<SixCycle> out;
  const std::uint64_t nf = factorial(n);
  out.reserve(static_cast<std::size_t>(nf / 6 * static_cast<std::uint64_t>(n - 2)));
  for (int i = 1; i <= n - 2; ++i) {
    for (std::uint64_t r = 0; r < nf; ++r) {
      Permutation p = Permutation::from_lex_rank(n, r);
      if (window_sorted(p, i)) out.push_back(SixCycle{std::move(p), i});
    }
  }
  return out;
}

std::array<Permutation, 6> six_cycle_vertices(const SixCycle& c) {
  std::array<Permutation, 6> vs;
  vs[0] = c.rep;
  for (int t = 1; t < 6; ++t) {
    vs[static_cast<std::size_t>(t)] =
        vs[static_cast<std::size_t>(t - 1)].apply_generator(t % 2 == 1 ? c.i : c.i + 1);
  }
  return vs;
}

GenWord six_cycle_word(int i, int n) {
  return GenWord({i, i + 1, i, i + 1, i, i + 1}, n);
}

Orientation orientation(const SixCycle& c) {
  const int level = c.rep.level();
  if (level >= c.i && level <= c.i + 2) return Orientation{Orientation::kVertical, c.i + 1};
  return Orientation{Orientation::kHorizontal, level};
}

std::vector<int> disjoint_generators(int i, int n) {
  std::vector<int> out;
  for (int j = 1; j <= n - 1; ++j) {
    if (j <= i - 2 || j >= i + 3) out.push_back(j);
  }
  return out;
}

SixCycleClasses equivalence_classes(int n, bool force_large) {
  SixCycleClasses out;
  out.cycles = enumerate_six_cycles(n, force_large);
  out.class_of.assign(out.cycles.size(), -1);
  out.report.n = n;
  out.report.rank_formula_value = rank_formula(n);

  // index cycles of each i by the lex rank of their representative
  std::size_t offset = 0;
  for (int i = 1; i <= n - 2; ++i) {
    std::size_t count = 0;
    std::unordered_map<std::uint64_t, std::int32_t> local;
    while (offset + count < out.cycles.size() && out.cycles[offset + count].i == i) {
      local.emplace(out.cycles[offset + count].rep.lex_rank(), static_cast<std::int32_t>(count));
      ++count;
    }
    UnionFind uf(count);
    const auto moves = disjoint_generators(i, n);
    for (std::size_t k = 0; k < count; ++k) {
      const SixCycle& c = out.cycles[offset + k];
      for (int j : moves) {
        // s_j acts outside the window, so the image is already canonical
        const Permutation q = c.rep.apply_generator(j);
        uf.unite(static_cast<std::int32_t>(k), local.at(q.lex_rank()));
      }
    }

    std::unordered_map<std::int32_t, std::int32_t> class_id;  // local root -> global id
    std::vector<std::vector<std::int32_t>> local_members;
    for (std::size_t k = 0; k < count; ++k) {
      const std::int32_t root = uf.find(static_cast<std::int32_t>(k));
      auto [it, fresh] = class_id.emplace(root, static_cast<std::int32_t>(out.members.size()));
      if (fresh) {
        out.members.emplace_back();
      }
      out.class_of[offset + k] = it->second;
      out.members[static_cast<std::size_t>(it->second)].push_back(
          static_cast<std::int32_t>(offset + k));
    }

    // report rows for this generator index
    GeneratorClassRows rows;
    rows.i = i;
    std::unordered_map<int, HorizontalRow> hrows;  // by level
    VerticalRow vrow;
    vrow.middle_level = i + 1;
    std::int64_t vclass_size_min = -1, vclass_size_max = -1;
    for (const auto& [root, gid] : class_id) {
      const auto& mem = out.members[static_cast<std::size_t>(gid)];
      const Orientation o = orientation(out.cycles[static_cast<std::size_t>(mem.front())]);
      if (o.kind == Orientation::kVertical) {
        vrow.classes += 1;
        const auto sz = static_cast<std::int64_t>(mem.size());
        vclass_size_min = vclass_size_min < 0 ? sz : std::min(vclass_size_min, sz);
        vclass_size_max = std::max(vclass_size_max, sz);
      } else {
        // attribute the class to the level of its lexicographically least member
        const SixCycle* canon = &out.cycles[static_cast<std::size_t>(mem.front())];
        for (std::int32_t idx : mem) {
          if (out.cycles[static_cast<std::size_t>(idx)].rep < canon->rep) {
            canon = &out.cycles[static_cast<std::size_t>(idx)];
          }
        }
        hrows[canon->rep.level()].classes += 1;
      }
    }
    for (std::size_t k = 0; k < count; ++k) {
      const Orientation o = orientation(out.cycles[offset + k]);
      if (o.kind == Orientation::kVertical) {
        vrow.cycles += 1;
      } else {
        auto& row = hrows[o.level];
        row.level = o.level;
        row.cycles += 1;
      }
    }
    if (vrow.cycles > 0) {
      if (vclass_size_min != vclass_size_max) {
        throw std::logic_error("equivalence_classes: vertical class sizes are not uniform");
      }
      vrow.class_size = vclass_size_max;
      rows.vertical.push_back(vrow);
      out.report.vertical_total += vrow.classes;
    }
    std::vector<int> levels;
    levels.reserve(hrows.size());
    for (const auto& [lv, row] : hrows) levels.push_back(lv);
    std::sort(levels.begin(), levels.end());
    for (int lv : levels) {
      HorizontalRow row = hrows[lv];
      row.level = lv;
      rows.horizontal.push_back(row);
      out.report.horizontal_total += row.classes;
    }
    out.report.per_i.push_back(std::move(rows));
    offset += count;
  }
  out.report.total_classes = static_cast<std::int64_t>(out.members.size());
  return out;
}

std::int64_t rank_formula(int n) {
  if (n < 3) throw std::invalid_argument("rank_formula: need n >= 3");
  if (n > 40) throw std::invalid_argument("rank_formula: n too large for 64-bit evaluation");
  const std::int64_t closed =
      (std::int64_t{1} << (n - 3)) * (static_cast<std::int64_t>(n) * n - 5LL * n + 8) - 1;
  std::int64_t sum = 0;
  for (int k = 3; k <= n; ++k) {
    const std::int64_t choose2 = static_cast<std::int64_t>(k - 1) * (k - 2) / 2;
    sum += (std::int64_t{1} << (k - 3)) * choose2;
  }
  if (closed != sum) {
    throw std::logic_error("rank_formula: closed form and partial sum disagree");
  }
  return closed;
}

bool recursion_check(int n) {
  if (n < 4) throw std::invalid_argument("recursion_check: need n >= 4");
  const auto classes = equivalence_classes(n);
  return rank_formula(n) == rank_formula(n - 1) + classes.report.vertical_total;
}

std::pair<BasedWord, BasedWord> homotopy_certificate(const SixCycle& c1, const SixCycle& c2,
                                                     const std::vector<int>& moves) {
  const int n = c1.rep.size();
  if (c2.rep.size() != n) throw std::invalid_argument("homotopy_certificate: size mismatch");
  if (c1.i != c2.i) {
    throw std::invalid_argument(
        "homotopy_certificate: cycles use different transposition pairs; no certificate exists");
  }
  Permutation carried = c1.rep;
  for (int j : moves) {
    if (!(j <= c1.i - 2 || j >= c1.i + 3) || j < 1 || j > n - 1) {
      throw std::invalid_argument("homotopy_certificate: move not disjoint from the cycle pair");
    }
    carried = carried.apply_generator(j);
  }
  if (canonical_coset_rep(carried, c1.i) != c2.rep) {
    throw std::invalid_argument("homotopy_certificate: moves do not carry the first coset onto the second");
  }
  const GenWord w = word_for_permutation(c1.rep);
  const GenWord m(std::vector<int>(moves.begin(), moves.end()), n);
  const GenWord cycle = six_cycle_word(c1.i, n);
  const GenWord w1 = w.concat(cycle).concat(w.reversed());
  const GenWord w2 = w.concat(m).concat(cycle).concat(m.reversed()).concat(w.reversed());
  return {BasedWord{Permutation::identity(n), w1}, BasedWord{Permutation::identity(n), w2}};
}

std::optional<std::vector<int>> connecting_moves(const SixCycle& c1, const SixCycle& c2) {
  if (c1.i != c2.i || c1.rep.size() != c2.rep.size()) return std::nullopt;
  const int n = c1.rep.size();
  const auto gens = disjoint_generators(c1.i, n);
  if (c1.rep == c2.rep) return std::vector<int>{};

  std::unordered_map<std::uint64_t, std::pair<std::uint64_t, int>> parent;  // rank -> (prev, move)
  std::deque<Permutation> queue{c1.rep};
  parent.emplace(c1.rep.lex_rank(), std::pair{c1.rep.lex_rank(), 0});
  while (!queue.empty()) {
    const Permutation cur = std::move(queue.front());
    queue.pop_front();
    for (int j : gens) {
      Permutation nxt = cur.apply_generator(j);
      const std::uint64_t key = nxt.lex_rank();
      if (parent.contains(key)) continue;
      parent.emplace(key, std::pair{cur.lex_rank(), j});
      if (nxt == c2.rep) {
        std::vector<int> path;
        std::uint64_t at = key;
        while (at != c1.rep.lex_rank()) {
          const auto& [prev, move] = parent.at(at);
          path.push_back(move);
          at = prev;
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(std::move(nxt));
    }
  }
  return std::nullopt;
}

nlohmann::json ClassReport::to_json() const {
  nlohmann::json per = nlohmann::json::array();
  for (const auto& rows : per_i) {
    nlohmann::json hor = nlohmann::json::array();
    for (const auto& h : rows.horizontal) {
      hor.push_back({{"level", h.level}, {"cycles", h.cycles}, {"classes", h.classes}});
    }
    nlohmann::json ver = nlohmann::json::array();
    for (const auto& v : rows.vertical) {
      ver.push_back({{"middle_level", v.middle_level},
                     {"cycles", v.cycles},
                     {"classes", v.classes},
                     {"class_size", v.class_size}});
    }
    per.push_back({{"i", rows.i}, {"horizontal", std::move(hor)}, {"vertical", std::move(ver)}});
  }
  nlohmann::json j{{"schema_version", 1},
                   {"n", n},
                   {"per_i", std::move(per)},
                   {"total_classes", total_classes},
                   {"vertical_total", vertical_total},
                   {"horizontal_total", horizontal_total},
                   {"rank_formula", rank_formula_value}};
  if (rank_linear_algebra) {
    j["rank_linear_algebra"] = *rank_linear_algebra;
  } else {
    j["rank_linear_algebra"] = nullptr;
  }
  return j;
}

}  // namespace atheory
