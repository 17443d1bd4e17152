#include "atheory/poset.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace atheory {

GradedPoset::GradedPoset(std::size_t n_elements, std::vector<std::pair<int, int>> covers)
    : covers_(std::move(covers)),
      upper_(n_elements),
      lower_(n_elements),
      rank_(n_elements, -1) {
  for (auto [lo, hi] : covers_) {
    if (lo < 0 || hi < 0 || static_cast<std::size_t>(lo) >= n_elements ||
        static_cast<std::size_t>(hi) >= n_elements || lo == hi) {
      throw std::invalid_argument("GradedPoset: bad cover pair");
    }
    upper_[static_cast<std::size_t>(lo)].push_back(hi);
    lower_[static_cast<std::size_t>(hi)].push_back(lo);
  }
  for (auto& v : upper_) std::sort(v.begin(), v.end());
  for (auto& v : lower_) std::sort(v.begin(), v.end());

  // Longest-path ranks, then validate that covers raise rank by exactly 1.
  // Kahn order over the cover DAG.
  std::vector<int> indeg(n_elements, 0);
  for (auto [lo, hi] : covers_) ++indeg[static_cast<std::size_t>(hi)];
  std::vector<int> queue;
  for (std::size_t e = 0; e < n_elements; ++e) {
    if (indeg[e] == 0) {
      queue.push_back(static_cast<int>(e));
      rank_[e] = 0;
    }
  }
  std::size_t head = 0;
  while (head < queue.size()) {
    const int u = queue[head++];
    for (int w : upper_[static_cast<std::size_t>(u)]) {
      auto& rw = rank_[static_cast<std::size_t>(w)];
      rw = std::max(rw, rank_[static_cast<std::size_t>(u)] + 1);
      if (--indeg[static_cast<std::size_t>(w)] == 0) queue.push_back(w);
    }
  }
  if (queue.size() != n_elements) throw std::invalid_argument("GradedPoset: covers contain a cycle");
  for (auto [lo, hi] : covers_) {
    if (rank_[static_cast<std::size_t>(hi)] != rank_[static_cast<std::size_t>(lo)] + 1) {
      throw std::invalid_argument("GradedPoset: cover does not raise rank by exactly 1");
    }
  }
  for (std::size_t e = 0; e < n_elements; ++e) top_rank_ = std::max(top_rank_, rank_[e]);
}

bool GradedPoset::is_bounded() const {
  int minima = 0, maxima = 0;
  for (std::size_t e = 0; e < size(); ++e) {
    if (lower_[e].empty()) ++minima;
    if (upper_[e].empty()) ++maxima;
  }
  return minima == 1 && maxima == 1;
}

int GradedPoset::bottom() const {
  for (std::size_t e = 0; e < size(); ++e) {
    if (lower_[e].empty()) {
      for (std::size_t f = e + 1; f < size(); ++f) {
        if (lower_[f].empty()) throw std::runtime_error("GradedPoset: not bounded (two minima)");
      }
      return static_cast<int>(e);
    }
  }
  throw std::runtime_error("GradedPoset: empty poset");
}

int GradedPoset::top() const {
  for (std::size_t e = 0; e < size(); ++e) {
    if (upper_[e].empty()) {
      for (std::size_t f = e + 1; f < size(); ++f) {
        if (upper_[f].empty()) throw std::runtime_error("GradedPoset: not bounded (two maxima)");
      }
      return static_cast<int>(e);
    }
  }
  throw std::runtime_error("GradedPoset: empty poset");
}

GradedPoset boolean_lattice(int n, bool force_large) {
  if (n < 1) throw std::invalid_argument("boolean_lattice: need n >= 1");
  if (n > kDefaultSizeCap && !force_large) {
    throw std::runtime_error("boolean_lattice: n = " + std::to_string(n) + " exceeds the size cap " +
                             std::to_string(kDefaultSizeCap) + "; pass force_large to override");
  }
  const std::size_t m = std::size_t{1} << n;
  std::vector<std::pair<int, int>> covers;
  covers.reserve(m * static_cast<std::size_t>(n) / 2);
  for (std::size_t s = 0; s < m; ++s) {
    for (int b = 0; b < n; ++b) {
      if (!(s & (std::size_t{1} << b))) {
        covers.emplace_back(static_cast<int>(s), static_cast<int>(s | (std::size_t{1} << b)));
      }
    }
  }
  return GradedPoset(m, std::move(covers));
}

std::string MaximalChain::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i) os << ',';
    os << elements[i];
  }
  return os.str();
}

std::vector<MaximalChain> maximal_chains(const GradedPoset& p, bool proper) {
  if (!p.is_bounded()) throw std::runtime_error("maximal_chains: poset is not bounded");
  const int expected_len = p.top_rank() + 1;
  std::vector<MaximalChain> out;

  // Iterative DFS; upper covers are sorted, so chains come out in
  // lexicographic order of their element sequences.
  struct Frame {
    int element;
    std::size_t next_cover;
  };
  std::vector<Frame> frames{{p.bottom(), 0}};
  while (!frames.empty()) {
    Frame& f = frames.back();
    const auto& ups = p.upper_covers(f.element);
    if (ups.empty()) {
      if (static_cast<int>(frames.size()) != expected_len) {
        throw std::runtime_error("maximal_chains: poset is not graded (chain length mismatch)");
      }
      MaximalChain c;
      for (const Frame& fr : frames) c.elements.push_back(fr.element);
      if (proper) {
        c.elements.erase(c.elements.begin());
        c.elements.pop_back();
      }
      out.push_back(std::move(c));
      frames.pop_back();
      continue;
    }
    if (f.next_cover < ups.size()) {
      const int nxt = ups[f.next_cover++];
      frames.push_back({nxt, 0});
    } else {
      frames.pop_back();
    }
  }
  return out;
}

}  // namespace atheory
