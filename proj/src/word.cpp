#include "atheory/word.hpp"

#include <cstdlib>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace atheory {

namespace {

bool commutes(int a, int b) { return std::abs(a - b) >= 2; }

std::string encode(const std::vector<int>& letters) {
  std::string s;
  s.reserve(letters.size());
  for (int l : letters) s.push_back(static_cast<char>(l));
  return s;
}

}  // namespace

GenWord::GenWord(std::vector<int> ls, int n) : letters(std::move(ls)), alphabet(n) {
  if (alphabet < 1) throw std::invalid_argument("GenWord: alphabet must be >= 1");
  for (int l : letters) {
    if (l < 1 || l > alphabet - 1) throw std::invalid_argument("GenWord: letter out of 1..n-1");
  }
}

GenWord GenWord::reversed() const {
  std::vector<int> r(letters.rbegin(), letters.rend());
  return GenWord(std::move(r), alphabet);
}

GenWord GenWord::concat(const GenWord& other) const {
  if (alphabet != other.alphabet) throw std::invalid_argument("GenWord::concat: alphabet mismatch");
  std::vector<int> ls = letters;
  ls.insert(ls.end(), other.letters.begin(), other.letters.end());
  return GenWord(std::move(ls), alphabet);
}

std::string GenWord::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) os << ' ';
    os << letters[i];
  }
  return os.str();
}

GenWord GenWord::parse(const std::string& text, int alphabet) {
  std::istringstream is(text);
  std::vector<int> ls;
  int x;
  while (is >> x) ls.push_back(x);
  return GenWord(std::move(ls), alphabet);
}

bool BasedWord::is_loop() const { return evaluate_from(base, word) == base; }

Permutation evaluate_word(const GenWord& w) {
  return evaluate_from(Permutation::identity(w.alphabet), w);
}

Permutation evaluate_from(const Permutation& base, const GenWord& w) {
  if (base.size() != w.alphabet) throw std::invalid_argument("evaluate_from: base size != alphabet");
  Permutation p = base;
  for (int l : w.letters) p = p.apply_generator(l);
  return p;
}

std::vector<int> letter_parity(const GenWord& w) {
  std::vector<int> par(static_cast<std::size_t>(w.alphabet), 0);
  for (int l : w.letters) par[static_cast<std::size_t>(l)] ^= 1;
  return par;
}

GenWord racg_normal_form(const GenWord& w) {
  std::vector<int> v = w.letters;

  // Phase 1: cancel equal pairs whose in-between letters all commute with
  // them.  A word with no such pair is geodesic in this group.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < v.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < v.size(); ++j) {
        if (v[j] == v[i]) {
          v.erase(v.begin() + static_cast<std::ptrdiff_t>(j));
          v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
          break;
        }
        if (!commutes(v[j], v[i])) break;  // blocked; i cannot pair past here
      }
    }
  }

  // Phase 2: lexicographically least representative of the commutation
  // class.  A letter is frontable when everything before it commutes with
  // it; two equal letters are never both frontable, so the choice is unique.
  std::vector<int> out;
  out.reserve(v.size());
  while (!v.empty()) {
    std::size_t pick = v.size();
    for (std::size_t p = 0; p < v.size(); ++p) {
      bool frontable = true;
      for (std::size_t t = 0; t < p && frontable; ++t) frontable = commutes(v[t], v[p]);
      if (frontable && (pick == v.size() || v[p] < v[pick])) pick = p;
    }
    out.push_back(v[pick]);
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return GenWord(std::move(out), w.alphabet);
}

bool words_equivalent(const GenWord& w1, const GenWord& w2) {
  if (w1.alphabet != w2.alphabet) throw std::invalid_argument("words_equivalent: alphabet mismatch");
  return racg_normal_form(w1).letters == racg_normal_form(w2).letters;
}

std::vector<std::vector<int>> word_move_neighbors(const std::vector<int>& letters, int alphabet,
                                                  int max_len) {
  std::vector<std::vector<int>> out;
  const std::size_t len = letters.size();

  // delete an adjacent equal pair
  for (std::size_t p = 0; p + 1 < len; ++p) {
    if (letters[p] == letters[p + 1]) {
      std::vector<int> v;
      v.reserve(len - 2);
      v.insert(v.end(), letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(p));
      v.insert(v.end(), letters.begin() + static_cast<std::ptrdiff_t>(p + 2), letters.end());
      out.push_back(std::move(v));
    }
  }
  // swap an adjacent commuting pair
  for (std::size_t p = 0; p + 1 < len; ++p) {
    if (commutes(letters[p], letters[p + 1])) {
      std::vector<int> v = letters;
      std::swap(v[p], v[p + 1]);
      out.push_back(std::move(v));
    }
  }
  // insert s_j s_j anywhere
  if (static_cast<int>(len) + 2 <= max_len) {
    for (std::size_t p = 0; p <= len; ++p) {
      for (int j = 1; j <= alphabet - 1; ++j) {
        std::vector<int> v;
        v.reserve(len + 2);
        v.insert(v.end(), letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(p));
        v.push_back(j);
        v.push_back(j);
        v.insert(v.end(), letters.begin() + static_cast<std::ptrdiff_t>(p), letters.end());
        out.push_back(std::move(v));
      }
    }
  }
  return out;
}

OracleResult bfs_oracle_equivalent(const GenWord& w1, const GenWord& w2, int max_len,
                                   std::size_t node_budget) {
  if (w1.alphabet != w2.alphabet) throw std::invalid_argument("bfs_oracle_equivalent: alphabet mismatch");
  if (max_len < static_cast<int>(std::max(w1.size(), w2.size()))) {
    throw std::invalid_argument("bfs_oracle_equivalent: max_len below the longer input word");
  }
  const std::string target = encode(w2.letters);
  if (encode(w1.letters) == target) return OracleResult::kEquivalent;

  std::unordered_set<std::string> seen;
  std::deque<std::vector<int>> queue;
  seen.insert(encode(w1.letters));
  queue.push_back(w1.letters);

  while (!queue.empty()) {
    std::vector<int> cur = std::move(queue.front());
    queue.pop_front();
    for (auto& nb : word_move_neighbors(cur, w1.alphabet, max_len)) {
      std::string key = encode(nb);
      if (key == target) return OracleResult::kEquivalent;
      if (seen.insert(std::move(key)).second) {
        if (seen.size() > node_budget) return OracleResult::kInconclusive;
        queue.push_back(std::move(nb));
      }
    }
  }
  return OracleResult::kNotEquivalent;
}

}  // namespace atheory
