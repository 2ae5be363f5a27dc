#pragma once

// Brute-force reference implementations used only by the tests. None of these
// call into the library's search, bound or lattice code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

using Word = std::vector<int>;

/// Every word of length n over {0, ..., q-1}, in lexicographic order.
inline std::vector<Word> all_words(int q, int n) {
  std::vector<Word> out;
  Word w(static_cast<std::size_t>(n), 0);
  while (true) {
    out.push_back(w);
    int i = n - 1;
    while (i >= 0 && w[static_cast<std::size_t>(i)] == q - 1) w[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++w[static_cast<std::size_t>(i)];
  }
  return out;
}

inline int weight(const Word& w) {
  return static_cast<int>(std::count_if(w.begin(), w.end(), [](int s) { return s != 0; }));
}

inline int distance(const Word& a, const Word& b) {
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

inline bool has_composition(const Word& w, const std::vector<int>& comp) {
  for (std::size_t s = 0; s < comp.size(); ++s) {
    if (std::count(w.begin(), w.end(), static_cast<int>(s) + 1) != comp[s]) return false;
  }
  return true;
}

inline std::vector<Word> words_with_weight(int q, int n, int w) {
  std::vector<Word> out;
  for (auto& x : all_words(q, n)) {
    if (weight(x) == w) out.push_back(std::move(x));
  }
  return out;
}

inline std::vector<Word> words_with_composition(int n, const std::vector<int>& comp) {
  std::vector<Word> out;
  for (auto& x : all_words(static_cast<int>(comp.size()) + 1, n)) {
    if (has_composition(x, comp)) out.push_back(std::move(x));
  }
  return out;
}

/// Maximum clique by plain branch and bound: a candidate set is pruned when
/// |current| + |candidates| cannot beat the best found.
inline std::vector<int> max_clique(int vertices, const std::function<bool(int, int)>& adjacent) {
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(vertices), std::vector<char>(static_cast<std::size_t>(vertices)));
  for (int i = 0; i < vertices; ++i)
    for (int j = 0; j < vertices; ++j) adj[i][j] = i != j && adjacent(i, j);
  std::vector<int> best, cur;
  std::function<void(std::vector<int>)> grow = [&](std::vector<int> cand) {
    if (cur.size() > best.size()) best = cur;
    while (!cand.empty()) {
      if (cur.size() + cand.size() <= best.size()) return;
      const int v = cand.back();
      cand.pop_back();
      std::vector<int> next;
      for (int u : cand)
        if (adj[v][u]) next.push_back(u);
      cur.push_back(v);
      grow(next);
      cur.pop_back();
    }
  };
  std::vector<int> all(static_cast<std::size_t>(vertices));
  std::iota(all.begin(), all.end(), 0);
  grow(all);
  std::sort(best.begin(), best.end());
  return best;
}

/// Largest code of the given words with minimum distance >= d.
inline std::vector<Word> max_code(const std::vector<Word>& words, int d) {
  const auto clique = max_clique(static_cast<int>(words.size()),
                                 [&](int i, int j) { return distance(words[i], words[j]) >= d; });
  std::vector<Word> out;
  for (int i : clique) out.push_back(words[static_cast<std::size_t>(i)]);
  return out;
}

/// Closed-form degree vector of a vertex in class i of the main graph of G(w̄):
/// in_i = w_i - 1, out_i = w - 1, in_j = w_j for j != i, out_j = 0.
inline std::vector<long long> g_main_degree(const std::vector<int>& comp, int i) {
  const int w = std::accumulate(comp.begin(), comp.end(), 0);
  std::vector<long long> out(2 * comp.size(), 0);
  for (std::size_t j = 0; j < comp.size(); ++j) {
    out[2 * j] = static_cast<int>(j) == i ? comp[j] - 1 : comp[j];
    out[2 * j + 1] = static_cast<int>(j) == i ? w - 1 : 0;
  }
  return out;
}

/// m_i(G(w̄)) = w_i (w - 1).
inline std::vector<long long> g_main_edges(const std::vector<int>& comp) {
  const int w = std::accumulate(comp.begin(), comp.end(), 0);
  std::vector<long long> out;
  for (int wi : comp) out.push_back(static_cast<long long>(wi) * (w - 1));
  return out;
}

/// Closed-form degree vector of a vertex in class i of G*(w̄), colors (a, b)
/// indexed a*s + b: in/out of (i,i) = w_i - 1, out (i,j) = in (j,i) = w_j.
inline std::vector<long long> gstar_main_degree(const std::vector<int>& comp, int i) {
  const std::size_t s = comp.size();
  std::vector<long long> out(2 * s * s, 0);
  for (std::size_t j = 0; j < s; ++j) {
    const std::size_t ij = static_cast<std::size_t>(i) * s + j;
    const std::size_t ji = j * s + static_cast<std::size_t>(i);
    if (static_cast<int>(j) == i) {
      out[2 * ij] = comp[j] - 1;
      out[2 * ij + 1] = comp[j] - 1;
    } else {
      out[2 * ij + 1] = comp[j];
      out[2 * ji] = comp[j];
    }
  }
  return out;
}

/// m_(i,i) = w_i (w_i - 1), m_(i,j) = w_i w_j.
inline std::vector<long long> gstar_main_edges(const std::vector<int>& comp) {
  std::vector<long long> out;
  for (std::size_t i = 0; i < comp.size(); ++i)
    for (std::size_t j = 0; j < comp.size(); ++j)
      out.push_back(static_cast<long long>(comp[i]) * (i == j ? comp[j] - 1 : comp[j]));
  return out;
}

/// Monotone compositions w_1 >= ... >= w_k > 0 with 1 <= k <= max_parts summing to w.
inline std::vector<std::vector<int>> monotone_compositions(int w, int max_parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_parts) return;
    for (int p = std::min(cap, remaining); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(w, w);
  return out;
}

}  // namespace oracle
