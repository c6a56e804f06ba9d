#pragma once

// Exhaustive shortest-path oracle over the rewrite move graph, independent
// of the library's elementary_moves/Dijkstra path: words are enumerated by
// composability, single-move edges are recovered by comparing word pairs,
// and distances come from Floyd-Warshall. Toy scale only.

#include <algorithm>
#include <limits>
#include <vector>

#include "acats/ac_structure.hpp"
#include "acats/free_category.hpp"

namespace acats::testing {

inline std::vector<PathWord> enumerate_words(const ACStructure& ac, int max_len) {
  std::vector<PathWord> words;
  for (ObjectIdx x = 0; x < ac.object_count(); ++x) {
    words.push_back(PathWord{x, {}});
  }
  std::size_t begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    const std::size_t end = words.size();
    for (std::size_t i = begin; i < end; ++i) {
      const ObjectIdx at = word_dst(ac, words[i]);
      for (ArrowIdx a = 0; a < ac.arrow_count(); ++a) {
        if (ac.arrow(a).src != at) continue;
        PathWord next = words[i];
        next.arrows.push_back(a);
        words.push_back(next);
      }
    }
    begin = end;
  }
  return words;
}

// Cost of rewriting `from` into `to` in one move; +inf when they do not
// differ by one move. Directed; the caller takes the minimum of both
// orientations.
inline double one_move_cost(const ACStructure& ac, const PathWord& from,
                            const PathWord& to) {
  double best = std::numeric_limits<double>::infinity();
  if (to.length() == from.length() - 1) {
    // Contraction of an adjacent pair into one letter.
    for (int p = 0; p + 1 < from.length(); ++p) {
      if (p >= to.length()) continue;
      bool match = true;
      for (int i = 0; i < p && match; ++i) match = from.arrows[i] == to.arrows[i];
      for (int i = p + 1; i < to.length() && match; ++i) {
        match = to.arrows[i] == from.arrows[i + 1];
      }
      if (!match) continue;
      const ArrowIdx f = from.arrows[p];
      const ArrowIdx g = from.arrows[p + 1];
      const ArrowIdx h = to.arrows[p];
      if (ac.arrow(h).src != ac.arrow(f).src || ac.arrow(h).dst != ac.arrow(g).dst)
        continue;
      best = std::min(best, ac.d(f, g, h));
    }
    // Deletion of one identity letter.
    for (int p = 0; p < from.length(); ++p) {
      if (!ac.has_identities() || !ac.is_identity(from.arrows[p])) continue;
      bool match = true;
      for (int i = 0; i < p && match; ++i) match = from.arrows[i] == to.arrows[i];
      for (int i = p; i < to.length() && match; ++i) {
        match = to.arrows[i] == from.arrows[i + 1];
      }
      if (match) best = std::min(best, 0.0);
    }
  }
  return best;
}

inline std::vector<double> oracle_all_pairs(const ACStructure& ac,
                                            const std::vector<PathWord>& words) {
  const std::size_t n = words.size();
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(n * n, inf);
  for (std::size_t i = 0; i < n; ++i) dist[i * n + i] = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double down = one_move_cost(ac, words[i], words[j]);
      const double up = one_move_cost(ac, words[j], words[i]);
      const double cost = std::min(down, up);
      if (cost < dist[i * n + j]) {
        dist[i * n + j] = dist[j * n + i] = std::max(0.0, cost);
      }
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const double through = dist[i * n + k] + dist[k * n + j];
        if (through < dist[i * n + j]) dist[i * n + j] = through;
      }
    }
  }
  return dist;
}

inline int index_of(const std::vector<PathWord>& words, const PathWord& w) {
  const auto it = std::find(words.begin(), words.end(), w);
  return it == words.end() ? -1 : static_cast<int>(it - words.begin());
}

}  // namespace acats::testing
