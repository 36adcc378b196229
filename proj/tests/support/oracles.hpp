#pragma once

// Test-only reference implementations. Nothing here shares code with the
// library paths it is used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "gatesimp/graph.hpp"

namespace oracle {

using gatesimp::Graph;
using gatesimp::VertexId;

inline constexpr int kInf = std::numeric_limits<int>::max() / 4;

// Floyd-Warshall over the adjacency test has_edge().
inline std::vector<std::vector<int>> floyd(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (VertexId u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (VertexId v = 0; v < n; ++v)
      if (u != v && g.has_edge(u, v)) d[u][v] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

// Walks every simple path from u of exactly `len` edges ending at v and
// collects the vertices strictly inside those that are shortest paths.
inline std::set<VertexId> interiors_by_enumeration(const Graph& g, VertexId u, VertexId v,
                                                   int len) {
  std::set<VertexId> out;
  std::vector<VertexId> path{u};
  std::vector<char> on(g.num_vertices(), 0);
  on[u] = 1;
  std::function<void()> walk = [&] {
    if (static_cast<int>(path.size()) - 1 == len) {
      if (path.back() == v)
        for (std::size_t i = 1; i + 1 < path.size(); ++i) out.insert(path[i]);
      return;
    }
    for (VertexId w : g.neighbors(path.back())) {
      if (on[w]) continue;
      on[w] = 1;
      path.push_back(w);
      walk();
      path.pop_back();
      on[w] = 0;
    }
  };
  walk();
  return out;
}

// Smallest subset of `universe_size` elements' covering sets, by trying all
// subsets of the candidate list in order of size. Candidates must be few.
inline std::optional<std::size_t> min_cover_by_subsets(
    std::size_t universe_size, const std::vector<std::vector<std::uint32_t>>& sets) {
  std::vector<std::size_t> nonempty;
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (!sets[i].empty()) nonempty.push_back(i);
  const std::size_t c = nonempty.size();
  if (universe_size == 0) return 0;
  std::optional<std::size_t> best;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << c); ++mask) {
    auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (best && size >= *best) continue;
    std::vector<char> hit(universe_size, 0);
    std::size_t count = 0;
    for (std::size_t b = 0; b < c; ++b)
      if (mask >> b & 1)
        for (auto e : sets[nonempty[b]])
          if (!hit[e]) {
            hit[e] = 1;
            ++count;
          }
    if (count == universe_size) best = size;
  }
  return best;
}

}  // namespace oracle
