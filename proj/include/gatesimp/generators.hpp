#pragma once

#include <cmath>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "gatesimp/common.hpp"
#include "gatesimp/graph.hpp"

namespace gatesimp {

namespace detail {

inline std::uint64_t pair_code(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace detail

/// Erdos-Renyi G(n, m) with m = round(density * n): m distinct edges drawn
/// uniformly without replacement. When m is more than half of all possible
/// edges the complement is sampled instead.
inline Graph gen_er(std::size_t n, double density, std::uint64_t seed) {
  if (n == 0 || density < 0) throw ArgumentError("gen_er: need n > 0 and density >= 0");
  const auto m = static_cast<std::uint64_t>(std::llround(density * static_cast<double>(n)));
  const std::uint64_t max_edges = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (m > max_edges)
    throw ArgumentError("gen_er: " + std::to_string(m) + " edges requested but only " +
                        std::to_string(max_edges) + " fit on " + std::to_string(n) +
                        " vertices");
  Rng rng(seed);
  const bool complement = m > max_edges / 2;
  const std::uint64_t draws = complement ? max_edges - m : m;
  std::unordered_set<std::uint64_t> picked;
  picked.reserve(draws * 2);
  std::vector<Edge> edges;
  edges.reserve(m);
  while (picked.size() < draws) {
    auto a = static_cast<VertexId>(rng.below(n));
    auto b = static_cast<VertexId>(rng.below(n));
    if (a == b) continue;
    if (picked.insert(detail::pair_code(a, b)).second && !complement)
      edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  if (complement) {
    for (VertexId a = 0; a < n; ++a)
      for (VertexId b = a + 1; b < n; ++b)
        if (!picked.contains(detail::pair_code(a, b))) edges.emplace_back(a, b);
  }
  return Graph::from_edges(n, edges);
}

/// Preferential-attachment (Barabasi-Albert style) graph. Starts from a
/// clique on round(density)+1 vertices; every later vertex attaches
/// round(density) distinct edges to earlier vertices chosen with probability
/// proportional to their current degree.
inline Graph gen_scale_free(std::size_t n, double density, std::uint64_t seed) {
  if (density < 1) throw ArgumentError("gen_scale_free: density must be >= 1");
  const auto d = static_cast<std::size_t>(std::llround(density));
  if (n <= d)
    throw ArgumentError("gen_scale_free: n=" + std::to_string(n) +
                        " must exceed attachment count " + std::to_string(d));
  Rng rng(seed);
  std::vector<Edge> edges;
  std::vector<VertexId> endpoints;  // each vertex repeated once per incident edge
  for (VertexId a = 0; a <= d; ++a)
    for (VertexId b = a + 1; b <= d; ++b) {
      edges.emplace_back(a, b);
      endpoints.push_back(a);
      endpoints.push_back(b);
    }
  std::vector<VertexId> targets;
  for (auto v = static_cast<VertexId>(d + 1); v < n; ++v) {
    targets.clear();
    while (targets.size() < d) {
      VertexId t = endpoints[rng.below(endpoints.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    for (VertexId t : targets) {
      edges.emplace_back(t, v);
      endpoints.push_back(t);
      endpoints.push_back(v);
    }
  }
  return Graph::from_edges(n, edges);
}

/// Expected edge count of gen_scale_free.
inline std::size_t scale_free_edge_count(std::size_t n, double density) {
  const auto d = static_cast<std::size_t>(std::llround(density));
  return d * (d + 1) / 2 + d * (n - d - 1);
}

}  // namespace gatesimp
