#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gatesimp/common.hpp"
#include "gatesimp/graph.hpp"

namespace gatesimp {

struct ApspGuard {
  std::size_t max_vertices = 20000;
};

/// Dense all-pairs hop-distance table. Unreachable pairs read as kUnreachable.
class DistanceOracle {
 public:
  DistanceOracle() = default;

  std::size_t num_vertices() const noexcept { return n_; }

  Hops at(VertexId u, VertexId v) const {
    auto d = table_[static_cast<std::size_t>(u) * n_ + v];
    return d == kStored ? kUnreachable : d;
  }
  Hops operator()(VertexId u, VertexId v) const { return at(u, v); }

  friend DistanceOracle apsp_oracle(const Graph& g, ApspGuard guard);

 private:
  static constexpr std::uint16_t kStored = 0xFFFF;
  std::size_t n_ = 0;
  std::vector<std::uint16_t> table_;
};

inline void check_apsp_guard(std::size_t n, ApspGuard guard) {
  if (n > guard.max_vertices)
    throw ResourceError("apsp guard: n=" + std::to_string(n) +
                        " exceeds max_vertices=" + std::to_string(guard.max_vertices));
}

/// One full BFS per source, run concurrently; each source owns its row.
inline DistanceOracle apsp_oracle(const Graph& g, ApspGuard guard = {}) {
  const std::size_t n = g.num_vertices();
  check_apsp_guard(n, guard);
  // Distances are < n, so 16 bits suffice while the guard is below 65535.
  if (n >= DistanceOracle::kStored) throw ResourceError("apsp guard: n too large for table");
  DistanceOracle o;
  o.n_ = n;
  o.table_.assign(n * n, DistanceOracle::kStored);
  const unsigned workers = thread_count();
  std::vector<BfsWorkspace> ws(workers, BfsWorkspace(n));
  parallel_for(
      n,
      [&](unsigned w, std::size_t s) {
        auto* row = o.table_.data() + s * n;
        auto& bfs = ws[w];
        for (VertexId v : bfs.run(g, static_cast<VertexId>(s), kUnreachable))
          row[v] = static_cast<std::uint16_t>(bfs.level(v));
      },
      workers);
  return o;
}

/// Component id per vertex, numbered in order of smallest member.
inline std::vector<std::uint32_t> connected_components(const Graph& g, std::size_t* count = nullptr) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint32_t> comp(n, UINT32_MAX);
  std::vector<VertexId> stack;
  std::uint32_t next = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (comp[s] != UINT32_MAX) continue;
    comp[s] = next;
    stack.assign(1, s);
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      for (VertexId w : g.neighbors(u))
        if (comp[w] == UINT32_MAX) {
          comp[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

/// Subgraph induced by the largest connected component (ties: smallest id).
inline Graph largest_component(const Graph& g) {
  std::size_t count = 0;
  auto comp = connected_components(g, &count);
  if (count == 0) return g;
  std::vector<std::size_t> sizes(count, 0);
  for (auto c : comp) ++sizes[c];
  const auto best = static_cast<std::uint32_t>(
      std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  std::vector<VertexId> remap(g.num_vertices(), UINT32_MAX);
  std::vector<std::string> labels;
  VertexId next = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (comp[v] == best) {
      remap[v] = next++;
      labels.push_back(g.label(v));
    }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (comp[u] == best) edges.emplace_back(remap[u], remap[v]);
  return Graph::from_edges(next, edges, std::move(labels));
}

struct GraphStats {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t components = 0;
  Hops diameter = 0;    // max finite distance
  double avg_dist = 0;  // mean over connected ordered pairs u != v
  bool exact = true;
  std::size_t sources = 0;  // BFS sources used
};

struct StatsOptions {
  bool exact = true;
  std::size_t samples = 64;  // sampled mode only; at least 64 are used
  std::uint64_t seed = 1;
  ApspGuard guard{};
};

/// Diameter and average distance. Exact mode runs a BFS from every vertex;
/// sampled mode uses a seeded subset of sources and flags the result.
inline GraphStats graph_stats(const Graph& g, StatsOptions opt = {}) {
  GraphStats st;
  st.n = g.num_vertices();
  st.m = g.num_edges();
  connected_components(g, &st.components);
  st.exact = opt.exact;
  if (st.n == 0) return st;

  std::vector<VertexId> sources;
  if (opt.exact) {
    check_apsp_guard(st.n, opt.guard);
    sources.resize(st.n);
    for (VertexId v = 0; v < st.n; ++v) sources[v] = v;
  } else {
    const std::size_t k = std::min(st.n, std::max<std::size_t>(64, opt.samples));
    std::vector<VertexId> all(st.n);
    for (VertexId v = 0; v < st.n; ++v) all[v] = v;
    Rng rng(opt.seed);
    for (std::size_t i = 0; i < k; ++i) std::swap(all[i], all[i + rng.below(st.n - i)]);
    sources.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(sources.begin(), sources.end());
  }
  st.sources = sources.size();

  struct Partial {
    Hops ecc = 0;
    std::uint64_t sum = 0;
    std::uint64_t pairs = 0;
  };
  std::vector<Partial> parts(sources.size());
  const unsigned workers = thread_count();
  std::vector<BfsWorkspace> ws(workers, BfsWorkspace(st.n));
  parallel_for(
      sources.size(),
      [&](unsigned w, std::size_t i) {
        auto& bfs = ws[w];
        Partial p;
        auto reached = bfs.run(g, sources[i], kUnreachable);
        for (VertexId v : reached) {
          Hops d = bfs.level(v);
          p.ecc = std::max(p.ecc, d);
          p.sum += d;
        }
        p.pairs = reached.size() - 1;
        parts[i] = p;
      },
      workers);
  std::uint64_t sum = 0, pairs = 0;
  for (const auto& p : parts) {
    st.diameter = std::max(st.diameter, p.ecc);
    sum += p.sum;
    pairs += p.pairs;
  }
  st.avg_dist = pairs ? static_cast<double>(sum) / static_cast<double>(pairs) : 0.0;
  return st;
}

}  // namespace gatesimp
