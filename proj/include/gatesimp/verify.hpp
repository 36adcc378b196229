#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <span>
#include <vector>

#include "gatesimp/common.hpp"
#include "gatesimp/cover_check.hpp"
#include "gatesimp/cover_instance.hpp"
#include "gatesimp/distance_oracle.hpp"
#include "gatesimp/gate_graph.hpp"
#include "gatesimp/gates.hpp"
#include "gatesimp/report.hpp"
#include "gatesimp/set_cover_solver.hpp"

namespace gatesimp {

struct RecoveryOptions {
  std::size_t sample = 0;  // 0 = every source vertex; otherwise this many seeded sources
  std::uint64_t seed = 1;
};

/// Every connected pair with d(u,v) >= epsilon must be answered exactly by the
/// gate-graph query. The witness is also expanded into the hop chain
/// u, x, ..., y, v; each hop must be a true distance below epsilon and the
/// hops must add up to d(u,v).
inline VerificationReport check_recovery(const Graph& g, const DistanceOracle& dist, Hops epsilon,
                                         std::span<const VertexId> gates, const WeightedGraph& wg,
                                         RecoveryOptions opt = {}) {
  Stopwatch clock;
  VerificationReport rep;
  rep.check = "recovery";
  if (!std::equal(gates.begin(), gates.end(), wg.vertices().begin(), wg.vertices().end()))
    throw ArgumentError("check_recovery: gate set does not match the gate graph");
  const std::size_t n = g.num_vertices();

  std::vector<VertexId> sources(n);
  for (VertexId v = 0; v < n; ++v) sources[v] = v;
  if (opt.sample && opt.sample < n) {
    Rng rng(opt.seed);
    for (std::size_t i = 0; i < opt.sample; ++i) std::swap(sources[i], sources[i + rng.below(n - i)]);
    sources.resize(opt.sample);
    std::sort(sources.begin(), sources.end());
    rep.authoritative = false;
  }

  DistanceQuery query(g, wg, epsilon, true);
  std::map<std::uint32_t, ShortestPathTree> trees;
  std::size_t chain_failures = 0;
  for (VertexId u : sources) {
    auto answers = query.query_all(u);
    for (VertexId v = 0; v < n; ++v) {
      if (v == u || (rep.authoritative && v < u)) continue;
      const Hops d = dist(u, v);
      if (d == kUnreachable || d < epsilon) continue;
      ++rep.pairs_checked;
      const auto& ans = answers[v];
      if (ans.distance != d || ans.route != RouteKind::kViaGates) {
        rep.add({u, v, d, ans.distance == kUnreachable ? -1 : static_cast<std::int64_t>(ans.distance)});
        continue;
      }
      auto [x, y] = *ans.witness;
      const auto sx = *wg.slot(x), sy = *wg.slot(y);
      auto it = trees.find(sx);
      if (it == trees.end()) it = trees.emplace(sx, gate_shortest_paths(wg, sx)).first;
      std::vector<VertexId> middle;
      for (auto s = sy; s != UINT32_MAX; s = it->second.parent[s]) middle.push_back(wg.vertex_at(s));
      std::reverse(middle.begin(), middle.end());

      std::vector<VertexId> chain{u};
      for (VertexId w : middle)
        if (w != chain.back()) chain.push_back(w);
      if (chain.back() != v) chain.push_back(v);
      std::int64_t total = 0;
      bool ok = middle.front() == x;
      for (std::size_t i = 1; i < chain.size() && ok; ++i) {
        Hops hop = dist(chain[i - 1], chain[i]);
        if (hop == kUnreachable || hop >= epsilon) ok = false;
        total += hop;
      }
      // Gate-graph segments must also carry their true distance as weight.
      for (std::size_t i = 1; i < middle.size() && ok; ++i) {
        Hops w = it->second.dist[*wg.slot(middle[i])] - it->second.dist[*wg.slot(middle[i - 1])];
        if (w != dist(middle[i - 1], middle[i])) ok = false;
      }
      if (!ok || total != d) {
        ++chain_failures;
        rep.add({u, v, d, total});
      }
    }
  }
  rep.counts["chain_failures"] = static_cast<std::int64_t>(chain_failures);
  rep.counts["sources"] = static_cast<std::int64_t>(sources.size());
  rep.elapsed_ms = clock.ms();
  return rep;
}

namespace detail {

// All-pairs distances by running Dijkstra from each slot, optionally with one
// edge (by slot pair) treated as absent.
inline std::vector<Hops> slot_dijkstra(const WeightedGraph& wg, std::uint32_t source,
                                       std::optional<std::pair<std::uint32_t, std::uint32_t>> skip = {}) {
  std::vector<Hops> dist(wg.num_vertices(), kUnreachable);
  using Item = std::pair<Hops, std::uint32_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[source] = 0;
  heap.push({0, source});
  while (!heap.empty()) {
    auto [d, s] = heap.top();
    heap.pop();
    if (d != dist[s]) continue;
    for (const auto& arc : wg.arcs(s)) {
      if (skip && ((s == skip->first && arc.to == skip->second) ||
                   (s == skip->second && arc.to == skip->first)))
        continue;
      if (d + arc.w < dist[arc.to]) {
        dist[arc.to] = d + arc.w;
        heap.push({dist[arc.to], arc.to});
      }
    }
  }
  return dist;
}

inline std::int64_t as_signed(Hops h) { return h == kUnreachable ? -1 : static_cast<std::int64_t>(h); }

}  // namespace detail

/// Sparsification must keep the vertex set, only remove edges, and leave
/// every weighted distance unchanged.
inline VerificationReport check_sparsify_preserves(const WeightedGraph& before,
                                                   const WeightedGraph& after) {
  Stopwatch clock;
  VerificationReport rep;
  rep.check = "sparsify_preserves";
  if (!std::equal(before.vertices().begin(), before.vertices().end(), after.vertices().begin(),
                  after.vertices().end())) {
    rep.add({0, 0, static_cast<std::int64_t>(before.num_vertices()),
             static_cast<std::int64_t>(after.num_vertices())});
    rep.elapsed_ms = clock.ms();
    return rep;
  }
  for (const auto& e : after.edges())
    if (!std::binary_search(before.edges().begin(), before.edges().end(), e))
      rep.add({e.u, e.v, -1, e.w});
  const std::size_t k = before.num_vertices();
  for (std::uint32_t s = 0; s < k; ++s) {
    auto a = detail::slot_dijkstra(before, s);
    auto b = detail::slot_dijkstra(after, s);
    for (std::uint32_t t = s + 1; t < k; ++t) {
      ++rep.pairs_checked;
      if (a[t] != b[t])
        rep.add({before.vertex_at(s), before.vertex_at(t), detail::as_signed(a[t]),
                 detail::as_signed(b[t])});
    }
  }
  rep.counts["edges_before"] = static_cast<std::int64_t>(before.num_edges());
  rep.counts["edges_after"] = static_cast<std::int64_t>(after.num_edges());
  rep.counts["removed"] = static_cast<std::int64_t>(before.num_edges()) -
                          static_cast<std::int64_t>(after.num_edges());
  rep.elapsed_ms = clock.ms();
  return rep;
}

/// Every remaining edge must be essential: without it, d(u,v) grows.
inline VerificationReport check_sparsify_minimal(const WeightedGraph& wg) {
  Stopwatch clock;
  VerificationReport rep;
  rep.check = "sparsify_minimal";
  for (const auto& e : wg.edges()) {
    ++rep.pairs_checked;
    auto su = *wg.slot(e.u), sv = *wg.slot(e.v);
    auto d = detail::slot_dijkstra(wg, su, std::pair(su, sv))[sv];
    if (d != kUnreachable && d <= e.w) rep.add({e.u, e.v, e.w, d});
  }
  rep.elapsed_ms = clock.ms();
  return rep;
}

/// Exact minima around the gate / k-skip chain at parameter i:
/// min|G_{i-1}| >= min|S_i| >= min|G_{i+1}|.
struct ChainReport {
  Hops i = 0;
  std::size_t min_gate_prev = 0;
  std::size_t min_skip = 0;
  std::size_t min_gate_next = 0;
  bool prev_ge_skip = false;
  bool skip_ge_next = false;
  bool valid = false;  // all three exact solves finished within budget

  bool holds() const { return valid && prev_ge_skip && skip_ge_next; }
};

inline ChainReport check_chain(const Graph& g, Hops i, ExactOptions budget = {},
                               ApspGuard guard = {}) {
  if (i < 3) throw ArgumentError("check_chain needs i >= 3, got " + std::to_string(i));
  ChainReport r;
  r.i = i;
  auto dist = apsp_oracle(g, guard);
  try {
    r.min_gate_prev =
        exact_solve(build_instance_oracle(g, dist, i - 1, CoverMode::kGate), budget).vertices.size();
    r.min_skip =
        exact_solve(build_instance_oracle(g, dist, i, CoverMode::kKSkip), budget).vertices.size();
    r.min_gate_next =
        exact_solve(build_instance_oracle(g, dist, i + 1, CoverMode::kGate), budget).vertices.size();
  } catch (const ResourceError&) {
    return r;
  }
  r.valid = true;
  r.prev_ge_skip = r.min_gate_prev >= r.min_skip;
  r.skip_ge_next = r.min_skip >= r.min_gate_next;
  return r;
}

/// Greedy size against the exact optimum and the ln|U| + 1 guarantee.
struct ApproxRecord {
  std::size_t greedy = 0;
  std::size_t exact = 0;
  std::size_t ground = 0;
  double ratio = 1.0;          // greedy / exact, 1.0 when both are 0
  std::optional<double> bound;  // ln|U| + 1; absent for an empty ground set
  bool within = true;
};

inline ApproxRecord approx_report(const CoverInstance& inst, ExactOptions budget = {}) {
  ApproxRecord r;
  r.ground = inst.ground.size();
  r.greedy = greedy_solve(inst).vertices.size();
  r.exact = exact_solve(inst, budget).vertices.size();
  if (r.exact > 0) r.ratio = static_cast<double>(r.greedy) / static_cast<double>(r.exact);
  if (r.ground > 0) {
    r.bound = std::log(static_cast<double>(r.ground)) + 1.0;
    r.within = static_cast<double>(r.greedy) <= *r.bound * static_cast<double>(r.exact) + 1e-9;
  } else {
    r.within = r.greedy == 0;
  }
  return r;
}

/// (n/(eps-1)) * ln(n/(eps-1)): the growth shape of the known size bound on
/// minimum gate sets. Logged only.
inline double size_bound_shape(std::size_t n, Hops epsilon) {
  if (epsilon < 2 || n == 0) return 0;
  const double r = static_cast<double>(n) / static_cast<double>(epsilon - 1);
  return r > 1 ? r * std::log(r) : r;
}

}  // namespace gatesimp
