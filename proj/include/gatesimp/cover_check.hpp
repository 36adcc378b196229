#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "gatesimp/distance_oracle.hpp"
#include "gatesimp/graph.hpp"
#include "gatesimp/report.hpp"

namespace gatesimp {

namespace detail {

// Brute force over the distance table: for every pair at distance `target`,
// look for x in vs with d(u,x) + d(x,v) = target. Candidates are pre-filtered
// per u to those within target hops, which leaves the test itself unchanged.
inline VerificationReport check_cover(const char* name, const DistanceOracle& dist, Hops target,
                                      std::span<const VertexId> vs, bool endpoints) {
  Stopwatch clock;
  VerificationReport rep;
  rep.check = name;
  const std::size_t n = dist.num_vertices();
  std::vector<VertexId> members(vs.begin(), vs.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (VertexId x : members)
    if (x >= n) throw ArgumentError("vertex " + std::to_string(x) + " out of range");

  std::vector<VertexId> near;
  for (VertexId u = 0; u < n; ++u) {
    near.clear();
    for (VertexId x : members) {
      Hops d = dist(u, x);
      if (d != kUnreachable && d <= target) near.push_back(x);
    }
    for (VertexId v = u + 1; v < n; ++v) {
      if (dist(u, v) != target) continue;
      ++rep.pairs_checked;
      bool ok = false;
      for (VertexId x : near) {
        if (!endpoints && (x == u || x == v)) continue;
        Hops b = dist(x, v);
        if (b != kUnreachable && dist(u, x) + b == target) {
          ok = true;
          break;
        }
      }
      if (!ok) rep.add({u, v, static_cast<std::int64_t>(target), -1});
    }
  }
  rep.counts["set_size"] = static_cast<std::int64_t>(members.size());
  rep.elapsed_ms = clock.ms();
  return rep;
}

}  // namespace detail

/// Every pair at distance exactly epsilon must have some x in vs, x not an
/// endpoint, on a shortest path between them.
inline VerificationReport check_gate_cover(const DistanceOracle& dist, Hops epsilon,
                                           std::span<const VertexId> vs) {
  if (epsilon < 2) throw ArgumentError("check_gate_cover: epsilon must be >= 2");
  return detail::check_cover("gate_cover", dist, epsilon, vs, false);
}

inline VerificationReport check_gate_cover(const Graph& g, Hops epsilon,
                                           std::span<const VertexId> vs, ApspGuard guard = {}) {
  return check_gate_cover(apsp_oracle(g, guard), epsilon, vs);
}

/// Every pair at distance k-1 must have some x in vs (endpoints allowed) on a
/// shortest path between them.
inline VerificationReport check_kskip_cover(const DistanceOracle& dist, Hops k,
                                            std::span<const VertexId> vs) {
  if (k < 2) throw ArgumentError("check_kskip_cover: k must be >= 2");
  return detail::check_cover("kskip_cover", dist, k - 1, vs, true);
}

inline VerificationReport check_kskip_cover(const Graph& g, Hops k, std::span<const VertexId> vs,
                                            ApspGuard guard = {}) {
  return check_kskip_cover(apsp_oracle(g, guard), k, vs);
}

}  // namespace gatesimp
