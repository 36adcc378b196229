#pragma once

#include <algorithm>
#include <compare>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "gatesimp/common.hpp"
#include "gatesimp/distance_oracle.hpp"
#include "gatesimp/graph.hpp"

namespace gatesimp {

/// GATE: cover every pair at distance exactly epsilon with an interior
/// vertex of some shortest path. KSKIP: cover every pair at distance k-1
/// with any vertex (endpoints included) of some shortest path.
enum class CoverMode { kGate, kKSkip };

inline const char* to_string(CoverMode m) { return m == CoverMode::kGate ? "gate" : "kskip"; }

inline CoverMode parse_cover_mode(const std::string& s) {
  if (s == "gate") return CoverMode::kGate;
  if (s == "kskip") return CoverMode::kKSkip;
  throw ArgumentError("unknown mode '" + s + "' (expected gate|kskip)");
}

/// Unordered vertex pair stored with a < b.
struct PairKey {
  VertexId a = 0;
  VertexId b = 0;

  static PairKey make(VertexId u, VertexId v) {
    if (u == v) throw ArgumentError("PairKey needs two distinct vertices");
    return u < v ? PairKey{u, v} : PairKey{v, u};
  }
  auto operator<=>(const PairKey&) const = default;
};

/// Set-cover encoding: ground holds the pairs U (sorted), candidates[x]
/// holds the ascending indices into ground of the pairs vertex x covers.
struct CoverInstance {
  CoverMode mode = CoverMode::kGate;
  Hops param = 0;  // epsilon for GATE, k for KSKIP
  std::vector<PairKey> ground;
  std::vector<std::vector<std::uint32_t>> candidates;

  std::size_t num_vertices() const { return candidates.size(); }

  /// Ground pairs no candidate covers, up to `limit` of them.
  std::vector<PairKey> uncoverable(std::size_t limit = SIZE_MAX) const {
    std::vector<char> hit(ground.size(), 0);
    for (const auto& c : candidates)
      for (auto e : c) hit[e] = 1;
    std::vector<PairKey> out;
    for (std::size_t i = 0; i < ground.size() && out.size() < limit; ++i)
      if (!hit[i]) out.push_back(ground[i]);
    return out;
  }

  bool operator==(const CoverInstance&) const = default;
};

/// Builds the GATE instance with one depth-epsilon BFS per source.
///
/// For every vertex y reached at level d >= 2 the set I(y) of vertices strictly
/// inside some shortest source-y path is the union of I(z) + {z} over the
/// level d-1 neighbors z of y (I is empty at level 1). Levels are finalized one
/// at a time so that a vertex sees all of its predecessors, not just the one
/// that discovered it. Each unordered pair is emitted from its smaller endpoint.
inline CoverInstance build_instance_bfs(const Graph& g, Hops epsilon) {
  if (epsilon < 2)
    throw ArgumentError("epsilon=" + std::to_string(epsilon) +
                        " is infeasible: pairs at distance < 2 have no intermediate vertex");
  const std::size_t n = g.num_vertices();

  struct Found {
    VertexId v;
    std::vector<VertexId> inner;  // I(v), ascending
  };
  struct Workspace {
    std::vector<Hops> level;
    std::vector<std::vector<VertexId>> inner;
    std::vector<std::uint32_t> stamp;
    std::uint32_t clock = 0;
    std::vector<VertexId> touched;
  };

  const unsigned workers = thread_count();
  std::vector<Workspace> ws(workers);
  for (auto& w : ws) {
    w.level.assign(n, kUnreachable);
    w.inner.resize(n);
    w.stamp.assign(n, 0);
  }
  std::vector<std::vector<Found>> per_source(n);

  parallel_for(
      n,
      [&](unsigned wid, std::size_t s) {
        auto& w = ws[wid];
        const auto source = static_cast<VertexId>(s);
        for (VertexId v : w.touched) {
          w.level[v] = kUnreachable;
          w.inner[v].clear();
        }
        w.touched.assign(1, source);
        w.level[source] = 0;
        std::vector<VertexId> frontier{source}, next;
        std::vector<VertexId> merged;
        for (Hops d = 1; d <= epsilon && !frontier.empty(); ++d) {
          next.clear();
          for (VertexId u : frontier)
            for (VertexId y : g.neighbors(u))
              if (w.level[y] == kUnreachable) {
                w.level[y] = d;
                next.push_back(y);
                w.touched.push_back(y);
              }
          if (d >= 2) {
            for (VertexId y : next) {
              if (d == epsilon && y < source) continue;  // emitted from y's side
              ++w.clock;
              merged.clear();
              for (VertexId z : g.neighbors(y)) {
                if (w.level[z] != d - 1) continue;
                if (w.stamp[z] != w.clock) {
                  w.stamp[z] = w.clock;
                  merged.push_back(z);
                }
                for (VertexId x : w.inner[z])
                  if (w.stamp[x] != w.clock) {
                    w.stamp[x] = w.clock;
                    merged.push_back(x);
                  }
              }
              std::sort(merged.begin(), merged.end());
              if (d == epsilon)
                per_source[s].push_back(Found{y, merged});
              else
                w.inner[y] = merged;
            }
          }
          frontier.swap(next);
        }
        std::sort(per_source[s].begin(), per_source[s].end(),
                  [](const Found& a, const Found& b) { return a.v < b.v; });
      },
      workers);

  CoverInstance inst;
  inst.mode = CoverMode::kGate;
  inst.param = epsilon;
  inst.candidates.resize(n);
  for (VertexId u = 0; u < n; ++u) {
    for (auto& f : per_source[u]) {
      const auto idx = static_cast<std::uint32_t>(inst.ground.size());
      inst.ground.push_back(PairKey{u, f.v});
      for (VertexId x : f.inner) inst.candidates[x].push_back(idx);
    }
    per_source[u].clear();
    per_source[u].shrink_to_fit();
  }
  return inst;
}

/// Builds a GATE or KSKIP instance straight from the all-pairs distance
/// table: x covers (u,v) iff d(u,x) + d(x,v) = d(u,v).
inline CoverInstance build_instance_oracle(const Graph& g, const DistanceOracle& dist, Hops param,
                                           CoverMode mode) {
  if (param < 2)
    throw ArgumentError(std::string(to_string(mode)) + " parameter must be >= 2, got " +
                        std::to_string(param));
  const std::size_t n = g.num_vertices();
  const Hops target = mode == CoverMode::kGate ? param : param - 1;
  const bool endpoints = mode == CoverMode::kKSkip;
  CoverInstance inst;
  inst.mode = mode;
  inst.param = param;
  inst.candidates.resize(n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) {
      if (dist(u, v) != target) continue;
      const auto idx = static_cast<std::uint32_t>(inst.ground.size());
      inst.ground.push_back(PairKey{u, v});
      for (VertexId x = 0; x < n; ++x) {
        if (!endpoints && (x == u || x == v)) continue;
        Hops a = dist(u, x), b = dist(x, v);
        if (a != kUnreachable && b != kUnreachable && a + b == target)
          inst.candidates[x].push_back(idx);
      }
    }
  return inst;
}

inline CoverInstance build_instance_oracle(const Graph& g, Hops param, CoverMode mode,
                                           ApspGuard guard = {}) {
  if (param < 2)
    throw ArgumentError(std::string(to_string(mode)) + " parameter must be >= 2, got " +
                        std::to_string(param));
  return build_instance_oracle(g, apsp_oracle(g, guard), param, mode);
}

/// Text form: "mode param |U|", one "a b" line per ground pair, then
/// "x: a b, a b, ..." for every vertex with a non-empty candidate set.
inline void write_instance(std::ostream& out, const CoverInstance& inst) {
  out << to_string(inst.mode) << ' ' << inst.param << ' ' << inst.ground.size() << '\n';
  for (const auto& p : inst.ground) out << p.a << ' ' << p.b << '\n';
  for (VertexId x = 0; x < inst.candidates.size(); ++x) {
    const auto& c = inst.candidates[x];
    if (c.empty()) continue;
    out << x << ':';
    for (std::size_t i = 0; i < c.size(); ++i)
      out << (i ? ", " : " ") << inst.ground[c[i]].a << ' ' << inst.ground[c[i]].b;
    out << '\n';
  }
}

/// Parses write_instance output. `num_vertices` sizes the candidate table.
inline CoverInstance read_instance(std::istream& in, std::size_t num_vertices) {
  CoverInstance inst;
  std::string line, mode;
  std::size_t line_no = 1;
  if (!std::getline(in, line)) throw ParseError(1, "missing instance header");
  std::size_t count = 0;
  {
    std::istringstream h(line);
    if (!(h >> mode >> inst.param >> count)) throw ParseError(1, "bad instance header");
    inst.mode = parse_cover_mode(mode);
  }
  inst.candidates.resize(num_vertices);
  for (std::size_t i = 0; i < count; ++i) {
    ++line_no;
    VertexId a, b;
    if (!std::getline(in, line)) throw ParseError(line_no, "truncated ground set");
    std::istringstream f(line);
    if (!(f >> a >> b)) throw ParseError(line_no, "bad ground pair");
    inst.ground.push_back(PairKey::make(a, b));
  }
  if (!std::is_sorted(inst.ground.begin(), inst.ground.end()))
    throw ParseError(line_no, "ground pairs not in canonical order");
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(line_no, "candidate line lacks ':'");
    VertexId x = static_cast<VertexId>(std::stoul(line.substr(0, colon)));
    if (x >= num_vertices) throw ParseError(line_no, "candidate vertex out of range");
    std::string rest = line.substr(colon + 1);
    std::replace(rest.begin(), rest.end(), ',', ' ');
    std::istringstream f(rest);
    VertexId a, b;
    while (f >> a >> b) {
      auto key = PairKey::make(a, b);
      auto it = std::lower_bound(inst.ground.begin(), inst.ground.end(), key);
      if (it == inst.ground.end() || *it != key)
        throw ParseError(line_no, "candidate pair not in ground set");
      inst.candidates[x].push_back(static_cast<std::uint32_t>(it - inst.ground.begin()));
    }
  }
  return inst;
}

}  // namespace gatesimp
