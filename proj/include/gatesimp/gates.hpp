#pragma once

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "gatesimp/cover_check.hpp"
#include "gatesimp/cover_instance.hpp"
#include "gatesimp/graph.hpp"
#include "gatesimp/report.hpp"
#include "gatesimp/set_cover_solver.hpp"

namespace gatesimp {

enum class DiscoveryMethod { kSetCover, kSampling, kExact };

inline const char* to_string(DiscoveryMethod m) {
  switch (m) {
    case DiscoveryMethod::kSetCover: return "sc";
    case DiscoveryMethod::kSampling: return "fs";
    case DiscoveryMethod::kExact: return "exact";
  }
  return "?";
}

inline DiscoveryMethod parse_method(const std::string& s) {
  if (s == "sc") return DiscoveryMethod::kSetCover;
  if (s == "fs") return DiscoveryMethod::kSampling;
  if (s == "exact") return DiscoveryMethod::kExact;
  throw ArgumentError("unknown method '" + s + "' (expected sc|fs|exact)");
}

/// A gate-vertex set (mode GATE, param = epsilon) or a k-skip cover (mode
/// KSKIP, param = k), with the method that produced it.
struct GateVertexSet {
  std::vector<VertexId> vertices;  // ascending
  CoverMode mode = CoverMode::kGate;
  Hops param = 0;
  DiscoveryMethod method = DiscoveryMethod::kSetCover;
  struct {
    double build_ms = 0;
    std::size_t ground_size = 0;  // |U| covered; 0 for FS, which builds no instance
  } stats;

  std::size_t size() const { return vertices.size(); }
  bool contains(VertexId v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }
};

struct DiscoverOptions {
  bool self_check = true;
  ApspGuard guard{};
  ExactOptions exact{};
};

namespace detail {

inline void self_check(const Graph& g, const GateVertexSet& gs, const DiscoverOptions& opt) {
  if (!opt.self_check) return;
  auto rep = gs.mode == CoverMode::kGate ? check_gate_cover(g, gs.param, gs.vertices, opt.guard)
                                         : check_kskip_cover(g, gs.param, gs.vertices, opt.guard);
  if (!rep.pass) {
    const auto& v = rep.violations.front();
    throw SelfCheckError(std::string(to_string(gs.mode)) + " set from " + to_string(gs.method) +
                         " failed " + rep.check + " with " +
                         std::to_string(rep.violation_count) + " violations, first (" +
                         std::to_string(v.u) + "," + std::to_string(v.v) + ")");
  }
}

}  // namespace detail

/// Gate-vertex set via the set-cover reduction: BFS instance construction
/// followed by the greedy price rule.
inline GateVertexSet discover_sc(const Graph& g, Hops epsilon, DiscoverOptions opt = {}) {
  Stopwatch clock;
  auto inst = build_instance_bfs(g, epsilon);
  auto sol = greedy_solve(inst);
  GateVertexSet gs;
  gs.vertices = std::move(sol.vertices);
  gs.mode = CoverMode::kGate;
  gs.param = epsilon;
  gs.method = DiscoveryMethod::kSetCover;
  gs.stats.build_ms = clock.ms();
  gs.stats.ground_size = inst.ground.size();
  detail::self_check(g, gs, opt);
  return gs;
}

/// Adaptive-sampling baseline. Vertices are visited by descending degree
/// (ascending id on ties); u joins the set when some root-to-leaf path of its
/// depth-(epsilon-2) shortest-path tree avoids every vertex already chosen.
/// The result is an (epsilon-1)-skip cover and therefore a gate set at epsilon.
inline GateVertexSet discover_fs(const Graph& g, Hops epsilon, DiscoverOptions opt = {}) {
  if (epsilon < 3)
    throw ArgumentError("discover_fs needs epsilon >= 3, got " + std::to_string(epsilon));
  Stopwatch clock;
  const std::size_t n = g.num_vertices();
  const Hops depth = epsilon - 2;

  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });

  std::vector<char> chosen(n, 0), covered(n, 0);
  BfsWorkspace bfs(n);
  for (VertexId u : order) {
    auto tree = bfs.run(g, u, depth);
    bool uncovered_leaf = false;
    covered[u] = chosen[u];
    for (std::size_t i = 1; i < tree.size() && !uncovered_leaf; ++i) {
      VertexId w = tree[i];
      const Hops lw = bfs.level(w);
      // Tree parent: smallest-id neighbor one level up.
      VertexId parent = w;
      for (VertexId z : g.neighbors(w))
        if (bfs.level(z) + 1 == lw) {
          parent = z;
          break;
        }
      covered[w] = covered[parent] || chosen[w];
      if (lw == depth && !covered[w]) uncovered_leaf = true;
    }
    if (uncovered_leaf) chosen[u] = 1;
  }

  GateVertexSet gs;
  for (VertexId v = 0; v < n; ++v)
    if (chosen[v]) gs.vertices.push_back(v);
  gs.mode = CoverMode::kGate;
  gs.param = epsilon;
  gs.method = DiscoveryMethod::kSampling;
  gs.stats.build_ms = clock.ms();
  detail::self_check(g, gs, opt);
  return gs;
}

/// k-skip cover through the oracle-built KSKIP instance, solved greedily
/// (kSetCover) or to optimality (kExact).
inline GateVertexSet discover_kskip(const Graph& g, Hops k, DiscoveryMethod method,
                                    DiscoverOptions opt = {}) {
  if (k < 2) throw ArgumentError("discover_kskip needs k >= 2, got " + std::to_string(k));
  if (method == DiscoveryMethod::kSampling)
    throw ArgumentError("discover_kskip supports methods sc and exact");
  Stopwatch clock;
  auto dist = apsp_oracle(g, opt.guard);
  auto inst = build_instance_oracle(g, dist, k, CoverMode::kKSkip);
  auto sol = method == DiscoveryMethod::kExact ? exact_solve(inst, opt.exact) : greedy_solve(inst);
  GateVertexSet gs;
  gs.vertices = std::move(sol.vertices);
  gs.mode = CoverMode::kKSkip;
  gs.param = k;
  gs.method = method;
  gs.stats.build_ms = clock.ms();
  gs.stats.ground_size = inst.ground.size();
  if (opt.self_check) {
    auto rep = check_kskip_cover(dist, k, gs.vertices);
    if (!rep.pass)
      throw SelfCheckError("kskip cover failed self-check with " +
                           std::to_string(rep.violation_count) + " violations");
  }
  return gs;
}

/// Exact minimum gate-vertex set (tiny graphs only).
inline GateVertexSet discover_exact_gates(const Graph& g, Hops epsilon, DiscoverOptions opt = {}) {
  Stopwatch clock;
  auto inst = build_instance_bfs(g, epsilon);
  auto sol = exact_solve(inst, opt.exact);
  GateVertexSet gs;
  gs.vertices = std::move(sol.vertices);
  gs.mode = CoverMode::kGate;
  gs.param = epsilon;
  gs.method = DiscoveryMethod::kExact;
  gs.stats.build_ms = clock.ms();
  gs.stats.ground_size = inst.ground.size();
  detail::self_check(g, gs, opt);
  return gs;
}

/// Header "mode param method size", then one vertex label per line.
inline void write_gate_set(std::ostream& out, const Graph& g, const GateVertexSet& gs) {
  out << to_string(gs.mode) << ' ' << gs.param << ' ' << to_string(gs.method) << ' ' << gs.size()
      << '\n';
  for (VertexId v : gs.vertices) out << g.label(v) << '\n';
}

inline GateVertexSet read_gate_set(std::istream& in, const Graph& g) {
  std::string line, mode, method;
  std::size_t size = 0;
  if (!std::getline(in, line)) throw ParseError(1, "missing gate set header");
  GateVertexSet gs;
  {
    std::istringstream h(line);
    if (!(h >> mode >> gs.param >> method >> size)) throw ParseError(1, "bad gate set header");
    gs.mode = parse_cover_mode(mode);
    gs.method = parse_method(method);
  }
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto id = g.find_label(line);
    if (!id) throw ParseError(line_no, "unknown vertex label '" + line + "'");
    gs.vertices.push_back(*id);
  }
  if (gs.vertices.size() != size)
    throw ParseError(line_no, "header announces " + std::to_string(size) + " vertices, found " +
                                  std::to_string(gs.vertices.size()));
  std::sort(gs.vertices.begin(), gs.vertices.end());
  gs.vertices.erase(std::unique(gs.vertices.begin(), gs.vertices.end()), gs.vertices.end());
  return gs;
}

}  // namespace gatesimp
