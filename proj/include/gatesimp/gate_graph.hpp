#pragma once

#include <algorithm>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <queue>
#include <span>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gatesimp/common.hpp"
#include "gatesimp/gates.hpp"
#include "gatesimp/graph.hpp"

namespace gatesimp {

struct WeightedEdge {
  VertexId u = 0;  // u < v, original vertex ids
  VertexId v = 0;
  Hops w = 0;
  auto operator<=>(const WeightedEdge&) const = default;
};

/// Weighted undirected graph over a subset of the original vertices.
/// Internally vertices are addressed by their slot in the ascending vertex
/// list; the public API speaks original ids.
class WeightedGraph {
 public:
  struct Arc {
    std::uint32_t to;  // slot
    Hops w;
  };

  WeightedGraph() = default;

  WeightedGraph(std::vector<VertexId> vertices, std::vector<WeightedEdge> edges)
      : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
      throw ArgumentError("weighted graph: duplicate vertex");
    for (auto& e : edges_) {
      if (e.u == e.v) throw ArgumentError("weighted graph: self-loop at " + std::to_string(e.u));
      if (e.w < 1) throw ArgumentError("weighted graph: non-positive weight");
      if (e.u > e.v) std::swap(e.u, e.v);
      if (!slot(e.u) || !slot(e.v)) throw ArgumentError("weighted graph: edge endpoint not a vertex");
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 1; i < edges_.size(); ++i)
      if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
        if (edges_[i].w != edges_[i - 1].w)
          throw ArgumentError("weighted graph: conflicting weights on one edge");
      }
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    adj_.resize(vertices_.size());
    for (const auto& e : edges_) {
      auto a = *slot(e.u), b = *slot(e.v);
      adj_[a].push_back({b, e.w});
      adj_[b].push_back({a, e.w});
    }
    for (auto& list : adj_)
      std::sort(list.begin(), list.end(), [](const Arc& x, const Arc& y) { return x.to < y.to; });
  }

  std::span<const VertexId> vertices() const { return vertices_; }
  std::span<const WeightedEdge> edges() const { return edges_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  std::optional<std::uint32_t> slot(VertexId v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) return std::nullopt;
    return static_cast<std::uint32_t>(it - vertices_.begin());
  }
  VertexId vertex_at(std::uint32_t s) const { return vertices_[s]; }
  std::span<const Arc> arcs(std::uint32_t s) const { return adj_[s]; }

  bool has_edge(VertexId u, VertexId v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), WeightedEdge{u, v, 0},
                              [](const WeightedEdge& a, const WeightedEdge& b) {
                                return std::tie(a.u, a.v) < std::tie(b.u, b.v);
                              });
  }

 private:
  std::vector<VertexId> vertices_;
  std::vector<WeightedEdge> edges_;
  std::vector<std::vector<Arc>> adj_;
};

/// Stage 1: connect every gate pair closer than epsilon, weighted by its
/// distance in g. One depth-(epsilon-1) BFS per gate.
inline WeightedGraph build_local_gate_graph(const Graph& g, const GateVertexSet& gates,
                                            Hops epsilon) {
  if (gates.mode != CoverMode::kGate || gates.param != epsilon)
    throw ArgumentError("local gate graph needs a gate set built for epsilon=" +
                        std::to_string(epsilon));
  for (VertexId x : gates.vertices)
    if (x >= g.num_vertices()) throw ArgumentError("gate " + std::to_string(x) + " out of range");
  const std::size_t k = gates.vertices.size();
  std::vector<char> is_gate(g.num_vertices(), 0);
  for (VertexId x : gates.vertices) is_gate[x] = 1;

  const unsigned workers = thread_count();
  std::vector<BfsWorkspace> ws(workers, BfsWorkspace(g.num_vertices()));
  std::vector<std::vector<WeightedEdge>> found(k);
  parallel_for(
      k,
      [&](unsigned w, std::size_t i) {
        const VertexId u = gates.vertices[i];
        for (VertexId v : ws[w].run(g, u, epsilon - 1))
          if (v > u && is_gate[v]) found[i].push_back({u, v, ws[w].level(v)});
      },
      workers);
  std::vector<WeightedEdge> edges;
  for (auto& f : found) edges.insert(edges.end(), f.begin(), f.end());
  return WeightedGraph(gates.vertices, std::move(edges));
}

/// Stage 2: drop every edge (u,v) that has a common neighbor x with
/// w(u,x) + w(x,v) = w(u,v). All flags are computed against the input edge
/// set and applied together.
inline WeightedGraph sparsify(const WeightedGraph& wg) {
  const auto edges = wg.edges();
  std::vector<char> redundant(edges.size(), 0);
  parallel_for(edges.size(), [&](unsigned, std::size_t i) {
    const auto& e = edges[i];
    auto a = wg.arcs(*wg.slot(e.u));
    auto b = wg.arcs(*wg.slot(e.v));
    std::size_t p = 0, q = 0;
    while (p < a.size() && q < b.size()) {
      if (a[p].to < b[q].to) {
        ++p;
      } else if (b[q].to < a[p].to) {
        ++q;
      } else {
        if (a[p].w + b[q].w == e.w) {
          redundant[i] = 1;
          return;
        }
        ++p;
        ++q;
      }
    }
  });
  std::vector<WeightedEdge> kept;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (!redundant[i]) kept.push_back(edges[i]);
  return WeightedGraph({wg.vertices().begin(), wg.vertices().end()}, std::move(kept));
}

/// Single-source shortest paths over slots. Ties on distance resolve to the
/// smaller predecessor slot so the returned trees are deterministic.
struct ShortestPathTree {
  std::vector<Hops> dist;
  std::vector<std::uint32_t> parent;  // UINT32_MAX at the root / unreached
};

inline ShortestPathTree gate_shortest_paths(const WeightedGraph& wg, std::uint32_t source) {
  const std::size_t k = wg.num_vertices();
  ShortestPathTree t{std::vector<Hops>(k, kUnreachable), std::vector<std::uint32_t>(k, UINT32_MAX)};
  using Item = std::pair<Hops, std::uint32_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  t.dist[source] = 0;
  heap.push({0, source});
  while (!heap.empty()) {
    auto [d, s] = heap.top();
    heap.pop();
    if (d != t.dist[s]) continue;
    for (const auto& arc : wg.arcs(s)) {
      Hops nd = d + arc.w;
      if (nd < t.dist[arc.to] || (nd == t.dist[arc.to] && s < t.parent[arc.to])) {
        bool improved = nd < t.dist[arc.to];
        t.dist[arc.to] = nd;
        t.parent[arc.to] = s;
        if (improved) heap.push({nd, arc.to});
      }
    }
  }
  return t;
}

/// d(x,y|G*) between two gate vertices (original ids).
inline Hops gate_dijkstra(const WeightedGraph& wg, VertexId x, VertexId y) {
  auto sx = wg.slot(x), sy = wg.slot(y);
  if (!sx || !sy)
    throw ArgumentError("gate_dijkstra: vertex " + std::to_string(!sx ? x : y) +
                        " is not in the gate graph");
  if (*sx == *sy) return 0;
  return gate_shortest_paths(wg, *sx).dist[*sy];
}

enum class RouteKind { kLocal, kViaGates, kUnreachable };

inline const char* to_string(RouteKind r) {
  switch (r) {
    case RouteKind::kLocal: return "LOCAL";
    case RouteKind::kViaGates: return "VIA_GATES";
    case RouteKind::kUnreachable: return "UNREACHABLE";
  }
  return "?";
}

struct QueryResult {
  Hops distance = kUnreachable;
  RouteKind route = RouteKind::kUnreachable;
  std::optional<std::pair<VertexId, VertexId>> witness;  // (x, y) for VIA_GATES
};

/// Answers d(u,v) as either a local BFS hit (d < epsilon) or
///   min over gates x near u, y near v of d(u,x) + d(x,y|G*) + d(y,v),
/// where "near" means fewer than epsilon hops (0 when the endpoint is a gate).
///
/// The x-side minimum is a multi-source Dijkstra over the gate graph seeded
/// with d(u,x), so one search serves every target of a given source.
class DistanceQuery {
 public:
  DistanceQuery(const Graph& g, const WeightedGraph& wg, Hops epsilon, bool precompute_balls = false)
      : g_(g), wg_(wg), epsilon_(epsilon), bfs_(g.num_vertices()) {
    if (epsilon < 1) throw ArgumentError("epsilon must be >= 1");
    for (VertexId x : wg.vertices())
      if (x >= g.num_vertices()) throw ArgumentError("gate " + std::to_string(x) + " out of range");
    if (precompute_balls) materialize_balls();
  }

  Hops epsilon() const { return epsilon_; }

  /// Gate vertices within epsilon-1 hops of v with their distances.
  std::vector<std::pair<std::uint32_t, Hops>> gate_ball(VertexId v) {
    if (!balls_.empty()) return balls_[v];
    std::vector<std::pair<std::uint32_t, Hops>> out;
    for (VertexId w : bfs_.run(g_, v, epsilon_ - 1))
      if (auto s = wg_.slot(w)) out.emplace_back(*s, bfs_.level(w));
    return out;
  }

  QueryResult query(VertexId u, VertexId v) {
    check_vertex(u);
    check_vertex(v);
    for (VertexId w : bfs_.run(g_, u, epsilon_ - 1))
      if (w == v) return {bfs_.level(w), RouteKind::kLocal, std::nullopt};
    auto seeded = seed_from(u);
    return finish(seeded, gate_ball(v));
  }

  /// query(u, v) for every v at once.
  std::vector<QueryResult> query_all(VertexId u) {
    check_vertex(u);
    if (balls_.empty()) materialize_balls();
    std::vector<QueryResult> out(g_.num_vertices());
    auto seeded = seed_from(u);
    std::vector<char> local(g_.num_vertices(), 0);
    for (VertexId w : bfs_.run(g_, u, epsilon_ - 1)) {
      out[w] = {bfs_.level(w), RouteKind::kLocal, std::nullopt};
      local[w] = 1;
    }
    for (VertexId v = 0; v < g_.num_vertices(); ++v)
      if (!local[v]) out[v] = finish(seeded, balls_[v]);
    return out;
  }

 private:
  struct Seeded {
    std::vector<Hops> dist;              // min_x d(u,x) + d(x,y|G*) per slot y
    std::vector<std::uint32_t> origin;   // the minimizing x slot
  };

  void check_vertex(VertexId v) const {
    if (v >= g_.num_vertices()) throw ArgumentError("vertex " + std::to_string(v) + " out of range");
  }

  void materialize_balls() {
    balls_.assign(g_.num_vertices(), {});
    for (std::uint32_t s = 0; s < wg_.num_vertices(); ++s)
      for (VertexId w : bfs_.run(g_, wg_.vertex_at(s), epsilon_ - 1))
        balls_[w].emplace_back(s, bfs_.level(w));
  }

  // Dijkstra on (distance, origin vertex) keys: lexicographic keys are still
  // monotone along arcs, so the smallest-origin witness falls out for free.
  Seeded seed_from(VertexId u) {
    const std::size_t k = wg_.num_vertices();
    Seeded s{std::vector<Hops>(k, kUnreachable), std::vector<std::uint32_t>(k, UINT32_MAX)};
    using Item = std::tuple<Hops, std::uint32_t, std::uint32_t>;  // dist, origin, slot
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    auto relax = [&](std::uint32_t y, Hops d, std::uint32_t origin) {
      if (d < s.dist[y] || (d == s.dist[y] && origin < s.origin[y])) {
        s.dist[y] = d;
        s.origin[y] = origin;
        heap.push({d, origin, y});
      }
    };
    for (VertexId w : bfs_.run(g_, u, epsilon_ - 1))
      if (auto x = wg_.slot(w)) relax(*x, bfs_.level(w), *x);
    while (!heap.empty()) {
      auto [d, origin, y] = heap.top();
      heap.pop();
      if (d != s.dist[y] || origin != s.origin[y]) continue;
      for (const auto& arc : wg_.arcs(y)) relax(arc.to, d + arc.w, origin);
    }
    return s;
  }

  QueryResult finish(const Seeded& s, const std::vector<std::pair<std::uint32_t, Hops>>& ball) const {
    QueryResult best;
    std::uint32_t bx = UINT32_MAX, by = UINT32_MAX;
    for (auto [y, dy] : ball) {
      if (s.dist[y] == kUnreachable) continue;
      Hops total = s.dist[y] + dy;
      if (total < best.distance ||
          (total == best.distance && std::pair(s.origin[y], y) < std::pair(bx, by))) {
        best.distance = total;
        bx = s.origin[y];
        by = y;
      }
    }
    if (best.distance != kUnreachable) {
      best.route = RouteKind::kViaGates;
      best.witness = std::pair(wg_.vertex_at(bx), wg_.vertex_at(by));
    }
    return best;
  }

  const Graph& g_;
  const WeightedGraph& wg_;
  Hops epsilon_;
  BfsWorkspace bfs_;
  std::vector<std::vector<std::pair<std::uint32_t, Hops>>> balls_;
};

/// One-shot query. gates must be the vertex set wg was built on.
inline QueryResult query_distance(const Graph& g, const GateVertexSet& gates,
                                  const WeightedGraph& wg, VertexId u, VertexId v, Hops epsilon) {
  if (!std::equal(gates.vertices.begin(), gates.vertices.end(), wg.vertices().begin(),
                  wg.vertices().end()))
    throw ArgumentError("query_distance: gate set does not match the gate graph");
  DistanceQuery q(g, wg, epsilon);
  return q.query(u, v);
}

/// "u v w" lines by label.
inline void write_weighted_edges(std::ostream& out, const Graph& g, const WeightedGraph& wg) {
  out << "# gates=" << wg.num_vertices() << " edges=" << wg.num_edges() << '\n';
  for (const auto& e : wg.edges()) out << g.label(e.u) << ' ' << g.label(e.v) << ' ' << e.w << '\n';
}

/// Reads "u v w" lines; the vertex set is the given gate list.
inline WeightedGraph read_weighted_edges(std::istream& in, const Graph& g,
                                         std::vector<VertexId> gates) {
  std::vector<WeightedEdge> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream f(line);
    std::string a, b, extra;
    long long w = 0;
    if (!(f >> a >> b >> w) || (f >> extra) || w < 1)
      throw ParseError(line_no, "expected 'u v w' with positive integer w");
    auto u = g.find_label(a), v = g.find_label(b);
    if (!u || !v) throw ParseError(line_no, "unknown vertex label");
    edges.push_back({*u, *v, static_cast<Hops>(w)});
  }
  return WeightedGraph(std::move(gates), std::move(edges));
}

}  // namespace gatesimp
