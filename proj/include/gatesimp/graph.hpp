#pragma once

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gatesimp/common.hpp"

namespace gatesimp {

using Edge = std::pair<VertexId, VertexId>;

/// Immutable unweighted undirected graph in CSR form.
///
/// Vertices are dense ids 0..n-1. Neighbor lists are strictly ascending and
/// symmetric; there are no self-loops or parallel edges. An optional label
/// table maps ids back to the names used in the input file.
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  /// Builds a graph from an arbitrary edge list. Self-loops are dropped and
  /// repeated or reversed edges are merged.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          std::vector<std::string> labels = {}) {
    if (!labels.empty() && labels.size() != n)
      throw ArgumentError("label table size " + std::to_string(labels.size()) +
                          " does not match vertex count " + std::to_string(n));
    std::vector<Edge> canon;
    canon.reserve(edges.size());
    for (auto [a, b] : edges) {
      if (a >= n || b >= n)
        throw ArgumentError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                            ") out of range for n=" + std::to_string(n));
      if (a == b) continue;
      canon.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

    Graph g;
    g.labels_ = std::move(labels);
    g.offsets_.assign(n + 1, 0);
    for (auto [a, b] : canon) {
      ++g.offsets_[a + 1];
      ++g.offsets_[b + 1];
    }
    for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
    g.targets_.resize(g.offsets_[n]);
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    // canon is sorted, so lower neighbors arrive before higher ones and every
    // list fills in ascending order.
    for (auto [a, b] : canon) {
      g.targets_[fill[a]++] = b;
      g.targets_[fill[b]++] = a;
    }
    g.num_edges_ = canon.size();
    return g;
  }

  std::size_t num_vertices() const noexcept { return offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return num_edges_; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

  bool has_edge(VertexId u, VertexId v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  /// Edges with a < b, ascending.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges_);
    for (VertexId u = 0; u < num_vertices(); ++u)
      for (VertexId v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::string label(VertexId v) const {
    return labels_.empty() ? std::to_string(v) : labels_[v];
  }

  /// Resolves an external label to an id. Without a label table the label
  /// must be the decimal id itself.
  std::optional<VertexId> find_label(const std::string& label) const {
    if (labels_.empty()) {
      try {
        std::size_t used = 0;
        unsigned long id = std::stoul(label, &used);
        if (used == label.size() && id < num_vertices()) return static_cast<VertexId>(id);
      } catch (const std::exception&) {
      }
      return std::nullopt;
    }
    if (label_index_.empty()) {
      for (VertexId v = 0; v < labels_.size(); ++v) label_index_.emplace(labels_[v], v);
    }
    auto it = label_index_.find(label);
    if (it == label_index_.end()) return std::nullopt;
    return it->second;
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> targets_;
  std::size_t num_edges_ = 0;
  std::vector<std::string> labels_;
  mutable std::unordered_map<std::string, VertexId> label_index_;
};

struct LoadResult {
  Graph graph;
  std::size_t raw_lines = 0;  // data lines read (comments and blanks excluded)
  std::size_t dedup_edges = 0;
  std::size_t dropped_self_loops = 0;
};

/// Reads a whitespace-separated edge list. '#' lines are comments and labels
/// are densified in order of first appearance.
inline LoadResult load_edge_list(std::istream& in) {
  LoadResult result;
  std::unordered_map<std::string, VertexId> ids;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  auto intern = [&](const std::string& label) {
    auto [it, inserted] = ids.try_emplace(label, static_cast<VertexId>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a >> b) || (fields >> extra))
      throw ParseError(line_no, "expected exactly two vertex labels, got '" + line + "'");
    ++result.raw_lines;
    VertexId u = intern(a);
    VertexId v = intern(b);
    if (u == v) {
      ++result.dropped_self_loops;
      continue;
    }
    edges.emplace_back(u, v);
  }
  const std::size_t n = labels.size();
  result.graph = Graph::from_edges(n, edges, std::move(labels));
  result.dedup_edges = result.graph.num_edges();
  return result;
}

/// Writes "a b" lines (by label) for every undirected edge once.
inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# n=" << g.num_vertices() << " m=" << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) out << g.label(u) << ' ' << g.label(v) << '\n';
}

/// "label<TAB>id" lines.
inline void write_label_table(std::ostream& out, const Graph& g) {
  for (VertexId v = 0; v < g.num_vertices(); ++v) out << g.label(v) << '\t' << v << '\n';
}

/// Reusable bounded BFS scratch space. Only touched entries are reset between
/// runs, so repeated small traversals on a big graph stay cheap.
class BfsWorkspace {
 public:
  explicit BfsWorkspace(std::size_t n = 0) : level_(n, kUnreachable) {}

  /// Visits every vertex within `limit` hops of `source`. The returned span is
  /// in BFS order and stays valid until the next call.
  std::span<const VertexId> run(const Graph& g, VertexId source, Hops limit) {
    if (source >= g.num_vertices())
      throw ArgumentError("bfs source " + std::to_string(source) + " out of range");
    if (level_.size() < g.num_vertices()) level_.assign(g.num_vertices(), kUnreachable);
    for (VertexId v : order_) level_[v] = kUnreachable;
    order_.clear();
    level_[source] = 0;
    order_.push_back(source);
    for (std::size_t head = 0; head < order_.size(); ++head) {
      VertexId u = order_[head];
      Hops lu = level_[u];
      if (lu >= limit) continue;
      for (VertexId w : g.neighbors(u)) {
        if (level_[w] != kUnreachable) continue;
        level_[w] = lu + 1;
        order_.push_back(w);
      }
    }
    return order_;
  }

  Hops level(VertexId v) const { return level_[v]; }
  std::span<const Hops> levels() const { return level_; }

 private:
  std::vector<Hops> level_;
  std::vector<VertexId> order_;
};

/// (vertex, level) for every vertex within `limit` hops, in BFS order.
inline std::vector<std::pair<VertexId, Hops>> bounded_bfs(const Graph& g, VertexId source,
                                                          Hops limit) {
  BfsWorkspace ws(g.num_vertices());
  std::vector<std::pair<VertexId, Hops>> out;
  for (VertexId v : ws.run(g, source, limit)) out.emplace_back(v, ws.level(v));
  return out;
}

// Built-in fixture families.
namespace fixtures {

inline Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (VertexId v = 1; v < n; ++v) e.emplace_back(v - 1, v);
  return Graph::from_edges(n, e);
}

inline Graph cycle(std::size_t n) {
  if (n < 3) throw ArgumentError("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (VertexId v = 0; v < n; ++v) e.emplace_back(v, static_cast<VertexId>((v + 1) % n));
  return Graph::from_edges(n, e);
}

// Center 0 with `leaves` leaves 1..leaves.
inline Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (VertexId v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, e);
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

}  // namespace fixtures

}  // namespace gatesimp
