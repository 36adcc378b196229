#include <catch_amalgamated.hpp>

#include "gatesimp/distance_oracle.hpp"
#include "gatesimp/gate_graph.hpp"
#include "gatesimp/generators.hpp"
#include "support/corpus.hpp"

using namespace gatesimp;

namespace {

GateVertexSet gate_set(std::vector<VertexId> vs, Hops eps) {
  GateVertexSet gs;
  gs.vertices = std::move(vs);
  gs.param = eps;
  return gs;
}

std::vector<WeightedEdge> edges_of(const WeightedGraph& wg) {
  return {wg.edges().begin(), wg.edges().end()};
}

}  // namespace

TEST_CASE("build_local_gate_graph") {
  auto p5 = fixtures::path(5);
  auto wg = build_local_gate_graph(p5, gate_set({0, 1, 2}, 3), 3);
  CHECK(edges_of(wg) == std::vector<WeightedEdge>{{0, 1, 1}, {0, 2, 2}, {1, 2, 1}});

  CHECK(build_local_gate_graph(p5, gate_set({2}, 3), 3).num_edges() == 0);

  auto c6 = build_local_gate_graph(fixtures::cycle(6), gate_set({0, 2, 4}, 3), 3);
  CHECK(edges_of(c6) == std::vector<WeightedEdge>{{0, 2, 2}, {0, 4, 2}, {2, 4, 2}});

  CHECK_THROWS_AS(build_local_gate_graph(p5, gate_set({2}, 4), 3), ArgumentError);
  auto skip = gate_set({2}, 3);
  skip.mode = CoverMode::kKSkip;
  CHECK_THROWS_AS(build_local_gate_graph(p5, skip, 3), ArgumentError);
}

TEST_CASE("Stage-1 edges carry true distances below epsilon") {
  auto g = gen_er(300, 2, 12);
  auto dist = apsp_oracle(g);
  auto gates = discover_sc(g, 4, {.self_check = false});
  auto wg = build_local_gate_graph(g, gates, 4);
  std::size_t expected = 0;
  for (std::size_t i = 0; i < gates.size(); ++i)
    for (std::size_t j = i + 1; j < gates.size(); ++j)
      expected += dist(gates.vertices[i], gates.vertices[j]) < 4;
  CHECK(wg.num_edges() == expected);
  for (const auto& e : wg.edges()) {
    REQUIRE(e.w == dist(e.u, e.v));
    REQUIRE(e.w < 4);
  }
}

TEST_CASE("sparsify") {
  WeightedGraph a({0, 1, 2}, {{0, 1, 1}, {1, 2, 1}, {0, 2, 2}});
  CHECK(edges_of(sparsify(a)) == std::vector<WeightedEdge>{{0, 1, 1}, {1, 2, 1}});

  WeightedGraph tri({0, 2, 4}, {{0, 2, 2}, {2, 4, 2}, {0, 4, 2}});
  CHECK(edges_of(sparsify(tri)) == edges_of(tri));

  WeightedGraph empty;
  CHECK(sparsify(empty).num_edges() == 0);

  // Flags are computed on the input: (0,3) relies on (0,2), which is itself
  // removed, yet the detour 0-1-2-3 keeps every distance.
  WeightedGraph chain({0, 1, 2, 3}, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 2, 2}, {1, 3, 2}, {0, 3, 3}});
  auto s = sparsify(chain);
  CHECK(edges_of(s) == std::vector<WeightedEdge>{{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
  CHECK(edges_of(sparsify(s)) == edges_of(s));
}

TEST_CASE("WeightedGraph rejects malformed input") {
  CHECK_THROWS_AS(WeightedGraph({0, 1}, {{0, 0, 1}}), ArgumentError);
  CHECK_THROWS_AS(WeightedGraph({0, 1}, {{0, 1, 0}}), ArgumentError);
  CHECK_THROWS_AS(WeightedGraph({0, 1}, {{0, 2, 1}}), ArgumentError);
  CHECK_THROWS_AS(WeightedGraph({0, 1}, {{0, 1, 1}, {1, 0, 2}}), ArgumentError);
  CHECK(WeightedGraph({0, 1}, {{0, 1, 1}, {1, 0, 1}}).num_edges() == 1);
}

TEST_CASE("gate_dijkstra") {
  WeightedGraph wg({0, 1, 2, 7}, {{0, 1, 1}, {1, 2, 1}});
  CHECK(gate_dijkstra(wg, 0, 2) == 2);
  CHECK(gate_dijkstra(wg, 1, 1) == 0);
  CHECK(gate_dijkstra(wg, 0, 7) == kUnreachable);
  CHECK_THROWS_AS(gate_dijkstra(wg, 0, 5), ArgumentError);
}

TEST_CASE("query_distance on the 5-path") {
  auto g = fixtures::path(5);
  auto gates = gate_set({2}, 3);
  auto wg = build_local_gate_graph(g, gates, 3);

  auto r03 = query_distance(g, gates, wg, 0, 3, 3);
  CHECK(r03.distance == 3);
  CHECK(r03.route == RouteKind::kViaGates);
  CHECK(r03.witness == std::pair<VertexId, VertexId>{2, 2});

  auto r04 = query_distance(g, gates, wg, 0, 4, 3);
  CHECK(r04.distance == 4);
  CHECK(r04.witness == std::pair<VertexId, VertexId>{2, 2});

  auto r01 = query_distance(g, gates, wg, 0, 1, 3);
  CHECK(r01.distance == 1);
  CHECK(r01.route == RouteKind::kLocal);

  CHECK_THROWS_AS(query_distance(g, gates, wg, 0, 9, 3), ArgumentError);
  CHECK_THROWS_AS(query_distance(g, gate_set({1}, 3), wg, 0, 4, 3), ArgumentError);
}

TEST_CASE("query_distance across components") {
  auto g = Graph::from_edges(6, std::vector<Edge>{{0, 1}, {1, 2}, {3, 4}, {4, 5}});
  auto gates = gate_set({1, 4}, 2);
  auto wg = build_local_gate_graph(g, gates, 2);
  auto r = query_distance(g, gates, wg, 0, 5, 2);
  CHECK(r.distance == kUnreachable);
  CHECK(r.route == RouteKind::kUnreachable);
}

TEST_CASE("query witnesses satisfy the route invariant") {
  auto graphs = corpus::random_graphs(10, 80, 200, {2, 3}, 77);
  for (const auto& [name, g] : graphs) {
    INFO(name);
    const Hops eps = 3;
    auto dist = apsp_oracle(g);
    auto gates = discover_sc(g, eps, {.self_check = false});
    auto wg = sparsify(build_local_gate_graph(g, gates, eps));
    DistanceQuery q(g, wg, eps);
    for (VertexId u = 0; u < g.num_vertices(); u += 7) {
      auto all = q.query_all(u);
      for (VertexId v = 0; v < g.num_vertices(); v += 3) {
        auto one = q.query(u, v);
        REQUIRE(one.distance == all[v].distance);
        REQUIRE(one.witness == all[v].witness);
        REQUIRE(one.distance == dist(u, v));
        if (one.route == RouteKind::kViaGates) {
          auto [x, y] = *one.witness;
          REQUIRE(dist(u, x) < eps);
          REQUIRE(dist(y, v) < eps);
          REQUIRE(dist(u, x) + gate_dijkstra(wg, x, y) + dist(y, v) == one.distance);
        }
      }
    }
  }
}
