#include <catch_amalgamated.hpp>

#include <set>
#include <sstream>

#include "gatesimp/cover_instance.hpp"
#include "gatesimp/generators.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace gatesimp;

namespace {

std::set<PairKey> pairs_of(const CoverInstance& inst, VertexId x) {
  std::set<PairKey> out;
  for (auto e : inst.candidates[x]) out.insert(inst.ground[e]);
  return out;
}

std::set<PairKey> pairs(std::initializer_list<std::pair<VertexId, VertexId>> ps) {
  std::set<PairKey> out;
  for (auto [a, b] : ps) out.insert(PairKey::make(a, b));
  return out;
}

// Candidate sets computed by enumerating every shortest path explicitly.
void require_matches_enumeration(const Graph& g, const CoverInstance& inst, int target,
                                 bool endpoints) {
  auto d = oracle::floyd(g);
  std::set<PairKey> ground;
  std::vector<std::set<PairKey>> cand(g.num_vertices());
  for (VertexId u = 0; u < g.num_vertices(); ++u)
    for (VertexId v = u + 1; v < g.num_vertices(); ++v) {
      if (d[u][v] != target) continue;
      ground.insert({u, v});
      auto inner = oracle::interiors_by_enumeration(g, u, v, target);
      if (endpoints) inner.insert({u, v});
      for (VertexId x : inner) cand[x].insert({u, v});
    }
  REQUIRE(std::set<PairKey>(inst.ground.begin(), inst.ground.end()) == ground);
  for (VertexId x = 0; x < g.num_vertices(); ++x) REQUIRE(pairs_of(inst, x) == cand[x]);
}

}  // namespace

TEST_CASE("PairKey canonicalizes") {
  CHECK(PairKey::make(4, 1) == PairKey{1, 4});
  CHECK_THROWS_AS(PairKey::make(2, 2), ArgumentError);
}

TEST_CASE("build_instance_bfs on the 5-path") {
  auto inst = build_instance_bfs(fixtures::path(5), 3);
  CHECK(inst.mode == CoverMode::kGate);
  CHECK(inst.ground == std::vector<PairKey>{{0, 3}, {1, 4}});
  CHECK(pairs_of(inst, 0).empty());
  CHECK(pairs_of(inst, 1) == pairs({{0, 3}}));
  CHECK(pairs_of(inst, 2) == pairs({{0, 3}, {1, 4}}));
  CHECK(pairs_of(inst, 3) == pairs({{1, 4}}));
  CHECK(pairs_of(inst, 4).empty());
  require_matches_enumeration(fixtures::path(5), inst, 3, false);
}

TEST_CASE("build_instance_bfs on the 6-cycle sees both shortest paths") {
  auto g = fixtures::cycle(6);
  auto inst = build_instance_bfs(g, 3);
  CHECK(inst.ground.size() == 3);
  for (VertexId x = 0; x < 6; ++x) CHECK(inst.candidates[x].size() == 2);
  require_matches_enumeration(g, inst, 3, false);
}

TEST_CASE("build_instance_bfs edge cases") {
  auto inst = build_instance_bfs(fixtures::complete(6), 2);
  CHECK(inst.ground.empty());
  for (const auto& c : inst.candidates) CHECK(c.empty());
  CHECK(build_instance_bfs(fixtures::path(4), 4).ground.empty());
  CHECK_THROWS_AS(build_instance_bfs(fixtures::path(4), 1), ArgumentError);
  CHECK_THROWS_AS(build_instance_bfs(fixtures::path(4), 0), ArgumentError);
}

TEST_CASE("build_instance_oracle in k-skip mode allows endpoints") {
  auto inst = build_instance_oracle(fixtures::path(5), 3, CoverMode::kKSkip);
  CHECK(inst.ground == std::vector<PairKey>{{0, 2}, {1, 3}, {2, 4}});
  CHECK(pairs_of(inst, 2) == pairs({{0, 2}, {1, 3}, {2, 4}}));
  CHECK(pairs_of(inst, 0) == pairs({{0, 2}}));

  auto tri = build_instance_oracle(fixtures::complete(3), 2, CoverMode::kKSkip);
  CHECK(tri.ground.size() == 3);
  CHECK(pairs_of(tri, 0) == pairs({{0, 1}, {0, 2}}));
  CHECK(pairs_of(tri, 1) == pairs({{0, 1}, {1, 2}}));
  CHECK(pairs_of(tri, 2) == pairs({{0, 2}, {1, 2}}));

  CHECK_THROWS_AS(build_instance_oracle(fixtures::path(3), 1, CoverMode::kKSkip), ArgumentError);
  CHECK_THROWS_AS(build_instance_oracle(fixtures::path(3), 1, CoverMode::kGate), ArgumentError);
}

TEST_CASE("both builders match shortest-path enumeration on small graphs") {
  auto graphs = corpus::random_graphs(30, 8, 14, {1.0, 1.3, 1.6}, 17);
  for (const auto& [name, g] : graphs) {
    INFO(name);
    for (Hops eps : {2u, 3u, 4u}) {
      require_matches_enumeration(g, build_instance_bfs(g, eps), static_cast<int>(eps), false);
      require_matches_enumeration(g, build_instance_oracle(g, eps, CoverMode::kGate),
                                  static_cast<int>(eps), false);
      require_matches_enumeration(g, build_instance_oracle(g, eps, CoverMode::kKSkip),
                                  static_cast<int>(eps) - 1, true);
    }
  }
}

TEST_CASE("BFS builder equals the oracle builder on a 100-graph corpus") {
  auto graphs = corpus::random_graphs(100, 60, 300, {2, 3, 4}, 5);
  std::size_t i = 0;
  for (const auto& [name, g] : graphs) {
    INFO(name);
    const Hops eps = 3 + static_cast<Hops>(i++ % 3);
    auto a = build_instance_bfs(g, eps);
    auto b = build_instance_oracle(g, eps, CoverMode::kGate);
    REQUIRE(a.ground == b.ground);
    REQUIRE(a.candidates == b.candidates);
  }
}

TEST_CASE("build_instance_bfs is independent of the worker count") {
  auto g = gen_er(250, 2, 8);
  auto many = build_instance_bfs(g, 4);
  setenv("GATESIMP_THREADS", "1", 1);
  auto one = build_instance_bfs(g, 4);
  unsetenv("GATESIMP_THREADS");
  CHECK(one == many);
}
