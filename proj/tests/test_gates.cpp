#include <catch_amalgamated.hpp>

#include "gatesimp/cover_check.hpp"
#include "gatesimp/gates.hpp"
#include "gatesimp/generators.hpp"
#include "support/corpus.hpp"

using namespace gatesimp;

TEST_CASE("discover_sc on fixtures") {
  auto p = discover_sc(fixtures::path(5), 3);
  CHECK(p.vertices == std::vector<VertexId>{2});
  CHECK(p.mode == CoverMode::kGate);
  CHECK(p.param == 3);
  CHECK(p.method == DiscoveryMethod::kSetCover);
  CHECK(p.stats.ground_size == 2);

  CHECK(discover_sc(fixtures::complete(7), 2).vertices.empty());
  CHECK(discover_sc(fixtures::path(4), 5).vertices.empty());
  CHECK(discover_sc(fixtures::cycle(6), 3).size() == 2);
  CHECK_THROWS_AS(discover_sc(fixtures::path(4), 1), ArgumentError);
}

TEST_CASE("discover_fs on fixtures") {
  auto p = discover_fs(fixtures::path(5), 3);
  CHECK(p.vertices == std::vector<VertexId>{1, 2, 3});
  CHECK(p.method == DiscoveryMethod::kSampling);
  CHECK(check_kskip_cover(fixtures::path(5), 2, p.vertices).pass);

  auto star = discover_fs(fixtures::star(5), 3);
  CHECK(star.vertices == std::vector<VertexId>{0});
  CHECK(check_kskip_cover(fixtures::star(5), 2, star.vertices).pass);

  auto edge = fixtures::path(2);
  auto e = discover_fs(edge, 3);
  CHECK(e.vertices == std::vector<VertexId>{0});
  CHECK(check_kskip_cover(edge, 2, e.vertices).pass);
  CHECK(check_gate_cover(edge, 3, e.vertices).pass);

  CHECK_THROWS_AS(discover_fs(edge, 2), ArgumentError);
}

TEST_CASE("discover_kskip on fixtures") {
  auto p = discover_kskip(fixtures::path(5), 3, DiscoveryMethod::kSetCover);
  CHECK(p.vertices == std::vector<VertexId>{2});
  CHECK(p.mode == CoverMode::kKSkip);

  auto tri = discover_kskip(fixtures::complete(3), 2, DiscoveryMethod::kExact);
  CHECK(tri.size() == 2);

  CHECK(discover_kskip(fixtures::path(4), 5, DiscoveryMethod::kSetCover).vertices.empty());
  CHECK_THROWS_AS(discover_kskip(fixtures::path(4), 1, DiscoveryMethod::kSetCover), ArgumentError);
  CHECK_THROWS_AS(discover_kskip(fixtures::path(4), 3, DiscoveryMethod::kSampling), ArgumentError);
}

TEST_CASE("discover_exact_gates finds the minimum") {
  CHECK(discover_exact_gates(fixtures::cycle(6), 3).size() == 2);
  CHECK(discover_exact_gates(fixtures::path(5), 2).vertices == std::vector<VertexId>{1, 2, 3});
}

TEST_CASE("self-check can be switched off") {
  auto g = gen_er(200, 2, 4);
  auto a = discover_sc(g, 3, {.self_check = false});
  auto b = discover_sc(g, 3);
  CHECK(a.vertices == b.vertices);
  CHECK_THROWS_AS(discover_sc(g, 3, {.self_check = true, .guard = {100}}), ResourceError);
}

TEST_CASE("discovered sets validate and satisfy the cross lemmas") {
  auto graphs = corpus::random_graphs(36, 100, 300, {2, 3, 4}, 41);
  std::size_t i = 0;
  for (const auto& [name, g] : graphs) {
    const Hops eps = 3 + static_cast<Hops>(i++ % 3);
    INFO(name << " eps=" << eps);
    auto dist = apsp_oracle(g);
    auto sc = discover_sc(g, eps, {.self_check = false});
    auto fs = discover_fs(g, eps, {.self_check = false});
    REQUIRE(check_gate_cover(dist, eps, sc.vertices).pass);
    REQUIRE(check_gate_cover(dist, eps, fs.vertices).pass);
    // gate set at eps is an (eps+1)-skip cover
    REQUIRE(check_kskip_cover(dist, eps + 1, sc.vertices).pass);
    // FS is an (eps-1)-skip cover by construction
    REQUIRE(check_kskip_cover(dist, eps - 1, fs.vertices).pass);
    if (g.num_vertices() <= 200) {
      auto ks = discover_kskip(g, eps, DiscoveryMethod::kSetCover, {.self_check = false});
      REQUIRE(check_kskip_cover(dist, eps, ks.vertices).pass);
      REQUIRE(check_gate_cover(dist, eps + 1, ks.vertices).pass);
    }
  }
}

TEST_CASE("SC is usually smaller than FS") {
  std::size_t wins = 0, runs = 0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    auto g = gen_er(400, 3, 100 + s);
    auto sc = discover_sc(g, 3, {.self_check = false});
    auto fs = discover_fs(g, 3, {.self_check = false});
    wins += sc.size() <= fs.size();
    ++runs;
  }
  CHECK(wins * 10 >= runs * 8);
}
