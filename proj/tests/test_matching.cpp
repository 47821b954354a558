#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mfass/matching.hpp"
#include "test_support.hpp"

using namespace mfass;
using namespace mfass::test;

TEST_CASE("two vertices, one edge") {
  WeightedGraph g;
  g.vertex_count = 2;
  g.edges = {{0, 1, 5}};
  auto m = max_weight_perfect_matching(g);
  REQUIRE(m);
  CHECK(m->weight == 5);
  CHECK(m->pairs() == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("odd vertex count has no perfect matching") {
  WeightedGraph g;
  g.vertex_count = 3;
  g.edges = {{0, 1, 5}, {1, 2, 4}};
  CHECK_FALSE(max_weight_perfect_matching(g));
}

TEST_CASE("disconnected pair blocks perfection") {
  WeightedGraph g;
  g.vertex_count = 4;
  g.edges = {{0, 1, 10}, {0, 2, 1}, {1, 2, 1}};  // vertex 3 isolated
  CHECK_FALSE(max_weight_perfect_matching(g));
}

TEST_CASE("empty graph has the empty perfect matching") {
  WeightedGraph g;
  auto m = max_weight_perfect_matching(g);
  REQUIRE(m);
  CHECK(m->weight == 0);
}

TEST_CASE("K4 equals brute force over the three pairings") {
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 200; ++iter) {
    WeightedGraph g;
    g.vertex_count = 4;
    for (int u = 0; u < 4; ++u)
      for (int v = u + 1; v < 4; ++v)
        g.edges.push_back({u, v, static_cast<std::int64_t>(rng() % 100) - 20});
    auto got = max_weight_perfect_matching(g);
    auto want = exhaustive_max_weight_perfect_matching(g);
    REQUIRE(got);
    REQUIRE(want);
    CHECK(got->weight == want->weight);
  }
}

TEST_CASE("random graphs up to 12 vertices match the exhaustive referee") {
  std::mt19937_64 rng(32);
  for (int iter = 0; iter < 800; ++iter) {
    WeightedGraph g;
    g.vertex_count = 2 * (1 + static_cast<int>(rng() % 6));
    int density = 20 + static_cast<int>(rng() % 81);
    for (int u = 0; u < g.vertex_count; ++u)
      for (int v = u + 1; v < g.vertex_count; ++v)
        if (static_cast<int>(rng() % 100) < density)
          g.edges.push_back({u, v, static_cast<std::int64_t>(rng() % 1000) - 100});
    auto got = max_weight_perfect_matching(g);
    auto want = exhaustive_max_weight_perfect_matching(g);
    CHECK(got.has_value() == want.has_value());
    if (got && want) CHECK(got->weight == want->weight);
  }
}

TEST_CASE("parallel edges collapse to the heaviest") {
  WeightedGraph g;
  g.vertex_count = 2;
  g.edges = {{0, 1, 2}, {1, 0, 9}, {0, 1, 4}};
  auto m = max_weight_perfect_matching(g);
  REQUIRE(m);
  CHECK(m->weight == 9);
}
