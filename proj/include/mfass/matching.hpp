#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace mfass {

// Simple undirected weighted graph, vertices 0..vertex_count-1.
struct WeightedGraph {
  struct Edge {
    int u = 0;
    int v = 0;
    std::int64_t weight = 0;
  };
  int vertex_count = 0;
  std::vector<Edge> edges;
};

struct PerfectMatching {
  std::vector<int> mate;  // mate[u] = matched partner of u
  std::int64_t weight = 0;

  std::vector<std::pair<int, int>> pairs() const;  // (u,v) with u<v, sorted
};

// Maximum-weight perfect matching (blossom). Negative weights allowed;
// parallel edges collapse to the heaviest one; self-loops are ignored.
// Returns nullopt for odd vertex counts or when no perfect matching exists.
std::optional<PerfectMatching> max_weight_perfect_matching(const WeightedGraph& g);

}  // namespace mfass
