#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mfass/model.hpp"

namespace mfass {

struct Certificate {
  enum class Decision { yes, no, unknown };

  std::optional<Cap> bound;
  Decision decision = Decision::unknown;
  std::string family;  // "3part" | "part" | "unitcap" | "random"
};

struct GeneratedInstance {
  Instance instance;
  Certificate certificate;
};

// Single-transshipment-node gadget from a 3-Partition input (values u_j with
// B/4 < u_j < B/2 and sum = nB). Transformed values 3u_j - B become in-arc
// capacities when nonnegative and out-arc capacities otherwise; T = n, K = 3,
// every arc jobbed. Certificate bound: (n-1) * total in-capacity, attained
// exactly on YES inputs.
GeneratedInstance gen_3partition(Cap B, const std::vector<Cap>& values);

// Partition gadget (sum of values = 2B): value arcs s->v, two arcs v->t of
// capacity B, T = 2, K = |J|-1. Certificate bound 2B, attained on YES inputs.
GeneratedInstance gen_partition(Cap B, const std::vector<Cap>& values);

// Unit-capacity gadget from a 3-Partition input: 3n disjoint s->v paths, path
// i a chain of u_i unit job arcs, plus 3(n-1) parallel unit non-job arcs
// v->t; T = n, K = B. Certificate bound 3n(n-1).
GeneratedInstance gen_unitcap(Cap B, const std::vector<Cap>& values);

struct RandomSpConfig {
  int arc_count = 4;
  Cap cap_min = 1;
  Cap cap_max = 10;
  double job_probability = 0.5;
  int horizon = 2;
  int limit = 2;
  std::uint64_t seed = 1;
};

// Random two-terminal series-parallel instance; byte-deterministic per seed.
Instance gen_random_sp(const RandomSpConfig& cfg);

struct RandomSingleNodeConfig {
  int in_arcs = 2;
  int out_arcs = 2;
  Cap cap_min = 1;
  Cap cap_max = 10;
  int horizon = 2;
  std::uint64_t seed = 1;
};

// Random s->v->t instance with every arc jobbed and uniform K=2.
Instance gen_random_single_node(const RandomSingleNodeConfig& cfg);

}  // namespace mfass
