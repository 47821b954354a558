#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mfass/errors.hpp"

namespace mfass {

using NodeId = int;
using ArcId = int;
using Cap = std::int64_t;

struct Arc {
  ArcId id = 0;
  NodeId tail = 0;
  NodeId head = 0;
  Cap capacity = 0;  // flow units per period, >= 0
};

// Directed multigraph with a single source and sink. Parallel arcs allowed.
struct FlowNetwork {
  int node_count = 0;
  NodeId source = 0;
  NodeId sink = 0;
  std::vector<Arc> arcs;  // arcs[i].id == i

  int arc_count() const { return static_cast<int>(arcs.size()); }
};

// A scheduling instance: network + job arcs + horizon + per-period limits.
// Periods are 1-based; limits[i-1] is the outage limit of period i.
struct Instance {
  FlowNetwork network;
  std::vector<ArcId> jobs;  // sorted, unique
  int horizon = 1;
  std::vector<int> limits;

  int limit(int period) const { return limits.at(static_cast<std::size_t>(period) - 1); }
  bool uniform_limit() const;
  long long limit_sum() const;
  bool is_job(ArcId a) const;
};

// Maps every job arc to its outage period in [1..T].
struct Schedule {
  std::map<ArcId, int> assignment;

  std::optional<int> period_of(ArcId a) const;
  std::vector<ArcId> jobs_in_period(int period) const;
};

struct ThroughputReport {
  std::vector<Cap> per_period_flow;
  Cap total = 0;
};

struct InstanceClassTags {
  bool is_series_parallel = false;
  bool is_balanced = false;
  bool is_unit_capacity = false;
  bool all_arcs_jobbed = false;
};

Cap checked_add(Cap a, Cap b);

// Max s-t flow with every arc in `shut` treated as capacity 0.
// Arcs are masked, never removed; an unreachable sink yields 0.
Cap max_flow(const FlowNetwork& net, const std::vector<ArcId>& shut = {});
Cap max_flow_masked(const FlowNetwork& net, const std::vector<bool>& shut_mask);

// Empty result means ok. Infeasibility (|J| > sum of limits) is reported,
// not thrown.
std::vector<std::string> validate_instance(const Instance& inst);
std::vector<std::string> validate_schedule(const Instance& inst, const Schedule& sched);

// Scores a schedule period by period. Throws InfeasibleScheduleError if the
// schedule fails validation.
ThroughputReport evaluate(const Instance& inst, const Schedule& sched);

InstanceClassTags classify(const Instance& inst);

}  // namespace mfass
