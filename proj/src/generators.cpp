#include "mfass/generators.hpp"

#include <cmath>
#include <random>

namespace mfass {

namespace {

// Bounded draw built from raw mt19937_64 output; std::uniform_int_distribution
// is implementation-defined, this keeps instances byte-identical everywhere.
std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

Cap next_cap(std::mt19937_64& rng, Cap lo, Cap hi) {
  return lo + static_cast<Cap>(next_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

void check_3partition_input(Cap B, const std::vector<Cap>& values) {
  if (values.empty() || values.size() % 3 != 0)
    throw PreconditionError("3-Partition needs 3n values");
  Cap sum = 0;
  for (Cap u : values) {
    if (!(4 * u > B && 2 * u < B))
      throw PreconditionError("every value must lie strictly between B/4 and B/2");
    sum += u;
  }
  Cap n = static_cast<Cap>(values.size() / 3);
  if (sum != n * B) throw PreconditionError("values must sum to n*B");
}

std::vector<ArcId> all_arcs(const FlowNetwork& net) {
  std::vector<ArcId> jobs(net.arcs.size());
  for (std::size_t i = 0; i < jobs.size(); ++i) jobs[i] = static_cast<ArcId>(i);
  return jobs;
}

}  // namespace

GeneratedInstance gen_3partition(Cap B, const std::vector<Cap>& values) {
  check_3partition_input(B, values);
  const int n = static_cast<int>(values.size() / 3);

  GeneratedInstance out;
  FlowNetwork& net = out.instance.network;
  net.node_count = 3;
  net.source = 0;
  net.sink = 2;
  Cap in_capacity = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    Cap shifted = 3 * values[i] - B;
    ArcId id = static_cast<ArcId>(i);
    if (shifted >= 0) {
      net.arcs.push_back({id, 0, 1, shifted});
      in_capacity += shifted;
    } else {
      net.arcs.push_back({id, 1, 2, -shifted});
    }
  }
  out.instance.jobs = all_arcs(net);
  out.instance.horizon = n;
  out.instance.limits.assign(static_cast<std::size_t>(n), 3);

  out.certificate.bound = static_cast<Cap>(n - 1) * in_capacity;
  out.certificate.family = "3part";
  return out;
}

GeneratedInstance gen_partition(Cap B, const std::vector<Cap>& values) {
  if (values.empty()) throw PreconditionError("Partition needs at least one value");
  Cap sum = 0;
  for (Cap u : values) {
    if (u < 0) throw PreconditionError("values must be nonnegative");
    sum += u;
  }
  if (sum != 2 * B) throw PreconditionError("values must sum to 2B");
  const int n = static_cast<int>(values.size());

  GeneratedInstance out;
  FlowNetwork& net = out.instance.network;
  net.node_count = 3;
  net.source = 0;
  net.sink = 2;
  for (int i = 0; i < n; ++i)
    net.arcs.push_back({i, 0, 1, values[static_cast<std::size_t>(i)]});
  net.arcs.push_back({n, 1, 2, B});
  net.arcs.push_back({n + 1, 1, 2, B});

  out.instance.jobs = all_arcs(net);
  out.instance.horizon = 2;
  out.instance.limits.assign(2, n + 1);  // K = |J| - 1

  out.certificate.bound = 2 * B;
  out.certificate.family = "part";
  return out;
}

GeneratedInstance gen_unitcap(Cap B, const std::vector<Cap>& values) {
  check_3partition_input(B, values);
  const int n = static_cast<int>(values.size() / 3);

  GeneratedInstance out;
  FlowNetwork& net = out.instance.network;
  net.source = 0;
  net.sink = 2;
  NodeId hub = 1;
  int next_node = 3;
  ArcId next_arc = 0;
  // one internally disjoint s->hub path per value, value many unit job arcs
  for (Cap len : values) {
    NodeId prev = net.source;
    for (Cap step = 0; step < len; ++step) {
      NodeId to = step + 1 == len ? hub : next_node++;
      net.arcs.push_back({next_arc++, prev, to, 1});
      out.instance.jobs.push_back(net.arcs.back().id);
      prev = to;
    }
  }
  for (int i = 0; i < 3 * (n - 1); ++i) net.arcs.push_back({next_arc++, hub, net.sink, 1});
  net.node_count = next_node;

  out.instance.horizon = n;
  out.instance.limits.assign(static_cast<std::size_t>(n), static_cast<int>(B));

  out.certificate.bound = static_cast<Cap>(3) * n * (n - 1);
  out.certificate.family = "unitcap";
  return out;
}

Instance gen_random_sp(const RandomSpConfig& cfg) {
  if (cfg.arc_count < 1) throw PreconditionError("arc_count must be positive");
  if (cfg.cap_min < 0 || cfg.cap_min > cfg.cap_max) throw PreconditionError("bad capacity range");
  if (cfg.job_probability < 0.0 || cfg.job_probability > 1.0)
    throw PreconditionError("job_probability must lie in [0,1]");
  if (cfg.horizon < 1 || cfg.limit < 0) throw PreconditionError("bad horizon or limit");

  std::mt19937_64 rng(cfg.seed);
  Instance inst;
  FlowNetwork& net = inst.network;
  net.source = 0;
  net.sink = 1;
  int next_node = 2;
  ArcId next_arc = 0;

  // random binary composition tree, materialized left to right
  struct Frame {
    int count;
    NodeId s, t;
  };
  std::vector<Frame> stack{{cfg.arc_count, 0, 1}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (f.count == 1) {
      net.arcs.push_back({next_arc++, f.s, f.t, 0});
      continue;
    }
    int left = 1 + static_cast<int>(next_below(rng, static_cast<std::uint64_t>(f.count - 1)));
    bool series = next_below(rng, 2) == 0;
    if (series) {
      NodeId mid = next_node++;
      stack.push_back({f.count - left, mid, f.t});
      stack.push_back({left, f.s, mid});
    } else {
      stack.push_back({f.count - left, f.s, f.t});
      stack.push_back({left, f.s, f.t});
    }
  }
  net.node_count = next_node;

  const auto job_threshold =
      static_cast<std::uint64_t>(std::llround(cfg.job_probability * 16777216.0));
  for (Arc& a : net.arcs) {
    a.capacity = next_cap(rng, cfg.cap_min, cfg.cap_max);
    if (next_below(rng, 16777216) < job_threshold) inst.jobs.push_back(a.id);
  }
  inst.horizon = cfg.horizon;
  inst.limits.assign(static_cast<std::size_t>(cfg.horizon), cfg.limit);
  return inst;
}

Instance gen_random_single_node(const RandomSingleNodeConfig& cfg) {
  if (cfg.in_arcs < 0 || cfg.out_arcs < 0 || cfg.in_arcs + cfg.out_arcs < 1)
    throw PreconditionError("need at least one arc");
  if (cfg.cap_min < 0 || cfg.cap_min > cfg.cap_max) throw PreconditionError("bad capacity range");
  if (cfg.horizon < 1) throw PreconditionError("bad horizon");

  std::mt19937_64 rng(cfg.seed);
  Instance inst;
  FlowNetwork& net = inst.network;
  net.node_count = 3;
  net.source = 0;
  net.sink = 2;
  ArcId next_arc = 0;
  for (int i = 0; i < cfg.in_arcs; ++i)
    net.arcs.push_back({next_arc++, 0, 1, next_cap(rng, cfg.cap_min, cfg.cap_max)});
  for (int i = 0; i < cfg.out_arcs; ++i)
    net.arcs.push_back({next_arc++, 1, 2, next_cap(rng, cfg.cap_min, cfg.cap_max)});
  inst.jobs = all_arcs(net);
  inst.horizon = cfg.horizon;
  inst.limits.assign(static_cast<std::size_t>(cfg.horizon), 2);
  return inst;
}

}  // namespace mfass
