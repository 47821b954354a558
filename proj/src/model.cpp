#include "mfass/model.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "mfass/sptree.hpp"

namespace mfass {

namespace {

// Standard Dinic on the masked network. Capacities are integral, so the
// result is the exact integral optimum.
class Dinic {
 public:
  explicit Dinic(int n) : graph_(n), level_(n), iter_(n) {}

  void add_edge(int from, int to, Cap cap) {
    graph_[from].push_back({to, cap, static_cast<int>(graph_[to].size())});
    graph_[to].push_back({from, 0, static_cast<int>(graph_[from].size()) - 1});
  }

  Cap run(int s, int t) {
    if (s == t) return 0;
    Cap flow = 0;
    while (bfs(s, t)) {
      std::fill(iter_.begin(), iter_.end(), 0);
      while (Cap f = dfs(s, t, std::numeric_limits<Cap>::max())) flow = checked_add(flow, f);
    }
    return flow;
  }

 private:
  struct Edge {
    int to;
    Cap cap;
    int rev;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (const Edge& e : graph_[v]) {
        if (e.cap > 0 && level_[e.to] < 0) {
          level_[e.to] = level_[v] + 1;
          q.push(e.to);
        }
      }
    }
    return level_[t] >= 0;
  }

  Cap dfs(int v, int t, Cap f) {
    if (v == t) return f;
    for (int& i = iter_[v]; i < static_cast<int>(graph_[v].size()); ++i) {
      Edge& e = graph_[v][i];
      if (e.cap > 0 && level_[v] < level_[e.to]) {
        Cap d = dfs(e.to, t, std::min(f, e.cap));
        if (d > 0) {
          e.cap -= d;
          graph_[e.to][e.rev].cap += d;
          return d;
        }
      }
    }
    return 0;
  }

  std::vector<std::vector<Edge>> graph_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

}  // namespace

bool Instance::uniform_limit() const {
  for (int k : limits)
    if (k != limits.front()) return false;
  return !limits.empty();
}

long long Instance::limit_sum() const {
  long long s = 0;
  for (int k : limits) s += k;
  return s;
}

bool Instance::is_job(ArcId a) const {
  return std::binary_search(jobs.begin(), jobs.end(), a);
}

std::optional<int> Schedule::period_of(ArcId a) const {
  auto it = assignment.find(a);
  if (it == assignment.end()) return std::nullopt;
  return it->second;
}

std::vector<ArcId> Schedule::jobs_in_period(int period) const {
  std::vector<ArcId> out;
  for (const auto& [arc, p] : assignment)
    if (p == period) out.push_back(arc);
  return out;
}

Cap checked_add(Cap a, Cap b) {
  Cap r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("throughput sum overflow");
  return r;
}

Cap max_flow_masked(const FlowNetwork& net, const std::vector<bool>& shut_mask) {
  if (static_cast<int>(shut_mask.size()) != net.arc_count())
    throw PreconditionError("shut mask size does not match arc count");
  Dinic dinic(net.node_count);
  for (const Arc& a : net.arcs) {
    Cap cap = shut_mask[static_cast<std::size_t>(a.id)] ? 0 : a.capacity;
    dinic.add_edge(a.tail, a.head, cap);
  }
  return dinic.run(net.source, net.sink);
}

Cap max_flow(const FlowNetwork& net, const std::vector<ArcId>& shut) {
  std::vector<bool> mask(static_cast<std::size_t>(net.arc_count()), false);
  for (ArcId a : shut) {
    if (a < 0 || a >= net.arc_count()) throw PreconditionError("shut arc id out of range");
    mask[static_cast<std::size_t>(a)] = true;
  }
  return max_flow_masked(net, mask);
}

std::vector<std::string> validate_instance(const Instance& inst) {
  std::vector<std::string> errs;
  const FlowNetwork& net = inst.network;
  if (net.node_count < 1) errs.push_back("network has no nodes");
  auto node_ok = [&](NodeId v) { return v >= 0 && v < net.node_count; };
  if (!node_ok(net.source)) errs.push_back("source id out of range");
  if (!node_ok(net.sink)) errs.push_back("sink id out of range");
  if (net.source == net.sink) errs.push_back("source equals sink");
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    const Arc& a = net.arcs[i];
    if (a.id != static_cast<ArcId>(i))
      errs.push_back("arc at position " + std::to_string(i) + " has id " + std::to_string(a.id));
    if (!node_ok(a.tail) || !node_ok(a.head))
      errs.push_back("arc " + std::to_string(a.id) + " has an endpoint out of range");
    if (a.capacity < 0)
      errs.push_back("arc " + std::to_string(a.id) + " has negative capacity");
  }
  if (inst.horizon < 1) errs.push_back("horizon must be positive");
  if (static_cast<int>(inst.limits.size()) != inst.horizon)
    errs.push_back("limits list does not match horizon");
  for (std::size_t i = 0; i < inst.limits.size(); ++i)
    if (inst.limits[i] < 0)
      errs.push_back("limit of period " + std::to_string(i + 1) + " is negative");
  if (!std::is_sorted(inst.jobs.begin(), inst.jobs.end()) ||
      std::adjacent_find(inst.jobs.begin(), inst.jobs.end()) != inst.jobs.end())
    errs.push_back("job list must be sorted and duplicate-free");
  for (ArcId j : inst.jobs)
    if (j < 0 || j >= net.arc_count())
      errs.push_back("job arc " + std::to_string(j) + " does not exist");
  if (errs.empty() && static_cast<long long>(inst.jobs.size()) > inst.limit_sum())
    errs.push_back("infeasible: " + std::to_string(inst.jobs.size()) + " jobs exceed the outage budget " +
                   std::to_string(inst.limit_sum()));
  return errs;
}

std::vector<std::string> validate_schedule(const Instance& inst, const Schedule& sched) {
  std::vector<std::string> errs;
  for (const auto& [arc, period] : sched.assignment) {
    if (!inst.is_job(arc))
      errs.push_back("arc " + std::to_string(arc) + " is not a job arc");
    if (period < 1 || period > inst.horizon)
      errs.push_back("arc " + std::to_string(arc) + " assigned to invalid period " +
                     std::to_string(period));
  }
  for (ArcId j : inst.jobs)
    if (!sched.assignment.count(j))
      errs.push_back("job arc " + std::to_string(j) + " is assigned to no period (each job needs exactly one outage)");
  std::vector<int> load(static_cast<std::size_t>(inst.horizon) + 1, 0);
  for (const auto& [arc, period] : sched.assignment)
    if (period >= 1 && period <= inst.horizon) ++load[static_cast<std::size_t>(period)];
  for (int i = 1; i <= inst.horizon; ++i)
    if (load[static_cast<std::size_t>(i)] > inst.limit(i))
      errs.push_back("period " + std::to_string(i) + " has " + std::to_string(load[static_cast<std::size_t>(i)]) +
                     " jobs, limit is " + std::to_string(inst.limit(i)));
  return errs;
}

ThroughputReport evaluate(const Instance& inst, const Schedule& sched) {
  auto errs = validate_schedule(inst, sched);
  if (!errs.empty()) {
    std::string msg = "infeasible schedule:";
    for (const auto& e : errs) msg += "\n  " + e;
    throw InfeasibleScheduleError(msg);
  }
  ThroughputReport report;
  report.per_period_flow.resize(static_cast<std::size_t>(inst.horizon));
  std::vector<std::vector<ArcId>> shut(static_cast<std::size_t>(inst.horizon));
  for (const auto& [arc, period] : sched.assignment)
    shut[static_cast<std::size_t>(period - 1)].push_back(arc);
  for (int i = 0; i < inst.horizon; ++i) {
    report.per_period_flow[static_cast<std::size_t>(i)] =
        max_flow(inst.network, shut[static_cast<std::size_t>(i)]);
    report.total = checked_add(report.total, report.per_period_flow[static_cast<std::size_t>(i)]);
  }
  return report;
}

InstanceClassTags classify(const Instance& inst) {
  InstanceClassTags tags;
  const FlowNetwork& net = inst.network;
  tags.is_series_parallel = !net.arcs.empty() && decompose(net).has_value();
  tags.is_balanced = true;
  std::vector<Cap> in(static_cast<std::size_t>(net.node_count), 0);
  std::vector<Cap> out(static_cast<std::size_t>(net.node_count), 0);
  for (const Arc& a : net.arcs) {
    out[static_cast<std::size_t>(a.tail)] = checked_add(out[static_cast<std::size_t>(a.tail)], a.capacity);
    in[static_cast<std::size_t>(a.head)] = checked_add(in[static_cast<std::size_t>(a.head)], a.capacity);
  }
  for (NodeId v = 0; v < net.node_count; ++v) {
    if (v == net.source || v == net.sink) continue;
    if (in[static_cast<std::size_t>(v)] != out[static_cast<std::size_t>(v)]) {
      tags.is_balanced = false;
      break;
    }
  }
  tags.is_unit_capacity = true;
  for (const Arc& a : net.arcs)
    if (a.capacity != 1) {
      tags.is_unit_capacity = false;
      break;
    }
  tags.all_arcs_jobbed = inst.jobs.size() == net.arcs.size();
  return tags;
}

}  // namespace mfass
