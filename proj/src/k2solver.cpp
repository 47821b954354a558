#include "mfass/k2solver.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace mfass {

namespace {

void require_uniform_k2(const Instance& inst) {
  if (inst.limits.empty() || !inst.uniform_limit() || inst.limits.front() != 2)
    throw PreconditionError("solver requires a uniform per-period limit of 2");
}

}  // namespace

std::string AuxGraph::dump() const {
  std::ostringstream os;
  os << "vertices " << graph.vertex_count << "\n";
  for (const auto& e : graph.edges) os << "edge " << e.u << " " << e.v << " " << e.weight << "\n";
  return os.str();
}

AuxGraph build_aux_graph(const Instance& inst) {
  require_uniform_k2(inst);
  const int jn = static_cast<int>(inst.jobs.size());
  if (jn > 2 * inst.horizon)
    throw InfeasibleError("more jobs than two per period can absorb");

  AuxGraph aux;
  aux.job_arcs = inst.jobs;
  aux.p = std::max(0, jn - inst.horizon);
  aux.f0 = max_flow(inst.network);
  const int half = jn / 2;
  aux.w_begin = 2 * jn;
  aux.wprime_begin = 2 * jn + 2 * aux.p;
  aux.graph.vertex_count = 2 * jn + 2 * half;

  // F_a and F_ab via masked max flows
  std::vector<Cap> f_single(static_cast<std::size_t>(jn));
  for (int i = 0; i < jn; ++i)
    f_single[static_cast<std::size_t>(i)] = max_flow(inst.network, {inst.jobs[static_cast<std::size_t>(i)]});

  for (int i = 0; i < jn; ++i)
    for (int j = i + 1; j < jn; ++j) {
      Cap f_pair = max_flow(inst.network, {inst.jobs[static_cast<std::size_t>(i)],
                                           inst.jobs[static_cast<std::size_t>(j)]});
      aux.graph.edges.push_back({i, j, checked_add(f_pair, aux.f0)});
    }
  for (int i = 0; i < jn; ++i)
    aux.graph.edges.push_back({i, jn + i, f_single[static_cast<std::size_t>(i)]});
  for (int i = 0; i < jn; ++i)
    for (int w = aux.w_begin; w < aux.graph.vertex_count; ++w)
      aux.graph.edges.push_back({jn + i, w, 0});
  for (int w = aux.wprime_begin; w + 1 < aux.graph.vertex_count; w += 2)
    aux.graph.edges.push_back({w, w + 1, 0});
  return aux;
}

Schedule schedule_from_matching(const Instance& inst, const AuxGraph& aux,
                                const PerfectMatching& matching) {
  const int jn = aux.job_count();
  std::vector<std::pair<ArcId, ArcId>> pair_periods;  // {a,b} edges, a<b by arc id
  std::vector<ArcId> single_periods;                  // {a,a'} edges
  for (int u = 0; u < jn; ++u) {
    int v = matching.mate.at(static_cast<std::size_t>(u));
    if (v < jn) {
      if (v > u)
        pair_periods.emplace_back(aux.job_arcs[static_cast<std::size_t>(u)],
                                  aux.job_arcs[static_cast<std::size_t>(v)]);
    } else if (v == jn + u) {
      single_periods.push_back(aux.job_arcs[static_cast<std::size_t>(u)]);
    } else {
      throw PreconditionError("matching pairs a job vertex with a foreign dummy");
    }
  }
  std::sort(pair_periods.begin(), pair_periods.end(),
            [](const auto& x, const auto& y) { return std::min(x.first, x.second) < std::min(y.first, y.second); });
  std::sort(single_periods.begin(), single_periods.end());

  if (static_cast<int>(pair_periods.size() + single_periods.size()) > inst.horizon)
    throw PreconditionError("matching uses more periods than the horizon");

  Schedule sched;
  int period = 1;
  for (const auto& [a, b] : pair_periods) {
    sched.assignment[a] = period;
    sched.assignment[b] = period;
    ++period;
  }
  for (ArcId a : single_periods) sched.assignment[a] = period++;
  return sched;
}

SolveResult solve_k2(const Instance& inst) {
  AuxGraph aux = build_aux_graph(inst);
  auto matching = max_weight_perfect_matching(aux.graph);
  if (!matching)
    throw std::logic_error("auxiliary graph has no perfect matching despite |J| <= 2T");
  SolveResult result;
  result.schedule = schedule_from_matching(inst, aux, *matching);
  result.report = evaluate(inst, result.schedule);
  return result;
}

Schedule single_node_schedule(const Instance& inst, SingleNodeStats* stats) {
  require_uniform_k2(inst);
  const FlowNetwork& net = inst.network;

  NodeId mid = -1;
  for (const Arc& a : net.arcs) {
    NodeId interior;
    if (a.tail == net.source && a.head != net.sink)
      interior = a.head;
    else if (a.head == net.sink && a.tail != net.source)
      interior = a.tail;
    else
      throw WrongTopologyError("arc " + std::to_string(a.id) +
                               " is not source->node or node->sink");
    if (interior == net.source || interior == net.sink)
      throw WrongTopologyError("arc " + std::to_string(a.id) + " touches no transshipment node");
    if (mid < 0) mid = interior;
    if (interior != mid)
      throw WrongTopologyError("more than one transshipment node carries arcs");
  }
  if (mid < 0) throw WrongTopologyError("network has no arcs");

  std::vector<ArcId> in_jobs, out_jobs;
  for (ArcId j : inst.jobs) {
    const Arc& a = net.arcs[static_cast<std::size_t>(j)];
    (a.head == mid ? in_jobs : out_jobs).push_back(j);
  }
  // Mirror so the in-side is the smaller one.
  if (in_jobs.size() > out_jobs.size()) std::swap(in_jobs, out_jobs);
  const int r = static_cast<int>(in_jobs.size());
  const int s = static_cast<int>(out_jobs.size());
  const int t_max = inst.horizon;
  if (r + s > 2 * t_max)
    throw InfeasibleError("jobs exceed the two-per-period budget");

  SingleNodeStats local;
  SingleNodeStats& st = stats ? *stats : local;
  auto by_capacity = [&](ArcId x, ArcId y) {
    ++st.sort_comparisons;
    Cap cx = net.arcs[static_cast<std::size_t>(x)].capacity;
    Cap cy = net.arcs[static_cast<std::size_t>(y)].capacity;
    return cx != cy ? cx > cy : x < y;
  };
  std::stable_sort(in_jobs.begin(), in_jobs.end(), by_capacity);
  std::stable_sort(out_jobs.begin(), out_jobs.end(), by_capacity);

  auto a_arc = [&](int i) { return in_jobs[static_cast<std::size_t>(i - 1)]; };
  auto b_arc = [&](int i) { return out_jobs[static_cast<std::size_t>(i - 1)]; };

  Schedule sched;
  for (int i = 1; i <= r; ++i) {
    sched.assignment[a_arc(i)] = i;
    sched.assignment[b_arc(i)] = i;
    ++st.other_steps;
  }
  int singles_end = std::min({t_max, 2 * t_max - s, s});
  for (int i = r + 1; i <= singles_end; ++i) {
    sched.assignment[b_arc(i)] = i;
    ++st.other_steps;
  }
  if (s > t_max) {
    for (int i = 2 * t_max - s + 1; i <= t_max; ++i) {
      sched.assignment[b_arc(i)] = i;
      sched.assignment[b_arc(2 * t_max + 1 - i)] = i;
      ++st.other_steps;
    }
  }
  return sched;
}

bool exchange_inequality_holds(double x1, double x2, double x3, double x4, double x5, double x6) {
  if (!(x1 <= x2) || !(x3 >= x1 && x3 <= x2) || !(x4 >= x1 && x4 <= x2))
    throw PreconditionError("x3, x4 must lie in [x1, x2]");
  if (x3 + x4 != x1 + x2) throw PreconditionError("x3 + x4 must equal x1 + x2");
  if (!(x5 <= x6)) throw PreconditionError("x5 must not exceed x6");
  return std::min(x3, x6) + std::min(x4, x5) >= std::min(x1, x6) + std::min(x2, x5);
}

}  // namespace mfass
