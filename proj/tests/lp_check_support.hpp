#pragma once

// Reconstructs the network and scheduling data from exported LP text alone,
// then maximizes throughput over every feasible availability pattern. Keeps
// the exporter honest without an external MIP solver. Assumes instances with
// no arcs entering the source or leaving the sink (true for every generator).

#include <map>
#include <set>
#include <sstream>
#include <string>

#include "mfass/model.hpp"

namespace mfass::test::lpcheck {

struct Parsed {
  std::map<ArcId, Cap> capacity;
  std::set<ArcId> jobs;
  std::map<ArcId, int> tail_label, head_label;  // transshipment labels
  std::set<ArcId> leaves_source;
  std::map<int, long long> lim_rhs;
  int horizon = 0;
  int arc_count = 0;
};

inline Parsed parse(const std::string& lp) {
  Parsed p;
  std::istringstream is(lp);
  std::string line;
  auto arc_of = [](const std::string& var) {
    auto a = var.find('_');
    auto b = var.find('_', a + 1);
    return std::stoi(var.substr(a + 1, b - a - 1));
  };
  auto period_of = [](const std::string& var) {
    auto b = var.rfind('_');
    return std::stoi(var.substr(b + 1));
  };
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string tok;
    ls >> tok;
    if (tok == "obj:") {
      std::string t;
      while (ls >> t)
        if (t[0] == 'x') p.leaves_source.insert(arc_of(t));
    } else if (tok.rfind("capj_", 0) == 0) {
      std::string xv, minus, u, yv, le, rhs;
      ls >> xv >> minus >> u >> yv >> le >> rhs;
      ArcId a = arc_of(xv);
      p.capacity[a] = std::stoll(u);
      p.jobs.insert(a);
      p.horizon = std::max(p.horizon, period_of(xv));
    } else if (tok.rfind("capn_", 0) == 0) {
      std::string xv, le, rhs;
      ls >> xv >> le >> rhs;
      p.capacity[arc_of(xv)] = std::stoll(rhs);
      p.horizon = std::max(p.horizon, period_of(xv));
    } else if (tok.rfind("cons_", 0) == 0) {
      int v = std::stoi(tok.substr(5, tok.find('_', 5) - 5));
      int period = std::stoi(tok.substr(tok.rfind('_') + 1));
      if (period != 1) continue;  // structure repeats per period
      std::string t;
      int sign = +1;
      while (ls >> t) {
        if (t == "+")
          sign = +1;
        else if (t == "-")
          sign = -1;
        else if (t[0] == 'x') {
          if (sign > 0)
            p.head_label[arc_of(t)] = v;
          else
            p.tail_label[arc_of(t)] = v;
        } else if (t == "=")
          break;
      }
    } else if (tok.rfind("lim_", 0) == 0) {
      int period = std::stoi(tok.substr(4, tok.find(':') - 4));
      std::string t, rhs;
      while (ls >> t)
        if (t == ">=") {
          ls >> rhs;
          p.lim_rhs[period] = std::stoll(rhs);
        }
    }
  }
  for (const auto& [a, cap] : p.capacity) p.arc_count = std::max(p.arc_count, a + 1);
  return p;
}

inline FlowNetwork reconstruct(const Parsed& p) {
  std::map<int, NodeId> label_to_node;
  NodeId next = 1;
  for (const auto& [arc, v] : p.tail_label)
    if (!label_to_node.count(v)) label_to_node[v] = next++;
  for (const auto& [arc, v] : p.head_label)
    if (!label_to_node.count(v)) label_to_node[v] = next++;
  FlowNetwork net;
  net.source = 0;
  net.sink = next;
  net.node_count = next + 1;
  for (ArcId a = 0; a < p.arc_count; ++a) {
    NodeId tail = p.tail_label.count(a) ? label_to_node.at(p.tail_label.at(a)) : net.source;
    NodeId head = p.head_label.count(a) ? label_to_node.at(p.head_label.at(a)) : net.sink;
    net.arcs.push_back({a, tail, head, p.capacity.at(a)});
  }
  return net;
}

inline Cap best_over_availability_patterns(const Parsed& p) {
  FlowNetwork net = reconstruct(p);
  std::vector<ArcId> jobs(p.jobs.begin(), p.jobs.end());
  if (jobs.empty()) {
    Cap total = 0;
    for (int i = 0; i < p.horizon; ++i) total += max_flow(net);
    return total;
  }
  std::vector<int> limits;
  for (int i = 1; i <= p.horizon; ++i)
    limits.push_back(static_cast<int>(static_cast<long long>(jobs.size()) - p.lim_rhs.at(i)));
  Cap best = -1;
  std::vector<int> load(static_cast<std::size_t>(p.horizon), 0);
  std::vector<std::vector<ArcId>> shut(static_cast<std::size_t>(p.horizon));
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == jobs.size()) {
      Cap total = 0;
      for (const auto& s : shut) total += max_flow(net, s);
      best = std::max(best, total);
      return;
    }
    for (int i = 0; i < p.horizon; ++i) {
      auto si = static_cast<std::size_t>(i);
      if (load[si] >= limits[si]) continue;
      ++load[si];
      shut[si].push_back(jobs[k]);
      self(self, k + 1);
      shut[si].pop_back();
      --load[si];
    }
  };
  rec(rec, 0);
  return best;
}

}  // namespace mfass::test::lpcheck
