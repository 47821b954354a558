#include "mfass/lp_export.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace mfass {

namespace {

std::string xvar(ArcId a, int i) { return "x_" + std::to_string(a) + "_" + std::to_string(i); }
std::string yvar(ArcId a, int i) { return "y_" + std::to_string(a) + "_" + std::to_string(i); }

}  // namespace

std::string export_lp(const Instance& inst) {
  const FlowNetwork& net = inst.network;
  if (net.arcs.empty()) throw PreconditionError("cannot export an instance without arcs");
  const int horizon = inst.horizon;
  std::ostringstream os;

  os << "\\ maximum flow arc shutdown scheduling, " << net.arc_count() << " arcs, "
     << inst.jobs.size() << " jobs, " << horizon << " periods\n";

  // total source outflow over the horizon
  os << "Maximize\n obj:";
  bool first = true;
  for (int i = 1; i <= horizon; ++i)
    for (const Arc& a : net.arcs)
      if (a.tail == net.source) {
        os << (first ? " " : " + ") << xvar(a.id, i);
        first = false;
      }
  if (first) os << " 0 " << xvar(net.arcs.front().id, 1);
  os << "\n";

  os << "Subject To\n";
  // capacity, linked to availability for job arcs
  for (ArcId j : inst.jobs)
    for (int i = 1; i <= horizon; ++i)
      os << " capj_" << j << "_" << i << ": " << xvar(j, i) << " - "
         << net.arcs[static_cast<std::size_t>(j)].capacity << " " << yvar(j, i) << " <= 0\n";
  for (const Arc& a : net.arcs) {
    if (inst.is_job(a.id)) continue;
    for (int i = 1; i <= horizon; ++i)
      os << " capn_" << a.id << "_" << i << ": " << xvar(a.id, i) << " <= " << a.capacity << "\n";
  }
  // exactly one outage per job arc
  for (ArcId j : inst.jobs) {
    os << " dur_" << j << ":";
    for (int i = 1; i <= horizon; ++i) os << (i == 1 ? " " : " + ") << yvar(j, i);
    os << " = " << horizon - 1 << "\n";
  }
  // flow conservation at transshipment nodes (self-loops net to zero)
  for (NodeId v = 0; v < net.node_count; ++v) {
    if (v == net.source || v == net.sink) continue;
    std::map<ArcId, int> coeff;
    for (const Arc& a : net.arcs) {
      if (a.head == v) coeff[a.id] += 1;
      if (a.tail == v) coeff[a.id] -= 1;
    }
    std::erase_if(coeff, [](const auto& kv) { return kv.second == 0; });
    if (coeff.empty()) continue;
    for (int i = 1; i <= horizon; ++i) {
      os << " cons_" << v << "_" << i << ":";
      bool lead = true;
      for (const auto& [arc, c] : coeff) {
        os << (c > 0 ? (lead ? " " : " + ") : (lead ? " - " : " - ")) << xvar(arc, i);
        lead = false;
      }
      os << " = 0\n";
    }
  }
  // per-period outage limits
  if (!inst.jobs.empty()) {
    for (int i = 1; i <= horizon; ++i) {
      os << " lim_" << i << ":";
      bool lead = true;
      for (ArcId j : inst.jobs) {
        os << (lead ? " " : " + ") << yvar(j, i);
        lead = false;
      }
      os << " >= " << static_cast<long long>(inst.jobs.size()) - inst.limit(i) << "\n";
    }
  }

  os << "Bounds\n";
  for (const Arc& a : net.arcs)
    for (int i = 1; i <= horizon; ++i) os << " " << xvar(a.id, i) << " >= 0\n";

  if (!inst.jobs.empty()) {
    os << "Binaries\n";
    for (ArcId j : inst.jobs)
      for (int i = 1; i <= horizon; ++i) os << " " << yvar(j, i) << "\n";
  }
  os << "End\n";
  return os.str();
}

void write_lp(const std::filesystem::path& path, const Instance& inst) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << export_lp(inst);
}

}  // namespace mfass
