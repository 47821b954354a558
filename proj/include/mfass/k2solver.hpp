#pragma once

#include <cstdint>
#include <string>

#include "mfass/matching.hpp"
#include "mfass/model.hpp"
#include "mfass/oracle.hpp"

namespace mfass {

// Auxiliary matching graph for the uniform K=2 solver.
//
// Vertex layout: [0, J) job vertices, [J, 2J) primed vertices, then the
// dummy blocks W (2p vertices, p = max{0, |J|-T}) and W' (2(floor(|J|/2)-p)).
// Edges: {a,b} weight F_ab + F_0 for distinct jobs; {a,a'} weight F_a;
// zero edges {a', w} for w in W u W'; a zero-weight matching inside W'.
struct AuxGraph {
  WeightedGraph graph;
  std::vector<ArcId> job_arcs;  // job vertex i <-> arc job_arcs[i]
  int p = 0;
  int w_begin = 0;       // first W vertex
  int wprime_begin = 0;  // first W' vertex
  Cap f0 = 0;            // unmasked max flow

  int job_count() const { return static_cast<int>(job_arcs.size()); }
  std::string dump() const;  // edge-list text for debugging
};

// Requires uniform K=2. Throws InfeasibleError when |J| > 2T.
AuxGraph build_aux_graph(const Instance& inst);

// Converts a perfect matching of the auxiliary graph into a schedule:
// job-job edges become two-job periods, job-prime edges one-job periods,
// remaining periods idle. Periods are assigned pairs-then-singletons,
// ordered by smallest arc id.
Schedule schedule_from_matching(const Instance& inst, const AuxGraph& aux,
                                const PerfectMatching& matching);

// Exact solver for uniform K=2 via maximum-weight perfect matching.
// Total equals matching weight + (T-|J|)*F_0.
SolveResult solve_k2(const Instance& inst);

struct SingleNodeStats {
  std::uint64_t sort_comparisons = 0;
  std::uint64_t other_steps = 0;
};

// Closed-form optimal schedule for a single-transshipment-node network with
// uniform K=2: pair the i-th largest in-job with the i-th largest out-job,
// then schedule leftover out-jobs singly, pairing the tail ends once the
// horizon runs short. Sorting dominates the running time.
// Throws WrongTopologyError or InfeasibleError.
Schedule single_node_schedule(const Instance& inst, SingleNodeStats* stats = nullptr);

// min{x3,x6} + min{x4,x5} >= min{x1,x6} + min{x2,x5} whenever
// x3,x4 in [x1,x2], x3+x4 = x1+x2 and x5 <= x6.
// Throws PreconditionError when the inputs violate those assumptions.
bool exchange_inequality_holds(double x1, double x2, double x3, double x4, double x5, double x6);

}  // namespace mfass
