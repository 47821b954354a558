#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mfass/model.hpp"
#include "mfass/oracle.hpp"
#include "mfass/sptree.hpp"

namespace mfass {

// DP state: per period, the number of jobs shut and the subnetwork capacity.
// Standard form orders entries by capacity descending, breaking ties by job
// count descending.
struct JobCapacityVector {
  std::vector<std::pair<int, Cap>> entries;  // (jobs, capacity), one per period

  bool operator==(const JobCapacityVector&) const = default;
  Cap capacity_sum() const;
  int job_sum() const;
};

JobCapacityVector canonicalize(JobCapacityVector v);

// True if the multiset of job counts can be assigned to periods without
// exceeding any limit (sorted-descending dominance). For uniform limits this
// is exactly "every entry <= K".
bool fits_limits(const JobCapacityVector& v, const std::vector<int>& limits);

struct SpDpOptions {
  std::size_t max_list_entries = 2'000'000;   // per run, summed over SP nodes
  std::uint64_t max_merge_steps = 200'000'000;
};

// Bottom-up list DP over the SP-tree. Retains per-node lists and provenance
// so optimal schedules can be reconstructed.
class SpDp {
 public:
  SpDp(const Instance& inst, const SpDpOptions& opts = {});

  const std::vector<JobCapacityVector>& root_list() const { return root_vectors_; }
  int best_root_index() const;  // maximizes capacity sum
  Schedule reconstruct_schedule(int root_index) const;

  // per-SP-node list sizes, in tree node order (profiling trace)
  const std::vector<std::size_t>& list_sizes() const { return list_sizes_; }

 private:
  struct Entry {
    JobCapacityVector vec;
    int left = -1;               // index into left child's list
    int right = -1;              // index into right child's list
    std::vector<int> right_perm; // slot i of left combines right entry right_perm[i]
    std::vector<int> canon_src;  // canonical slot k came from combined slot canon_src[k]
  };

  const Instance& inst_;
  SPTree tree_;
  std::vector<std::vector<Entry>> lists_;  // per tree node
  std::vector<int> leaf_job_slot_;         // canonical slot of the (1,0) entry, -1 if none
  std::vector<std::size_t> list_sizes_;
  std::vector<JobCapacityVector> root_vectors_;
};

// Algorithm-1 solver for series-parallel instances (uniform or per-period
// limits). Throws NotSeriesParallelError, InfeasibleError, BudgetExceededError.
SolveResult solve_sp_dp(const Instance& inst, const SpDpOptions& opts = {});

// Algorithm 2: maximum s-t capacity with exactly `rho` job arcs masked.
// nullopt when rho outages cannot be placed on any s-t configuration.
// rho = 0 degenerates to the plain max flow.
std::optional<Cap> max_flow_with_outages(const Instance& inst, int rho);

}  // namespace mfass
