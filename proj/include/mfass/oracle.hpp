#pragma once

#include <cstdint>

#include "mfass/model.hpp"

namespace mfass {

struct SolveResult {
  Schedule schedule;
  ThroughputReport report;
};

struct OracleOptions {
  std::uint64_t max_assignments = 10'000'000;
};

// Exact count of ordered feasible assignments of `job_count` distinct jobs
// into periods 1..horizon respecting per-period limits. Saturates at 2^63-1.
std::uint64_t count_feasible_assignments(int job_count, int horizon,
                                         const std::vector<int>& limits);

// Ground-truth solver: enumerates every feasible assignment.
// For uniform limits, assignments identical up to period permutation are
// explored once; ties are broken toward the lexicographically smallest
// assignment (jobs in arc-id order). Throws InfeasibleError or TooLargeError.
SolveResult solve_bruteforce(const Instance& inst, const OracleOptions& opts = {});

}  // namespace mfass
