#include "mfass/oracle.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

namespace mfass {

namespace {

constexpr std::uint64_t kCountCeiling = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > kCountCeiling - b ? kCountCeiling : a + b;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kCountCeiling / b) return kCountCeiling;
  return a * b;
}

// C(n, k), saturating
std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    unsigned __int128 t = static_cast<unsigned __int128>(r) * static_cast<unsigned>(n - k + i);
    t /= static_cast<unsigned>(i);
    if (t > kCountCeiling) return kCountCeiling;
    r = static_cast<std::uint64_t>(t);
  }
  return r;
}

struct Search {
  const Instance& inst;
  std::uint64_t cap;
  bool uniform;
  bool count_only = false;
  std::vector<std::uint64_t> period_mask;  // shut jobs per period, bit = job index
  std::vector<int> load;
  std::vector<int> assignment;  // job index -> period, while searching
  std::vector<int> best_assignment;
  Cap best_total = -1;
  std::uint64_t leaves = 0;
  std::unordered_map<std::uint64_t, Cap> flow_memo;

  explicit Search(const Instance& i, std::uint64_t c)
      : inst(i),
        cap(c),
        uniform(i.uniform_limit()),
        period_mask(static_cast<std::size_t>(i.horizon), 0),
        load(static_cast<std::size_t>(i.horizon), 0),
        assignment(i.jobs.size(), 0) {}

  Cap flow_for(std::uint64_t mask) {
    auto it = flow_memo.find(mask);
    if (it != flow_memo.end()) return it->second;
    std::vector<ArcId> shut;
    for (std::size_t j = 0; j < inst.jobs.size(); ++j)
      if (mask >> j & 1) shut.push_back(inst.jobs[j]);
    Cap f = max_flow(inst.network, shut);
    flow_memo.emplace(mask, f);
    return f;
  }

  void run(std::size_t k, int used_periods) {
    if (k == inst.jobs.size()) {
      if (++leaves > cap)
        throw TooLargeError("enumeration of more than " + std::to_string(cap) +
                            " assignments exceeds the cap");
      if (count_only) return;
      Cap idle = flow_for(0);
      Cap total = 0;
      for (int i = 0; i < inst.horizon; ++i) {
        std::uint64_t m = period_mask[static_cast<std::size_t>(i)];
        total = checked_add(total, m == 0 ? idle : flow_for(m));
      }
      if (total > best_total) {
        best_total = total;
        best_assignment = assignment;
      }
      return;
    }
    // For uniform limits, periods are interchangeable: only open period i
    // after periods 1..i-1 are in use. The representative explored first is
    // the lexicographically smallest of its orbit.
    int last = uniform ? std::min(inst.horizon, used_periods + 1) : inst.horizon;
    for (int p = 1; p <= last; ++p) {
      std::size_t pi = static_cast<std::size_t>(p - 1);
      if (load[pi] >= inst.limit(p)) continue;
      ++load[pi];
      period_mask[pi] |= std::uint64_t{1} << k;
      assignment[k] = p;
      run(k + 1, std::max(used_periods, p));
      --load[pi];
      period_mask[pi] &= ~(std::uint64_t{1} << k);
    }
  }
};

}  // namespace

std::uint64_t count_feasible_assignments(int job_count, int horizon,
                                         const std::vector<int>& limits) {
  if (job_count < 0 || horizon < 1 || static_cast<int>(limits.size()) != horizon)
    throw PreconditionError("bad arguments to count_feasible_assignments");
  // f[r] = ways to place r remaining jobs into the periods processed so far
  std::vector<std::uint64_t> f(static_cast<std::size_t>(job_count) + 1, 0);
  f[static_cast<std::size_t>(job_count)] = 1;
  for (int i = 0; i < horizon; ++i) {
    std::vector<std::uint64_t> g(f.size(), 0);
    for (int r = 0; r <= job_count; ++r) {
      if (f[static_cast<std::size_t>(r)] == 0) continue;
      for (int c = 0; c <= std::min(limits[static_cast<std::size_t>(i)], r); ++c) {
        std::uint64_t ways = sat_mul(f[static_cast<std::size_t>(r)], binomial(r, c));
        std::size_t nr = static_cast<std::size_t>(r - c);
        g[nr] = sat_add(g[nr], ways);
      }
    }
    f.swap(g);
  }
  return f[0];
}

SolveResult solve_bruteforce(const Instance& inst, const OracleOptions& opts) {
  auto errs = validate_instance(inst);
  if (!errs.empty()) {
    if (static_cast<long long>(inst.jobs.size()) > inst.limit_sum())
      throw InfeasibleError(errs.back());
    throw PreconditionError("invalid instance: " + errs.front());
  }
  if (inst.jobs.size() > 63) throw TooLargeError("more than 63 jobs");

  // Dry run first: counts the assignments the search will actually visit
  // (canonical representatives under uniform limits) without any flow work.
  {
    Search counter(inst, opts.max_assignments);
    counter.count_only = true;
    counter.run(0, 0);
  }
  Search search(inst, opts.max_assignments);
  search.run(0, 0);

  SolveResult result;
  for (std::size_t j = 0; j < inst.jobs.size(); ++j)
    result.schedule.assignment[inst.jobs[j]] = search.best_assignment[j];
  result.report = evaluate(inst, result.schedule);
  return result;
}

}  // namespace mfass
