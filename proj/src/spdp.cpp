#include "mfass/spdp.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_map>

namespace mfass {

namespace {

struct VectorHash {
  std::size_t operator()(const JobCapacityVector& v) const {
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&h](std::uint64_t x) {
      h ^= x;
      h *= 1099511628211ull;
    };
    for (const auto& [j, z] : v.entries) {
      mix(static_cast<std::uint64_t>(j));
      mix(static_cast<std::uint64_t>(z));
    }
    return static_cast<std::size_t>(h);
  }
};

bool entry_less(const std::pair<int, Cap>& a, const std::pair<int, Cap>& b) {
  return a.second != b.second ? a.second < b.second : a.first < b.first;
}

// standard form: capacity descending, job count descending within ties
bool canonical_order(const std::pair<int, Cap>& a, const std::pair<int, Cap>& b) {
  return a.second != b.second ? a.second > b.second : a.first > b.first;
}

}  // namespace

Cap JobCapacityVector::capacity_sum() const {
  Cap s = 0;
  for (const auto& [j, z] : entries) s = checked_add(s, z);
  return s;
}

int JobCapacityVector::job_sum() const {
  int s = 0;
  for (const auto& [j, z] : entries) s += j;
  return s;
}

JobCapacityVector canonicalize(JobCapacityVector v) {
  std::sort(v.entries.begin(), v.entries.end(), canonical_order);
  return v;
}

bool fits_limits(const JobCapacityVector& v, const std::vector<int>& limits) {
  if (v.entries.size() != limits.size()) return false;
  std::vector<int> counts;
  counts.reserve(v.entries.size());
  for (const auto& [j, z] : v.entries) counts.push_back(j);
  std::sort(counts.rbegin(), counts.rend());
  std::vector<int> caps = limits;
  std::sort(caps.rbegin(), caps.rend());
  for (std::size_t i = 0; i < counts.size(); ++i)
    if (counts[i] > caps[i]) return false;
  return true;
}

SpDp::SpDp(const Instance& inst, const SpDpOptions& opts) : inst_(inst) {
  auto errs = validate_instance(inst);
  if (!errs.empty()) {
    if (static_cast<long long>(inst.jobs.size()) > inst.limit_sum())
      throw InfeasibleError(errs.back());
    throw PreconditionError("invalid instance: " + errs.front());
  }
  SPWitness witness;
  auto tree = decompose(inst.network, &witness);
  if (!tree) throw NotSeriesParallelError("network is not series-parallel: " + witness.message);
  tree_ = std::move(*tree);

  const int horizon = inst.horizon;
  std::vector<int> sorted_limits = inst.limits;
  std::sort(sorted_limits.rbegin(), sorted_limits.rend());
  auto fits_sorted = [&](const std::vector<int>& counts_desc) {
    for (std::size_t i = 0; i < counts_desc.size(); ++i)
      if (counts_desc[i] > sorted_limits[i]) return false;
    return true;
  };

  lists_.resize(tree_.nodes.size());
  leaf_job_slot_.assign(tree_.nodes.size(), -1);
  list_sizes_.assign(tree_.nodes.size(), 0);

  std::size_t stored_entries = 0;
  std::uint64_t merge_steps = 0;

  for (std::size_t v = 0; v < tree_.nodes.size(); ++v) {
    const SPTree::Node& node = tree_.nodes[v];
    if (node.kind == SPTree::Kind::leaf) {
      const Arc& arc = inst.network.arcs[static_cast<std::size_t>(node.arc)];
      Entry entry;
      entry.vec.entries.assign(static_cast<std::size_t>(horizon), {0, arc.capacity});
      if (inst.is_job(arc.id)) {
        entry.vec.entries.back() = {1, 0};
        entry.vec = canonicalize(std::move(entry.vec));
        // locate the (1,0) entry in canonical order
        for (std::size_t k = 0; k < entry.vec.entries.size(); ++k)
          if (entry.vec.entries[k].first == 1) {
            leaf_job_slot_[v] = static_cast<int>(k);
            break;
          }
      }
      lists_[v].push_back(std::move(entry));
      ++stored_entries;
    } else {
      const auto& left = lists_[static_cast<std::size_t>(node.left)];
      const auto& right = lists_[static_cast<std::size_t>(node.right)];
      const bool parallel = node.kind == SPTree::Kind::parallel;
      std::unordered_map<JobCapacityVector, int, VectorHash> seen;

      std::vector<int> perm(static_cast<std::size_t>(horizon));
      std::vector<std::pair<int, Cap>> combined(static_cast<std::size_t>(horizon));
      std::vector<int> counts(static_cast<std::size_t>(horizon));
      std::vector<int> order(static_cast<std::size_t>(horizon));

      for (std::size_t ui = 0; ui < left.size(); ++ui) {
        const auto& zu = left[ui].vec.entries;
        for (std::size_t wi = 0; wi < right.size(); ++wi) {
          const auto& zw = right[wi].vec.entries;
          // distinct permutations of the right child's entry multiset
          std::iota(perm.begin(), perm.end(), 0);
          std::sort(perm.begin(), perm.end(),
                    [&](int a, int b) { return entry_less(zw[static_cast<std::size_t>(a)], zw[static_cast<std::size_t>(b)]); });
          auto perm_less = [&](int a, int b) {
            return entry_less(zw[static_cast<std::size_t>(a)], zw[static_cast<std::size_t>(b)]);
          };
          do {
            if (++merge_steps > opts.max_merge_steps)
              throw BudgetExceededError("merge steps exceeded the configured budget");
            bool ok = true;
            for (int i = 0; i < horizon; ++i) {
              auto si = static_cast<std::size_t>(i);
              auto pi = static_cast<std::size_t>(perm[si]);
              int jobs = zu[si].first + zw[pi].first;
              Cap cap = parallel ? checked_add(zu[si].second, zw[pi].second)
                                 : std::min(zu[si].second, zw[pi].second);
              combined[si] = {jobs, cap};
              counts[si] = jobs;
            }
            std::sort(counts.rbegin(), counts.rend());
            if (!fits_sorted(counts)) ok = false;
            if (ok) {
              std::iota(order.begin(), order.end(), 0);
              std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
                return canonical_order(combined[static_cast<std::size_t>(a)],
                                       combined[static_cast<std::size_t>(b)]);
              });
              JobCapacityVector canon;
              canon.entries.resize(static_cast<std::size_t>(horizon));
              for (int k = 0; k < horizon; ++k)
                canon.entries[static_cast<std::size_t>(k)] =
                    combined[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])];
              if (!seen.count(canon)) {
                seen.emplace(canon, static_cast<int>(lists_[v].size()));
                Entry entry;
                entry.vec = std::move(canon);
                entry.left = static_cast<int>(ui);
                entry.right = static_cast<int>(wi);
                entry.right_perm = perm;
                entry.canon_src = order;
                lists_[v].push_back(std::move(entry));
                if (++stored_entries > opts.max_list_entries)
                  throw BudgetExceededError("DP lists exceeded the configured entry budget");
              }
            }
          } while (std::next_permutation(perm.begin(), perm.end(), perm_less));
        }
      }
    }
    list_sizes_[v] = lists_[v].size();
  }

  root_vectors_.reserve(lists_[static_cast<std::size_t>(tree_.root)].size());
  for (const Entry& e : lists_[static_cast<std::size_t>(tree_.root)])
    root_vectors_.push_back(e.vec);
}

int SpDp::best_root_index() const {
  int best = -1;
  Cap best_sum = -1;
  for (std::size_t i = 0; i < root_vectors_.size(); ++i) {
    Cap s = root_vectors_[i].capacity_sum();
    if (s > best_sum) {
      best_sum = s;
      best = static_cast<int>(i);
    }
  }
  if (best < 0) throw std::logic_error("empty root list for a feasible instance");
  return best;
}

Schedule SpDp::reconstruct_schedule(int root_index) const {
  const auto& root_list = lists_[static_cast<std::size_t>(tree_.root)];
  if (root_index < 0 || root_index >= static_cast<int>(root_list.size()))
    throw std::out_of_range("root vector index out of range");
  const int horizon = inst_.horizon;

  // Assign canonical slots to concrete periods: heaviest job counts take the
  // most permissive periods.
  const JobCapacityVector& root_vec = root_list[static_cast<std::size_t>(root_index)].vec;
  std::vector<int> slot_order(static_cast<std::size_t>(horizon));
  std::iota(slot_order.begin(), slot_order.end(), 0);
  std::stable_sort(slot_order.begin(), slot_order.end(), [&](int a, int b) {
    return root_vec.entries[static_cast<std::size_t>(a)].first >
           root_vec.entries[static_cast<std::size_t>(b)].first;
  });
  std::vector<int> period_order(static_cast<std::size_t>(horizon));
  std::iota(period_order.begin(), period_order.end(), 0);
  std::stable_sort(period_order.begin(), period_order.end(), [&](int a, int b) {
    return inst_.limits[static_cast<std::size_t>(a)] > inst_.limits[static_cast<std::size_t>(b)];
  });
  std::vector<int> entry_period(static_cast<std::size_t>(horizon), 0);
  for (int k = 0; k < horizon; ++k) {
    int slot = slot_order[static_cast<std::size_t>(k)];
    int period = period_order[static_cast<std::size_t>(k)] + 1;
    if (root_vec.entries[static_cast<std::size_t>(slot)].first > inst_.limit(period))
      throw std::logic_error("root vector does not fit the per-period limits");
    entry_period[static_cast<std::size_t>(slot)] = period;
  }

  Schedule out;
  // Walk down the provenance, translating canonical slots to periods.
  struct Frame {
    int node;
    int entry;
    std::vector<int> periods;  // canonical slot -> period
  };
  std::vector<Frame> stack;
  stack.push_back({tree_.root, root_index, entry_period});
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    const SPTree::Node& node = tree_.nodes[static_cast<std::size_t>(f.node)];
    const Entry& entry = lists_[static_cast<std::size_t>(f.node)][static_cast<std::size_t>(f.entry)];
    if (node.kind == SPTree::Kind::leaf) {
      int slot = leaf_job_slot_[static_cast<std::size_t>(f.node)];
      if (slot >= 0) out.assignment[node.arc] = f.periods[static_cast<std::size_t>(slot)];
      continue;
    }
    std::vector<int> left_periods(static_cast<std::size_t>(horizon), 0);
    std::vector<int> right_periods(static_cast<std::size_t>(horizon), 0);
    for (int k = 0; k < horizon; ++k) {
      int combined_slot = entry.canon_src[static_cast<std::size_t>(k)];
      int period = f.periods[static_cast<std::size_t>(k)];
      left_periods[static_cast<std::size_t>(combined_slot)] = period;
      right_periods[static_cast<std::size_t>(entry.right_perm[static_cast<std::size_t>(combined_slot)])] = period;
    }
    stack.push_back({node.left, entry.left, std::move(left_periods)});
    stack.push_back({node.right, entry.right, std::move(right_periods)});
  }
  return out;
}

SolveResult solve_sp_dp(const Instance& inst, const SpDpOptions& opts) {
  SpDp dp(inst, opts);
  int best = dp.best_root_index();
  SolveResult result;
  result.schedule = dp.reconstruct_schedule(best);
  result.report = evaluate(inst, result.schedule);
  if (result.report.total != dp.root_list()[static_cast<std::size_t>(best)].capacity_sum())
    throw std::logic_error("reconstructed schedule does not realize the root vector");
  return result;
}

std::optional<Cap> max_flow_with_outages(const Instance& inst, int rho) {
  if (rho < 0 || rho > static_cast<int>(inst.jobs.size()))
    throw PreconditionError("rho must lie in [0, |J|]");
  SPWitness witness;
  auto tree = decompose(inst.network, &witness);
  if (!tree) throw NotSeriesParallelError("network is not series-parallel: " + witness.message);

  constexpr Cap kNone = std::numeric_limits<Cap>::min();
  std::vector<std::vector<Cap>> z(tree->nodes.size(),
                                  std::vector<Cap>(static_cast<std::size_t>(rho) + 1, kNone));
  for (std::size_t v = 0; v < tree->nodes.size(); ++v) {
    const SPTree::Node& node = tree->nodes[v];
    if (node.kind == SPTree::Kind::leaf) {
      const Arc& arc = inst.network.arcs[static_cast<std::size_t>(node.arc)];
      z[v][0] = arc.capacity;
      if (rho >= 1 && inst.is_job(arc.id)) z[v][1] = 0;
    } else {
      const auto& zu = z[static_cast<std::size_t>(node.left)];
      const auto& zw = z[static_cast<std::size_t>(node.right)];
      for (int j = 0; j <= rho; ++j) {
        if (zu[static_cast<std::size_t>(j)] == kNone) continue;
        for (int jp = 0; j + jp <= rho; ++jp) {
          if (zw[static_cast<std::size_t>(jp)] == kNone) continue;
          Cap cand = node.kind == SPTree::Kind::parallel
                         ? checked_add(zu[static_cast<std::size_t>(j)], zw[static_cast<std::size_t>(jp)])
                         : std::min(zu[static_cast<std::size_t>(j)], zw[static_cast<std::size_t>(jp)]);
          Cap& cell = z[v][static_cast<std::size_t>(j + jp)];
          cell = cell == kNone ? cand : std::max(cell, cand);
        }
      }
    }
  }
  Cap result = z[static_cast<std::size_t>(tree->root)][static_cast<std::size_t>(rho)];
  if (result == kNone) return std::nullopt;
  return result;
}

}  // namespace mfass
