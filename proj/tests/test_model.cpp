#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <random>

#include "mfass/model.hpp"
#include "test_support.hpp"

using namespace mfass;
using namespace mfass::test;

TEST_CASE("max flow on tiny networks") {
  CHECK(max_flow(make_network(2, 0, 1, {{0, 1, 5}})) == 5);
  CHECK(max_flow(make_network(2, 0, 1, {{0, 1, 3}, {0, 1, 4}})) == 7);
  auto chain = make_network(3, 0, 2, {{0, 1, 8}, {1, 2, 7}});
  CHECK(max_flow(chain) == 7);
  CHECK(max_flow(chain, {1}) == 0);  // cut severed
  CHECK(max_flow(chain, {0}) == 0);
}

TEST_CASE("max flow is deterministic and validates shut ids") {
  auto net = make_network(4, 0, 3, {{0, 1, 3}, {0, 2, 4}, {1, 3, 2}, {2, 3, 5}, {1, 2, 1}});
  Cap first = max_flow(net);
  for (int i = 0; i < 5; ++i) CHECK(max_flow(net) == first);
  CHECK_THROWS_AS(max_flow(net, {99}), PreconditionError);
}

TEST_CASE("evaluate idle horizon") {
  auto net = make_network(3, 0, 2, {{0, 1, 7}, {1, 2, 9}});
  Instance inst = make_instance(net, {}, 3, 2);
  Schedule idle;
  auto report = evaluate(inst, idle);
  CHECK(report.total == 21);
  CHECK(report.per_period_flow == std::vector<Cap>{7, 7, 7});
}

TEST_CASE("evaluate equals independent per-period recomputation") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 30; ++iter) {
    auto net = make_network(4, 0, 3,
                            {{0, 1, static_cast<Cap>(rng() % 9)},
                             {0, 2, static_cast<Cap>(rng() % 9)},
                             {1, 3, static_cast<Cap>(rng() % 9)},
                             {2, 3, static_cast<Cap>(rng() % 9)},
                             {1, 2, static_cast<Cap>(rng() % 9)}});
    Instance inst = make_instance(net, {0, 1, 2, 3}, 3, 2);
    Schedule sched;
    // random feasible assignment of the 4 jobs, at most 2 per period
    std::vector<int> load(3, 0);
    for (ArcId j : inst.jobs) {
      int p;
      do {
        p = 1 + static_cast<int>(rng() % 3);
      } while (load[static_cast<std::size_t>(p - 1)] >= 2);
      ++load[static_cast<std::size_t>(p - 1)];
      sched.assignment[j] = p;
    }
    auto report = evaluate(inst, sched);
    Cap recomputed = 0;
    for (int p = 1; p <= 3; ++p) recomputed += max_flow(net, sched.jobs_in_period(p));
    CHECK(report.total == recomputed);
  }
}

TEST_CASE("evaluate rejects bad schedules") {
  auto net = make_network(2, 0, 1, {{0, 1, 5}, {0, 1, 2}});
  Instance inst = make_instance(net, {0, 1}, 2, 1);
  Schedule overfull;
  overfull.assignment = {{0, 1}, {1, 1}};
  CHECK_THROWS_AS(evaluate(inst, overfull), InfeasibleScheduleError);
  Schedule missing;
  missing.assignment = {{0, 1}};
  CHECK_THROWS_AS(evaluate(inst, missing), InfeasibleScheduleError);
}

TEST_CASE("validate_instance feasibility") {
  auto net = make_network(2, 0, 1, {{0, 1, 1}, {0, 1, 1}, {0, 1, 1}, {0, 1, 1}, {0, 1, 1}});
  CHECK_FALSE(validate_instance(make_instance(net, {0, 1, 2, 3, 4}, 2, 2)).empty());  // 5 > 4
  CHECK(validate_instance(make_instance(net, {0, 1, 2, 3}, 2, 2)).empty());           // 4 == 4
  CHECK(validate_instance(make_instance(net, {}, 1, 0)).empty());
  Instance bad = make_instance(net, {}, 2, 2);
  bad.network.arcs[1].capacity = -3;
  CHECK_FALSE(validate_instance(bad).empty());
}

TEST_CASE("classify single arc") {
  Instance inst = make_instance(make_network(2, 0, 1, {{0, 1, 1}}), {0}, 1, 1);
  auto tags = classify(inst);
  CHECK(tags.is_series_parallel);
  CHECK(tags.is_balanced);
  CHECK(tags.is_unit_capacity);
  CHECK(tags.all_arcs_jobbed);
}

TEST_CASE("classify flags are independent") {
  // Wheatstone bridge: not series-parallel; node 2 is unbalanced (in 2, out 5)
  auto net = make_network(4, 0, 3, {{0, 1, 2}, {0, 2, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 5}});
  Instance inst = make_instance(net, {0}, 1, 1);
  auto tags = classify(inst);
  CHECK_FALSE(tags.is_series_parallel);
  CHECK_FALSE(tags.is_balanced);
  CHECK_FALSE(tags.is_unit_capacity);
  CHECK_FALSE(tags.all_arcs_jobbed);
}

TEST_CASE("monotonicity: shutting more arcs never raises the flow") {
  std::mt19937_64 rng(21);
  for (int iter = 0; iter < 50; ++iter) {
    int nodes = 3 + static_cast<int>(rng() % 3);
    std::vector<std::tuple<NodeId, NodeId, Cap>> arcs;
    int m = 4 + static_cast<int>(rng() % 6);
    for (int i = 0; i < m; ++i)
      arcs.emplace_back(static_cast<NodeId>(rng() % static_cast<unsigned>(nodes)),
                        static_cast<NodeId>(rng() % static_cast<unsigned>(nodes)),
                        static_cast<Cap>(rng() % 10));
    auto net = make_network(nodes, 0, nodes - 1, arcs);
    std::vector<ArcId> s1, s2;
    for (ArcId a = 0; a < net.arc_count(); ++a) {
      if (rng() % 3 == 0) s1.push_back(a);
      if (rng() % 2 == 0) s2.push_back(a);
    }
    // force s1 subset of s2
    std::vector<ArcId> s2u = s2;
    for (ArcId a : s1) s2u.push_back(a);
    std::sort(s2u.begin(), s2u.end());
    s2u.erase(std::unique(s2u.begin(), s2u.end()), s2u.end());
    CHECK(max_flow(net, s1) >= max_flow(net, s2u));
  }
}

TEST_CASE("total is bounded by the idle horizon") {
  std::mt19937_64 rng(22);
  for (int iter = 0; iter < 20; ++iter) {
    auto net = make_network(3, 0, 2,
                            {{0, 1, static_cast<Cap>(rng() % 10)},
                             {0, 1, static_cast<Cap>(rng() % 10)},
                             {1, 2, static_cast<Cap>(rng() % 10)},
                             {1, 2, static_cast<Cap>(rng() % 10)}});
    Instance inst = make_instance(net, {0, 2}, 2, 2);
    Schedule sched;
    sched.assignment = {{0, 1 + static_cast<int>(rng() % 2)}, {2, 1 + static_cast<int>(rng() % 2)}};
    CHECK(evaluate(inst, sched).total <= 2 * max_flow(net));
  }
}

TEST_CASE("uniform K: totals survive period relabeling") {
  auto net = make_network(3, 0, 2, {{0, 1, 5}, {0, 1, 3}, {1, 2, 6}, {1, 2, 4}});
  Instance inst = make_instance(net, {0, 1, 2, 3}, 3, 2);
  Schedule sched;
  sched.assignment = {{0, 1}, {1, 2}, {2, 2}, {3, 3}};
  Cap base = evaluate(inst, sched).total;
  // swap period labels 1 <-> 3
  Schedule permuted;
  for (auto [arc, p] : sched.assignment) permuted.assignment[arc] = p == 1 ? 3 : p == 3 ? 1 : p;
  CHECK(evaluate(inst, permuted).total == base);
}

TEST_CASE("checked_add overflows loudly") {
  CHECK_THROWS_AS(checked_add(std::numeric_limits<Cap>::max(), 1), std::overflow_error);
  CHECK(checked_add(3, 4) == 7);
}

// validate_schedule accepts exactly the assignments whose induced
// availability matrix satisfies the row-sum and per-period constraints
TEST_CASE("schedule feasibility matches the availability-matrix view") {
  std::mt19937_64 rng(23);
  auto net = make_network(3, 0, 2, {{0, 1, 5}, {0, 1, 3}, {1, 2, 6}, {1, 2, 4}});
  Instance inst = make_instance(net, {0, 1, 3}, {2, 1, 2});
  for (int iter = 0; iter < 300; ++iter) {
    // random maps, frequently invalid: maybe missing jobs, overfull periods
    Schedule sched;
    for (ArcId j : inst.jobs)
      if (rng() % 5 != 0) sched.assignment[j] = 1 + static_cast<int>(rng() % 3);
    if (rng() % 7 == 0) sched.assignment[2] = 1;  // non-job arc

    // y[a][i] = 1 unless the outage of job arc a is scheduled in period i
    bool matrix_ok = true;
    for (const auto& [arc, p] : sched.assignment)
      if (!inst.is_job(arc) || p < 1 || p > inst.horizon) matrix_ok = false;
    if (matrix_ok) {
      for (ArcId j : inst.jobs) {
        int row_sum = 0;
        for (int i = 1; i <= inst.horizon; ++i)
          row_sum += (sched.period_of(j) && *sched.period_of(j) == i) ? 0 : 1;
        if (row_sum != inst.horizon - 1) matrix_ok = false;
      }
      for (int i = 1; i <= inst.horizon && matrix_ok; ++i) {
        int avail = 0;
        for (ArcId j : inst.jobs)
          avail += (sched.period_of(j) && *sched.period_of(j) == i) ? 0 : 1;
        if (avail < static_cast<int>(inst.jobs.size()) - inst.limit(i)) matrix_ok = false;
      }
    }
    CHECK(validate_schedule(inst, sched).empty() == matrix_ok);
  }
}
