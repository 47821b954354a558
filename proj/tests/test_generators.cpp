#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mfass/generators.hpp"
#include "mfass/io.hpp"
#include "mfass/k2solver.hpp"
#include "mfass/oracle.hpp"
#include "mfass/sptree.hpp"
#include "test_support.hpp"

using namespace mfass;
using namespace mfass::test;

TEST_CASE("3-partition gadget structure, B=10") {
  auto gen = gen_3partition(10, {3, 3, 3, 3, 4, 4});
  const Instance& inst = gen.instance;
  CHECK(inst.horizon == 2);
  CHECK(inst.limits == std::vector<int>{3, 3});
  CHECK(inst.network.arc_count() == 6);
  // shifted values (-1,-1,-1,-1,2,2): four unit out-arcs, two cap-2 in-arcs
  int in_arcs = 0, out_arcs = 0;
  Cap in_cap = 0, out_cap = 0;
  for (const Arc& a : inst.network.arcs) {
    if (a.tail == inst.network.source) {
      ++in_arcs;
      in_cap += a.capacity;
    } else {
      ++out_arcs;
      out_cap += a.capacity;
    }
  }
  CHECK(in_arcs == 2);
  CHECK(out_arcs == 4);
  CHECK(in_cap == 4);
  CHECK(out_cap == 4);  // zero-sum of the shifted values
  CHECK(*gen.certificate.bound == 4);
  CHECK(gen.certificate.family == "3part");
  CHECK(gen.certificate.decision == Certificate::Decision::unknown);

  auto tags = classify(inst);
  CHECK(tags.is_series_parallel);
  CHECK(tags.is_balanced);
  CHECK(tags.all_arcs_jobbed);
  CHECK_FALSE(tags.is_unit_capacity);
}

TEST_CASE("3-partition YES instance attains the bound, NO stays below") {
  auto yes = gen_3partition(10, {3, 3, 3, 3, 4, 4});
  CHECK(solve_bruteforce(yes.instance).report.total == *yes.certificate.bound);

  // B=16, values (5,5,5,5,5,7): no triple sums to 16
  auto no = gen_3partition(16, {5, 5, 5, 5, 5, 7});
  CHECK(solve_bruteforce(no.instance).report.total < *no.certificate.bound);
}

TEST_CASE("3-partition gadgets are balanced for any valid input") {
  for (auto [b, vals] : std::vector<std::pair<Cap, std::vector<Cap>>>{
           {10, {3, 3, 3, 3, 4, 4}},
           {16, {5, 5, 5, 5, 5, 7}},
           {20, {6, 6, 7, 7, 7, 7}},
           {20, {6, 7, 7, 6, 7, 7, 6, 7, 7}}}) {
    auto gen = gen_3partition(b, vals);
    CHECK(classify(gen.instance).is_balanced);
    CHECK(classify(gen.instance).is_series_parallel);
  }
}

TEST_CASE("3-partition preconditions") {
  CHECK_THROWS_AS(gen_3partition(10, {3, 3, 3}), PreconditionError);        // sum != nB
  CHECK_THROWS_AS(gen_3partition(10, {2, 4, 4, 3, 3, 4}), PreconditionError);  // 2 <= B/4
  CHECK_THROWS_AS(gen_3partition(10, {5, 3, 2, 3, 3, 4}), PreconditionError);  // 5 >= B/2
  CHECK_THROWS_AS(gen_3partition(10, {3, 3, 3, 3}), PreconditionError);     // not 3n values
}

TEST_CASE("partition gadget structure and certificates") {
  auto yes = gen_partition(4, {2, 2, 3, 1});
  CHECK(yes.instance.horizon == 2);
  CHECK(yes.instance.limits == std::vector<int>{5, 5});  // K = |J| - 1 = n + 1
  CHECK(yes.instance.network.arc_count() == 6);
  CHECK(*yes.certificate.bound == 8);
  CHECK(classify(yes.instance).is_balanced);
  CHECK(classify(yes.instance).is_series_parallel);
  CHECK(classify(yes.instance).all_arcs_jobbed);
  CHECK(solve_bruteforce(yes.instance).report.total == 8);

  auto no = gen_partition(4, {3, 5});
  Cap no_total = solve_bruteforce(no.instance).report.total;
  CHECK(no_total < 8);
  CHECK(no_total == 7);  // best split: {3,B} | {5,B}

  CHECK_THROWS_AS(gen_partition(4, {3, 3}), PreconditionError);
}

TEST_CASE("unit-capacity gadget structure, B=10") {
  auto gen = gen_unitcap(10, {3, 3, 3, 3, 4, 4});
  const Instance& inst = gen.instance;
  CHECK(inst.jobs.size() == 20);  // sum of values = nB
  CHECK(inst.network.arc_count() == 23);  // 20 path arcs + 3(n-1) sink arcs
  CHECK(inst.horizon == 2);
  CHECK(inst.limits == std::vector<int>{10, 10});
  CHECK(*gen.certificate.bound == 6);  // 3n(n-1)

  auto tags = classify(inst);
  CHECK(tags.is_unit_capacity);
  CHECK_FALSE(tags.all_arcs_jobbed);

  // exactly B jobs forced per period at full throughput
  CHECK(static_cast<Cap>(inst.jobs.size()) == 2 * 10);
}

TEST_CASE("unit-capacity YES instance attains 3n(n-1)") {
  auto gen = gen_unitcap(10, {3, 3, 3, 3, 4, 4});
  CHECK(solve_bruteforce(gen.instance).report.total == 6);
}

TEST_CASE("random SP instances are deterministic and decomposable") {
  RandomSpConfig cfg;
  cfg.arc_count = 6;
  cfg.seed = 42;
  Instance a = gen_random_sp(cfg);
  Instance b = gen_random_sp(cfg);
  CHECK(format_instance(a) == format_instance(b));

  cfg.arc_count = 1;
  CHECK(gen_random_sp(cfg).network.arc_count() == 1);

  int decomposed = 0;
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    RandomSpConfig c;
    c.arc_count = 1 + static_cast<int>(seed % 12);
    c.seed = seed;
    if (decompose(gen_random_sp(c).network)) ++decomposed;
  }
  CHECK(decomposed == 1000);
}

TEST_CASE("random single-node instances are deterministic and well-shaped") {
  RandomSingleNodeConfig cfg;
  cfg.in_arcs = 2;
  cfg.out_arcs = 3;
  cfg.horizon = 3;
  cfg.seed = 9;
  Instance a = gen_random_single_node(cfg);
  CHECK(format_instance(a) == format_instance(gen_random_single_node(cfg)));
  CHECK(a.network.arc_count() == 5);
  CHECK(a.jobs.size() == 5);
  // the single-node solver accepts the topology
  CHECK_NOTHROW(single_node_schedule(a));

  RandomSingleNodeConfig tiny;
  tiny.in_arcs = 0;
  tiny.out_arcs = 1;
  tiny.horizon = 1;
  tiny.seed = 1;
  CHECK_NOTHROW(single_node_schedule(gen_random_single_node(tiny)));
}
