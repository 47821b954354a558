#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <sstream>

#include "mfass/generators.hpp"
#include "mfass/io.hpp"
#include "mfass/lp_export.hpp"
#include "mfass/oracle.hpp"
#include "lp_check_support.hpp"
#include "test_support.hpp"

using namespace mfass;
using namespace mfass::test;

namespace {

bool same_instance(const Instance& a, const Instance& b) {
  if (a.network.node_count != b.network.node_count || a.network.source != b.network.source ||
      a.network.sink != b.network.sink || a.horizon != b.horizon || a.limits != b.limits ||
      a.jobs != b.jobs || a.network.arcs.size() != b.network.arcs.size())
    return false;
  for (std::size_t i = 0; i < a.network.arcs.size(); ++i) {
    const Arc& x = a.network.arcs[i];
    const Arc& y = b.network.arcs[i];
    if (x.id != y.id || x.tail != y.tail || x.head != y.head || x.capacity != y.capacity)
      return false;
  }
  return true;
}

int line_of(const std::string& text, auto fn) {
  try {
    fn(text);
  } catch (const ParseError& e) {
    return e.line;
  }
  return -1;
}

}  // namespace

TEST_CASE("instance parse/print round trip") {
  std::string text =
      "# demo instance\n"
      "nodes 3\n"
      "source 0\n"
      "sink 2\n"
      "horizon 3\n"
      "limits 2 1 2\n"
      "arc 0 0 1 5 1\n"
      "arc 1 1 2 7 0\n";
  Instance inst = parse_instance(text);
  CHECK(inst.network.node_count == 3);
  CHECK(inst.horizon == 3);
  CHECK(inst.limits == std::vector<int>{2, 1, 2});
  CHECK(inst.jobs == std::vector<ArcId>{0});
  CHECK(same_instance(inst, parse_instance(format_instance(inst))));
  // canonical printing is a fixpoint
  CHECK(format_instance(inst) == format_instance(parse_instance(format_instance(inst))));
}

TEST_CASE("round trip across a generated corpus") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    RandomSpConfig cfg;
    cfg.arc_count = 1 + static_cast<int>(seed % 10);
    cfg.horizon = 1 + static_cast<int>(seed % 4);
    cfg.seed = seed;
    Instance inst = gen_random_sp(cfg);
    CHECK(same_instance(inst, parse_instance(format_instance(inst))));
  }
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    RandomSingleNodeConfig cfg;
    cfg.in_arcs = static_cast<int>(seed % 3);
    cfg.out_arcs = 1 + static_cast<int>(seed % 4);
    cfg.seed = seed;
    Instance inst = gen_random_single_node(cfg);
    CHECK(same_instance(inst, parse_instance(format_instance(inst))));
  }
  for (const auto& gen :
       {gen_3partition(10, {3, 3, 3, 3, 4, 4}), gen_partition(4, {2, 2, 3, 1}),
        gen_unitcap(10, {3, 3, 3, 3, 4, 4})}) {
    CHECK(same_instance(gen.instance, parse_instance(format_instance(gen.instance))));
    Certificate cert = parse_certificate(format_certificate(gen.certificate));
    CHECK(cert.bound == gen.certificate.bound);
    CHECK(cert.family == gen.certificate.family);
    CHECK(cert.decision == gen.certificate.decision);
  }
}

TEST_CASE("uniform limits print as a single limit line") {
  auto net = make_network(2, 0, 1, {{0, 1, 5}});
  Instance inst = make_instance(net, {0}, 3, 2);
  std::string text = format_instance(inst);
  CHECK(text.find("limit 2\n") != std::string::npos);
  CHECK(text.find("limits") == std::string::npos);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(line_of("nodes 2\nsource 0\nbogus 1\n", [](const std::string& t) { parse_instance(t); }) == 3);
  CHECK(line_of("nodes 2\nsource 0\nsink 1\nhorizon 1\nlimit 1\narc 0 0 1 x 0\n",
                [](const std::string& t) { parse_instance(t); }) == 6);
  CHECK(line_of("nodes 2\nsource 0\nsink 1\nhorizon 1\nlimit 1\narc 0 0 1 4 7\n",
                [](const std::string& t) { parse_instance(t); }) == 6);
  // duplicate arc id reported on the offending line
  CHECK(line_of(
            "nodes 2\nsource 0\nsink 1\nhorizon 1\nlimit 1\narc 0 0 1 4 0\narc 0 0 1 2 0\n",
            [](const std::string& t) { parse_instance(t); }) == 7);
  CHECK_THROWS_AS(parse_instance("nodes 2\nsource 0\nsink 1\nlimit 1\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("nodes 2\nsource 0\nsink 1\nhorizon 2\nlimits 1 1 1\n"),
                  ParseError);
}

TEST_CASE("schedule parse/print round trip") {
  Schedule sched;
  sched.assignment = {{0, 1}, {3, 1}, {2, 4}};
  std::string text = format_schedule(sched, 5);
  CHECK(text == "period 1: 0 3\nperiod 4: 2\n");
  Schedule back = parse_schedule(text);
  CHECK(back.assignment == sched.assignment);
  // tolerant colon placement
  CHECK(parse_schedule("period 2 : 7\n").assignment.at(7) == 2);
}

TEST_CASE("schedule parse errors") {
  CHECK_THROWS_AS(parse_schedule("period 1: 0\nperiod 1: 2\n"), ParseError);
  CHECK_THROWS_AS(parse_schedule("period 1: 0\nperiod 2: 0\n"), ParseError);
  CHECK_THROWS_AS(parse_schedule("period one: 0\n"), ParseError);
  CHECK_THROWS_AS(parse_schedule("shift 1: 0\n"), ParseError);
  CHECK(line_of("period 1: 0\nperiod 2: 0\n", [](const std::string& t) { parse_schedule(t); }) ==
        2);
}

TEST_CASE("certificate format handles missing bounds") {
  Certificate cert;
  cert.family = "random";
  Certificate back = parse_certificate(format_certificate(cert));
  CHECK_FALSE(back.bound.has_value());
  CHECK(back.decision == Certificate::Decision::unknown);
  CHECK(back.family == "random");
}

TEST_CASE("LP export counts match the model dimensions") {
  // m=4, |J|=2, T=2
  auto net = make_network(3, 0, 2, {{0, 1, 5}, {1, 2, 7}, {0, 1, 3}, {1, 2, 4}});
  Instance inst = make_instance(net, {0, 1}, 2, 1);
  std::string lp = export_lp(inst);

  auto count_prefix = [&lp](const std::string& prefix) {
    int n = 0;
    std::istringstream is(lp);
    std::string line;
    while (std::getline(is, line))
      if (line.rfind(prefix, 0) == 0) ++n;
    return n;
  };
  CHECK(count_prefix(" capj_") == 4);
  CHECK(count_prefix(" capn_") == 4);
  CHECK(count_prefix(" dur_") == 2);
  CHECK(count_prefix(" lim_") == 2);
  CHECK(count_prefix(" cons_") == 2);  // one transshipment node, two periods

  // 8 flow variables in Bounds, 4 binaries
  CHECK(count_prefix(" x_") == 8);
  CHECK(count_prefix(" y_") == 4);

  // deterministic re-export
  CHECK(lp == export_lp(inst));
}

TEST_CASE("LP export without jobs is a pure max-flow program") {
  auto net = make_network(3, 0, 2, {{0, 1, 5}, {1, 2, 7}});
  Instance inst = make_instance(net, {}, 2, 1);
  std::string lp = export_lp(inst);
  CHECK(lp.find("Binaries") == std::string::npos);
  CHECK(lp.find(" lim_") == std::string::npos);
  CHECK(lp.find(" dur_") == std::string::npos);
  CHECK(lp.find(" capn_") != std::string::npos);
}


TEST_CASE("LP feasible region reproduces the oracle optimum") {
  std::vector<Instance> corpus;
  corpus.push_back(gen_partition(4, {2, 2, 3, 1}).instance);
  corpus.push_back(gen_3partition(10, {3, 3, 3, 3, 4, 4}).instance);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    RandomSpConfig cfg;
    cfg.arc_count = 2 + static_cast<int>(seed % 5);
    cfg.horizon = 2;
    cfg.limit = 2;
    cfg.seed = seed;
    Instance inst = gen_random_sp(cfg);
    if (static_cast<long long>(inst.jobs.size()) <= inst.limit_sum()) corpus.push_back(inst);
  }
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    RandomSingleNodeConfig cfg;
    cfg.in_arcs = 1 + static_cast<int>(seed % 2);
    cfg.out_arcs = 1 + static_cast<int>(seed % 3);
    cfg.horizon = 2 + static_cast<int>(seed % 2);
    cfg.seed = seed;
    corpus.push_back(gen_random_single_node(cfg));
  }
  for (const Instance& inst : corpus) {
    auto parsed = lpcheck::parse(export_lp(inst));
    CHECK(parsed.arc_count == inst.network.arc_count());
    CHECK(static_cast<int>(parsed.jobs.size()) == static_cast<int>(inst.jobs.size()));
    CHECK(parsed.horizon == inst.horizon);
    std::set<ArcId> src_arcs;
    for (const Arc& a : inst.network.arcs)
      if (a.tail == inst.network.source) src_arcs.insert(a.id);
    CHECK(parsed.leaves_source == src_arcs);
    Cap via_lp = lpcheck::best_over_availability_patterns(parsed);
    CHECK(via_lp == solve_bruteforce(inst).report.total);
  }
}
