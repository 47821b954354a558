// Command line front end: solve, check, gen, export-lp, bench.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "mfass/approx.hpp"
#include "mfass/generators.hpp"
#include "mfass/io.hpp"
#include "mfass/k2solver.hpp"
#include "mfass/lp_export.hpp"
#include "mfass/oracle.hpp"
#include "mfass/spdp.hpp"

namespace fs = std::filesystem;
using namespace mfass;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitParse = 4;

struct SolveOutcome {
  std::string algorithm;
  Schedule schedule;
  ThroughputReport report;
  std::optional<FptasCertificate> certificate;
};

bool is_single_node_topology(const FlowNetwork& net) {
  NodeId mid = -1;
  for (const Arc& a : net.arcs) {
    NodeId interior;
    if (a.tail == net.source && a.head != net.sink)
      interior = a.head;
    else if (a.head == net.sink && a.tail != net.source)
      interior = a.tail;
    else
      return false;
    if (interior == net.source || interior == net.sink) return false;
    if (mid < 0) mid = interior;
    if (interior != mid) return false;
  }
  return mid >= 0;
}

bool limits_cover_all_jobs(const Instance& inst) {
  for (int k : inst.limits)
    if (k < static_cast<int>(inst.jobs.size())) return false;
  return true;
}

SolveOutcome run_algorithm(const Instance& inst, const std::string& algorithm,
                           const std::optional<Rational>& epsilon, std::uint64_t oracle_cap,
                           int dp_horizon_max) {
  SolveOutcome out;
  auto fill = [&out](const std::string& name, SolveResult result) {
    out.algorithm = name;
    out.schedule = std::move(result.schedule);
    out.report = std::move(result.report);
  };

  if (algorithm == "bruteforce") {
    OracleOptions opts;
    opts.max_assignments = oracle_cap;
    fill("bruteforce", solve_bruteforce(inst, opts));
  } else if (algorithm == "k2") {
    fill("k2", solve_k2(inst));
  } else if (algorithm == "single-node") {
    Schedule sched = single_node_schedule(inst);
    out.algorithm = "single-node";
    out.report = evaluate(inst, sched);
    out.schedule = std::move(sched);
  } else if (algorithm == "spdp") {
    fill("spdp", solve_sp_dp(inst));
  } else if (algorithm == "fptas") {
    if (!epsilon) throw UnsupportedInstanceError("fptas requires --epsilon");
    FptasResult fp = solve_fptas(inst, *epsilon);
    out.algorithm = "fptas";
    out.schedule = std::move(fp.schedule);
    out.report = std::move(fp.report);
    out.certificate = fp.certificate;
  } else if (algorithm == "ptas") {
    if (!epsilon) throw UnsupportedInstanceError("ptas requires --epsilon");
    fill("ptas", solve_ptas_kall(inst, *epsilon));
  } else if (algorithm == "auto") {
    bool uniform_k2 = inst.uniform_limit() && !inst.limits.empty() && inst.limits.front() == 2;
    bool sp = !inst.network.arcs.empty() && decompose(inst.network).has_value();
    if (uniform_k2 && static_cast<int>(inst.jobs.size()) <= 2 * inst.horizon) {
      if (is_single_node_topology(inst.network)) {
        Schedule sched = single_node_schedule(inst);
        out.algorithm = "single-node";
        out.report = evaluate(inst, sched);
        out.schedule = std::move(sched);
      } else {
        fill("k2", solve_k2(inst));
      }
    } else if (sp && inst.horizon <= dp_horizon_max) {
      if (epsilon) {
        FptasResult fp = solve_fptas(inst, *epsilon);
        out.algorithm = "fptas";
        out.schedule = std::move(fp.schedule);
        out.report = std::move(fp.report);
        out.certificate = fp.certificate;
      } else {
        fill("spdp", solve_sp_dp(inst));
      }
    } else if (sp && limits_cover_all_jobs(inst) && epsilon) {
      fill("ptas", solve_ptas_kall(inst, *epsilon));
    } else {
      OracleOptions opts;
      opts.max_assignments = oracle_cap;
      try {
        fill("bruteforce", solve_bruteforce(inst, opts));
      } catch (const TooLargeError&) {
        std::string why = "no solver applies: ";
        if (!sp)
          why += "network is not series-parallel and the enumeration is too large";
        else if (limits_cover_all_jobs(inst))
          why += "pass --epsilon to enable the PTAS for unlimited per-period outages";
        else
          why += "horizon exceeds the DP threshold and the enumeration is too large";
        throw UnsupportedInstanceError(why);
      }
    }
  } else {
    throw UnsupportedInstanceError("unknown algorithm '" + algorithm + "'");
  }
  return out;
}

void print_report(const Instance& inst, const SolveOutcome& out) {
  std::cout << "algorithm: " << out.algorithm << "\n";
  std::cout << "total: " << out.report.total << "\n";
  for (int i = 1; i <= inst.horizon; ++i) {
    std::cout << "period " << i << ": flow "
              << out.report.per_period_flow[static_cast<std::size_t>(i - 1)] << ", outages:";
    auto jobs = out.schedule.jobs_in_period(i);
    if (jobs.empty()) std::cout << " none";
    for (ArcId a : jobs) std::cout << " " << a;
    std::cout << "\n";
  }
  if (out.certificate) std::cout << out.certificate->to_text();
}

int classify_exception(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return kExitParse;
  if (dynamic_cast<const InfeasibleError*>(&e) || dynamic_cast<const InfeasibleScheduleError*>(&e))
    return kExitInfeasible;
  if (dynamic_cast<const UnsupportedInstanceError*>(&e) ||
      dynamic_cast<const NotSeriesParallelError*>(&e) ||
      dynamic_cast<const TooLargeError*>(&e) || dynamic_cast<const WrongTopologyError*>(&e) ||
      dynamic_cast<const PreconditionError*>(&e))
    return kExitUnsupported;
  return kExitError;
}

std::uint64_t seed_override(std::uint64_t seed) {
  if (const char* env = std::getenv("MFASS_SEED")) return std::strtoull(env, nullptr, 10);
  return seed;
}

int run_bench(const fs::path& config_path, const std::optional<fs::path>& out_path) {
  std::ifstream in(config_path);
  if (!in) {
    std::cerr << "cannot open " << config_path << "\n";
    return kExitError;
  }
  std::vector<std::string> instances, solvers;
  std::optional<Rational> epsilon;
  std::uint64_t oracle_cap = 10'000'000;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string kind, value;
    if (!(ls >> kind)) continue;
    ls >> value;
    if (kind == "instance")
      instances.push_back(value);
    else if (kind == "solver")
      solvers.push_back(value);
    else if (kind == "epsilon")
      epsilon = Rational::from_decimal_string(value);
    else if (kind == "oracle-cap")
      oracle_cap = std::strtoull(value.c_str(), nullptr, 10);
    else {
      std::cerr << "bench config line " << line_no << ": unknown directive '" << kind << "'\n";
      return kExitParse;
    }
  }

  std::ostringstream csv;
  csv << "family,instance,solver,status,total,wall_ms,gap_vs_oracle\n";
  for (const std::string& inst_path : instances) {
    std::string family = "unknown";
    fs::path cert_path = fs::path(inst_path).replace_extension(".cert");
    if (fs::exists(cert_path)) {
      try {
        family = read_certificate(cert_path).family;
      } catch (const std::exception&) {
      }
    }
    std::optional<Instance> inst;
    std::optional<Cap> oracle_total;
    try {
      inst = read_instance(inst_path);
      OracleOptions opts;
      opts.max_assignments = oracle_cap;
      oracle_total = solve_bruteforce(*inst, opts).report.total;
    } catch (const std::exception&) {
      // row-level errors reported below; oracle gap left blank
    }
    for (const std::string& solver : solvers) {
      csv << family << "," << inst_path << "," << solver << ",";
      if (!inst) {
        csv << "error: unreadable instance,,,\n";
        continue;
      }
      try {
        auto start = std::chrono::steady_clock::now();
        SolveOutcome out = run_algorithm(*inst, solver, epsilon, oracle_cap, 4);
        double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        csv << "ok," << out.report.total << "," << ms << ",";
        if (oracle_total && *oracle_total > 0) {
          double gap = static_cast<double>(*oracle_total - out.report.total) /
                       static_cast<double>(*oracle_total);
          csv << gap;
        } else if (oracle_total) {
          csv << 0;
        }
        csv << "\n";
      } catch (const std::exception& e) {
        std::string msg = e.what();
        for (char& c : msg)
          if (c == ',' || c == '\n') c = ' ';
        csv << "error: " << msg << ",,,\n";
      }
    }
  }
  if (out_path) {
    std::ofstream out(*out_path);
    out << csv.str();
  } else {
    std::cout << csv.str();
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maximum-flow arc shutdown scheduling toolkit"};
  app.require_subcommand(1);

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "solve an instance file");
  std::string solve_input, solve_algorithm = "auto", solve_epsilon, solve_output;
  std::uint64_t solve_oracle_cap = 10'000'000;
  int dp_horizon_max = 4;
  solve_cmd->add_option("input", solve_input, "instance file (.mfass)")->required();
  solve_cmd->add_option("--algorithm", solve_algorithm,
                        "auto|bruteforce|k2|single-node|spdp|fptas|ptas");
  solve_cmd->add_option("--epsilon", solve_epsilon, "approximation parameter in (0,1)");
  solve_cmd->add_option("--output,-o", solve_output, "schedule output path (default <input>.sched)");
  solve_cmd->add_option("--oracle-cap", solve_oracle_cap, "assignment cap for bruteforce");
  solve_cmd->add_option("--dp-horizon-max", dp_horizon_max, "auto-dispatch DP horizon threshold");

  // check
  auto* check_cmd = app.add_subcommand("check", "validate and re-score a schedule");
  std::string check_input, check_schedule;
  check_cmd->add_option("input", check_input, "instance file")->required();
  check_cmd->add_option("schedule", check_schedule, "schedule file")->required();

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "generate instances");
  gen_cmd->require_subcommand(1);
  std::string gen_output;
  Cap gen_b = 0;
  std::vector<Cap> gen_values;
  auto add_gadget_options = [&](CLI::App* cmd) {
    cmd->add_option("--b", gen_b, "target sum B")->required();
    cmd->add_option("--values", gen_values, "comma-separated values")
        ->required()
        ->delimiter(',');
    cmd->add_option("--output,-o", gen_output, "output .mfass path")->required();
  };
  auto* gen_3part = gen_cmd->add_subcommand("3part", "3-Partition gadget");
  add_gadget_options(gen_3part);
  auto* gen_part = gen_cmd->add_subcommand("part", "Partition gadget");
  add_gadget_options(gen_part);
  auto* gen_unit = gen_cmd->add_subcommand("unitcap", "unit-capacity 3-Partition gadget");
  add_gadget_options(gen_unit);

  auto* gen_rsp = gen_cmd->add_subcommand("random-sp", "random series-parallel instance");
  RandomSpConfig sp_cfg;
  gen_rsp->add_option("--arcs", sp_cfg.arc_count, "arc count");
  gen_rsp->add_option("--cap-min", sp_cfg.cap_min, "minimum capacity");
  gen_rsp->add_option("--cap-max", sp_cfg.cap_max, "maximum capacity");
  gen_rsp->add_option("--job-prob", sp_cfg.job_probability, "job probability");
  gen_rsp->add_option("--horizon", sp_cfg.horizon, "periods");
  gen_rsp->add_option("--limit", sp_cfg.limit, "uniform per-period limit");
  gen_rsp->add_option("--seed", sp_cfg.seed, "random seed");
  gen_rsp->add_option("--output,-o", gen_output, "output .mfass path")->required();

  auto* gen_rsn = gen_cmd->add_subcommand("random-single-node", "random s->v->t instance");
  RandomSingleNodeConfig sn_cfg;
  gen_rsn->add_option("--in", sn_cfg.in_arcs, "arcs into the node");
  gen_rsn->add_option("--out", sn_cfg.out_arcs, "arcs out of the node");
  gen_rsn->add_option("--cap-min", sn_cfg.cap_min, "minimum capacity");
  gen_rsn->add_option("--cap-max", sn_cfg.cap_max, "maximum capacity");
  gen_rsn->add_option("--horizon", sn_cfg.horizon, "periods");
  gen_rsn->add_option("--seed", sn_cfg.seed, "random seed");
  gen_rsn->add_option("--output,-o", gen_output, "output .mfass path")->required();

  // export-lp
  auto* lp_cmd = app.add_subcommand("export-lp", "write the mixed binary program in LP format");
  std::string lp_input, lp_output;
  lp_cmd->add_option("input", lp_input, "instance file")->required();
  lp_cmd->add_option("--output,-o", lp_output, "output .lp path (default <input>.lp)");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "run a solver comparison from a config file");
  std::string bench_config, bench_output;
  bench_cmd->add_option("config", bench_config, "bench config file")->required();
  bench_cmd->add_option("--output,-o", bench_output, "CSV output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve_cmd->parsed()) {
      Instance inst = read_instance(solve_input);
      auto errs = validate_instance(inst);
      if (!errs.empty()) {
        for (const auto& e : errs) std::cerr << "invalid instance: " << e << "\n";
        bool infeasible =
            static_cast<long long>(inst.jobs.size()) > inst.limit_sum() && errs.size() == 1;
        return infeasible ? kExitInfeasible : kExitParse;
      }
      std::optional<Rational> eps;
      if (!solve_epsilon.empty()) eps = Rational::from_decimal_string(solve_epsilon);
      SolveOutcome out =
          run_algorithm(inst, solve_algorithm, eps, solve_oracle_cap, dp_horizon_max);
      print_report(inst, out);
      fs::path sched_path = solve_output.empty() ? fs::path(solve_input + ".sched")
                                                 : fs::path(solve_output);
      write_schedule(sched_path, out.schedule, inst.horizon);
      std::cout << "schedule written to " << sched_path.string() << "\n";
      return kExitOk;
    }
    if (check_cmd->parsed()) {
      Instance inst = read_instance(check_input);
      Schedule sched = read_schedule(check_schedule);
      auto violations = validate_schedule(inst, sched);
      if (!violations.empty()) {
        std::cout << "infeasible schedule:\n";
        for (const auto& v : violations) std::cout << "  " << v << "\n";
        return kExitInfeasible;
      }
      auto report = evaluate(inst, sched);
      std::cout << "schedule is feasible\n";
      std::cout << "total: " << report.total << "\n";
      for (int i = 1; i <= inst.horizon; ++i)
        std::cout << "period " << i << ": flow "
                  << report.per_period_flow[static_cast<std::size_t>(i - 1)] << "\n";
      return kExitOk;
    }
    if (gen_cmd->parsed()) {
      std::optional<GeneratedInstance> generated;
      std::optional<Instance> plain;
      if (gen_3part->parsed()) generated = gen_3partition(gen_b, gen_values);
      if (gen_part->parsed()) generated = gen_partition(gen_b, gen_values);
      if (gen_unit->parsed()) generated = gen_unitcap(gen_b, gen_values);
      if (gen_rsp->parsed()) {
        sp_cfg.seed = seed_override(sp_cfg.seed);
        plain = gen_random_sp(sp_cfg);
      }
      if (gen_rsn->parsed()) {
        sn_cfg.seed = seed_override(sn_cfg.seed);
        plain = gen_random_single_node(sn_cfg);
      }
      fs::path out_path(gen_output);
      Certificate cert;
      cert.family = "random";
      const Instance& inst = generated ? generated->instance : *plain;
      if (generated) cert = generated->certificate;
      write_instance(out_path, inst);
      write_certificate(fs::path(out_path).replace_extension(".cert"), cert);
      std::cout << "instance written to " << out_path.string() << " ("
                << inst.network.arc_count() << " arcs, " << inst.jobs.size() << " jobs, horizon "
                << inst.horizon << ")\n";
      return kExitOk;
    }
    if (lp_cmd->parsed()) {
      Instance inst = read_instance(lp_input);
      fs::path out_path = lp_output.empty() ? fs::path(lp_input + ".lp") : fs::path(lp_output);
      write_lp(out_path, inst);
      std::cout << "LP written to " << out_path.string() << "\n";
      return kExitOk;
    }
    if (bench_cmd->parsed()) {
      return run_bench(bench_config,
                       bench_output.empty() ? std::nullopt
                                            : std::optional<fs::path>(bench_output));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return classify_exception(e);
  }
  return kExitError;
}
