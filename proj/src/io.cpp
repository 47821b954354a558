#include "mfass/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace mfass {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::istringstream is{std::string(line)};
  std::string tok;
  while (is >> tok) tokens.push_back(tok);
  return tokens;
}

long long parse_int(const std::string& tok, int line_no) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError("expected an integer, got '" + tok + "'", line_no);
  return value;
}

// strips '#' comments, returns per-line tokens with 1-based line numbers
std::vector<std::pair<int, std::vector<std::string>>> logical_lines(std::string_view text) {
  std::vector<std::pair<int, std::vector<std::string>>> out;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    std::string_view line = text.substr(pos, end == std::string_view::npos ? text.size() - pos : end - pos);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = tokenize(line);
    if (!tokens.empty()) out.emplace_back(line_no, std::move(tokens));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << content;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  Instance inst;
  bool saw_nodes = false, saw_source = false, saw_sink = false, saw_horizon = false,
       saw_limits = false;
  struct RawArc {
    Arc arc;
    bool job;
    int line;
  };
  std::vector<RawArc> raw_arcs;

  for (const auto& [line_no, tokens] : logical_lines(text)) {
    const std::string& kind = tokens[0];
    auto want = [&](std::size_t n) {
      if (tokens.size() != n)
        throw ParseError("'" + kind + "' expects " + std::to_string(n - 1) + " fields", line_no);
    };
    if (kind == "nodes") {
      want(2);
      inst.network.node_count = static_cast<int>(parse_int(tokens[1], line_no));
      saw_nodes = true;
    } else if (kind == "source") {
      want(2);
      inst.network.source = static_cast<NodeId>(parse_int(tokens[1], line_no));
      saw_source = true;
    } else if (kind == "sink") {
      want(2);
      inst.network.sink = static_cast<NodeId>(parse_int(tokens[1], line_no));
      saw_sink = true;
    } else if (kind == "horizon") {
      want(2);
      inst.horizon = static_cast<int>(parse_int(tokens[1], line_no));
      saw_horizon = true;
    } else if (kind == "limit") {
      want(2);
      if (saw_limits) throw ParseError("duplicate limit line", line_no);
      inst.limits.assign(1, static_cast<int>(parse_int(tokens[1], line_no)));
      saw_limits = true;
    } else if (kind == "limits") {
      if (tokens.size() < 2) throw ParseError("'limits' expects at least one value", line_no);
      if (saw_limits) throw ParseError("duplicate limit line", line_no);
      inst.limits.clear();
      for (std::size_t i = 1; i < tokens.size(); ++i)
        inst.limits.push_back(static_cast<int>(parse_int(tokens[i], line_no)));
      saw_limits = true;
    } else if (kind == "arc") {
      want(6);
      RawArc ra;
      ra.arc.id = static_cast<ArcId>(parse_int(tokens[1], line_no));
      ra.arc.tail = static_cast<NodeId>(parse_int(tokens[2], line_no));
      ra.arc.head = static_cast<NodeId>(parse_int(tokens[3], line_no));
      ra.arc.capacity = parse_int(tokens[4], line_no);
      long long job = parse_int(tokens[5], line_no);
      if (job != 0 && job != 1) throw ParseError("job flag must be 0 or 1", line_no);
      ra.job = job == 1;
      ra.line = line_no;
      raw_arcs.push_back(ra);
    } else {
      throw ParseError("unknown directive '" + kind + "'", line_no);
    }
  }

  if (!saw_nodes) throw ParseError("missing 'nodes' line", 0);
  if (!saw_source) throw ParseError("missing 'source' line", 0);
  if (!saw_sink) throw ParseError("missing 'sink' line", 0);
  if (!saw_horizon) throw ParseError("missing 'horizon' line", 0);
  if (!saw_limits) throw ParseError("missing 'limit' or 'limits' line", 0);

  if (inst.horizon < 1) throw ParseError("horizon must be positive", 0);
  if (inst.limits.size() == 1)
    inst.limits.assign(static_cast<std::size_t>(inst.horizon), inst.limits.front());
  if (static_cast<int>(inst.limits.size()) != inst.horizon)
    throw ParseError("limits list must have exactly one value per period", 0);

  std::sort(raw_arcs.begin(), raw_arcs.end(),
            [](const RawArc& a, const RawArc& b) { return a.arc.id < b.arc.id; });
  for (std::size_t i = 0; i < raw_arcs.size(); ++i) {
    if (raw_arcs[i].arc.id != static_cast<ArcId>(i))
      throw ParseError("arc ids must be dense 0.." + std::to_string(raw_arcs.size() - 1),
                       raw_arcs[i].line);
    inst.network.arcs.push_back(raw_arcs[i].arc);
    if (raw_arcs[i].job) inst.jobs.push_back(raw_arcs[i].arc.id);
  }
  return inst;
}

std::string format_instance(const Instance& inst) {
  std::ostringstream os;
  os << "nodes " << inst.network.node_count << "\n";
  os << "source " << inst.network.source << "\n";
  os << "sink " << inst.network.sink << "\n";
  os << "horizon " << inst.horizon << "\n";
  if (inst.uniform_limit()) {
    os << "limit " << inst.limits.front() << "\n";
  } else {
    os << "limits";
    for (int k : inst.limits) os << " " << k;
    os << "\n";
  }
  for (const Arc& a : inst.network.arcs)
    os << "arc " << a.id << " " << a.tail << " " << a.head << " " << a.capacity << " "
       << (inst.is_job(a.id) ? 1 : 0) << "\n";
  return os.str();
}

Schedule parse_schedule(std::string_view text) {
  Schedule sched;
  std::map<int, int> period_lines;
  for (const auto& [line_no, tokens] : logical_lines(text)) {
    if (tokens[0] != "period")
      throw ParseError("expected 'period <i>: <arc ids>', got '" + tokens[0] + "'", line_no);
    if (tokens.size() < 2) throw ParseError("missing period index", line_no);
    std::string idx = tokens[1];
    std::size_t first_arc = 2;
    if (!idx.empty() && idx.back() == ':') {
      idx.pop_back();
    } else if (tokens.size() >= 3 && tokens[2] == ":") {
      first_arc = 3;
    } else {
      throw ParseError("expected ':' after the period index", line_no);
    }
    int period = static_cast<int>(parse_int(idx, line_no));
    if (period < 1) throw ParseError("period index must be >= 1", line_no);
    if (!period_lines.emplace(period, line_no).second)
      throw ParseError("duplicate line for period " + std::to_string(period), line_no);
    for (std::size_t i = first_arc; i < tokens.size(); ++i) {
      ArcId arc = static_cast<ArcId>(parse_int(tokens[i], line_no));
      if (!sched.assignment.emplace(arc, period).second)
        throw ParseError("arc " + std::to_string(arc) + " is scheduled twice", line_no);
    }
  }
  return sched;
}

std::string format_schedule(const Schedule& sched, int horizon) {
  std::vector<std::vector<ArcId>> per_period(static_cast<std::size_t>(horizon) + 1);
  for (const auto& [arc, period] : sched.assignment)
    if (period >= 1 && period <= horizon) per_period[static_cast<std::size_t>(period)].push_back(arc);
  std::ostringstream os;
  for (int i = 1; i <= horizon; ++i) {
    auto& arcs = per_period[static_cast<std::size_t>(i)];
    if (arcs.empty()) continue;
    std::sort(arcs.begin(), arcs.end());
    os << "period " << i << ":";
    for (ArcId a : arcs) os << " " << a;
    os << "\n";
  }
  return os.str();
}

Certificate parse_certificate(std::string_view text) {
  Certificate cert;
  for (const auto& [line_no, tokens] : logical_lines(text)) {
    if (tokens[0] == "bound" && tokens.size() == 2) {
      cert.bound = parse_int(tokens[1], line_no);
    } else if (tokens[0] == "decision" && tokens.size() == 2) {
      if (tokens[1] == "yes")
        cert.decision = Certificate::Decision::yes;
      else if (tokens[1] == "no")
        cert.decision = Certificate::Decision::no;
      else if (tokens[1] == "unknown")
        cert.decision = Certificate::Decision::unknown;
      else
        throw ParseError("decision must be yes, no or unknown", line_no);
    } else if (tokens[0] == "family" && tokens.size() == 2) {
      cert.family = tokens[1];
    } else {
      throw ParseError("unknown certificate line '" + tokens[0] + "'", line_no);
    }
  }
  return cert;
}

std::string format_certificate(const Certificate& cert) {
  std::ostringstream os;
  if (cert.bound) os << "bound " << *cert.bound << "\n";
  os << "decision "
     << (cert.decision == Certificate::Decision::yes
             ? "yes"
             : cert.decision == Certificate::Decision::no ? "no" : "unknown")
     << "\n";
  os << "family " << cert.family << "\n";
  return os.str();
}

Instance read_instance(const std::filesystem::path& path) { return parse_instance(read_file(path)); }

void write_instance(const std::filesystem::path& path, const Instance& inst) {
  write_file(path, format_instance(inst));
}

Schedule read_schedule(const std::filesystem::path& path) { return parse_schedule(read_file(path)); }

void write_schedule(const std::filesystem::path& path, const Schedule& sched, int horizon) {
  write_file(path, format_schedule(sched, horizon));
}

Certificate read_certificate(const std::filesystem::path& path) {
  return parse_certificate(read_file(path));
}

void write_certificate(const std::filesystem::path& path, const Certificate& cert) {
  write_file(path, format_certificate(cert));
}

}  // namespace mfass
