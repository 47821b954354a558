#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "mfass/generators.hpp"
#include "mfass/model.hpp"

namespace mfass {

// Instance text format (".mfass", line oriented, '#' comments):
//   nodes <n> / source <id> / sink <id> / horizon <T>
//   limit <K>  or  limits <K_1> ... <K_T>
//   arc <id> <tail> <head> <capacity> <job:0|1>     (one line per arc)
// Node and arc ids are 0-based; periods are 1-based.
Instance parse_instance(std::string_view text);
std::string format_instance(const Instance& inst);
Instance read_instance(const std::filesystem::path& path);
void write_instance(const std::filesystem::path& path, const Instance& inst);

// Schedule format: one line per non-idle period,
//   period <i>: <arc ids, space separated>
Schedule parse_schedule(std::string_view text);
std::string format_schedule(const Schedule& sched, int horizon);
Schedule read_schedule(const std::filesystem::path& path);
void write_schedule(const std::filesystem::path& path, const Schedule& sched, int horizon);

// Certificate sidecar: `bound <int>` / `decision <yes|no|unknown>` /
// `family <name>`; bound line omitted when unknown.
Certificate parse_certificate(std::string_view text);
std::string format_certificate(const Certificate& cert);
Certificate read_certificate(const std::filesystem::path& path);
void write_certificate(const std::filesystem::path& path, const Certificate& cert);

}  // namespace mfass
