#pragma once

#include <filesystem>
#include <string>

#include "mfass/model.hpp"

namespace mfass {

// Writes the instance as a mixed binary program in LP file format.
// Variables x_<arc>_<period> (flows) and y_<arc>_<period> (availability
// binaries, job arcs only; y = 0 in the outage period). Rows: capacity links
// for job arcs, plain capacity rows for the rest, one outage per job, flow
// conservation, per-period outage limits. Output is deterministic.
std::string export_lp(const Instance& inst);
void write_lp(const std::filesystem::path& path, const Instance& inst);

}  // namespace mfass
