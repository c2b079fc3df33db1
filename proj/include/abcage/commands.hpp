#pragma once

#include "abcage/run_config.hpp"

#include <string>
#include <vector>

namespace abcage {

// Executes the config's command, writing CSV (and optionally SVG) files into
// out_dir. Returns the paths written, CSV first. Output is deterministic:
// the same config produces byte-identical files.
std::vector<std::string> run_command(const RunConfig& cfg,
                                     const std::string& out_dir, bool svg);

} // namespace abcage
