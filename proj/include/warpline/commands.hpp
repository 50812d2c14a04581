#pragma once

#include "warpline/config.hpp"
#include "warpline/verify.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace warpline {

enum ExitCode : int {
    kExitOk = 0,
    kExitConfig = 1,
    kExitSynthesis = 2,
    kExitHotCells = 3,
    kExitSimulation = 4,
};

/// Preset (if any), then the config file merged on top (JSON merge patch),
/// then each KEY=VALUE override in order.
[[nodiscard]] nlohmann::json resolve_document(const std::optional<std::string>& preset,
                                              const std::optional<std::string>& config_path,
                                              const std::vector<std::string>& overrides);

[[nodiscard]] nlohmann::json to_json(const VerificationReport& report);

// Each command writes into config.output.directory and returns an ExitCode.
int cmd_profile(const RunConfig& config, std::ostream& log);
int cmd_synth(const RunConfig& config, std::ostream& log);
int cmd_feasibility(const RunConfig& config, std::ostream& log);
int cmd_simulate(const RunConfig& config, std::ostream& log);
int cmd_raytrace(const RunConfig& config, std::ostream& log);

/// Full command-line entry point; never throws.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace warpline
