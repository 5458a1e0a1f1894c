#pragma once

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace tangency::reports {

// Every command takes a JSON config; missing keys fall back to these defaults.
nlohmann::json default_config(const std::string& command);

// Defaults merged with overrides and validated. Throws InvalidConfig.
nlohmann::json resolve_config(const std::string& command, const nlohmann::json& overrides);

struct RunResult {
    int exit_code = 0;
    std::vector<std::filesystem::path> files;
    std::string message;
};

RunResult cmd_spectrum(const nlohmann::json& cfg, const std::filesystem::path& out);
RunResult cmd_arcs(const nlohmann::json& cfg, const std::filesystem::path& out);
RunResult cmd_sphere(const nlohmann::json& cfg, const std::filesystem::path& out);
RunResult cmd_toy(const nlohmann::json& cfg, const std::filesystem::path& out);
RunResult cmd_minima(const nlohmann::json& cfg, const std::filesystem::path& out);

// Resolves the config, dispatches, and maps failures onto exit codes:
// 0 success, 2 invalid config, 3 numerical failure (an error.json is written
// next to whatever partial output exists).
RunResult run(const std::string& command, const nlohmann::json& overrides,
              const std::filesystem::path& out);

// %.17g, with inf/nan spelled "inf"/"nan".
std::string fmt(double v);

} // namespace tangency::reports
