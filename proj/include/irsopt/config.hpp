#pragma once

#include <filesystem>
#include <string_view>

#include "irsopt/harness.hpp"

namespace irsopt {

/// Parses a flat JSON object whose keys mirror ScenarioSpec and SystemConfig
/// fields. "sweep_kind" and "sweep_values" are required; everything else
/// falls back to the ScenarioSpec defaults. Unknown keys, wrong types and
/// failed validation throw ConfigError.
ScenarioSpec parse_scenario(std::string_view json_text);

/// Throws IoError if the file cannot be read.
ScenarioSpec load_scenario(const std::filesystem::path& path);

}  // namespace irsopt
