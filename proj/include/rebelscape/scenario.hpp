#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rebelscape/geometry.hpp"

namespace rebelscape {

// Everything a run needs, with the project's calibrated defaults. See
// parse_config() for the key = value file format that overrides them.
struct ScenarioConfig {
    // Landscape
    int width = 50;
    int height = 50;
    std::string map_kind = "two_hill"; // Gaussian hills; peak list below
    double map_sigma = 8.8;
    std::vector<Position> map_peaks = {{20, 20}, {20, 34}, {34, 20}, {34, 34}};
    std::string map_file; // when set, load the landscape instead of generating

    // Population
    int agents = 1750;
    int cops = 100;

    // Behaviour toggles
    bool movement = false;
    bool cop_pursuit = true;

    // Fiscal policy
    double tax_rate = 0.3;
    double wealth_distribution = 0.0;
    double wealth_to_create_cop = 0.0;
    double cop_upkeep = 5.0;
    double cop_cost = 10.0;
    double poverty_line = 1.0;

    // Political behaviour
    double government_legitimacy = 0.87;
    double threshold = 0.1;
    double arrest_k = 2.3;
    int max_jail_term = 30;

    // Perception and economy
    int person_vision = 7;
    int cop_vision = 7;
    double metabolism = 1.35;

    // Run control
    int ticks = 200;
    std::uint64_t seed = 0;

    // Episode detection
    int outburst_high = 50;
    int outburst_low = 10;
    int outburst_gap = 5;
    int collapse_window = 10;

    bool operator==(const ScenarioConfig&) const = default;
};

// Apply one key = value override. Throws std::runtime_error mentioning
// `where` (e.g. "line 12") on an unknown key or a malformed value.
void apply_config_key(ScenarioConfig& config, const std::string& key,
                      const std::string& value, const std::string& where);

// True when `key` names a scenario setting apply_config_key accepts.
bool is_config_key(const std::string& key);

// Parse a flat key = value file ('#' starts a comment). Unknown keys,
// malformed values, and duplicate keys are errors naming the line.
// Validation runs on the final result.
ScenarioConfig parse_config(const std::string& text);

// Range-check a config; throws std::runtime_error naming the offending key.
void validate_config(const ScenarioConfig& config);

// Render a config as a parse_config-compatible file listing every key.
std::string render_config(const ScenarioConfig& config);

// Named baseline scenarios (c1 .. c10 plus variants). Throws on an unknown
// name; preset_names() lists them in canonical order.
ScenarioConfig preset(const std::string& name);
const std::vector<std::string>& preset_names();

} // namespace rebelscape
