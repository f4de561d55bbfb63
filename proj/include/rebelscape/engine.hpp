#pragma once

#include <vector>

#include "rebelscape/agents.hpp"
#include "rebelscape/capacity_map.hpp"
#include "rebelscape/government.hpp"
#include "rebelscape/metrics.hpp"
#include "rebelscape/occupancy.hpp"
#include "rebelscape/rng.hpp"
#include "rebelscape/scenario.hpp"

namespace rebelscape {

// Live state of one simulation.
struct SimState {
    CapacityMap map;
    OccupancyGrid occupancy;
    std::vector<Person> persons;
    std::vector<Cop> cops;
    double treasury = 0.0;
    long tick = 0;
    Rng rng;

    SimState() : rng(0) {}
};

// Build the starting state on the given landscape: one shuffle deals cells
// to persons then cops, then each person draws a lifetime risk aversion.
SimState initialize(const ScenarioConfig& config, CapacityMap map);

// Convenience: generates or loads the landscape per the config.
SimState initialize(const ScenarioConfig& config);

// Product of one tick, consumed by run().
struct TickOutcome {
    TickRecord record;
    BudgetFlows flows;
    double mean_patch_level_open = 0.0; // under persons, before anyone moves
    int persons_on_barren = 0;          // on level-0 cells, at tick close
    double gross_harvest = 0.0;         // conservation diagnostics
    double burned = 0.0;
};

// Advance one tick through the five phases: person economics, government
// budget, rebellion decisions, cop moves and arrests, measurement.
TickOutcome step(SimState& state, const ScenarioConfig& config);

// Run config.ticks ticks from a fresh state and attach episode detection.
RunResult run(const ScenarioConfig& config);

} // namespace rebelscape
