#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rebelscape/scenario.hpp"

namespace rebelscape {

struct SweepAxis {
    std::string key;
    std::vector<std::string> values; // applied verbatim as config overrides
};

// A parameter sweep: a base scenario plus one value list per swept key.
// Runs enumerate the cross product with the first axis slowest and the
// last fastest, then replicates innermost.
struct SweepSpec {
    ScenarioConfig base;
    std::vector<SweepAxis> axes; // in file order
    int replicates = 1;
    std::uint64_t seed_base = 0;
};

// Same file format as a scenario config plus the reserved keys `replicates`
// and `seed_base`, and axis lines `sweep.<key> = v1, v2, ...`. Errors name
// the offending line.
SweepSpec parse_sweep_spec(const std::string& text);

// One cell of the sweep result table.
struct SweepRow {
    int run_index = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> axis_values;
    int final_quiet = 0;
    int final_active = 0;
    int final_jailed = 0;
    int final_cops = 0;
    double final_treasury = 0.0;
    int outbursts = 0;
    bool collapsed = false;
};

// Execute the sweep, writing run_XXXX/run.csv and run_XXXX/summary.txt under
// out_dir plus an aggregate sweep_summary.csv. Runs execute on `threads`
// workers (<= 0 picks the hardware count); rows come back in run order
// regardless of scheduling. Returns the rows.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, const std::string& out_dir,
                                int threads = 0);

std::string sweep_summary_csv(const SweepSpec& spec, const std::vector<SweepRow>& rows);

} // namespace rebelscape
