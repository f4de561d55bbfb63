#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rebelscape {

// One row of the per-tick time series, sampled after the tick completes.
struct TickRecord {
    long tick = 0;
    int quiet = 0;
    int active = 0;
    int jailed = 0;
    int cops = 0;
    double treasury = 0.0;
    double revenue = 0.0;
    double assistance_paid = 0.0;
    int new_cops = 0;
    int cop_deaths = 0;
    double mean_person_wealth = 0.0;
    int poor_count = 0;
    double active_poor_fraction = 0.0; // 0 when nobody is active
};

// Internal budget ledger for one tick; not part of the CSV, but lets tests
// and diagnostics close the treasury identity exactly:
//   closing = opening + revenue - maintenance - assistance - cop_cost*placed
// (spawn refunds for unplaceable cops are already folded into `placed`).
struct BudgetFlows {
    double opening = 0.0;     // carryover from last tick, before revenue
    double revenue = 0.0;
    double maintenance = 0.0;
    double assistance = 0.0;
    int planned_cops = 0;
    int placed_cops = 0;
    double closing = 0.0;
};

// A maximal episode of elevated unrest. Ticks are 1-based run ticks.
struct OutburstInterval {
    long begin = 0;
    long end = 0;
    long peak_tick = 0; // first tick attaining the interval's maximum
    int peak_value = 0;
};

struct OutburstReport {
    std::vector<OutburstInterval> intervals;
    double mean_peak_gap = 0.0; // mean tick distance between successive peaks
};

// Scan the active-count series (index i = tick i+1) for runs reaching
// `high`. Two runs merge into one outburst unless separated by at least
// `min_gap` consecutive ticks at or below `low` — brief dips don't split an
// episode.
OutburstReport detect_outbursts(const std::vector<int>& active_series, int high,
                                int low, int min_gap);

struct CollapseReport {
    bool collapsed = false;
    long first_tick = -1; // tick at which collapse was first established
};

// Collapse = actives outnumber quiets for `window` consecutive ticks, or
// the cop force hits zero while anyone is active. Reports the tick where
// either condition is first established.
CollapseReport detect_collapse(const std::vector<TickRecord>& records, int window);

// Full product of one run.
struct RunResult {
    std::vector<TickRecord> records;
    std::vector<BudgetFlows> flows;          // parallel to records
    std::vector<double> mean_patch_level;    // under persons, at tick open
    std::vector<int> persons_on_barren;      // on level-0 cells, at tick close
    OutburstReport outbursts;
    CollapseReport collapse;
};

// Time series as CSV: fixed header, one row per tick, reals with 6 decimal
// places, LF line endings.
void write_run_csv(const RunResult& result, std::ostream& out);
std::string run_csv(const RunResult& result);

// Human-scannable end-of-run digest as key = value lines.
void write_summary(const RunResult& result, std::ostream& out);
std::string run_summary(const RunResult& result);

} // namespace rebelscape
