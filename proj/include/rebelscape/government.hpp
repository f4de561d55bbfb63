#pragma once

#include <vector>

#include "rebelscape/agents.hpp"
#include "rebelscape/occupancy.hpp"
#include "rebelscape/rng.hpp"

namespace rebelscape {

// Fiscal policy knobs. The two fractions say how the opening balance is
// split each tick: wealth_distribution to poverty assistance,
// wealth_to_create_cop to recruitment, and the remainder to cop upkeep.
struct Policy {
    double tax_rate = 0.3;
    double wealth_distribution = 0.0;
    double wealth_to_create_cop = 0.0;
    double poverty_line = 1.0;
    double cop_upkeep = 5.0;
    double cop_cost = 10.0;
};

struct TaxSplit {
    double net = 0.0;
    double tax = 0.0;
};

// Split a gross harvest at the source. net + tax == gross exactly.
TaxSplit collect_tax(double gross, double tax_rate);

// One tick's spending plan. Carryover is what remains of the opening
// balance after maintenance, assistance, and recruitment — exactly, so the
// treasury ledger closes to the last bit.
struct BudgetPlan {
    double maintenance_spend = 0.0;
    int cop_deaths = 0;
    double assistance_total = 0.0;
    double assistance_per_capita = 0.0;
    int new_cops = 0;
    double carryover = 0.0;
};

// Pure budget arithmetic for one tick, given the opening balance (carryover
// plus this tick's tax revenue). Maintenance shortfalls disband cops down
// to what the maintenance pool can pay; the assistance pool is split evenly
// over the current poor (or kept when there are none); recruitment buys
// whole cops.
BudgetPlan allocate_budget(double balance, const Policy& policy, int current_cops,
                           int poor_count);

// Pay per_capita to every person below the poverty line (jailed included).
// Both wealth and last_net_income rise, so assistance also soothes next
// tick's hardship. Returns the total paid.
double apply_assistance(std::vector<Person>& persons, double poverty_line,
                        double per_capita);

// Disband `deaths` uniformly chosen cops (all of them if deaths exceeds the
// force). Frees their cells. Returns how many were removed.
int kill_cops(std::vector<Cop>& cops, OccupancyGrid& occupancy, int deaths, Rng& rng);

// Place up to `requested` new cops on uniformly chosen free cells. Stops
// early if the map fills up. Returns how many were placed.
int spawn_cops(std::vector<Cop>& cops, OccupancyGrid& occupancy, int requested,
               Rng& rng);

} // namespace rebelscape
