#include "rebelscape/government.hpp"

#include <cmath>
#include <stdexcept>

namespace rebelscape {

TaxSplit collect_tax(double gross, double tax_rate) {
    if (gross < 0.0) throw std::invalid_argument("gross income must be non-negative");
    if (tax_rate < 0.0 || tax_rate > 1.0)
        throw std::invalid_argument("tax rate must lie in [0, 1]");
    double tax = gross * tax_rate;
    return {gross - tax, tax};
}

BudgetPlan allocate_budget(double balance, const Policy& policy, int current_cops,
                           int poor_count) {
    if (balance < 0.0) throw std::invalid_argument("budget balance must be non-negative");
    if (current_cops < 0 || poor_count < 0)
        throw std::invalid_argument("population counts must be non-negative");

    const double assist_pool = policy.wealth_distribution * balance;
    const double recruit_pool = policy.wealth_to_create_cop * balance;
    const double maintain_pool =
        (1.0 - policy.wealth_distribution - policy.wealth_to_create_cop) * balance;

    BudgetPlan plan;

    // Maintenance first: a shortfall disbands cops down to what the pool
    // pays for; the whole pool is consumed either way.
    const double need = policy.cop_upkeep * current_cops;
    if (maintain_pool >= need) {
        plan.maintenance_spend = need;
    } else {
        plan.maintenance_spend = maintain_pool;
        int affordable = current_cops;
        if (policy.cop_upkeep > 0.0)
            affordable = static_cast<int>(std::floor(maintain_pool / policy.cop_upkeep));
        if (affordable > current_cops) affordable = current_cops;
        plan.cop_deaths = current_cops - affordable;
    }

    // Assistance: an even split over today's poor. With nobody poor the
    // pool is banked via carryover.
    if (poor_count > 0 && assist_pool > 0.0) {
        plan.assistance_total = assist_pool;
        plan.assistance_per_capita = assist_pool / poor_count;
    }

    // Recruitment buys whole cops.
    if (policy.cop_cost > 0.0)
        plan.new_cops = static_cast<int>(std::floor(recruit_pool / policy.cop_cost));

    plan.carryover = balance - plan.maintenance_spend - plan.assistance_total -
                     policy.cop_cost * plan.new_cops;
    if (plan.carryover < 0.0) plan.carryover = 0.0; // guard fp dust only
    return plan;
}

double apply_assistance(std::vector<Person>& persons, double poverty_line,
                        double per_capita) {
    if (per_capita <= 0.0) return 0.0;
    double paid = 0.0;
    for (auto& p : persons) {
        if (p.wealth >= poverty_line) continue;
        p.wealth += per_capita;
        p.last_net_income += per_capita;
        paid += per_capita;
    }
    return paid;
}

int kill_cops(std::vector<Cop>& cops, OccupancyGrid& occupancy, int deaths, Rng& rng) {
    if (deaths <= 0 || cops.empty()) return 0;
    const int n = static_cast<int>(cops.size());
    if (deaths > n) deaths = n;

    // Partial Fisher-Yates: the first `deaths` entries become the victims.
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::vector<char> doomed(n, 0);
    for (int i = 0; i < deaths; ++i) {
        int j = i + static_cast<int>(rng.uniform_index(static_cast<std::size_t>(n - i)));
        std::swap(order[i], order[j]);
        doomed[order[i]] = 1;
    }

    std::vector<Cop> survivors;
    survivors.reserve(n - deaths);
    for (int i = 0; i < n; ++i) {
        if (doomed[i])
            occupancy.clear(cops[i].pos);
        else
            survivors.push_back(cops[i]);
    }
    cops.swap(survivors);
    return deaths;
}

int spawn_cops(std::vector<Cop>& cops, OccupancyGrid& occupancy, int requested,
               Rng& rng) {
    if (requested <= 0) return 0;
    std::vector<Position> open = occupancy.free_cells();
    int placed = 0;
    while (placed < requested && !open.empty()) {
        std::size_t pick = rng.uniform_index(open.size());
        Position pos = open[pick];
        open[pick] = open.back();
        open.pop_back();
        occupancy.place_cop(pos);
        cops.push_back(Cop{pos});
        ++placed;
    }
    return placed;
}

} // namespace rebelscape
