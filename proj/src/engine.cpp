#include "rebelscape/engine.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rebelscape {

namespace {

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in.good()) throw std::runtime_error("cannot open map file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

SimState initialize(const ScenarioConfig& config, CapacityMap map) {
    GridDims dims = map.dims();
    if (static_cast<long>(config.agents) + config.cops > dims.cells())
        throw std::runtime_error("config: agents + cops exceed the number of cells");

    SimState state;
    state.map = std::move(map);
    state.occupancy = OccupancyGrid(dims);
    state.rng = Rng(config.seed);

    // Setup draws, in order: (1) one shuffle of all cell indices, dealing
    // starting cells to persons then cops; (2) one uniform risk aversion per
    // person, in person order.
    std::vector<int> cells(static_cast<std::size_t>(dims.cells()));
    std::iota(cells.begin(), cells.end(), 0);
    state.rng.shuffle(cells);

    auto cell_pos = [&](int idx) {
        return Position{idx % dims.width, idx / dims.width};
    };

    state.persons.resize(config.agents);
    for (int i = 0; i < config.agents; ++i) {
        state.persons[i].pos = cell_pos(cells[i]);
        state.occupancy.place_person(i, state.persons[i].pos);
    }
    for (int i = 0; i < config.agents; ++i)
        state.persons[i].risk_aversion = state.rng.uniform01();

    state.cops.resize(config.cops);
    for (int i = 0; i < config.cops; ++i) {
        state.cops[i].pos = cell_pos(cells[config.agents + i]);
        state.occupancy.place_cop(state.cops[i].pos);
    }
    return state;
}

SimState initialize(const ScenarioConfig& config) {
    validate_config(config);
    CapacityMap map =
        config.map_file.empty()
            ? make_hill_map({config.width, config.height}, config.map_peaks,
                            config.map_sigma)
            : parse_map_text(read_text_file(config.map_file));
    return initialize(config, std::move(map));
}

// One tick. Random draws happen in this order and no other: the person
// shuffle; per person in shuffled order, at most one movement tie-break;
// government cop removals, then cop placements; the cop shuffle; per cop in
// shuffled order, at most one movement tie-break, one arrest pick, and one
// jail term. Draw counts depend only on the evolving state, so identical
// seeds replay identically.
TickOutcome step(SimState& state, const ScenarioConfig& config) {
    const GridDims dims = state.map.dims();
    state.tick += 1;

    TickOutcome out;

    // Open-of-tick landscape diagnostic: where does everyone sit before the
    // tick moves anybody? Tick 1 therefore reports the initial placement.
    if (!state.persons.empty()) {
        long sum = 0;
        for (const Person& p : state.persons) sum += state.map.level_at(p.pos);
        out.mean_patch_level_open =
            static_cast<double>(sum) / static_cast<double>(state.persons.size());
    }

    // Phase 1: people work. Jailed persons only sit their term; everyone
    // else may relocate, then harvests their cell, pays tax at the source,
    // and burns metabolism from what they have.
    std::vector<int> person_order(state.persons.size());
    std::iota(person_order.begin(), person_order.end(), 0);
    state.rng.shuffle(person_order);

    double revenue = 0.0;
    for (int id : person_order) {
        Person& p = state.persons[id];
        if (p.state == PersonState::Jailed) {
            tick_jail(p);
            continue;
        }
        if (config.movement) {
            Position target =
                choose_move(p, state.map, state.occupancy, config.person_vision, state.rng);
            if (target != p.pos) {
                state.occupancy.relocate(p.pos, target);
                p.pos = target;
            }
        }
        double gross = state.map.level_at(p.pos);
        TaxSplit split = collect_tax(gross, config.tax_rate);
        p.wealth += split.net;
        double burn = std::min(config.metabolism, p.wealth);
        p.wealth -= burn;
        p.last_net_income = split.net;

        out.gross_harvest += gross;
        out.burned += burn;
        revenue += split.tax;
    }

    // Phase 2: the government closes its books. Poverty is counted after
    // wages, before relief; the whole opening balance is split into
    // assistance, recruitment, and maintenance pools.
    Policy policy;
    policy.tax_rate = config.tax_rate;
    policy.wealth_distribution = config.wealth_distribution;
    policy.wealth_to_create_cop = config.wealth_to_create_cop;
    policy.poverty_line = config.poverty_line;
    policy.cop_upkeep = config.cop_upkeep;
    policy.cop_cost = config.cop_cost;

    int poor_now = 0;
    for (const Person& p : state.persons)
        if (p.wealth < config.poverty_line) ++poor_now;

    out.flows.opening = state.treasury;
    out.flows.revenue = revenue;
    const double balance = state.treasury + revenue;
    BudgetPlan plan =
        allocate_budget(balance, policy, static_cast<int>(state.cops.size()), poor_now);

    kill_cops(state.cops, state.occupancy, plan.cop_deaths, state.rng);
    double paid = apply_assistance(state.persons, config.poverty_line,
                                   plan.assistance_per_capita);
    (void)paid; // equals plan.assistance_total up to rounding; ledger uses the plan
    int placed = spawn_cops(state.cops, state.occupancy, plan.new_cops, state.rng);

    // Unplaceable recruits are refunded.
    state.treasury =
        plan.carryover + policy.cop_cost * (plan.new_cops - placed);

    out.flows.maintenance = plan.maintenance_spend;
    out.flows.assistance = plan.assistance_total;
    out.flows.planned_cops = plan.new_cops;
    out.flows.placed_cops = placed;
    out.flows.closing = state.treasury;

    // Phase 3: people take stock and decide, in the same order they worked.
    // Decisions read the board as it currently stands, so one defection can
    // embolden the next person in line this very tick.
    for (int id : person_order) {
        Person& p = state.persons[id];
        if (p.state == PersonState::Jailed) continue;

        int cops_visible = 0;
        int actives_visible = 0;
        for_each_visible(dims, p.pos, config.person_vision, [&](Position q) {
            Occupant o = state.occupancy.at(q);
            if (o.kind == OccupantKind::Cop) {
                ++cops_visible;
            } else if (o.kind == OccupantKind::Person &&
                       state.persons[o.person].state == PersonState::Active) {
                ++actives_visible;
            }
        });

        double hardship = perceived_hardship(p.last_net_income);
        double g = grievance(hardship, config.government_legitimacy);
        double risk = arrest_probability(cops_visible, actives_visible, config.arrest_k);
        p.state = rebels(g, p.risk_aversion, risk, config.threshold)
                      ? PersonState::Active
                      : PersonState::Quiet;
    }

    // Phase 4: cops patrol in their own shuffled order. An arrest made by
    // an earlier cop removes that active from later cops' sight.
    std::vector<int> cop_order(state.cops.size());
    std::iota(cop_order.begin(), cop_order.end(), 0);
    state.rng.shuffle(cop_order);
    for (int id : cop_order)
        cop_act(state.cops[id], state.persons, state.occupancy, config.cop_vision,
                config.max_jail_term, config.cop_pursuit, state.rng);

    // Phase 5: measure the tick.
    TickRecord& r = out.record;
    r.tick = state.tick;
    r.cops = static_cast<int>(state.cops.size());
    r.treasury = state.treasury;
    r.revenue = revenue;
    r.assistance_paid = plan.assistance_total;
    r.new_cops = placed;
    r.cop_deaths = plan.cop_deaths;

    double wealth_sum = 0.0;
    int active_poor = 0;
    for (const Person& p : state.persons) {
        switch (p.state) {
        case PersonState::Quiet: ++r.quiet; break;
        case PersonState::Active: ++r.active; break;
        case PersonState::Jailed: ++r.jailed; break;
        }
        wealth_sum += p.wealth;
        if (p.wealth < config.poverty_line) ++r.poor_count;
        if (p.state == PersonState::Active &&
            region_class(state.map.level_at(p.pos)) == RegionClass::Poor)
            ++active_poor;
        if (state.map.level_at(p.pos) == 0) ++out.persons_on_barren;
    }
    if (!state.persons.empty())
        r.mean_person_wealth = wealth_sum / static_cast<double>(state.persons.size());
    if (r.active > 0)
        r.active_poor_fraction =
            static_cast<double>(active_poor) / static_cast<double>(r.active);

    return out;
}

RunResult run(const ScenarioConfig& config) {
    SimState state = initialize(config);

    RunResult result;
    result.records.reserve(config.ticks);
    result.flows.reserve(config.ticks);
    for (int t = 0; t < config.ticks; ++t) {
        TickOutcome out = step(state, config);
        result.records.push_back(out.record);
        result.flows.push_back(out.flows);
        result.mean_patch_level.push_back(out.mean_patch_level_open);
        result.persons_on_barren.push_back(out.persons_on_barren);
    }

    std::vector<int> active_series;
    active_series.reserve(result.records.size());
    for (const TickRecord& r : result.records) active_series.push_back(r.active);
    result.outbursts = detect_outbursts(active_series, config.outburst_high,
                                        config.outburst_low, config.outburst_gap);
    result.collapse = detect_collapse(result.records, config.collapse_window);
    return result;
}

} // namespace rebelscape
