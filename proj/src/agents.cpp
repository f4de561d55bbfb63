#include "rebelscape/agents.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <stdexcept>

namespace rebelscape {

double perceived_hardship(double net_income, double income_reference) {
    if (!(income_reference > 0.0))
        throw std::invalid_argument("income reference must be positive");
    return std::clamp(1.0 - net_income / income_reference, 0.0, 1.0);
}

double arrest_probability(int cops_visible, int actives_visible, double k) {
    if (cops_visible < 0 || actives_visible < 0)
        throw std::invalid_argument("visibility counts must be non-negative");
    // Integer division floors the force ratio; the arrestee-to-be counts
    // themselves among the actives.
    int ratio = cops_visible / (actives_visible + 1);
    return 1.0 - std::exp(-k * ratio);
}

void tick_jail(Person& person) {
    if (person.jail_term > 0)
        --person.jail_term;
    else
        person.state = PersonState::Quiet;
}

Position choose_move(const Person& person, const CapacityMap& map,
                     const OccupancyGrid& occupancy, int vision, Rng& rng) {
    const int here = map.level_at(person.pos);
    int best = 0;
    std::vector<Position> candidates;
    for_each_visible(map.dims(), person.pos, vision, [&](Position p) {
        if (!occupancy.empty_at(p)) return;
        int level = map.level_at(p);
        if (level < 1 || level < best) return;
        if (level > best) {
            best = level;
            candidates.clear();
        }
        candidates.push_back(p);
    });
    if (candidates.empty() || best <= here) return person.pos;
    // Exactly one draw per actual move, singleton candidate sets included.
    return candidates[rng.uniform_index(candidates.size())];
}

namespace {

// Actives visible from `from`, in scan order.
std::vector<int> visible_actives(Position from, const std::vector<Person>& persons,
                                 const OccupancyGrid& occupancy, int vision) {
    std::vector<int> found;
    for_each_visible(occupancy.dims(), from, vision, [&](Position p) {
        Occupant o = occupancy.at(p);
        if (o.kind == OccupantKind::Person &&
            persons[o.person].state == PersonState::Active)
            found.push_back(o.person);
    });
    return found;
}

} // namespace

void cop_act(Cop& cop, std::vector<Person>& persons, OccupancyGrid& occupancy,
             int vision, int max_jail_term, bool pursuit, Rng& rng) {
    GridDims dims = occupancy.dims();
    std::vector<int> actives = visible_actives(cop.pos, persons, occupancy, vision);

    // Movement. Pursuit closes on the nearest visible active when that
    // strictly helps; otherwise (or without targets) drift at random.
    Position target = cop.pos;
    if (pursuit && !actives.empty()) {
        int current = INT_MAX;
        for (int id : actives)
            current = std::min(current, chebyshev(cop.pos, persons[id].pos, dims));

        int best = current;
        std::vector<Position> closer;
        for_each_visible(dims, cop.pos, vision, [&](Position p) {
            if (!occupancy.empty_at(p)) return;
            int d = INT_MAX;
            for (int id : actives) d = std::min(d, chebyshev(p, persons[id].pos, dims));
            if (d > best || d >= current) return;
            if (d < best) {
                best = d;
                closer.clear();
            }
            closer.push_back(p);
        });
        if (!closer.empty()) target = closer[rng.uniform_index(closer.size())];
    } else {
        std::vector<Position> open;
        for_each_visible(dims, cop.pos, vision,
                         [&](Position p) { if (occupancy.empty_at(p)) open.push_back(p); });
        if (!open.empty()) target = open[rng.uniform_index(open.size())];
    }
    if (target != cop.pos) {
        occupancy.relocate(cop.pos, target);
        cop.pos = target;
    }

    // Arrest one visible active from wherever the cop now stands. The
    // arrestee keeps their cell; the term is drawn uniformly, so a zero term
    // (release at next activation) is possible.
    std::vector<int> reachable = visible_actives(cop.pos, persons, occupancy, vision);
    if (reachable.empty()) return;
    int pick = reachable[rng.uniform_index(reachable.size())];
    persons[pick].state = PersonState::Jailed;
    persons[pick].jail_term = rng.uniform_int(0, max_jail_term);
}

} // namespace rebelscape
