#pragma once

#include <vector>

#include "rebelscape/capacity_map.hpp"
#include "rebelscape/geometry.hpp"
#include "rebelscape/occupancy.hpp"
#include "rebelscape/rng.hpp"

namespace rebelscape {

enum class PersonState : std::uint8_t { Quiet, Active, Jailed };

struct Person {
    Position pos;
    double wealth = 0.0;
    double risk_aversion = 0.0; // drawn once at setup, fixed for life
    PersonState state = PersonState::Quiet;
    int jail_term = 0;
    double last_net_income = 0.0; // net harvest plus assistance, last tick
};

struct Cop {
    Position pos;
};

// Income that reads as "no hardship at all": the best patch yield.
constexpr double kIncomeReference = 4.0;

// Perceived economic hardship in [0, 1]: how far last income fell short of
// the reference income.
double perceived_hardship(double net_income, double income_reference = kIncomeReference);

// Grievance = hardship scaled by how little the government is trusted.
inline double grievance(double hardship, double legitimacy) {
    return hardship * (1.0 - legitimacy);
}

// Estimated arrest risk from the local balance of force. The cop/active
// ratio is floored, so one visible active soaking up one visible cop reads
// as zero risk.
double arrest_probability(int cops_visible, int actives_visible, double k);

// Deterministic rebellion rule: rebel iff net incentive clears the threshold.
inline bool rebels(double grievance, double risk_aversion, double arrest_prob,
                   double threshold) {
    return grievance - risk_aversion * arrest_prob > threshold;
}

// One tick of jail: count the term down; a person whose term already hit
// zero walks free (Quiet) at the start of their activation.
void tick_jail(Person& person);

// Greedy migration: the best-yield unoccupied visible cell that strictly
// beats the current cell, ties broken uniformly at random (one draw). Cells
// of level 0 are never worth moving to. Returns the current position when
// no move improves.
Position choose_move(const Person& person, const CapacityMap& map,
                     const OccupancyGrid& occupancy, int vision, Rng& rng);

// One cop activation: move (pursuit closes on the nearest visible active;
// otherwise wander to a random free visible cell), then arrest one visible
// active, if any, from the new position. The arrestee is jailed on the spot
// with a term drawn uniformly from {0, ..., max_jail_term}.
void cop_act(Cop& cop, std::vector<Person>& persons, OccupancyGrid& occupancy,
             int vision, int max_jail_term, bool pursuit, Rng& rng);

} // namespace rebelscape
