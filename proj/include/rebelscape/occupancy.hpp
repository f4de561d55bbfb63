#pragma once

#include <cstdint>
#include <vector>

#include "rebelscape/geometry.hpp"

namespace rebelscape {

enum class OccupantKind : std::uint8_t { None, Person, Cop };

struct Occupant {
    OccupantKind kind = OccupantKind::None;
    int person = -1; // person index when kind == Person, else -1
};

// Tracks who stands where. At most one agent per cell; jailed persons keep
// their cell. Person slots carry the person index (their state is looked up
// in the person table); cop slots only need to block the cell.
class OccupancyGrid {
public:
    OccupancyGrid() = default;
    explicit OccupancyGrid(GridDims dims);

    GridDims dims() const { return dims_; }

    bool empty_at(Position p) const { return slots_[index(p)] == kEmpty; }
    Occupant at(Position p) const;

    void place_person(int person, Position p);
    void place_cop(Position p);
    void relocate(Position from, Position to);
    void clear(Position p);

    // All unoccupied cells in row-major order.
    std::vector<Position> free_cells() const;

private:
    static constexpr std::int32_t kEmpty = -1;
    static constexpr std::int32_t kCop = -2;

    std::size_t index(Position p) const {
        return static_cast<std::size_t>(p.y) * dims_.width + p.x;
    }

    GridDims dims_;
    std::vector<std::int32_t> slots_;
};

} // namespace rebelscape
