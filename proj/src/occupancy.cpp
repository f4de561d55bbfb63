#include "rebelscape/occupancy.hpp"

#include <stdexcept>

namespace rebelscape {

OccupancyGrid::OccupancyGrid(GridDims dims) : dims_(dims) {
    if (dims.width < 1 || dims.height < 1)
        throw std::invalid_argument("occupancy grid needs positive dimensions");
    slots_.assign(static_cast<std::size_t>(dims.cells()), kEmpty);
}

Occupant OccupancyGrid::at(Position p) const {
    std::int32_t slot = slots_[index(p)];
    if (slot == kEmpty) return {OccupantKind::None, -1};
    if (slot == kCop) return {OccupantKind::Cop, -1};
    return {OccupantKind::Person, slot};
}

void OccupancyGrid::place_person(int person, Position p) {
    if (person < 0) throw std::invalid_argument("person index must be non-negative");
    auto& slot = slots_[index(p)];
    if (slot != kEmpty) throw std::logic_error("placing person on an occupied cell");
    slot = person;
}

void OccupancyGrid::place_cop(Position p) {
    auto& slot = slots_[index(p)];
    if (slot != kEmpty) throw std::logic_error("placing cop on an occupied cell");
    slot = kCop;
}

void OccupancyGrid::relocate(Position from, Position to) {
    if (from == to) return;
    auto& src = slots_[index(from)];
    auto& dst = slots_[index(to)];
    if (src == kEmpty) throw std::logic_error("relocating from an empty cell");
    if (dst != kEmpty) throw std::logic_error("relocating onto an occupied cell");
    dst = src;
    src = kEmpty;
}

void OccupancyGrid::clear(Position p) { slots_[index(p)] = kEmpty; }

std::vector<Position> OccupancyGrid::free_cells() const {
    std::vector<Position> cells;
    for (int y = 0; y < dims_.height; ++y)
        for (int x = 0; x < dims_.width; ++x)
            if (slots_[static_cast<std::size_t>(y) * dims_.width + x] == kEmpty)
                cells.push_back({x, y});
    return cells;
}

} // namespace rebelscape
