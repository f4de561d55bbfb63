#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rebelscape/geometry.hpp"

namespace rebelscape {

// Static resource landscape. Each cell has an integer yield level in [0, 4]
// that never changes during a run: harvesting does not deplete it.
class CapacityMap {
public:
    static constexpr int kMaxLevel = 4;

    CapacityMap() = default;
    CapacityMap(GridDims dims, int fill_level = 0);

    GridDims dims() const { return dims_; }

    int level_at(Position p) const { return levels_[index(p)]; }
    void set_level(Position p, int level);

    bool operator==(const CapacityMap&) const = default;

private:
    std::size_t index(Position p) const {
        return static_cast<std::size_t>(p.y) * dims_.width + p.x;
    }

    GridDims dims_;
    std::vector<std::uint8_t> levels_;
};

// Gaussian hill landscape: level(p) = round(4 * max_i exp(-d(p, peak_i)^2 /
// (2 sigma^2))) with Euclidean distance under torus wrap. Levels fall off
// smoothly from 4 at each peak to 0 far away. 1 to 4 peaks.
CapacityMap make_hill_map(GridDims dims, const std::vector<Position>& peaks, double sigma);

// Parse a map from rows of digits 0-4, one row per line. Throws
// std::runtime_error naming the offending line on malformed input.
CapacityMap parse_map_text(const std::string& text);

std::string render_map_text(const CapacityMap& map);

// Coarse wealth-band classification of a cell by its yield level.
enum class RegionClass { Poor, Mid, Rich };

inline RegionClass region_class(int level) {
    if (level <= 1) return RegionClass::Poor;
    if (level == 2) return RegionClass::Mid;
    return RegionClass::Rich;
}

} // namespace rebelscape
