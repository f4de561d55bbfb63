#include "rebelscape/geometry.hpp"

namespace rebelscape {

std::vector<Position> visible_sites(GridDims dims, Position origin, int vision) {
    std::vector<Position> sites;
    if (vision <= 0) return sites;

    const int window = 2 * vision + 1;
    sites.reserve(static_cast<std::size_t>(window) * window - 1);

    if (window <= std::min(dims.width, dims.height)) {
        // No offset can wrap onto another (or onto the origin).
        for (int dy = -vision; dy <= vision; ++dy) {
            int y = wrap_coord(origin.y + dy, dims.height);
            for (int dx = -vision; dx <= vision; ++dx) {
                if (dx == 0 && dy == 0) continue;
                sites.push_back({wrap_coord(origin.x + dx, dims.width), y});
            }
        }
        return sites;
    }

    // The window spans the torus: drop duplicates, keeping first occurrence.
    std::vector<char> seen(static_cast<std::size_t>(dims.cells()), 0);
    seen[static_cast<std::size_t>(origin.y) * dims.width + origin.x] = 1;
    for (int dy = -vision; dy <= vision; ++dy) {
        int y = wrap_coord(origin.y + dy, dims.height);
        for (int dx = -vision; dx <= vision; ++dx) {
            if (dx == 0 && dy == 0) continue;
            int x = wrap_coord(origin.x + dx, dims.width);
            auto idx = static_cast<std::size_t>(y) * dims.width + x;
            if (seen[idx]) continue;
            seen[idx] = 1;
            sites.push_back({x, y});
        }
    }
    return sites;
}

} // namespace rebelscape
