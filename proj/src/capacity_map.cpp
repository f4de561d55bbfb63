#include "rebelscape/capacity_map.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rebelscape {

namespace {

constexpr int kMinDim = 8;
constexpr std::size_t kMaxPeaks = 4;

} // namespace

CapacityMap::CapacityMap(GridDims dims, int fill_level) : dims_(dims) {
    if (dims.width < 1 || dims.height < 1)
        throw std::invalid_argument("capacity map needs positive dimensions");
    if (fill_level < 0 || fill_level > kMaxLevel)
        throw std::invalid_argument("capacity map fill level out of range");
    levels_.assign(static_cast<std::size_t>(dims.cells()),
                   static_cast<std::uint8_t>(fill_level));
}

void CapacityMap::set_level(Position p, int level) {
    if (level < 0 || level > kMaxLevel)
        throw std::invalid_argument("capacity level out of range: " +
                                    std::to_string(level));
    levels_[index(p)] = static_cast<std::uint8_t>(level);
}

CapacityMap make_hill_map(GridDims dims, const std::vector<Position>& peaks,
                          double sigma) {
    if (dims.width < kMinDim || dims.height < kMinDim)
        throw std::invalid_argument("hill map needs at least " +
                                    std::to_string(kMinDim) + "x" +
                                    std::to_string(kMinDim) + " cells");
    if (peaks.empty() || peaks.size() > kMaxPeaks)
        throw std::invalid_argument("hill map takes 1 to 4 peaks, got " +
                                    std::to_string(peaks.size()));
    for (Position p : peaks)
        if (p.x < 0 || p.x >= dims.width || p.y < 0 || p.y >= dims.height)
            throw std::invalid_argument("hill peak (" + std::to_string(p.x) + "," +
                                        std::to_string(p.y) + ") is off the map");
    if (!(sigma > 0.0))
        throw std::invalid_argument("hill sigma must be positive");

    CapacityMap map(dims, 0);
    const double denom = 2.0 * sigma * sigma;
    for (int y = 0; y < dims.height; ++y)
        for (int x = 0; x < dims.width; ++x) {
            double best = 0.0;
            for (Position peak : peaks) {
                double d2 = euclidean_sq({x, y}, peak, dims);
                best = std::max(best, std::exp(-d2 / denom));
            }
            map.set_level({x, y},
                          static_cast<int>(std::lround(CapacityMap::kMaxLevel * best)));
        }
    return map;
}

CapacityMap parse_map_text(const std::string& text) {
    std::vector<std::string> rows;
    std::string row;
    for (char c : text) {
        if (c == '\n') {
            rows.push_back(row);
            row.clear();
        } else if (c != '\r') {
            row.push_back(c);
        }
    }
    if (!row.empty()) rows.push_back(row);
    while (!rows.empty() && rows.back().empty()) rows.pop_back();

    if (rows.empty()) throw std::runtime_error("map text is empty");

    const int width = static_cast<int>(rows.front().size());
    const int height = static_cast<int>(rows.size());
    for (int y = 0; y < height; ++y) {
        if (static_cast<int>(rows[y].size()) != width)
            throw std::runtime_error("map line " + std::to_string(y + 1) + ": expected " +
                                     std::to_string(width) + " cells, got " +
                                     std::to_string(rows[y].size()));
        for (char c : rows[y])
            if (c < '0' || c > '0' + CapacityMap::kMaxLevel)
                throw std::runtime_error("map line " + std::to_string(y + 1) +
                                         ": invalid cell '" + std::string(1, c) + "'");
    }

    CapacityMap map({width, height}, 0);
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x) map.set_level({x, y}, rows[y][x] - '0');
    return map;
}

std::string render_map_text(const CapacityMap& map) {
    std::string out;
    GridDims dims = map.dims();
    out.reserve(static_cast<std::size_t>(dims.cells()) + dims.height);
    for (int y = 0; y < dims.height; ++y) {
        for (int x = 0; x < dims.width; ++x)
            out.push_back(static_cast<char>('0' + map.level_at({x, y})));
        out.push_back('\n');
    }
    return out;
}

} // namespace rebelscape
