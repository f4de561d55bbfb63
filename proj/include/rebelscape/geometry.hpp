#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <vector>

namespace rebelscape {

struct GridDims {
    int width = 0;
    int height = 0;

    long cells() const { return static_cast<long>(width) * height; }
    bool operator==(const GridDims&) const = default;
};

struct Position {
    int x = 0;
    int y = 0;

    bool operator==(const Position&) const = default;
};

// Wrap a coordinate onto [0, n). Works for any v, including negatives.
inline int wrap_coord(int v, int n) {
    int m = v % n;
    return m < 0 ? m + n : m;
}

inline Position wrap(Position p, GridDims dims) {
    return {wrap_coord(p.x, dims.width), wrap_coord(p.y, dims.height)};
}

// Shortest separation along one torus axis.
inline int axis_gap(int a, int b, int n) {
    int d = std::abs(a - b);
    return std::min(d, n - d);
}

inline int chebyshev(Position a, Position b, GridDims dims) {
    return std::max(axis_gap(a.x, b.x, dims.width), axis_gap(a.y, b.y, dims.height));
}

inline double euclidean_sq(Position a, Position b, GridDims dims) {
    double dx = axis_gap(a.x, b.x, dims.width);
    double dy = axis_gap(a.y, b.y, dims.height);
    return dx * dx + dy * dy;
}

// All cells within Chebyshev distance `vision` of `origin` under torus wrap,
// excluding the origin cell itself, in row-major offset order (dy outer, dx
// inner). When the window spans the whole torus, wrapped duplicates are
// dropped keeping the first occurrence.
std::vector<Position> visible_sites(GridDims dims, Position origin, int vision);

// Visits the same cells as visible_sites() in the same order without
// materialising the vector. Fast path when the window cannot self-overlap.
template <class Fn>
void for_each_visible(GridDims dims, Position origin, int vision, Fn&& fn) {
    if (2 * vision + 1 <= std::min(dims.width, dims.height)) {
        for (int dy = -vision; dy <= vision; ++dy) {
            int y = wrap_coord(origin.y + dy, dims.height);
            for (int dx = -vision; dx <= vision; ++dx) {
                if (dx == 0 && dy == 0) continue;
                fn(Position{wrap_coord(origin.x + dx, dims.width), y});
            }
        }
    } else {
        for (Position p : visible_sites(dims, origin, vision)) fn(p);
    }
}

} // namespace rebelscape
