#include "topoexplore/grid.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace topoexplore {

OccupancyGrid::OccupancyGrid(int w, int h, double res, Vec2 orig, CellState fill)
    : width(w), height(h), resolution(res), origin(orig) {
    if (w <= 0 || h <= 0 || res <= 0.0) {
        throw std::invalid_argument("OccupancyGrid: dimensions and resolution must be positive");
    }
    cells.assign(static_cast<std::size_t>(w) * h, fill);
}

std::optional<Cell> OccupancyGrid::world_to_cell(const Vec2& p) const {
    const int cx = static_cast<int>(std::floor((p.x - origin.x) / resolution));
    const int cy = static_cast<int>(std::floor((p.y - origin.y) / resolution));
    Cell c{cx, cy};
    if (!in_bounds(c)) return std::nullopt;
    return c;
}

std::size_t OccupancyGrid::count(CellState s) const {
    return static_cast<std::size_t>(std::count(cells.begin(), cells.end(), s));
}

double OccupancyGrid::free_area_m2() const {
    return static_cast<double>(count(CellState::Free)) * resolution * resolution;
}

std::vector<std::uint8_t> reachable_free_mask(const OccupancyGrid& grid, Cell seed) {
    std::vector<std::uint8_t> mask(grid.cells.size(), 0);
    if (!grid.is(seed, CellState::Free)) {
        throw std::invalid_argument("reachable_free_mask: seed cell is not Free");
    }
    std::deque<Cell> queue;
    queue.push_back(seed);
    mask[static_cast<std::size_t>(seed.y) * grid.width + seed.x] = 1;
    while (!queue.empty()) {
        Cell c = queue.front();
        queue.pop_front();
        for (int k = 0; k < 8; ++k) {
            Cell n{c.x + kNeigh8X[k], c.y + kNeigh8Y[k]};
            if (!grid.is(n, CellState::Free)) continue;
            auto idx = static_cast<std::size_t>(n.y) * grid.width + n.x;
            if (mask[idx]) continue;
            mask[idx] = 1;
            queue.push_back(n);
        }
    }
    return mask;
}

}  // namespace topoexplore
