#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "topoexplore/geometry.hpp"

namespace topoexplore {

enum class CellState : std::uint8_t { Free = 0, Occupied = 1, Unknown = 2 };

// Ternary occupancy grid. Cells are stored row-major; cell (0,0) covers the
// world square [origin, origin + resolution) on each axis, so a cell's
// world extent grows with both indices.
struct OccupancyGrid {
    int width = 0;
    int height = 0;
    double resolution = 0.05;  // meters per cell
    Vec2 origin;               // world position of cell (0,0)'s corner
    std::vector<CellState> cells;

    OccupancyGrid() = default;
    OccupancyGrid(int w, int h, double res, Vec2 orig = {}, CellState fill = CellState::Unknown);

    bool in_bounds(Cell c) const {
        return c.x >= 0 && c.y >= 0 && c.x < width && c.y < height;
    }
    CellState at(Cell c) const { return cells[static_cast<std::size_t>(c.y) * width + c.x]; }
    CellState at(int x, int y) const { return at(Cell{x, y}); }
    void set(Cell c, CellState s) { cells[static_cast<std::size_t>(c.y) * width + c.x] = s; }

    bool is(Cell c, CellState s) const { return in_bounds(c) && at(c) == s; }

    // floor((p - origin) / resolution); out-of-bounds yields nullopt, never a clamp.
    std::optional<Cell> world_to_cell(const Vec2& p) const;
    std::optional<Cell> world_to_cell(const WorldPose& p) const { return world_to_cell(Vec2{p.x, p.y}); }

    Vec2 cell_center(Cell c) const {
        return {origin.x + (c.x + 0.5) * resolution, origin.y + (c.y + 0.5) * resolution};
    }

    std::size_t count(CellState s) const;

    // count(Free) * resolution^2
    double free_area_m2() const;

    bool same_geometry(const OccupancyGrid& o) const {
        return width == o.width && height == o.height && resolution == o.resolution &&
               origin.x == o.origin.x && origin.y == o.origin.y;
    }
};

// 8-connected neighbor offsets, scan order (row by row).
inline constexpr int kNeigh8X[8] = {-1, 0, 1, -1, 1, -1, 0, 1};
inline constexpr int kNeigh8Y[8] = {-1, -1, -1, 0, 0, 1, 1, 1};

// Mask of Free cells 8-connected to `seed` (seed must be Free).
// Returned as a row-major byte mask of the grid's dimensions.
std::vector<std::uint8_t> reachable_free_mask(const OccupancyGrid& grid, Cell seed);

}  // namespace topoexplore
