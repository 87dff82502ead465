#pragma once

#include <cstdint>
#include <vector>

#include "topoexplore/grid.hpp"

namespace topoexplore {

// Row-major binary raster used for free-space masks and skeletons.
struct CellMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;

    CellMask() = default;
    CellMask(int w, int h) : width(w), height(h), data(static_cast<std::size_t>(w) * h, 0) {}

    bool in_bounds(Cell c) const { return c.x >= 0 && c.y >= 0 && c.x < width && c.y < height; }
    bool at(Cell c) const {
        return in_bounds(c) && data[static_cast<std::size_t>(c.y) * width + c.x] != 0;
    }
    bool at(int x, int y) const { return at(Cell{x, y}); }
    void set(Cell c, bool v) { data[static_cast<std::size_t>(c.y) * width + c.x] = v ? 1 : 0; }

    std::size_t count() const;
    std::vector<Cell> set_cells() const;  // scan order
};

CellMask mask_from_bytes(int width, int height, const std::vector<std::uint8_t>& bytes);

// Number of set 8-neighbors.
int neighbor_count(const CellMask& m, Cell c);

// 8-connected component labels (-1 outside the mask), plus component count.
std::pair<std::vector<int>, int> label_components(const CellMask& m);

// Morphological thinning (Zhang-Suen). The skeleton is a subset of the input
// and keeps each 8-connected component connected; components the raw thinning
// would erase entirely are kept as their single most central pixel.
CellMask skeletonize(const CellMask& free_mask);

// Deletes branches shorter than min_len pixels that run from a bare endpoint
// to a junction pixel. min_len == 0 disables pruning.
void prune_spurs(CellMask& skeleton, int min_len);

struct JunctionNode {
    Cell seed;                 // cluster pixel closest to the cluster centroid
    std::vector<Cell> pixels;  // all merged junction pixels
    int degree = 0;            // distinct emanating skeleton branches
};

// Junction pixels (>= 3 skeleton neighbors) merged within a 1-cell radius.
std::vector<JunctionNode> classify_junctions(const CellMask& skeleton);

}  // namespace topoexplore
