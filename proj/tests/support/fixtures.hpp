#pragma once

#include <random>
#include <string>
#include <vector>

#include "topoexplore/grid.hpp"
#include "topoexplore/skeleton.hpp"

namespace topoexplore::testing {

// Test-only map literal: '#' Occupied, '.' Free, '?' Unknown.
// Leading/trailing blank lines and common indentation are stripped so the
// fixtures can sit inline in raw strings.
OccupancyGrid grid_from(const std::string& art, double resolution = 0.05);

// 'x' or '#' marks a set pixel, anything else clear.
CellMask mask_from(const std::string& art);

// Brute-force frontier definition: Free cell with an Unknown 8-neighbor.
std::vector<Cell> frontier_cells_bruteforce(const OccupancyGrid& grid);

// Random ternary map with roughly the given cell-state proportions.
OccupancyGrid random_map(std::mt19937& rng, int width, int height, double p_occupied,
                         double p_unknown);

}  // namespace topoexplore::testing
