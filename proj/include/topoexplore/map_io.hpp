#pragma once

#include <string>

#include "topoexplore/grid.hpp"

namespace topoexplore {

enum class MapFormat { Ascii, Pgm };

// ASCII maps: one row per line, '#' = Occupied, '.' = Free, rows top to bottom.
OccupancyGrid parse_ascii_map(const std::string& text, double resolution = 0.05);
OccupancyGrid load_ascii_map(const std::string& path, double resolution = 0.05);
std::string ascii_map_to_string(const OccupancyGrid& grid);

// Binary P5 PGM, maxval 255. Ground truth rule: pixel < 128 -> Occupied, else Free.
OccupancyGrid load_pgm_map(const std::string& path, double resolution = 0.05);

// Explored-map snapshot convention: Unknown=128, Free=255, Occupied=0.
void save_pgm_map(const OccupancyGrid& grid, const std::string& path);
// Inverse of save_pgm_map (exact 128 -> Unknown, <128 -> Occupied, otherwise Free).
OccupancyGrid load_pgm_ternary(const std::string& path, double resolution = 0.05);

// Loads a ground-truth map; result never contains Unknown cells.
// Picks the format explicitly; throws std::runtime_error on malformed input.
OccupancyGrid load_ground_truth(const std::string& path, MapFormat format, double resolution = 0.05);
// Convenience: format chosen by extension (.pgm -> Pgm, anything else Ascii).
OccupancyGrid load_ground_truth(const std::string& path, double resolution = 0.05);

}  // namespace topoexplore
