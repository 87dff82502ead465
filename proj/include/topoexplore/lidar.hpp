#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "topoexplore/grid.hpp"

namespace topoexplore {

struct SimConfig {
    double dt = 0.1;              // seconds per tick
    int beams = 360;
    double lidar_max_range = 3.5; // meters
    double v_max = 0.15;          // m/s
    double omega_max = 2.0;       // rad/s
    std::uint64_t rng_seed = 0;
};

// One full 2D scan. Angles are robot-relative, strictly increasing,
// covering the full circle: angle[i] = -pi + 2*pi*i/N.
struct LidarScan {
    std::vector<double> ranges;
    std::vector<double> angles;
    std::vector<std::uint8_t> hit;  // 0 = no obstacle within max_range
    // Cell each hit beam ended in. Disambiguates exact corner crossings where
    // two cells share the same entry distance; {-1,-1} for no-hit beams.
    // Optional: scans built by hand may leave it empty.
    std::vector<Cell> hit_cells;
    double max_range = 3.5;

    std::size_t size() const { return ranges.size(); }

    // min over hit beams; max_range when nothing was hit
    double min_range() const;
};

// Steps through every cell a ray touches, in order, calling
// visit(cell, t_enter) with the entry distance. The start cell is visited
// with t_enter = 0. Stops when visit returns false, the ray leaves the grid,
// or t_enter exceeds t_limit. Exact grid traversal (no cells skipped).
void traverse_ray(const OccupancyGrid& grid, Vec2 from, Vec2 dir, double t_limit,
                  const std::function<bool(Cell, double)>& visit);

// Casts cfg.beams rays from the pose against the ground truth. A beam's range
// is the distance to the boundary of the first Occupied cell it touches,
// capped at cfg.lidar_max_range. Throws std::domain_error if the pose is
// outside the grid or inside an Occupied cell.
LidarScan raycast(const OccupancyGrid& ground_truth, const WorldPose& pose, const SimConfig& cfg);

// Writes a scan into the explored map: traversed cells become Free, the hit
// cell Occupied. Never flips Free<->Occupied (sensing is noise-free).
// Throws std::invalid_argument on geometry mismatch.
void integrate_scan(OccupancyGrid& explored, const WorldPose& pose, const LidarScan& scan);

// True when no Occupied cell lies on the segment from->to.
bool line_of_sight(const OccupancyGrid& grid, Vec2 from, Vec2 to);

// One sensing tick: raycast against ground truth, fold the scan into the
// explored map. Throws std::invalid_argument if the two grids disagree on
// geometry.
LidarScan sense_and_integrate(const OccupancyGrid& ground_truth, OccupancyGrid& explored,
                              const WorldPose& pose, const SimConfig& cfg);

}  // namespace topoexplore
