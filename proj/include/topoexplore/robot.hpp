#pragma once

#include <optional>

#include "topoexplore/grid.hpp"
#include "topoexplore/lidar.hpp"

namespace topoexplore {

struct VelocityCmd {
    double linear = 0.0;   // m/s
    double angular = 0.0;  // rad/s
};

struct RobotState {
    WorldPose pose;
    double linear_vel = 0.0;
    double angular_vel = 0.0;
    double radius = 0.11;  // collision footprint, meters
};

// True if the footprint circle at `center` overlaps an Occupied cell or
// pokes outside the map (out-of-map space counts as solid).
bool footprint_collides(const OccupancyGrid& grid, Vec2 center, double radius);

// Advances the unicycle model by dt with exact arc integration. Commands are
// clamped to cfg.v_max / cfg.omega_max first. Returns nullopt on collision.
std::optional<RobotState> step(const RobotState& robot, VelocityCmd cmd, double dt,
                               const OccupancyGrid& ground_truth, const SimConfig& cfg);

}  // namespace topoexplore
