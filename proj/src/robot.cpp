#include "topoexplore/robot.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace topoexplore {

bool footprint_collides(const OccupancyGrid& grid, Vec2 center, double radius) {
    const double res = grid.resolution;
    const int x0 = static_cast<int>(std::floor((center.x - radius - grid.origin.x) / res));
    const int x1 = static_cast<int>(std::floor((center.x + radius - grid.origin.x) / res));
    const int y0 = static_cast<int>(std::floor((center.y - radius - grid.origin.y) / res));
    const int y1 = static_cast<int>(std::floor((center.y + radius - grid.origin.y) / res));
    for (int y = y0; y <= y1; ++y) {
        for (int x = x0; x <= x1; ++x) {
            const Cell c{x, y};
            const bool solid = !grid.in_bounds(c) || grid.at(c) == CellState::Occupied;
            if (!solid) continue;
            // closest point of the cell rectangle to the circle center
            const double lox = grid.origin.x + x * res;
            const double loy = grid.origin.y + y * res;
            const double px = std::clamp(center.x, lox, lox + res);
            const double py = std::clamp(center.y, loy, loy + res);
            const double dx = center.x - px;
            const double dy = center.y - py;
            if (dx * dx + dy * dy < radius * radius) return true;
        }
    }
    return false;
}

std::optional<RobotState> step(const RobotState& robot, VelocityCmd cmd, double dt,
                               const OccupancyGrid& ground_truth, const SimConfig& cfg) {
    if (dt <= 0.0) throw std::invalid_argument("step: dt must be positive");
    const double v = std::clamp(cmd.linear, -cfg.v_max, cfg.v_max);
    const double w = std::clamp(cmd.angular, -cfg.omega_max, cfg.omega_max);

    RobotState next = robot;
    next.linear_vel = v;
    next.angular_vel = w;
    const double th = robot.pose.theta;
    if (std::fabs(w) < 1e-12) {
        next.pose.x = robot.pose.x + v * std::cos(th) * dt;
        next.pose.y = robot.pose.y + v * std::sin(th) * dt;
        next.pose.theta = th;
    } else {
        const double r = v / w;
        next.pose.x = robot.pose.x + r * (std::sin(th + w * dt) - std::sin(th));
        next.pose.y = robot.pose.y - r * (std::cos(th + w * dt) - std::cos(th));
        next.pose.theta = normalize_angle(th + w * dt);
    }

    if (footprint_collides(ground_truth, {next.pose.x, next.pose.y}, robot.radius)) {
        return std::nullopt;
    }
    return next;
}

}  // namespace topoexplore
