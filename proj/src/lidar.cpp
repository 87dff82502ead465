#include "topoexplore/lidar.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace topoexplore {

double LidarScan::min_range() const {
    double best = max_range;
    for (std::size_t i = 0; i < ranges.size(); ++i) {
        if (hit[i] && ranges[i] < best) best = ranges[i];
    }
    return best;
}

void traverse_ray(const OccupancyGrid& grid, Vec2 from, Vec2 dir, double t_limit,
                  const std::function<bool(Cell, double)>& visit) {
    constexpr double kInf = std::numeric_limits<double>::infinity();
    const double len = dir.norm();
    if (len <= 0.0) return;
    dir = {dir.x / len, dir.y / len};

    auto start = grid.world_to_cell(from);
    if (!start) return;
    Cell cell = *start;
    if (!visit(cell, 0.0)) return;

    const int step_x = dir.x > 0.0 ? 1 : (dir.x < 0.0 ? -1 : 0);
    const int step_y = dir.y > 0.0 ? 1 : (dir.y < 0.0 ? -1 : 0);

    auto boundary_t = [&](double coord, double cell_lo, int step, double d) {
        if (step > 0) return (cell_lo + grid.resolution - coord) / d;
        if (step < 0) return (cell_lo - coord) / d;
        return kInf;
    };
    double t_max_x = boundary_t(from.x, grid.origin.x + cell.x * grid.resolution, step_x, dir.x);
    double t_max_y = boundary_t(from.y, grid.origin.y + cell.y * grid.resolution, step_y, dir.y);
    const double t_delta_x = step_x != 0 ? grid.resolution / std::fabs(dir.x) : kInf;
    const double t_delta_y = step_y != 0 ? grid.resolution / std::fabs(dir.y) : kInf;

    while (true) {
        double t;
        if (t_max_x <= t_max_y) {
            t = t_max_x;
            cell.x += step_x;
            t_max_x += t_delta_x;
        } else {
            t = t_max_y;
            cell.y += step_y;
            t_max_y += t_delta_y;
        }
        if (t > t_limit || !grid.in_bounds(cell)) return;
        if (!visit(cell, t)) return;
    }
}

LidarScan raycast(const OccupancyGrid& ground_truth, const WorldPose& pose, const SimConfig& cfg) {
    auto cell = ground_truth.world_to_cell(pose);
    if (!cell) throw std::domain_error("raycast: pose outside the map");
    if (ground_truth.at(*cell) == CellState::Occupied) {
        throw std::domain_error("raycast: pose inside an Occupied cell");
    }

    LidarScan scan;
    scan.max_range = cfg.lidar_max_range;
    scan.ranges.resize(cfg.beams);
    scan.angles.resize(cfg.beams);
    scan.hit.resize(cfg.beams);
    scan.hit_cells.assign(cfg.beams, Cell{-1, -1});

    const Vec2 from{pose.x, pose.y};
    for (int i = 0; i < cfg.beams; ++i) {
        const double rel = -kPi + kTwoPi * i / cfg.beams;
        const double a = pose.theta + rel;
        scan.angles[i] = rel;
        double range = cfg.lidar_max_range;
        bool hit = false;
        traverse_ray(ground_truth, from, {std::cos(a), std::sin(a)}, cfg.lidar_max_range,
                     [&](Cell c, double t) {
                         if (ground_truth.at(c) == CellState::Occupied) {
                             range = t;
                             hit = true;
                             scan.hit_cells[i] = c;
                             return false;
                         }
                         return true;
                     });
        scan.ranges[i] = range;
        scan.hit[i] = hit ? 1 : 0;
    }
    return scan;
}

void integrate_scan(OccupancyGrid& explored, const WorldPose& pose, const LidarScan& scan) {
    auto mark = [&](Cell c, CellState s) {
        const CellState cur = explored.at(c);
        if (cur == s || s == CellState::Unknown) return;
        if (cur != CellState::Unknown) {
            throw std::logic_error("integrate_scan: Free/Occupied cell flipped; sensing is noise-free");
        }
        explored.set(c, s);
    };

    const Vec2 from{pose.x, pose.y};
    const bool have_hit_cells = scan.hit_cells.size() == scan.size();
    for (std::size_t i = 0; i < scan.size(); ++i) {
        const double a = pose.theta + scan.angles[i];
        const double range = scan.ranges[i];
        const bool hit = scan.hit[i] != 0;
        const Cell hit_cell = have_hit_cells ? scan.hit_cells[i] : Cell{-1, -1};
        traverse_ray(explored, from, {std::cos(a), std::sin(a)}, hit ? range + 1e-9 : range,
                     [&](Cell c, double t) {
                         if (hit && have_hit_cells) {
                             if (c == hit_cell) {
                                 mark(c, CellState::Occupied);
                                 return false;
                             }
                         } else if (hit && t >= range - 1e-12) {
                             mark(c, CellState::Occupied);
                             return false;
                         }
                         mark(c, CellState::Free);
                         return true;
                     });
    }
}

LidarScan sense_and_integrate(const OccupancyGrid& ground_truth, OccupancyGrid& explored,
                              const WorldPose& pose, const SimConfig& cfg) {
    if (!ground_truth.same_geometry(explored)) {
        throw std::invalid_argument("sense_and_integrate: explored/ground-truth geometry mismatch");
    }
    LidarScan scan = raycast(ground_truth, pose, cfg);
    integrate_scan(explored, pose, scan);
    return scan;
}

bool line_of_sight(const OccupancyGrid& grid, Vec2 from, Vec2 to) {
    bool blocked = false;
    const double dist = distance(from, to);
    if (dist <= 0.0) {
        auto c = grid.world_to_cell(from);
        return !c || grid.at(*c) != CellState::Occupied;
    }
    traverse_ray(grid, from, to - from, dist, [&](Cell c, double) {
        if (grid.at(c) == CellState::Occupied) {
            blocked = true;
            return false;
        }
        return true;
    });
    return !blocked;
}

}  // namespace topoexplore
