#include "support/fixtures.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace topoexplore::testing {

namespace {

std::vector<std::string> art_rows(const std::string& art) {
    std::vector<std::string> rows;
    std::istringstream in(art);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) rows.push_back(line);
    }
    if (rows.empty()) throw std::invalid_argument("empty fixture art");
    std::size_t indent = std::string::npos;
    for (const auto& r : rows) indent = std::min(indent, r.find_first_not_of(' '));
    std::size_t width = 0;
    for (auto& r : rows) {
        r.erase(0, indent);
        width = std::max(width, r.size());
    }
    for (auto& r : rows) r.resize(width, ' ');
    return rows;
}

}  // namespace

OccupancyGrid grid_from(const std::string& art, double resolution) {
    const auto rows = art_rows(art);
    OccupancyGrid grid(static_cast<int>(rows.front().size()), static_cast<int>(rows.size()),
                       resolution);
    for (std::size_t y = 0; y < rows.size(); ++y) {
        for (std::size_t x = 0; x < rows[y].size(); ++x) {
            CellState s;
            switch (rows[y][x]) {
                case '#': s = CellState::Occupied; break;
                case '.': s = CellState::Free; break;
                case '?':
                case ' ': s = CellState::Unknown; break;
                default: throw std::invalid_argument("bad fixture char");
            }
            grid.set({static_cast<int>(x), static_cast<int>(y)}, s);
        }
    }
    return grid;
}

CellMask mask_from(const std::string& art) {
    const auto rows = art_rows(art);
    CellMask m(static_cast<int>(rows.front().size()), static_cast<int>(rows.size()));
    for (std::size_t y = 0; y < rows.size(); ++y) {
        for (std::size_t x = 0; x < rows[y].size(); ++x) {
            if (rows[y][x] == 'x' || rows[y][x] == '#') {
                m.set({static_cast<int>(x), static_cast<int>(y)}, true);
            }
        }
    }
    return m;
}

std::vector<Cell> frontier_cells_bruteforce(const OccupancyGrid& grid) {
    std::vector<Cell> out;
    for (int y = 0; y < grid.height; ++y) {
        for (int x = 0; x < grid.width; ++x) {
            if (grid.at(x, y) != CellState::Free) continue;
            bool frontier = false;
            for (int dy = -1; dy <= 1 && !frontier; ++dy) {
                for (int dx = -1; dx <= 1 && !frontier; ++dx) {
                    if (dx == 0 && dy == 0) continue;
                    frontier = grid.is({x + dx, y + dy}, CellState::Unknown);
                }
            }
            if (frontier) out.push_back({x, y});
        }
    }
    return out;
}

OccupancyGrid random_map(std::mt19937& rng, int width, int height, double p_occupied,
                         double p_unknown) {
    OccupancyGrid grid(width, height, 0.05);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            const double r = u(rng);
            CellState s = CellState::Free;
            if (r < p_occupied) {
                s = CellState::Occupied;
            } else if (r < p_occupied + p_unknown) {
                s = CellState::Unknown;
            }
            grid.set({x, y}, s);
        }
    }
    return grid;
}

}  // namespace topoexplore::testing
