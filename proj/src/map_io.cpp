#include "topoexplore/map_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace topoexplore {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open map file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Reads the P5 header (magic, width, height, maxval) honoring '#' comments,
// returns the offset of the first raster byte.
struct PgmHeader {
    int width = 0;
    int height = 0;
    int maxval = 0;
    std::size_t data_offset = 0;
};

PgmHeader parse_pgm_header(const std::string& bytes, const std::string& path) {
    std::size_t pos = 0;
    auto skip_ws_and_comments = [&]() {
        while (pos < bytes.size()) {
            char c = bytes[pos];
            if (c == '#') {
                while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                ++pos;
            } else {
                break;
            }
        }
    };
    auto read_token = [&]() {
        skip_ws_and_comments();
        std::size_t start = pos;
        while (pos < bytes.size() && !std::isspace(static_cast<unsigned char>(bytes[pos]))) ++pos;
        if (start == pos) throw std::runtime_error("malformed PGM header: " + path);
        return bytes.substr(start, pos - start);
    };

    if (read_token() != "P5") throw std::runtime_error("not a binary P5 PGM: " + path);
    PgmHeader h;
    try {
        h.width = std::stoi(read_token());
        h.height = std::stoi(read_token());
        h.maxval = std::stoi(read_token());
    } catch (const std::exception&) {
        throw std::runtime_error("malformed PGM header: " + path);
    }
    if (h.width <= 0 || h.height <= 0) throw std::runtime_error("empty PGM map: " + path);
    if (h.maxval != 255) throw std::runtime_error("unsupported PGM maxval (want 255): " + path);
    // exactly one whitespace byte separates maxval from the raster
    if (pos >= bytes.size() || !std::isspace(static_cast<unsigned char>(bytes[pos]))) {
        throw std::runtime_error("malformed PGM header: " + path);
    }
    h.data_offset = pos + 1;
    if (bytes.size() - h.data_offset < static_cast<std::size_t>(h.width) * h.height) {
        throw std::runtime_error("truncated PGM raster: " + path);
    }
    return h;
}

OccupancyGrid load_pgm_impl(const std::string& path, double resolution, bool ternary) {
    const std::string bytes = read_file(path);
    const PgmHeader h = parse_pgm_header(bytes, path);
    OccupancyGrid grid(h.width, h.height, resolution);
    for (int y = 0; y < h.height; ++y) {
        for (int x = 0; x < h.width; ++x) {
            auto v = static_cast<unsigned char>(bytes[h.data_offset + static_cast<std::size_t>(y) * h.width + x]);
            CellState s;
            if (ternary && v == 128) {
                s = CellState::Unknown;
            } else {
                s = v < 128 ? CellState::Occupied : CellState::Free;
            }
            grid.set({x, y}, s);
        }
    }
    return grid;
}

}  // namespace

OccupancyGrid parse_ascii_map(const std::string& text, double resolution) {
    std::vector<std::string> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        rows.push_back(line);
    }
    if (rows.empty()) throw std::runtime_error("empty ASCII map");
    const auto width = rows.front().size();
    OccupancyGrid grid(static_cast<int>(width), static_cast<int>(rows.size()), resolution);
    for (std::size_t y = 0; y < rows.size(); ++y) {
        if (rows[y].size() != width) {
            throw std::runtime_error("inconsistent ASCII map row length at row " + std::to_string(y));
        }
        for (std::size_t x = 0; x < width; ++x) {
            char c = rows[y][x];
            if (c == '#') {
                grid.set({static_cast<int>(x), static_cast<int>(y)}, CellState::Occupied);
            } else if (c == '.') {
                grid.set({static_cast<int>(x), static_cast<int>(y)}, CellState::Free);
            } else {
                throw std::runtime_error(std::string("invalid ASCII map character '") + c + "'");
            }
        }
    }
    return grid;
}

OccupancyGrid load_ascii_map(const std::string& path, double resolution) {
    return parse_ascii_map(read_file(path), resolution);
}

std::string ascii_map_to_string(const OccupancyGrid& grid) {
    std::string out;
    out.reserve(static_cast<std::size_t>(grid.height) * (grid.width + 1));
    for (int y = 0; y < grid.height; ++y) {
        for (int x = 0; x < grid.width; ++x) {
            CellState s = grid.at(x, y);
            if (s == CellState::Unknown) throw std::runtime_error("ASCII format cannot hold Unknown cells");
            out.push_back(s == CellState::Occupied ? '#' : '.');
        }
        out.push_back('\n');
    }
    return out;
}

OccupancyGrid load_pgm_map(const std::string& path, double resolution) {
    return load_pgm_impl(path, resolution, /*ternary=*/false);
}

OccupancyGrid load_pgm_ternary(const std::string& path, double resolution) {
    return load_pgm_impl(path, resolution, /*ternary=*/true);
}

void save_pgm_map(const OccupancyGrid& grid, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write PGM file: " + path);
    out << "P5\n" << grid.width << " " << grid.height << "\n255\n";
    for (int y = 0; y < grid.height; ++y) {
        for (int x = 0; x < grid.width; ++x) {
            unsigned char v = 128;
            switch (grid.at(x, y)) {
                case CellState::Free: v = 255; break;
                case CellState::Occupied: v = 0; break;
                case CellState::Unknown: v = 128; break;
            }
            out.put(static_cast<char>(v));
        }
    }
    if (!out) throw std::runtime_error("short write to PGM file: " + path);
}

OccupancyGrid load_ground_truth(const std::string& path, MapFormat format, double resolution) {
    OccupancyGrid grid =
        format == MapFormat::Pgm ? load_pgm_map(path, resolution) : load_ascii_map(path, resolution);
    return grid;  // both loaders only emit Free/Occupied
}

OccupancyGrid load_ground_truth(const std::string& path, double resolution) {
    const bool pgm = path.size() >= 4 && path.compare(path.size() - 4, 4, ".pgm") == 0;
    return load_ground_truth(path, pgm ? MapFormat::Pgm : MapFormat::Ascii, resolution);
}

}  // namespace topoexplore
