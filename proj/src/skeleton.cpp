#include "topoexplore/skeleton.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <stdexcept>

namespace topoexplore {

std::size_t CellMask::count() const {
    return static_cast<std::size_t>(std::count(data.begin(), data.end(), std::uint8_t{1}));
}

std::vector<Cell> CellMask::set_cells() const {
    std::vector<Cell> out;
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            if (at(x, y)) out.push_back({x, y});
        }
    }
    return out;
}

CellMask mask_from_bytes(int width, int height, const std::vector<std::uint8_t>& bytes) {
    if (bytes.size() != static_cast<std::size_t>(width) * height) {
        throw std::invalid_argument("mask_from_bytes: size mismatch");
    }
    CellMask m(width, height);
    for (std::size_t i = 0; i < bytes.size(); ++i) m.data[i] = bytes[i] ? 1 : 0;
    return m;
}

int neighbor_count(const CellMask& m, Cell c) {
    int n = 0;
    for (int k = 0; k < 8; ++k) {
        if (m.at(c.x + kNeigh8X[k], c.y + kNeigh8Y[k])) ++n;
    }
    return n;
}

std::pair<std::vector<int>, int> label_components(const CellMask& m) {
    std::vector<int> labels(m.data.size(), -1);
    int next = 0;
    for (int y = 0; y < m.height; ++y) {
        for (int x = 0; x < m.width; ++x) {
            const std::size_t idx = static_cast<std::size_t>(y) * m.width + x;
            if (!m.data[idx] || labels[idx] != -1) continue;
            std::deque<Cell> queue{{x, y}};
            labels[idx] = next;
            while (!queue.empty()) {
                Cell c = queue.front();
                queue.pop_front();
                for (int k = 0; k < 8; ++k) {
                    Cell nb{c.x + kNeigh8X[k], c.y + kNeigh8Y[k]};
                    if (!m.at(nb)) continue;
                    const std::size_t ni = static_cast<std::size_t>(nb.y) * m.width + nb.x;
                    if (labels[ni] != -1) continue;
                    labels[ni] = next;
                    queue.push_back(nb);
                }
            }
            ++next;
        }
    }
    return {std::move(labels), next};
}

namespace {

// Clockwise ring used by the thinning conditions: N, NE, E, SE, S, SW, W, NW.
constexpr int kRingX[8] = {0, 1, 1, 1, 0, -1, -1, -1};
constexpr int kRingY[8] = {-1, -1, 0, 1, 1, 1, 0, -1};

struct Ring {
    std::array<int, 8> p;
    int b;  // set-neighbor count
    int a;  // 0->1 transitions around the ring
};

Ring ring_at(const CellMask& m, Cell c) {
    Ring r{};
    r.b = 0;
    for (int k = 0; k < 8; ++k) {
        r.p[k] = m.at(c.x + kRingX[k], c.y + kRingY[k]) ? 1 : 0;
        r.b += r.p[k];
    }
    r.a = 0;
    for (int k = 0; k < 8; ++k) {
        if (r.p[k] == 0 && r.p[(k + 1) % 8] == 1) ++r.a;
    }
    return r;
}

Cell most_central_pixel(const std::vector<Cell>& pixels) {
    double cx = 0, cy = 0;
    for (const Cell& c : pixels) {
        cx += c.x;
        cy += c.y;
    }
    cx /= static_cast<double>(pixels.size());
    cy /= static_cast<double>(pixels.size());
    Cell best = pixels.front();
    double best_d = 1e300;
    for (const Cell& c : pixels) {
        const double d = (c.x - cx) * (c.x - cx) + (c.y - cy) * (c.y - cy);
        if (d < best_d - 1e-12) {
            best_d = d;
            best = c;
        }
    }
    return best;
}

}  // namespace

CellMask skeletonize(const CellMask& free_mask) {
    auto [labels, n_components] = label_components(free_mask);

    CellMask skel = free_mask;
    bool changed = true;
    std::vector<Cell> doomed;
    while (changed) {
        changed = false;
        for (int pass = 0; pass < 2; ++pass) {
            doomed.clear();
            for (int y = 0; y < skel.height; ++y) {
                for (int x = 0; x < skel.width; ++x) {
                    if (!skel.at(x, y)) continue;
                    const Ring r = ring_at(skel, {x, y});
                    if (r.b < 2 || r.b > 6 || r.a != 1) continue;
                    // ring indices: 0=N, 2=E, 4=S, 6=W
                    const bool ok = pass == 0
                                        ? (r.p[0] * r.p[2] * r.p[4] == 0 && r.p[2] * r.p[4] * r.p[6] == 0)
                                        : (r.p[0] * r.p[2] * r.p[6] == 0 && r.p[0] * r.p[4] * r.p[6] == 0);
                    if (ok) doomed.push_back({x, y});
                }
            }
            for (const Cell& c : doomed) skel.set(c, false);
            changed = changed || !doomed.empty();
        }
    }

    // Thinning can erase small blobs outright; pin those components back down
    // with one representative pixel each.
    std::vector<char> survived(static_cast<std::size_t>(n_components), 0);
    for (int y = 0; y < skel.height; ++y) {
        for (int x = 0; x < skel.width; ++x) {
            if (skel.at(x, y)) survived[labels[static_cast<std::size_t>(y) * skel.width + x]] = 1;
        }
    }
    std::vector<std::vector<Cell>> missing(static_cast<std::size_t>(n_components));
    for (int y = 0; y < free_mask.height; ++y) {
        for (int x = 0; x < free_mask.width; ++x) {
            if (!free_mask.at(x, y)) continue;
            const int lab = labels[static_cast<std::size_t>(y) * free_mask.width + x];
            if (!survived[lab]) missing[lab].push_back({x, y});
        }
    }
    for (const auto& pixels : missing) {
        if (!pixels.empty()) skel.set(most_central_pixel(pixels), true);
    }
    return skel;
}

void prune_spurs(CellMask& skeleton, int min_len) {
    if (min_len <= 0) return;
    bool changed = true;
    bool any = false;
    while (changed) {
        changed = false;
        for (const Cell& start : skeleton.set_cells()) {
            if (neighbor_count(skeleton, start) != 1) continue;
            // walk from the endpoint until the branch meets a junction
            std::vector<Cell> trail{start};
            Cell cur = start;
            bool at_junction = false;
            auto in_trail = [&](Cell c) {
                return std::find(trail.begin(), trail.end(), c) != trail.end();
            };
            while (static_cast<int>(trail.size()) < min_len) {
                Cell next{-1, -1};
                int candidates = 0;
                for (int k = 0; k < 8; ++k) {
                    Cell nb{cur.x + kNeigh8X[k], cur.y + kNeigh8Y[k]};
                    if (!skeleton.at(nb) || in_trail(nb)) continue;
                    ++candidates;
                    next = nb;
                }
                if (candidates != 1) break;  // isolated path or ambiguous, not a spur
                int onward = 0;
                for (int k = 0; k < 8; ++k) {
                    Cell nb{next.x + kNeigh8X[k], next.y + kNeigh8Y[k]};
                    if (skeleton.at(nb) && !in_trail(nb)) ++onward;
                }
                if (onward >= 2) {
                    at_junction = true;
                    break;
                }
                trail.push_back(next);
                cur = next;
            }
            if (at_junction && static_cast<int>(trail.size()) < min_len) {
                for (const Cell& c : trail) skeleton.set(c, false);
                changed = true;
                any = true;
            }
        }
    }
    // deleting spur pixels can leave diagonal warts on the remaining branches
    if (any) skeleton = skeletonize(skeleton);
}

std::vector<JunctionNode> classify_junctions(const CellMask& skeleton) {
    CellMask junction(skeleton.width, skeleton.height);
    for (const Cell& c : skeleton.set_cells()) {
        if (neighbor_count(skeleton, c) >= 3) junction.set(c, true);
    }

    auto [labels, n_clusters] = label_components(junction);
    std::vector<JunctionNode> nodes(static_cast<std::size_t>(n_clusters));
    for (const Cell& c : junction.set_cells()) {
        nodes[labels[static_cast<std::size_t>(c.y) * junction.width + c.x]].pixels.push_back(c);
    }

    for (auto& node : nodes) {
        node.seed = most_central_pixel(node.pixels);
        // branch starts: skeleton pixels adjacent to the cluster but outside it,
        // merged among themselves so a 2-pixel-wide branch mouth counts once
        CellMask starts(skeleton.width, skeleton.height);
        for (const Cell& c : node.pixels) {
            for (int k = 0; k < 8; ++k) {
                Cell nb{c.x + kNeigh8X[k], c.y + kNeigh8Y[k]};
                if (skeleton.at(nb) && !junction.at(nb)) starts.set(nb, true);
            }
        }
        node.degree = label_components(starts).second;
    }
    return nodes;
}

}  // namespace topoexplore
