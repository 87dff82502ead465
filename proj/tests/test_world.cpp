#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "support/fixtures.hpp"
#include "topoexplore/map_io.hpp"

using namespace topoexplore;

namespace {

std::string write_temp(const std::string& name, const std::string& bytes) {
    auto path = (std::filesystem::temp_directory_path() / name).string();
    std::ofstream out(path, std::ios::binary);
    out << bytes;
    return path;
}

}  // namespace

TEST_CASE("normalize_angle lands in (-pi, pi]") {
    CHECK(normalize_angle(kPi) == doctest::Approx(kPi));
    CHECK(normalize_angle(-kPi) == doctest::Approx(kPi));
    CHECK(normalize_angle(3 * kPi) == doctest::Approx(kPi));
    CHECK(normalize_angle(0.25) == doctest::Approx(0.25));
    CHECK(normalize_angle(kTwoPi + 0.5) == doctest::Approx(0.5));
    for (double a = -20.0; a < 20.0; a += 0.137) {
        const double n = normalize_angle(a);
        CHECK(n > -kPi);
        CHECK(n <= kPi);
        CHECK(std::fabs(std::remainder(n - a, kTwoPi)) < 1e-12);
    }
}

TEST_CASE("ascii map loading") {
    SUBCASE("all free") {
        auto g = parse_ascii_map("...\n...\n...\n");
        CHECK(g.width == 3);
        CHECK(g.height == 3);
        CHECK(g.count(CellState::Free) == 9);
        CHECK(g.count(CellState::Unknown) == 0);
    }
    SUBCASE("border of walls") {
        auto g = parse_ascii_map("###\n#.#\n###\n");
        CHECK(g.count(CellState::Occupied) == 8);
        CHECK(g.count(CellState::Free) == 1);
        CHECK(g.at(1, 1) == CellState::Free);
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(parse_ascii_map(""), std::runtime_error);
        CHECK_THROWS_AS(parse_ascii_map("..\n.\n"), std::runtime_error);
        CHECK_THROWS_AS(parse_ascii_map(".x\n..\n"), std::runtime_error);
    }
    SUBCASE("load-save round trip") {
        const std::string text = "####\n#..#\n#.##\n####\n";
        auto g = parse_ascii_map(text);
        CHECK(ascii_map_to_string(g) == text);
    }
}

TEST_CASE("pgm loading applies the <128 threshold") {
    // 2x1 raster with pixels {0, 255}
    std::string bytes = "P5\n2 1\n255\n";
    bytes.push_back('\0');
    bytes.push_back('\xff');
    auto path = write_temp("topoexplore_t.pgm", bytes);
    auto g = load_pgm_map(path);
    CHECK(g.width == 2);
    CHECK(g.height == 1);
    CHECK(g.at(0, 0) == CellState::Occupied);
    CHECK(g.at(1, 0) == CellState::Free);
    std::filesystem::remove(path);
}

TEST_CASE("pgm save/load keeps the ternary explored convention") {
    auto g = testing::grid_from("##?\n"
                                "..?\n");
    auto path = (std::filesystem::temp_directory_path() / "topoexplore_rt.pgm").string();
    save_pgm_map(g, path);
    auto back = load_pgm_ternary(path);
    CHECK(back.cells == g.cells);
    std::filesystem::remove(path);
}

TEST_CASE("pgm error paths") {
    CHECK_THROWS_AS(load_pgm_map(write_temp("bad1.pgm", "P2\n1 1\n255\n0")), std::runtime_error);
    CHECK_THROWS_AS(load_pgm_map(write_temp("bad2.pgm", "P5\n2 2\n255\nab")), std::runtime_error);
    CHECK_THROWS_AS(load_pgm_map("/nonexistent/nope.pgm"), std::runtime_error);
}

TEST_CASE("world_to_cell floor semantics") {
    OccupancyGrid g(10, 10, 0.05);
    CHECK(*g.world_to_cell(Vec2{0.0, 0.0}) == Cell{0, 0});
    CHECK(*g.world_to_cell(Vec2{0.26, 0.05}) == Cell{5, 1});
    CHECK(!g.world_to_cell(Vec2{-0.01, 0.0}).has_value());
    CHECK(!g.world_to_cell(Vec2{0.0, 0.51}).has_value());

    SUBCASE("shifted origin") {
        OccupancyGrid s(4, 4, 0.5, Vec2{-1.0, -1.0});
        CHECK(*s.world_to_cell(Vec2{-1.0, -1.0}) == Cell{0, 0});
        CHECK(*s.world_to_cell(Vec2{0.9, 0.9}) == Cell{3, 3});
    }
}

TEST_CASE("cell_center / world_to_cell round trip over every cell") {
    OccupancyGrid g(17, 9, 0.05, Vec2{-0.3, 0.2});
    for (int y = 0; y < g.height; ++y) {
        for (int x = 0; x < g.width; ++x) {
            auto back = g.world_to_cell(g.cell_center({x, y}));
            REQUIRE(back.has_value());
            CHECK(*back == Cell{x, y});
        }
    }
}

TEST_CASE("free_area_m2") {
    OccupancyGrid g(10, 10, 0.05);
    CHECK(g.free_area_m2() == 0.0);  // all Unknown
    for (int i = 0; i < 10; ++i) g.set({i, 0}, CellState::Free);
    CHECK(g.free_area_m2() == doctest::Approx(0.025).epsilon(1e-12));

    SUBCASE("flipping one Unknown to Free adds exactly resolution^2") {
        const double before = g.free_area_m2();
        g.set({0, 5}, CellState::Free);
        CHECK(g.free_area_m2() - before == doctest::Approx(0.05 * 0.05).epsilon(1e-12));
    }
}

TEST_CASE("reachable_free_mask walls off the far side") {
    auto g = testing::grid_from(R"(
        #####
        #.#.#
        #.#.#
        #####
    )");
    auto mask = reachable_free_mask(g, {1, 1});
    CHECK(mask[1 * g.width + 1] == 1);
    CHECK(mask[2 * g.width + 1] == 1);
    CHECK(mask[1 * g.width + 3] == 0);
    CHECK_THROWS_AS(reachable_free_mask(g, {0, 0}), std::invalid_argument);
}
