#pragma once

#include <cmath>
#include <compare>

namespace topoexplore {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double norm() const { return std::hypot(x, y); }
};

inline double distance(const Vec2& a, const Vec2& b) { return (a - b).norm(); }

// Integer grid cell, (x = column, y = row).
struct Cell {
    int x = 0;
    int y = 0;
    auto operator<=>(const Cell&) const = default;
};

// Wraps an angle into (-pi, pi].
inline double normalize_angle(double a) {
    double r = std::remainder(a, kTwoPi);
    if (r <= -kPi) r = kPi;
    return r;
}

// Absolute angular difference in [0, pi].
inline double angle_diff_abs(double a, double b) {
    return std::fabs(normalize_angle(a - b));
}

// Robot (or any planar) pose. theta is kept in (-pi, pi].
struct WorldPose {
    double x = 0.0;
    double y = 0.0;
    double theta = 0.0;

    Vec2 position() const { return {x, y}; }
};

inline WorldPose make_pose(double x, double y, double theta) {
    return {x, y, normalize_angle(theta)};
}

}  // namespace topoexplore
