#pragma once

#include <cmath>

namespace swarm {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }
    Vec2& operator+=(Vec2 o) {
        x += o.x;
        y += o.y;
        return *this;
    }
    Vec2& operator-=(Vec2 o) {
        x -= o.x;
        y -= o.y;
        return *this;
    }
    bool operator==(const Vec2&) const = default;
};

inline Vec2 operator*(double s, Vec2 v) { return v * s; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm_sq(Vec2 v) { return v.x * v.x + v.y * v.y; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }

inline Vec2 normalized(Vec2 v) {
    const double n = norm(v);
    return {v.x / n, v.y / n};
}

inline Vec2 perp(Vec2 v) { return {-v.y, v.x}; }

inline constexpr double kPi = 3.14159265358979323846;

inline double deg_to_rad(double d) { return d * (kPi / 180.0); }
inline double rad_to_deg(double r) { return r * (180.0 / kPi); }

inline Vec2 rotated(Vec2 v, double angle_rad) {
    const double c = std::cos(angle_rad);
    const double s = std::sin(angle_rad);
    return {c * v.x - s * v.y, s * v.x + c * v.y};
}

/// Signed angle from `from` to `to` in degrees, in (-180, 180].
inline double signed_angle_deg(Vec2 from, Vec2 to) {
    return rad_to_deg(std::atan2(cross(from, to), dot(from, to)));
}

/// Unsigned angle between two vectors in degrees, in [0, 180].
inline double angle_between_deg(Vec2 a, Vec2 b) {
    return rad_to_deg(std::atan2(std::abs(cross(a, b)), dot(a, b)));
}

}  // namespace swarm
