#pragma once

#include <cmath>
#include <cstdint>

namespace spritemesh {

// Vertex position in pixel coordinates, x right, y down.
struct Vec2 {
    float x = 0.0f;
    float y = 0.0f;

    friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
};

// Integer pixel coordinate. (x, y) addresses the pixel center.
struct PixelCoord {
    int x = 0;
    int y = 0;

    friend bool operator==(const PixelCoord& a, const PixelCoord& b) {
        return a.x == b.x && a.y == b.y;
    }
};

inline double dist(const Vec2& a, const Vec2& b) {
    const double dx = double(a.x) - double(b.x);
    const double dy = double(a.y) - double(b.y);
    return std::sqrt(dx * dx + dy * dy);
}

inline double dist_sq(const Vec2& a, const Vec2& b) {
    const double dx = double(a.x) - double(b.x);
    const double dy = double(a.y) - double(b.y);
    return dx * dx + dy * dy;
}

inline Vec2 to_vec2(const PixelCoord& p) { return Vec2{float(p.x), float(p.y)}; }

// Perpendicular distance from p to segment [a, b]; falls back to the point
// distance when the segment is degenerate or p projects past an endpoint.
inline double point_segment_dist(const Vec2& p, const Vec2& a, const Vec2& b) {
    const double vx = double(b.x) - double(a.x);
    const double vy = double(b.y) - double(a.y);
    const double wx = double(p.x) - double(a.x);
    const double wy = double(p.y) - double(a.y);
    const double c1 = vx * wx + vy * wy;
    if (c1 <= 0.0) return std::sqrt(wx * wx + wy * wy);
    const double c2 = vx * vx + vy * vy;
    if (c2 <= c1) {
        const double ux = double(p.x) - double(b.x);
        const double uy = double(p.y) - double(b.y);
        return std::sqrt(ux * ux + uy * uy);
    }
    const double t = c1 / c2;
    const double px = double(a.x) + t * vx - double(p.x);
    const double py = double(a.y) + t * vy - double(p.y);
    return std::sqrt(px * px + py * py);
}

}  // namespace spritemesh
