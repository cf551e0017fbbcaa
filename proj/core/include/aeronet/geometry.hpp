#pragma once

#include <cmath>

namespace aeronet {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
    friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm_squared(Vec2 v) { return dot(v, v); }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }

// Intersection of two circles of equal radius `r` centered at `a` and `b`.
//
// count == 2: two proper intersection points, p[0] on the left of a->b
//             (positive cross product side), p[1] on the right.
// count == 1: tangent circles, p[0] == p[1] at the midpoint.
// count == 0: centers farther apart than 2r.
//
// Coincident centers are degenerate (the locus is the whole circle); the two
// points are reported at +/- r along the x axis so each branch stays a
// well-defined function.
struct EqualCircleIntersection {
    int count = 0;
    Vec2 p[2];
};

inline EqualCircleIntersection intersect_equal_circles(Vec2 a, Vec2 b, double r) {
    EqualCircleIntersection out;
    const Vec2 d = b - a;
    const double dist2 = norm_squared(d);
    if (dist2 == 0.0) {
        out.count = 2;
        out.p[0] = {a.x + r, a.y};
        out.p[1] = {a.x - r, a.y};
        return out;
    }
    const double dist = std::sqrt(dist2);
    if (dist > 2.0 * r) return out;

    const Vec2 mid = a + 0.5 * d;
    const double h2 = r * r - 0.25 * dist2;
    if (h2 <= 0.0) {
        out.count = 1;
        out.p[0] = out.p[1] = mid;
        return out;
    }
    const double h = std::sqrt(h2);
    // unit normal to a->b, pointing to the positive-cross side
    const Vec2 nrm{-d.y / dist, d.x / dist};
    out.count = 2;
    out.p[0] = mid + h * nrm;
    out.p[1] = mid - h * nrm;
    return out;
}

}  // namespace aeronet
