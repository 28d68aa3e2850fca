#pragma once

#include <cmath>
#include <optional>

namespace csketch {

/// 2D point/vector in normalized canvas units.
struct Point2 {
    double x = 0.0;
    double y = 0.0;

    Point2 operator+(Point2 o) const { return {x + o.x, y + o.y}; }
    Point2 operator-(Point2 o) const { return {x - o.x, y - o.y}; }
    Point2 operator*(double s) const { return {x * s, y * s}; }
    bool operator==(const Point2&) const = default;
};

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double dist(Point2 a, Point2 b) { return norm(a - b); }

/// Signed perpendicular distance from point p to the infinite line through
/// (s, e). Positive on the left side of s->e.
inline double signed_line_dist(Point2 p, Point2 s, Point2 e) {
    Point2 d = e - s;
    return cross(d, p - s) / norm(d);
}

/// Distance from p to the segment [s, e].
double segment_dist(Point2 p, Point2 s, Point2 e);

struct CircleFit {
    Point2 center;
    double radius = 0.0;
};

/// Circumcircle of three points. Empty when the points are collinear
/// (|cross| <= 1e-12 in normalized units).
std::optional<CircleFit> circumcircle(Point2 a, Point2 b, Point2 c);

/// Angular span of the arc start->mid->end on its circumcircle.
/// `start_angle` is the angle of the start point; sweeping by `sweep`
/// (signed, CCW positive) reaches the end point through the mid point.
struct ArcSpan {
    Point2 center;
    double radius = 0.0;
    double start_angle = 0.0;
    double sweep = 0.0;
};

std::optional<ArcSpan> arc_span(Point2 start, Point2 mid, Point2 end);

}  // namespace csketch
