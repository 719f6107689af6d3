#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

namespace facewalk {

// Cross products below this magnitude (area units^2) count as collinear.
inline constexpr double kCollinearEps = 1e-12;

struct Point {
    double x = 0.0;
    double y = 0.0;

    Point() = default;
    Point(double xi, double yi) : x(xi), y(yi) {
        if (!std::isfinite(xi) || !std::isfinite(yi))
            throw std::invalid_argument("Point: coordinates must be finite");
    }

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

struct Segment {
    Point a;
    Point b;

    Segment(Point pa, Point pb) : a(pa), b(pb) {
        if (pa == pb) throw std::invalid_argument("Segment: endpoints must differ");
    }
};

enum class Orientation { Clockwise, CounterClockwise, Collinear };

enum class RotationSense { CW, CCW };

// Signed cross product of (q-p) x (r-p). Positive = left turn.
inline double cross(const Point& p, const Point& q, const Point& r) {
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

inline Orientation orientation(const Point& p, const Point& q, const Point& r) {
    const double c = cross(p, q, r);
    if (std::abs(c) < kCollinearEps) return Orientation::Collinear;
    return c > 0 ? Orientation::CounterClockwise : Orientation::Clockwise;
}

inline double dist(const Point& p, const Point& q) {
    return std::hypot(p.x - q.x, p.y - q.y);
}

inline double dist_sq(const Point& p, const Point& q) {
    const double dx = p.x - q.x, dy = p.y - q.y;
    return dx * dx + dy * dy;
}

struct SegmentIntersection {
    enum class Kind { None, Proper, Touching } kind = Kind::None;
    Point at;

    static SegmentIntersection none() { return {}; }
    static SegmentIntersection proper(Point p) { return {Kind::Proper, p}; }
    static SegmentIntersection touching(Point p) { return {Kind::Touching, p}; }
};

// Classifies how two segments meet. Proper means the interiors cross;
// Touching means an endpoint of one lies on the other segment.
SegmentIntersection segments_intersect(const Segment& s1, const Segment& s2);

// Crossing point of segment `e` with the infinite line through `la`,`lb`,
// when the segment's interior strictly crosses the line.
std::optional<Point> segment_crosses_line(const Point& la, const Point& lb, const Segment& e);

// Distance from point p to the closed segment s.
double point_segment_distance(const Point& p, const Segment& s);

// The candidate whose direction from `center` comes first when rotating
// from direction (center -> from) in the given sense. A candidate lying
// exactly in the `from` direction is reached only after a full turn, so a
// pendant node still bounces the token back when it is the only option.
Point angle_order_after(const Point& center, const Point& from,
                        const std::vector<Point>& candidates, RotationSense sense);

}  // namespace facewalk
