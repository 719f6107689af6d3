#include "facewalk/geometry.hpp"

#include <algorithm>
#include <limits>

namespace facewalk {

namespace {

bool within_box(const Point& p, const Point& a, const Point& b) {
    return p.x <= std::max(a.x, b.x) + kCollinearEps && p.x >= std::min(a.x, b.x) - kCollinearEps &&
           p.y <= std::max(a.y, b.y) + kCollinearEps && p.y >= std::min(a.y, b.y) - kCollinearEps;
}

}  // namespace

SegmentIntersection segments_intersect(const Segment& s1, const Segment& s2) {
    const Point &p1 = s1.a, &q1 = s1.b, &p2 = s2.a, &q2 = s2.b;
    const double d1 = cross(p1, q1, p2);
    const double d2 = cross(p1, q1, q2);
    const double d3 = cross(p2, q2, p1);
    const double d4 = cross(p2, q2, q1);

    const bool c1 = std::abs(d1) < kCollinearEps;
    const bool c2 = std::abs(d2) < kCollinearEps;
    const bool c3 = std::abs(d3) < kCollinearEps;
    const bool c4 = std::abs(d4) < kCollinearEps;

    // Proper crossing: each segment's endpoints strictly straddle the other.
    if (!c1 && !c2 && !c3 && !c4 && (d1 > 0) != (d2 > 0) && (d3 > 0) != (d4 > 0)) {
        const double u = d3 / (d3 - d4);  // parameter along s1
        Point at{p1.x + u * (q1.x - p1.x), p1.y + u * (q1.y - p1.y)};
        return SegmentIntersection::proper(at);
    }

    // Endpoint touching cases.
    if (c1 && within_box(p2, p1, q1)) return SegmentIntersection::touching(p2);
    if (c2 && within_box(q2, p1, q1)) return SegmentIntersection::touching(q2);
    if (c3 && within_box(p1, p2, q2)) return SegmentIntersection::touching(p1);
    if (c4 && within_box(q1, p2, q2)) return SegmentIntersection::touching(q1);

    return SegmentIntersection::none();
}

std::optional<Point> segment_crosses_line(const Point& la, const Point& lb, const Segment& e) {
    const double da = cross(la, lb, e.a);
    const double db = cross(la, lb, e.b);
    if (std::abs(da) < kCollinearEps || std::abs(db) < kCollinearEps) return std::nullopt;
    if ((da > 0) == (db > 0)) return std::nullopt;
    const double u = da / (da - db);
    return Point{e.a.x + u * (e.b.x - e.a.x), e.a.y + u * (e.b.y - e.a.y)};
}

double point_segment_distance(const Point& p, const Segment& s) {
    const double l2 = dist_sq(s.a, s.b);
    double t = ((p.x - s.a.x) * (s.b.x - s.a.x) + (p.y - s.a.y) * (s.b.y - s.a.y)) / l2;
    t = std::clamp(t, 0.0, 1.0);
    const Point proj{s.a.x + t * (s.b.x - s.a.x), s.a.y + t * (s.b.y - s.a.y)};
    return dist(p, proj);
}

Point angle_order_after(const Point& center, const Point& from,
                        const std::vector<Point>& candidates, RotationSense sense) {
    if (candidates.empty())
        throw std::invalid_argument("angle_order_after: empty candidate set");

    constexpr double kTwoPi = 2.0 * M_PI;
    const double theta0 = std::atan2(from.y - center.y, from.x - center.x);

    double best_delta = std::numeric_limits<double>::infinity();
    size_t best = 0;
    for (size_t i = 0; i < candidates.size(); ++i) {
        const Point& c = candidates[i];
        if (c == center)
            throw std::invalid_argument("angle_order_after: candidate equals center");
        const double theta = std::atan2(c.y - center.y, c.x - center.x);
        double delta = sense == RotationSense::CCW ? theta - theta0 : theta0 - theta;
        delta = std::fmod(delta, kTwoPi);
        if (delta < 0) delta += kTwoPi;
        if (delta < 1e-15) delta = kTwoPi;  // same direction as `from`: full turn away
        if (delta < best_delta) {
            best_delta = delta;
            best = i;
        }
    }
    return candidates[best];
}

}  // namespace facewalk
