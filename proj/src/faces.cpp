#include "facewalk/faces.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace facewalk {

FaceId FaceDecomposition::face_of(const Dart& d) const {
    auto it = face_of_.find(d);
    if (it == face_of_.end()) throw std::invalid_argument("face_of: dart not in graph");
    return it->second;
}

const std::vector<Dart>& FaceDecomposition::boundary(const FaceId& f) const {
    auto it = boundary_.find(f);
    if (it == boundary_.end()) throw std::invalid_argument("boundary: unknown face");
    return it->second;
}

double FaceDecomposition::signed_area(const FaceId& f) const {
    auto it = area_.find(f);
    if (it == area_.end()) throw std::invalid_argument("signed_area: unknown face");
    return it->second;
}

std::pair<FaceId, FaceId> FaceDecomposition::incident_faces(NodeId a, NodeId b) const {
    return {face_of({a, b}), face_of({b, a})};
}

FaceDecomposition decompose_faces(const GeometricGraph& g) {
    FaceDecomposition fd;
    const size_t dart_total = 2 * g.edge_count();
    fd.face_of_.reserve(dart_total);

    for (NodeId n = 0; n < g.node_count(); ++n) {
        for (NodeId m : g.neighbors(n)) {
            const Dart start{n, m};
            if (fd.face_of_.count(start)) continue;

            std::vector<Dart> cycle;
            Dart cur = start;
            do {
                cycle.push_back(cur);
                cur = Dart{cur.to, g.cw_neighbor_after(cur.to, cur.from)};
                if (cycle.size() > dart_total)
                    throw std::runtime_error("decompose_faces: rotation orbit does not close");
            } while (cur != start);

            const Dart canon = *std::min_element(cycle.begin(), cycle.end());
            const FaceId id{canon};
            double area2 = 0.0;
            for (const Dart& d : cycle) {
                const Point& p = g.position(d.from);
                const Point& q = g.position(d.to);
                area2 += p.x * q.y - q.x * p.y;
            }
            for (const Dart& d : cycle) fd.face_of_[d] = id;
            fd.boundary_[id] = std::move(cycle);
            fd.area_[id] = area2 / 2.0;
        }
    }

    // Connected planar sanity: V - E + F = 2.
    const long euler = static_cast<long>(g.node_count()) - static_cast<long>(g.edge_count()) +
                       static_cast<long>(fd.boundary_.size());
    if (euler != 2)
        throw std::runtime_error("decompose_faces: Euler check failed (non-planar or disconnected input)");

    double min_area = std::numeric_limits<double>::infinity();
    for (const auto& [id, area] : fd.area_) {
        if (area < min_area) {
            min_area = area;
            fd.external_ = id;
        }
    }
    if (min_area > kCollinearEps)
        throw std::runtime_error("decompose_faces: no clockwise boundary found for the external face");
    return fd;
}

namespace {

Crossing make_crossing(const GeometricGraph& g, const FaceDecomposition& fd, NodeId s, NodeId d,
                       NodeId ea, NodeId eb, const Point& at) {
    const Point& ps = g.position(s);
    const Point& pd = g.position(d);
    Crossing c;
    // Orient so that c.a is left of the s->d direction.
    if (orientation(ps, pd, g.position(ea)) == Orientation::CounterClockwise) {
        c.a = ea;
        c.b = eb;
    } else {
        c.a = eb;
        c.b = ea;
    }
    c.at = at;
    const double seg_len2 = dist_sq(ps, pd);
    c.t_from_s = ((at.x - ps.x) * (pd.x - ps.x) + (at.y - ps.y) * (pd.y - ps.y)) / seg_len2;
    c.dist_to_d = dist(at, pd);
    // Walking s->d, the face left of dart (b->a) holds the near-side portion
    // of the segment, the face left of (a->b) the far side.
    c.near_side = fd.face_of({c.b, c.a});
    c.far_side = fd.face_of({c.a, c.b});
    const double da = dist(g.position(c.a), pd);
    const double db = dist(g.position(c.b), pd);
    if (da < db || (da == db && c.a < c.b))
        c.designee = c.a;
    else
        c.designee = c.b;
    return c;
}

}  // namespace

std::vector<Crossing> crossing_edges(const GeometricGraph& g, const FaceDecomposition& fd,
                                     NodeId s, NodeId d) {
    std::vector<Crossing> out;
    const Segment sd(g.position(s), g.position(d));
    for (auto [a, b] : g.edges()) {
        if (a == s || a == d || b == s || b == d) continue;
        const auto hit = segments_intersect(sd, Segment(g.position(a), g.position(b)));
        if (hit.kind == SegmentIntersection::Kind::Proper)
            out.push_back(make_crossing(g, fd, s, d, a, b, hit.at));
    }
    std::sort(out.begin(), out.end(),
              [](const Crossing& x, const Crossing& y) { return x.t_from_s < y.t_from_s; });
    return out;
}

std::vector<Crossing> line_crossings(const GeometricGraph& g, const FaceDecomposition& fd,
                                     NodeId s, NodeId d) {
    std::vector<Crossing> out;
    const Point& ps = g.position(s);
    const Point& pd = g.position(d);
    for (auto [a, b] : g.edges()) {
        if (a == s || a == d || b == s || b == d) continue;
        const auto at = segment_crosses_line(ps, pd, Segment(g.position(a), g.position(b)));
        if (at) out.push_back(make_crossing(g, fd, s, d, a, b, *at));
    }
    std::sort(out.begin(), out.end(),
              [](const Crossing& x, const Crossing& y) { return x.t_from_s < y.t_from_s; });
    return out;
}

std::pair<FaceId, NodeId> first_face_toward(const GeometricGraph& g, const FaceDecomposition& fd,
                                            NodeId s, NodeId d) {
    if (g.has_edge(s, d)) {
        // The ray toward d runs along edge (s,d); either incident face works.
        // Pick by sorted boundary nodes so mirrored graphs agree.
        const FaceId fa = fd.face_of({s, d});
        const FaceId fb = fd.face_of({d, s});
        auto key = [&](const FaceId& f) {
            std::vector<NodeId> nodes;
            for (const Dart& dart : fd.boundary(f)) nodes.push_back(dart.from);
            std::sort(nodes.begin(), nodes.end());
            return nodes;
        };
        return {key(fa) <= key(fb) ? fa : fb, d};
    }
    const NodeId w = g.cw_neighbor_from_direction(s, g.position(d));
    return {fd.face_of({s, w}), w};
}

}  // namespace facewalk
