#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "facewalk/graph.hpp"

namespace facewalk {

// Directed edge of the rotation system.
struct Dart {
    NodeId from = kInvalidNode;
    NodeId to = kInvalidNode;

    bool valid() const { return from >= 0 && to >= 0; }
    bool operator==(const Dart& o) const { return from == o.from && to == o.to; }
    bool operator!=(const Dart& o) const { return !(*this == o); }
    bool operator<(const Dart& o) const {
        return from < o.from || (from == o.from && to < o.to);
    }
    Dart reversed() const { return {to, from}; }
};

// Canonical face label: the lexicographically smallest dart on the face's
// boundary walk. Tokens entering the same face anywhere agree on this id.
struct FaceId {
    Dart canon;

    bool valid() const { return canon.valid(); }
    bool operator==(const FaceId& o) const { return canon == o.canon; }
    bool operator!=(const FaceId& o) const { return !(o == *this); }
    bool operator<(const FaceId& o) const { return canon < o.canon; }
};

struct DartHash {
    size_t operator()(const Dart& d) const {
        return std::hash<std::uint64_t>()((static_cast<std::uint64_t>(static_cast<std::uint32_t>(d.from)) << 32) |
                                          static_cast<std::uint32_t>(d.to));
    }
};

// Faces as orbits of the right-hand-rule successor: the walk leaving dart
// (a,b) continues along (b, cw_neighbor_after(b, a)). Internal faces come out
// counter-clockwise, the external face clockwise.
class FaceDecomposition {
public:
    FaceId face_of(const Dart& d) const;
    const std::vector<Dart>& boundary(const FaceId& f) const;
    FaceId external() const { return external_; }
    double signed_area(const FaceId& f) const;
    size_t face_count() const { return boundary_.size(); }
    const std::map<FaceId, std::vector<Dart>>& faces() const { return boundary_; }

    // The two faces incident to undirected edge {a,b}: (face_of(a->b), face_of(b->a)).
    std::pair<FaceId, FaceId> incident_faces(NodeId a, NodeId b) const;

private:
    std::unordered_map<Dart, FaceId, DartHash> face_of_;
    std::map<FaceId, std::vector<Dart>> boundary_;
    std::map<FaceId, double> area_;
    FaceId external_;

    friend FaceDecomposition decompose_faces(const GeometricGraph& g);
};

// Walks every rotation orbit and labels it. Throws std::runtime_error when the
// result violates Euler's formula for connected planar graphs (non-planar or
// disconnected input).
FaceDecomposition decompose_faces(const GeometricGraph& g);

// An edge crossing the source-destination line, with everything the routing
// layer needs to reason about it.
struct Crossing {
    NodeId a = kInvalidNode;     // endpoint left of s->d
    NodeId b = kInvalidNode;     // endpoint right of s->d
    Point at;                    // crossing point
    double t_from_s = 0.0;       // parameter along the s->d line (0 at s, 1 at d)
    double dist_to_d = 0.0;
    FaceId near_side;            // face containing the segment just before the crossing
    FaceId far_side;             // face just after
    NodeId designee = kInvalidNode;  // endpoint closer to d (tie: smaller id)
};

// All edges properly crossing the closed segment (pos(s), pos(d)), ordered by
// distance from s.
std::vector<Crossing> crossing_edges(const GeometricGraph& g, const FaceDecomposition& fd,
                                     NodeId s, NodeId d);

// Same classification against the infinite line through s and d. Superset of
// crossing_edges; t_from_s may fall outside [0,1].
std::vector<Crossing> line_crossings(const GeometricGraph& g, const FaceDecomposition& fd,
                                     NodeId s, NodeId d);

// The face a message leaves s through when heading for d: the wedge between
// the neighbors angularly bracketing the s->d direction. Also reports the
// right-hand first hop (the clockwise bracket neighbor).
std::pair<FaceId, NodeId> first_face_toward(const GeometricGraph& g, const FaceDecomposition& fd,
                                            NodeId s, NodeId d);

}  // namespace facewalk
