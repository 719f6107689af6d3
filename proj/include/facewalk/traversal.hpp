#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "facewalk/kernel.hpp"

namespace facewalk {

// One edge crossing the session line, viewed from its designated endpoint.
// Of the two endpoints of a crossing edge, only the one closer to the
// destination (tie: smaller id) acts as the entry point.
struct CrossEdgeInfo {
    NodeId other = kInvalidNode;  // non-designated endpoint
    Point at;                     // crossing point with the (s,d) line
    double dist_to_d = 0.0;
    bool on_segment = false;      // crossing lies strictly between s and d
    FaceId face_out;              // face of dart (designee -> other)
    FaceId face_in;               // face of dart (other -> designee)
    FaceId near_side;             // face holding the segment just before the crossing
    FaceId far_side;              // face just after, walking s -> d
    int ord = 0;                  // stable per-session ordinal, for consumed-edge sets
};

// Per-session precomputation: every edge properly crossing the infinite
// (s,d) line, indexed by designated endpoint, plus the first face at s.
class SessionGeometry {
public:
    SessionGeometry(const GeometricGraph& g, const FaceDecomposition& fd, Session ses);

    const Session& session() const { return session_; }
    const std::vector<CrossEdgeInfo>& at(NodeId n) const {
        return by_node_[static_cast<size_t>(n)];
    }
    FaceId first_face() const { return first_face_; }
    NodeId wedge_neighbor() const { return wedge_neighbor_; }
    double source_dist() const { return source_dist_; }

private:
    Session session_;
    std::vector<std::vector<CrossEdgeInfo>> by_node_;
    FaceId first_face_;
    NodeId wedge_neighbor_ = kInvalidNode;
    double source_dist_ = 0.0;
};

// First hop for a token launched at n into face f via the crossing-edge
// neighbor m (or the wedge bracket neighbor at the source).
NodeId launch_hop(const GeometricGraph& g, const FaceDecomposition& fd, NodeId n, NodeId m,
                  FaceId f, Hand hand);

// Next hop for a token that arrived at n from `from` and keeps walking its
// face with the given hand.
NodeId forward_hop(const GeometricGraph& g, NodeId n, NodeId from, Hand hand);

// Direction state stored at an entry point while a session is active.
struct EntryRecord {
    FaceId into_face;     // face the spawned pair traverses
    Hand trigger_hand = Hand::R;
    NodeId trigger_from = kInvalidNode;
    FaceId trigger_face;
    NodeId spawn_other = kInvalidNode;  // crossing-edge other endpoint
};

// Preferred forwarding direction learned from the traceback.
struct PreferredRecord {
    Hand hand = Hand::R;
    FaceId face;
    NodeId next = kInvalidNode;
};

// Per-node session directory. Entries are Learning state, preferred records
// Established; clearing a node returns it to Cleared. Nothing persists
// between sessions. A route may pass the same node several times (boundary
// spurs, faces entered twice), so a preferred record is keyed by the arrival
// context of the forwarded message: the node it came from and the face it was
// walking.
class DirectoryStore {
public:
    using PreferredKey = std::pair<NodeId, FaceId>;  // (came from, walking face)

    explicit DirectoryStore(int node_count) : entries_(static_cast<size_t>(node_count)),
                                              preferred_(static_cast<size_t>(node_count)) {}

    void record_entry(NodeId n, const EntryRecord& r) {
        entries_[static_cast<size_t>(n)][r.into_face] = r;
    }
    const EntryRecord* entry(NodeId n, FaceId into) const {
        const auto& m = entries_[static_cast<size_t>(n)];
        auto it = m.find(into);
        return it == m.end() ? nullptr : &it->second;
    }
    void set_preferred(NodeId n, NodeId from, FaceId walking, const PreferredRecord& r) {
        preferred_[static_cast<size_t>(n)][{from, walking}] = r;
    }
    const PreferredRecord* preferred(NodeId n, NodeId from, FaceId walking) const {
        const auto& m = preferred_[static_cast<size_t>(n)];
        auto it = m.find({from, walking});
        return it == m.end() ? nullptr : &it->second;
    }
    // The sole record at the session source, where a forwarded message starts.
    const PreferredRecord* source_preferred(NodeId n) const {
        const auto& m = preferred_[static_cast<size_t>(n)];
        return m.size() == 1 ? &m.begin()->second : nullptr;
    }
    void clear_node(NodeId n) {
        entries_[static_cast<size_t>(n)].clear();
        preferred_[static_cast<size_t>(n)].clear();
    }
    void clear_all();
    bool empty() const;
    size_t established_count() const;
    // Deterministic serialization, for statelessness checks.
    std::string snapshot() const;

private:
    std::vector<std::map<FaceId, EntryRecord>> entries_;
    std::vector<std::map<PreferredKey, PreferredRecord>> preferred_;
};

struct FaceCounters {
    int pair_spawns = 0;
    int l_spawns = 0;
    int r_spawns = 0;
    int annihilations = 0;
    int forwards = 0;
};

struct TwoFaceResult {
    RunStats stats;
    std::map<FaceId, FaceCounters> per_face;
    int total_pair_spawns = 0;
    int total_annihilations = 0;
    int lemma_violations = 0;
    std::set<NodeId> entry_points;        // nodes that spawned a pair, source included
    std::set<NodeId> annihilation_sites;  // nodes where a pair died

    bool delivered = false;
    std::vector<NodeId> delivered_path;   // winning token's node sequence, s..d
    std::uint32_t latency = 0;            // causal depth of the first delivery
    Token delivered_token;                // winning token as it arrived at d
};

struct TwoFaceOptions {
    TokenKind kind = TokenKind::Data;
    bool clear_directory = false;  // cleanup sweep: wipe stored directions on touch
    // Spawn into every crossing-adjacent face, not only strictly closer ones.
    // A cleanup sweep floods so its coverage is a superset of any data run.
    bool flood = false;
    TraceSink trace;
};

// Bi-directional face traversal. Seeds an L/R pair on the first face at the
// source; entry points spawn further pairs; opposite tokens annihilate when
// they meet. Traversal continues past delivery until every pair has died.
TwoFaceResult route_2face(const GeometricGraph& g, const FaceDecomposition& fd, Session ses,
                          Scheduler& sched, DirectoryStore& dir, TwoFaceOptions opts = {});

struct WalkResult {
    bool delivered = false;
    bool budget_exceeded = false;
    std::vector<NodeId> path;
    std::uint64_t messages = 0;
    int face_switches = 0;

    std::uint64_t hops() const { return path.empty() ? 0 : path.size() - 1; }
};

// Single-direction traversal that switches faces as soon as it finds a
// strictly closer crossing of the (s,d) segment.
WalkResult route_face2(const GeometricGraph& g, const FaceDecomposition& fd, Session ses,
                       Hand hand);

// Single-direction traversal that first circumnavigates the face, then moves
// to the crossing closest to the destination and switches there.
WalkResult route_face1(const GeometricGraph& g, const FaceDecomposition& fd, Session ses,
                       Hand hand);

}  // namespace facewalk
