#pragma once

#include "facewalk/traversal.hpp"

namespace facewalk {

// Neighbor strictly closer to dest, or nothing at a local minimum.
std::optional<NodeId> greedy_step(const GeometricGraph& g, NodeId n, NodeId dest);

// Neighbor whose direction makes the smallest angle with the direction to
// dest; ties broken by smaller id. Prone to livelocks.
NodeId compass_step(const GeometricGraph& g, NodeId n, NodeId dest);

// Pure greedy walk; stops undelivered at a local minimum.
WalkResult route_greedy(const GeometricGraph& g, Session ses);

// Pure compass walk; livelocks surface as an exceeded step budget.
WalkResult route_compass(const GeometricGraph& g, Session ses);

struct GfgResult {
    WalkResult walk;
    int recoveries = 0;  // greedy -> face -> greedy transitions
};

// Greedy on the full graph; single-direction face traversal on the planar
// subgraph to escape local minima, returning to greedy at the first node
// strictly closer to the destination than the minimum.
GfgResult route_gfg(const GeometricGraph& g_full, const GeometricGraph& g_planar,
                    const FaceDecomposition& fd, Session ses, Hand hand);

struct G2fgResult {
    bool delivered = false;
    bool pure_greedy = false;        // no local minimum on the way
    std::vector<NodeId> path;        // s..d, greedy prefix + face phase
    std::vector<NodeId> preferred_path;
    std::uint64_t total_messages = 0;
    std::uint32_t latency = 0;
    std::uint64_t greedy_hops = 0;
    TwoFaceResult face_phase;        // empty when pure_greedy

    std::uint64_t hops() const { return path.empty() ? 0 : path.size() - 1; }
    std::uint64_t preferred_hops() const {
        return preferred_path.empty() ? 0 : preferred_path.size() - 1;
    }
};

// Greedy until a local minimum, then bi-directional face traversal all the
// way to the destination.
G2fgResult route_g2fg(const GeometricGraph& g_full, const GeometricGraph& g_planar,
                      const FaceDecomposition& fd, Session ses, Scheduler& sched);

struct TracebackResult {
    std::vector<NodeId> preferred_path;  // s..d
    std::uint64_t messages = 0;

    std::uint64_t hops() const {
        return preferred_path.empty() ? 0 : preferred_path.size() - 1;
    }
};

// Single reverse-direction message from the destination that retraces the
// winning route, teaching every on-path entry point (and the source) the
// preferred forwarding direction.
TracebackResult run_traceback(const GeometricGraph& g, const FaceDecomposition& fd,
                              const TwoFaceResult& first, DirectoryStore& dir, Session ses);

struct SessionResult {
    TwoFaceResult first;                 // message 1, augmented traversal
    TracebackResult traceback;
    std::vector<std::uint64_t> repeat_hops;  // messages 2..k
    std::uint64_t cleanup_messages = 0;
    std::vector<NodeId> preferred_path;
    bool directory_clean = false;

    // Message 1 + traceback + repeats; the session's route cost.
    std::uint64_t core_messages() const;
    // Everything including the off-path cleanup sweep.
    std::uint64_t total_messages() const { return core_messages() + cleanup_messages; }
};

// Runs a k-message session: augmented bi-directional first message plus
// traceback, repeats along the stored preferred directions, then cleanup so
// no state survives the session.
SessionResult route_session(const GeometricGraph& g, const FaceDecomposition& fd, Session ses,
                            int k_messages, Scheduler& sched, DirectoryStore& dir);

}  // namespace facewalk
