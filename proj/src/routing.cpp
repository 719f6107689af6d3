#include "facewalk/routing.hpp"

#include <algorithm>
#include <cmath>

namespace facewalk {

std::optional<NodeId> greedy_step(const GeometricGraph& g, NodeId n, NodeId dest) {
    const Point& pd = g.position(dest);
    const double own = dist(g.position(n), pd);
    NodeId best = kInvalidNode;
    double best_d = own;
    for (NodeId m : g.neighbors(n)) {
        const double dm = dist(g.position(m), pd);
        if (dm < best_d || (dm == best_d && best != kInvalidNode && m < best)) {
            best_d = dm;
            best = m;
        }
    }
    if (best == kInvalidNode || !(best_d < own)) return std::nullopt;
    return best;
}

NodeId compass_step(const GeometricGraph& g, NodeId n, NodeId dest) {
    const Point& pn = g.position(n);
    const Point& pd = g.position(dest);
    const double ref = std::atan2(pd.y - pn.y, pd.x - pn.x);
    NodeId best = kInvalidNode;
    double best_a = 0.0;
    for (NodeId m : g.neighbors(n)) {
        const Point& pm = g.position(m);
        double a = std::atan2(pm.y - pn.y, pm.x - pn.x) - ref;
        a = std::abs(std::remainder(a, 2.0 * M_PI));
        if (best == kInvalidNode || a < best_a - 1e-15 ||
            (std::abs(a - best_a) <= 1e-15 && m < best)) {
            best = m;
            best_a = a;
        }
    }
    return best;
}

WalkResult route_greedy(const GeometricGraph& g, Session ses) {
    WalkResult res;
    NodeId cur = ses.source;
    res.path.push_back(cur);
    const std::uint64_t budget = 50 * std::max<std::uint64_t>(g.edge_count(), 1);
    while (cur != ses.dest) {
        const auto next = greedy_step(g, cur, ses.dest);
        if (!next) return res;  // local minimum, undelivered
        cur = *next;
        res.path.push_back(cur);
        if (++res.messages >= budget) {
            res.budget_exceeded = true;
            return res;
        }
    }
    res.delivered = true;
    return res;
}

WalkResult route_compass(const GeometricGraph& g, Session ses) {
    WalkResult res;
    NodeId cur = ses.source;
    res.path.push_back(cur);
    const auto v = static_cast<std::uint64_t>(g.node_count());
    const std::uint64_t budget = std::max<std::uint64_t>(50 * g.edge_count(), 5 * v * v);
    while (cur != ses.dest) {
        cur = compass_step(g, cur, ses.dest);
        res.path.push_back(cur);
        if (++res.messages >= budget) {
            res.budget_exceeded = true;
            return res;
        }
    }
    res.delivered = true;
    return res;
}

GfgResult route_gfg(const GeometricGraph& g_full, const GeometricGraph& g_planar,
                    const FaceDecomposition& fd, Session ses, Hand hand) {
    GfgResult out;
    WalkResult& res = out.walk;
    NodeId cur = ses.source;
    res.path.push_back(cur);
    const auto v = static_cast<std::uint64_t>(g_full.node_count());
    const std::uint64_t budget =
        std::max<std::uint64_t>(50 * g_full.edge_count(), 5 * v * v);
    const Point& pd = g_full.position(ses.dest);

    auto hop = [&](NodeId next) {
        cur = next;
        res.path.push_back(cur);
        ++res.messages;
        return res.messages < budget;
    };

    while (cur != ses.dest) {
        const auto next = greedy_step(g_full, cur, ses.dest);
        if (next) {
            if (!hop(*next)) {
                res.budget_exceeded = true;
                return out;
            }
            continue;
        }

        // Local minimum: single-direction face traversal on the planar graph
        // until some node is strictly closer to d than the minimum was.
        ++out.recoveries;
        const double threshold = dist(g_full.position(cur), pd);
        SessionGeometry geo(g_planar, fd, Session(cur, ses.dest));
        FaceId face = geo.first_face();
        double entry = geo.source_dist();
        NodeId prev = cur;
        NodeId nxt = launch_hop(g_planar, fd, cur, geo.wedge_neighbor(), face, hand);
        for (;;) {
            const NodeId from = cur;
            if (!hop(nxt)) {
                res.budget_exceeded = true;
                return out;
            }
            prev = from;
            if (cur == ses.dest) {
                res.delivered = true;
                return out;
            }
            if (dist(g_full.position(cur), pd) < threshold) break;  // back to greedy
            bool launched = false;
            for (;;) {
                const CrossEdgeInfo* ce = nullptr;
                for (const CrossEdgeInfo& cand : geo.at(cur)) {
                    if (!cand.on_segment) continue;
                    if (!(cand.dist_to_d < entry)) continue;
                    if (cand.near_side != face || cand.far_side == face) continue;
                    if (!ce || cand.dist_to_d < ce->dist_to_d) ce = &cand;
                }
                if (!ce) break;
                face = ce->far_side;
                entry = ce->dist_to_d;
                nxt = launch_hop(g_planar, fd, cur, ce->other, face, hand);
                ++res.face_switches;
                launched = true;
            }
            if (!launched) nxt = forward_hop(g_planar, cur, prev, hand);
        }
    }
    res.delivered = true;
    return out;
}

G2fgResult route_g2fg(const GeometricGraph& g_full, const GeometricGraph& g_planar,
                      const FaceDecomposition& fd, Session ses, Scheduler& sched) {
    G2fgResult out;
    NodeId cur = ses.source;
    out.path.push_back(cur);
    while (cur != ses.dest) {
        const auto next = greedy_step(g_full, cur, ses.dest);
        if (!next) break;
        cur = *next;
        out.path.push_back(cur);
        ++out.greedy_hops;
    }
    out.total_messages = out.greedy_hops;
    out.latency = static_cast<std::uint32_t>(out.greedy_hops);

    if (cur == ses.dest) {
        out.delivered = true;
        out.pure_greedy = true;
        out.preferred_path = out.path;
        return out;
    }

    // Local minimum: switch to bi-directional face traversal until delivery.
    DirectoryStore dir(g_planar.node_count());
    const Session face_session(cur, ses.dest);
    out.face_phase = route_2face(g_planar, fd, face_session, sched, dir);
    out.total_messages += out.face_phase.stats.total_messages;
    if (!out.face_phase.delivered) return out;

    out.delivered = true;
    out.latency += out.face_phase.latency;
    // Stitch greedy prefix and face-phase path (both contain the minimum).
    out.path.insert(out.path.end(), out.face_phase.delivered_path.begin() + 1,
                    out.face_phase.delivered_path.end());
    const auto tb = run_traceback(g_planar, fd, out.face_phase, dir, face_session);
    out.preferred_path.assign(out.path.begin(),
                              out.path.begin() + static_cast<long>(out.greedy_hops) + 1);
    out.preferred_path.insert(out.preferred_path.end(), tb.preferred_path.begin() + 1,
                              tb.preferred_path.end());
    return out;
}

TracebackResult run_traceback(const GeometricGraph& g, const FaceDecomposition& fd,
                              const TwoFaceResult& first, DirectoryStore& dir, Session ses) {
    (void)fd;
    if (!first.delivered)
        throw ProtocolError("run_traceback: no delivery to trace back from");

    TracebackResult out;
    const Token& won = first.delivered_token;
    const auto& path = first.delivered_path;
    if (path.size() < 2) throw ProtocolError("run_traceback: degenerate delivered path");

    std::vector<NodeId> route{ses.dest};
    Hand hand = opposite(won.hand);
    FaceId face = won.face;
    NodeId cur = ses.dest;
    NodeId next = path[path.size() - 2];  // the destination's recorded arrival edge

    const std::uint64_t budget = 4 * std::max<std::uint64_t>(g.edge_count(), 1) + 2;
    while (cur != ses.source) {
        const NodeId prev = cur;
        cur = next;
        route.push_back(cur);
        ++out.messages;
        if (out.messages > budget)
            throw ProtocolError("run_traceback: traceback failed to reach the source");
        if (cur == ses.source) break;

        if (const EntryRecord* rec = dir.entry(cur, face)) {
            // Store the forwarding direction for the session, keyed by the
            // face a forwarded message walks in on, then reverse into the
            // face this entry point was first visited in.
            dir.set_preferred(cur, rec->trigger_from, rec->trigger_face,
                              PreferredRecord{opposite(hand), face, prev});
            face = rec->trigger_face;
            hand = opposite(rec->trigger_hand);
            next = rec->trigger_from;
        } else {
            next = forward_hop(g, cur, prev, hand);
        }
    }
    // The source learns the preferred direction of the first face.
    dir.set_preferred(ses.source, kInvalidNode, face,
                      PreferredRecord{opposite(hand), face, route[route.size() - 2]});

    out.preferred_path.assign(route.rbegin(), route.rend());
    return out;
}

namespace {

// One repeat message along the stored preferred directions.
std::uint64_t walk_preferred(const GeometricGraph& g, const FaceDecomposition& fd,
                             DirectoryStore& dir, Session ses, bool end_of_session,
                             std::vector<NodeId>* path_out) {
    (void)fd;
    const PreferredRecord* srec = dir.source_preferred(ses.source);
    if (!srec) throw ProtocolError("walk_preferred: source has no stored direction");
    Hand hand = srec->hand;
    FaceId face = srec->face;
    NodeId next = srec->next;

    std::uint64_t hops = 0;
    NodeId cur = ses.source;
    if (path_out) path_out->push_back(cur);
    const std::uint64_t budget = 4 * std::max<std::uint64_t>(g.edge_count(), 1) + 2;
    std::vector<NodeId> visited_records;
    visited_records.push_back(ses.source);
    while (cur != ses.dest) {
        const NodeId prev = cur;
        cur = next;
        ++hops;
        if (path_out) path_out->push_back(cur);
        if (hops > budget) throw ProtocolError("walk_preferred: lost the preferred path");
        if (cur == ses.dest) break;
        if (const PreferredRecord* rec = dir.preferred(cur, prev, face)) {
            hand = rec->hand;
            face = rec->face;
            next = rec->next;
            visited_records.push_back(cur);
        } else {
            next = forward_hop(g, cur, prev, hand);
        }
    }
    // The final session message makes the nodes it used forget the stored
    // directions as it passes.
    if (end_of_session) {
        for (NodeId n : visited_records) dir.clear_node(n);
        dir.clear_node(ses.dest);
    }
    return hops;
}

}  // namespace

std::uint64_t SessionResult::core_messages() const {
    std::uint64_t total = first.stats.total_messages + traceback.messages;
    for (auto h : repeat_hops) total += h;
    return total;
}

SessionResult route_session(const GeometricGraph& g, const FaceDecomposition& fd, Session ses,
                            int k_messages, Scheduler& sched, DirectoryStore& dir) {
    if (k_messages < 1) throw std::invalid_argument("route_session: k_messages >= 1");

    SessionResult out;
    out.first = route_2face(g, fd, ses, sched, dir);
    if (!out.first.delivered)
        throw ProtocolError("route_session: first message was not delivered");
    out.traceback = run_traceback(g, fd, out.first, dir, ses);
    out.preferred_path = out.traceback.preferred_path;

    for (int i = 2; i <= k_messages; ++i) {
        const bool last = i == k_messages;
        std::vector<NodeId> p;
        const std::uint64_t hops = walk_preferred(g, fd, dir, ses, last, &p);
        if (p != out.preferred_path)
            throw ProtocolError("route_session: repeat message strayed off the preferred path");
        out.repeat_hops.push_back(hops);
    }

    // Off-path entry points still hold direction state; a separate
    // bi-directional sweep makes them forget it.
    {
        TwoFaceOptions opts;
        opts.kind = TokenKind::Cleanup;
        opts.clear_directory = true;
        opts.flood = true;
        TwoFaceResult sweep = route_2face(g, fd, ses, sched, dir, opts);
        out.cleanup_messages = sweep.stats.total_messages;
    }
    out.directory_clean = dir.empty();
    if (!out.directory_clean)
        throw ProtocolError("route_session: direction state survived the session");
    return out;
}

}  // namespace facewalk
