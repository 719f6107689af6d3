#include "facewalk/traversal.hpp"

#include <algorithm>
#include <sstream>

namespace facewalk {

SessionGeometry::SessionGeometry(const GeometricGraph& g, const FaceDecomposition& fd,
                                 Session ses)
    : session_(ses), by_node_(static_cast<size_t>(g.node_count())) {
    const auto crossings = line_crossings(g, fd, ses.source, ses.dest);
    int ord = 0;
    for (const Crossing& c : crossings) {
        CrossEdgeInfo info;
        info.other = c.designee == c.a ? c.b : c.a;
        info.at = c.at;
        info.dist_to_d = c.dist_to_d;
        info.on_segment = c.t_from_s > 0.0 && c.t_from_s < 1.0;
        info.face_out = fd.face_of({c.designee, info.other});
        info.face_in = fd.face_of({info.other, c.designee});
        info.near_side = c.near_side;
        info.far_side = c.far_side;
        info.ord = ord++;
        by_node_[static_cast<size_t>(c.designee)].push_back(info);
    }
    // Keep per-node lists in adjacency (angular) order for determinism.
    for (NodeId n = 0; n < g.node_count(); ++n) {
        auto& lst = by_node_[static_cast<size_t>(n)];
        std::sort(lst.begin(), lst.end(), [&](const CrossEdgeInfo& x, const CrossEdgeInfo& y) {
            return g.neighbor_index(n, x.other) < g.neighbor_index(n, y.other);
        });
    }
    auto [f1, w1] = first_face_toward(g, fd, ses.source, ses.dest);
    first_face_ = f1;
    wedge_neighbor_ = w1;
    source_dist_ = dist(g.position(ses.source), g.position(ses.dest));
}

NodeId launch_hop(const GeometricGraph& g, const FaceDecomposition& fd, NodeId n, NodeId m,
                  FaceId f, Hand hand) {
    if (fd.face_of({n, m}) == f)
        return hand == Hand::R ? m : g.ccw_neighbor_after(n, m);
    if (fd.face_of({m, n}) == f)
        return hand == Hand::L ? m : g.cw_neighbor_after(n, m);
    throw ProtocolError("launch_hop: edge does not border the target face");
}

NodeId forward_hop(const GeometricGraph& g, NodeId n, NodeId from, Hand hand) {
    return hand == Hand::R ? g.cw_neighbor_after(n, from) : g.ccw_neighbor_after(n, from);
}

void DirectoryStore::clear_all() {
    for (auto& m : entries_) m.clear();
    for (auto& p : preferred_) p.clear();
}

bool DirectoryStore::empty() const {
    for (const auto& m : entries_)
        if (!m.empty()) return false;
    for (const auto& p : preferred_)
        if (!p.empty()) return false;
    return true;
}

size_t DirectoryStore::established_count() const {
    size_t k = 0;
    for (const auto& p : preferred_) k += p.size();
    return k;
}

std::string DirectoryStore::snapshot() const {
    std::ostringstream os;
    for (size_t n = 0; n < entries_.size(); ++n) {
        for (const auto& [face, rec] : entries_[n])
            os << n << " e " << face.canon.from << "," << face.canon.to << " "
               << hand_char(rec.trigger_hand) << " " << rec.trigger_from << " "
               << rec.trigger_face.canon.from << "," << rec.trigger_face.canon.to << " "
               << rec.spawn_other << "\n";
        for (const auto& [key, rec] : preferred_[n])
            os << n << " p " << key.first << " " << key.second.canon.from << ","
               << key.second.canon.to << " " << hand_char(rec.hand) << " "
               << rec.face.canon.from << "," << rec.face.canon.to << " " << rec.next << "\n";
    }
    return os.str();
}

namespace {

// Per-run protocol state of one node. Forward marks are kept per arrival
// dart: a face boundary may pass the same node twice (spurs, cut vertices),
// but each boundary position is walked at most once per hand.
struct NodeRunState {
    std::set<std::tuple<FaceId, int, NodeId>> forwarded;  // (face, hand, from)
    std::set<int> consumed_edges;  // crossing-edge ordinals already acted on
    std::set<FaceId> spawned_into;
    // Faces whose sweep already passed this node. Once visited in a face, a
    // node never seeds a fresh pair into it: the new tokens would re-walk
    // territory the existing pair has covered.
    std::set<FaceId> visited_in;
};

struct TwoFaceRun {
    const GeometricGraph& g;
    const FaceDecomposition& fd;
    const SessionGeometry& geo;
    DirectoryStore& dir;
    TwoFaceOptions opts;
    TwoFaceResult result;
    std::vector<NodeRunState> nodes;

    TwoFaceRun(const GeometricGraph& gr, const FaceDecomposition& f, const SessionGeometry& ge,
               DirectoryStore& d, TwoFaceOptions o)
        : g(gr), fd(f), geo(ge), dir(d), opts(std::move(o)),
          nodes(static_cast<size_t>(gr.node_count())) {}

    Token base_token(FaceId face, double entry, Hand hand) const {
        Token t;
        t.kind = opts.kind;
        t.mode = TokenMode::FaceMode;
        t.hand = hand;
        t.source = geo.session().source;
        t.dest = geo.session().dest;
        t.face = face;
        t.entry_dist = entry;
        return t;
    }

    // Enqueues an L/R pair at n around `face`, entered via neighbor m.
    template <typename Enqueue>
    void spawn_pair(Enqueue&& enq, NodeId n, NodeId m, FaceId face, double entry,
                    const std::vector<NodeId>& path_so_far) {
        auto& fc = result.per_face[face];
        for (Hand hand : {Hand::L, Hand::R}) {
            Token t = base_token(face, entry, hand);
            t.path = path_so_far;
            const NodeId hop = launch_hop(g, fd, n, m, face, hand);
            t.path.push_back(hop);
            enq(hop, std::move(t));
            (hand == Hand::L ? fc.l_spawns : fc.r_spawns)++;
        }
        fc.pair_spawns++;
        result.total_pair_spawns++;
        result.entry_points.insert(n);
    }

    // Treats n as freshly visited in `face` at entry distance `entry`: spawns
    // into every unconsumed adjacent face whose crossing makes strict progress
    // toward the destination, then recurses into the spawned faces so a later
    // annihilation at this node cannot swallow the hand-off.
    template <typename Enqueue>
    void visit(Enqueue&& enq, NodeId n, FaceId face, double entry,
               const std::vector<NodeId>& path_so_far, Hand trigger_hand, NodeId trigger_from,
               FaceId trigger_face) {
        NodeRunState& st = nodes[static_cast<size_t>(n)];
        for (const CrossEdgeInfo& ce : geo.at(n)) {
            if (st.consumed_edges.count(ce.ord)) continue;
            FaceId target;
            if (ce.face_out == face)
                target = ce.face_in;
            else if (ce.face_in == face)
                target = ce.face_out;
            else
                continue;
            if (target == face) continue;  // bridge edge
            if (!opts.flood && !(ce.dist_to_d < entry)) continue;
            if (st.spawned_into.count(target)) continue;
            if (st.visited_in.count(target)) continue;

            st.consumed_edges.insert(ce.ord);
            st.spawned_into.insert(target);
            st.visited_in.insert(target);
            if (!opts.clear_directory) {
                EntryRecord rec;
                rec.into_face = target;
                rec.trigger_hand = trigger_hand;
                rec.trigger_from = trigger_from;
                rec.trigger_face = trigger_face;
                rec.spawn_other = ce.other;
                dir.record_entry(n, rec);
            }
            spawn_pair(enq, n, ce.other, target, ce.dist_to_d, path_so_far);
            visit(enq, n, target, ce.dist_to_d, path_so_far, trigger_hand, trigger_from,
                  trigger_face);
        }
    }

    void on_token(Simulation& sim, const QueuedToken& qt) {
        const NodeId n = qt.to;
        const Token& t = qt.token;

        if (opts.clear_directory) dir.clear_node(n);

        // A counter-token queued here and about to cross the edge this token
        // just crossed is a head-on meeting: both die. The reverse-dart
        // condition keeps tokens that merely pass a repeated boundary node
        // (cut vertex) from eating each other mid-face.
        auto matched = sim.queue(n).take_first([&](const QueuedToken& x) {
            return x.token.matches_pair(t) && x.to == qt.from;
        });
        if (matched) {
            auto& fc = result.per_face[t.face];
            fc.annihilations++;
            result.total_annihilations++;
            result.annihilation_sites.insert(n);
            nodes[static_cast<size_t>(n)].visited_in.insert(t.face);
            sim.mark_annihilated();
            return;
        }

        const bool is_dest = n == t.dest;
        if (is_dest) sim.record_delivery(t);

        // This node is now visited in the arriving token's face; it must not
        // seed a fresh pair into it later (or during the cascade below).
        nodes[static_cast<size_t>(n)].visited_in.insert(t.face);

        if (!is_dest) {
            auto enq = [&sim](NodeId to, Token tok) { sim.send(to, std::move(tok)); };
            visit(enq, n, t.face, t.entry_dist, t.path, t.hand, qt.from, t.face);
        }

        // Forward along the face; each boundary position is walked at most
        // once per hand.
        const NodeId next = forward_hop(g, n, qt.from, t.hand);
        NodeRunState& st = nodes[static_cast<size_t>(n)];
        st.visited_in.insert(t.face);
        if (!st.forwarded.insert({t.face, t.hand == Hand::L ? 0 : 1, qt.from}).second)
            result.lemma_violations++;
        result.per_face[t.face].forwards++;
        Token fwd = t;
        fwd.path.push_back(next);
        sim.send(next, fwd);
    }
};

}  // namespace

TwoFaceResult route_2face(const GeometricGraph& g, const FaceDecomposition& fd, Session ses,
                          Scheduler& sched, DirectoryStore& dir, TwoFaceOptions opts) {
    SessionGeometry geo(g, fd, ses);
    auto run = std::make_shared<TwoFaceRun>(g, fd, geo, dir, opts);

    Simulation sim(g.node_count(),
                   [run](Simulation& s, const QueuedToken& qt) { run->on_token(s, qt); });
    if (opts.trace) sim.set_trace(opts.trace);

    // The source is the entry point of the first face crossing the (s,d) line.
    if (opts.clear_directory) dir.clear_node(ses.source);
    {
        auto enq = [&sim, &ses](NodeId to, Token tok) { sim.seed(ses.source, to, std::move(tok)); };
        std::vector<NodeId> path{ses.source};
        run->spawn_pair(enq, ses.source, geo.wedge_neighbor(), geo.first_face(),
                        geo.source_dist(), path);
        run->nodes[static_cast<size_t>(ses.source)].spawned_into.insert(geo.first_face());
        run->nodes[static_cast<size_t>(ses.source)].visited_in.insert(geo.first_face());
        run->visit(enq, ses.source, geo.first_face(), geo.source_dist(), path, Hand::L,
                   kInvalidNode, geo.first_face());
    }

    const std::uint64_t base = 50 * std::max<std::uint64_t>(g.edge_count(), 1);
    auto budget = [&run, base] {
        return base * (static_cast<std::uint64_t>(run->result.total_pair_spawns) + 1);
    };
    run->result.stats = sim.run(sched, budget);

    const DeliveryRecord* first = run->result.stats.first_delivery();
    if (first) {
        run->result.delivered = true;
        run->result.delivered_path = first->token.path;
        run->result.latency = first->causal_depth;
        run->result.delivered_token = first->token;
    }
    return std::move(run->result);
}

namespace {

// Shared walking state for the single-direction traversals.
struct FaceWalk {
    const GeometricGraph& g;
    const FaceDecomposition& fd;
    const SessionGeometry& geo;
    Hand hand;
    WalkResult res;
    std::uint64_t budget;

    FaceWalk(const GeometricGraph& gr, const FaceDecomposition& f, const SessionGeometry& ge,
             Hand h)
        : g(gr), fd(f), geo(ge), hand(h) {
        const auto v = static_cast<std::uint64_t>(g.node_count());
        budget = std::max<std::uint64_t>(50 * g.edge_count(), 5 * v * v);
    }

    bool hop(NodeId next) {
        res.path.push_back(next);
        ++res.messages;
        return res.messages < budget;
    }
};

// Best segment crossing at n that leads from `face` toward the destination
// side, strictly closer to d. Switching is only valid from the near side of a
// crossing; hopping to the s-side face can strand the walk in a pocket. When
// several qualify, the one closest to d wins (mirror-invariant tie order).
const CrossEdgeInfo* next_face_edge(const SessionGeometry& geo, NodeId n, FaceId face,
                                    double entry) {
    const CrossEdgeInfo* best = nullptr;
    for (const CrossEdgeInfo& ce : geo.at(n)) {
        if (!ce.on_segment) continue;
        if (!(ce.dist_to_d < entry)) continue;
        if (ce.near_side != face || ce.far_side == face) continue;
        if (!best || ce.dist_to_d < best->dist_to_d ||
            (ce.dist_to_d == best->dist_to_d && ce.other < best->other))
            best = &ce;
    }
    return best;
}

}  // namespace

WalkResult route_face2(const GeometricGraph& g, const FaceDecomposition& fd, Session ses,
                       Hand hand) {
    SessionGeometry geo(g, fd, ses);
    FaceWalk w(g, fd, geo, hand);

    FaceId face = geo.first_face();
    double entry = geo.source_dist();
    NodeId cur = ses.source;
    NodeId prev = kInvalidNode;
    w.res.path.push_back(cur);
    NodeId next = launch_hop(g, fd, cur, geo.wedge_neighbor(), face, hand);

    for (;;) {
        prev = cur;
        cur = next;
        if (!w.hop(cur)) {
            w.res.budget_exceeded = true;
            return w.res;
        }
        if (cur == ses.dest) {
            w.res.delivered = true;
            return w.res;
        }
        // Switch as soon as a strictly closer crossing of the segment shows up.
        bool launched = false;
        for (;;) {
            const CrossEdgeInfo* ce = next_face_edge(geo, cur, face, entry);
            if (!ce) break;
            face = ce->far_side;
            entry = ce->dist_to_d;
            next = launch_hop(g, fd, cur, ce->other, face, hand);
            ++w.res.face_switches;
            launched = true;
        }
        if (!launched) next = forward_hop(g, cur, prev, hand);
    }
}

WalkResult route_face1(const GeometricGraph& g, const FaceDecomposition& fd, Session ses,
                       Hand hand) {
    SessionGeometry geo(g, fd, ses);
    FaceWalk w(g, fd, geo, hand);

    FaceId face = geo.first_face();
    double entry = geo.source_dist();
    NodeId anchor = ses.source;                // where the scout of this face starts
    NodeId anchor_via = geo.wedge_neighbor();  // launch edge at the anchor
    w.res.path.push_back(anchor);

    for (;;) {
        // Scout: go around the entire face, remembering the best crossing and
        // the entry point it was seen at. Ties keep the first encountered.
        const CrossEdgeInfo* best = nullptr;
        NodeId best_at = kInvalidNode;
        NodeId cur = anchor;
        NodeId next = launch_hop(g, fd, cur, anchor_via, face, hand);
        const Dart start_dart{cur, next};
        for (;;) {
            const NodeId from = cur;
            cur = next;
            if (!w.hop(cur)) {
                w.res.budget_exceeded = true;
                return w.res;
            }
            if (cur == ses.dest) {
                w.res.delivered = true;
                return w.res;
            }
            for (const CrossEdgeInfo& ce : geo.at(cur)) {
                if (!ce.on_segment) continue;
                if (!(ce.dist_to_d < entry)) continue;
                if (ce.near_side != face || ce.far_side == face) continue;
                if (!best || ce.dist_to_d < best->dist_to_d) {
                    best = &ce;
                    best_at = cur;
                }
            }
            next = forward_hop(g, cur, from, hand);
            if (Dart{cur, next} == start_dart) break;  // full circumnavigation
        }
        if (!best)
            throw ProtocolError("route_face1: face has no qualifying crossing and no destination");

        // Reposition: walk the face again up to the chosen entry point.
        if (cur != best_at) {
            next = launch_hop(g, fd, cur, anchor_via, face, hand);
            std::uint64_t guard = 0;
            while (cur != best_at) {
                const NodeId from = cur;
                cur = next;
                if (!w.hop(cur)) {
                    w.res.budget_exceeded = true;
                    return w.res;
                }
                next = forward_hop(g, cur, from, hand);
                if (++guard > 4 * g.edge_count())
                    throw ProtocolError("route_face1: reposition walk missed the entry point");
            }
        }
        // Switch into the next face there.
        face = best->far_side;
        entry = best->dist_to_d;
        anchor = cur;
        anchor_via = best->other;
        ++w.res.face_switches;
    }
}

}  // namespace facewalk
