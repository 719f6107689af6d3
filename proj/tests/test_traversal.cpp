#include <doctest.h>

#include <algorithm>

#include "facewalk/routing.hpp"
#include "fixtures.hpp"

using namespace facewalk;

namespace {

TwoFaceResult run_2face(const GeometricGraph& g, const FaceDecomposition& fd, NodeId s, NodeId d,
                        Scheduler& sched) {
    DirectoryStore dir(g.node_count());
    return route_2face(g, fd, Session(s, d), sched, dir);
}

void check_pair_accounting(const TwoFaceResult& r) {
    int l = 0, rr = 0, a = 0;
    for (const auto& [face, fc] : r.per_face) {
        CHECK(fc.l_spawns == fc.r_spawns);
        CHECK(fc.l_spawns == fc.annihilations);
        l += fc.l_spawns;
        rr += fc.r_spawns;
        a += fc.annihilations;
    }
    CHECK(l == rr);
    CHECK(l == a);
    CHECK(a == r.total_annihilations);
    CHECK(r.lemma_violations == 0);
}

}  // namespace

TEST_CASE("launch and forward hops agree with the rotation system") {
    const auto g = fixtures::square();
    const auto fd = decompose_faces(g);
    const FaceId inner = fd.face_of({0, 1});
    // square orbit 0->1->2->3 is the internal face
    CHECK(fd.face_of({1, 2}) == inner);
    CHECK(inner != fd.external());
    // right-hand token launched at 0 into the inner face via neighbor 1
    CHECK(launch_hop(g, fd, 0, 1, inner, Hand::R) == 1);
    // the left-hand twin starts against the orbit
    CHECK(launch_hop(g, fd, 0, 1, inner, Hand::L) == 3);
    // forwarding continues the walk
    CHECK(forward_hop(g, 1, 0, Hand::R) == 2);
    CHECK(forward_hop(g, 3, 0, Hand::L) == 2);
}

TEST_CASE("2face on a square delivers to the adjacent corner") {
    const auto g = fixtures::square();
    const auto fd = decompose_faces(g);
    FifoScheduler fifo;
    const auto r = run_2face(g, fd, 0, 1, fifo);
    REQUIRE(r.delivered);
    CHECK(r.delivered_path == std::vector<NodeId>{0, 1});
    CHECK(r.latency == 1);
    CHECK(r.stats.total_messages <= 2 * g.edge_count());
    check_pair_accounting(r);
    CHECK(r.total_pair_spawns == 1);  // only the source face
}

TEST_CASE("2face worked example under FIFO") {
    const auto fx = fixtures::worked_example();
    const auto fd = decompose_faces(fx.graph);
    const NodeId s = fx["s"], d = fx["d"];

    // the segment s-d crosses only the chain edge (c,h), entered at c's side
    const auto xs = crossing_edges(fx.graph, fd, s, d);
    REQUIRE(xs.size() == 1);
    CHECK(xs[0].designee == fx["c"]);
    CHECK(((xs[0].a == fx["c"] && xs[0].b == fx["h"]) ||
           (xs[0].a == fx["h"] && xs[0].b == fx["c"])));

    FifoScheduler fifo;
    DirectoryStore dir(fx.graph.node_count());
    const auto r = route_2face(fx.graph, fd, Session(s, d), fifo, dir);

    REQUIRE(r.delivered);
    // delivery comes through the pocket: ... c, e, d
    REQUIRE(r.delivered_path.size() >= 3);
    CHECK(r.delivered_path[r.delivered_path.size() - 3] == fx["c"]);
    CHECK(r.delivered_path[r.delivered_path.size() - 2] == fx["e"]);
    CHECK(r.delivered_path.back() == d);

    // the source and both pocket entry points spawned pairs
    CHECK(r.entry_points == std::set<NodeId>{s, fx["c"], fx["i"]});
    // two pairs traverse the pocket, one the source face; they die at g, h, k
    CHECK(r.total_pair_spawns == 3);
    CHECK(r.total_annihilations == 3);
    CHECK(r.annihilation_sites == std::set<NodeId>{fx["g"], fx["h"], fx["k"]});
    check_pair_accounting(r);

    // pocket face: one pair from each entry point
    const FaceId pocket = fd.face_of({fx["c"], fx["e"]});
    CHECK(r.per_face.at(pocket).pair_spawns == 2);
}

TEST_CASE("2face delivers and respects bounds on random graphs") {
    std::uint64_t seed = 4000;
    int done = 0;
    std::mt19937_64 rng(5);
    while (done < 8) {
        const auto g0 = generate_unit_disk(done % 2 ? 60 : 40, 2.0, done % 3 ? 0.6 : 0.9, seed++);
        if (!g0) continue;
        ++done;
        const auto g = gabriel_planarize(*g0);
        const auto fd = decompose_faces(g);
        std::uniform_int_distribution<NodeId> pick(0, g.node_count() - 1);
        for (int t = 0; t < 10; ++t) {
            const NodeId s = pick(rng), d = pick(rng);
            if (s == d) continue;
            FifoScheduler fifo;
            const auto r = run_2face(g, fd, s, d, fifo);
            REQUIRE(r.delivered);
            CHECK(!r.stats.budget_exceeded);
            check_pair_accounting(r);
            CHECK(r.stats.total_messages <= 4 * g.edge_count());
            CHECK(r.latency <= 4 * static_cast<std::uint32_t>(g.node_count()));
            CHECK(static_cast<size_t>(r.delivered_path.size()) - 1 >=
                  static_cast<size_t>(shortest_path_hops(g, s, d)));
        }
    }
}

TEST_CASE("2face outcome is scheduler independent") {
    const auto g0 = generate_unit_disk(50, 2.0, 0.6, 4242);
    REQUIRE(g0.has_value());
    const auto g = gabriel_planarize(*g0);
    const auto fd = decompose_faces(g);
    FifoScheduler fifo;
    const auto base = run_2face(g, fd, 3, 41, fifo);
    REQUIRE(base.delivered);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        RandomScheduler sched(seed);
        const auto r = run_2face(g, fd, 3, 41, sched);
        CHECK(r.delivered);
        CHECK(r.stats.total_messages <= 4 * g.edge_count());
        check_pair_accounting(r);
    }
}

TEST_CASE("face2 hand partition on a single square face") {
    const auto g = fixtures::square();
    const auto fd = decompose_faces(g);
    const auto l = route_face2(g, fd, Session(0, 2), Hand::L);
    const auto r = route_face2(g, fd, Session(0, 2), Hand::R);
    REQUIRE(l.delivered);
    REQUIRE(r.delivered);
    // the two directions partition the 4-cycle between s and d
    CHECK(l.hops() + r.hops() == 4);

    // adjacent destination along the hand direction is one hop
    const auto one = route_face2(g, fd, Session(0, 1), Hand::R);
    const auto other = route_face2(g, fd, Session(0, 1), Hand::L);
    REQUIRE(one.delivered);
    REQUIRE(other.delivered);
    CHECK(std::min(one.hops(), other.hops()) == 1);
    CHECK(one.hops() + other.hops() == 4);
}

TEST_CASE("face2 delivers on random graphs with both hands") {
    std::uint64_t seed = 8000;
    int done = 0;
    std::mt19937_64 rng(9);
    while (done < 6) {
        const auto g0 = generate_unit_disk(40, 2.0, 0.55, seed++);
        if (!g0) continue;
        ++done;
        const auto g = gabriel_planarize(*g0);
        const auto fd = decompose_faces(g);
        std::uniform_int_distribution<NodeId> pick(0, g.node_count() - 1);
        for (int t = 0; t < 10; ++t) {
            const NodeId s = pick(rng), d = pick(rng);
            if (s == d) continue;
            for (Hand hand : {Hand::L, Hand::R}) {
                const auto w = route_face2(g, fd, Session(s, d), hand);
                CHECK(w.delivered);
                CHECK(!w.budget_exceeded);
            }
        }
    }
}

TEST_CASE("face2 hand symmetry under mirroring") {
    const auto g0 = generate_unit_disk(40, 2.0, 0.7, 31337);
    REQUIRE(g0.has_value());
    const auto g = gabriel_planarize(*g0);
    // mirror the plane: negate y
    std::vector<Point> mpos;
    for (NodeId n = 0; n < g.node_count(); ++n)
        mpos.emplace_back(g.position(n).x, -g.position(n).y);
    GeometricGraph m = GeometricGraph::from_edges(std::move(mpos), g.edges());
    m.planar = true;
    const auto fd = decompose_faces(g);
    const auto mfd = decompose_faces(m);

    std::mt19937_64 rng(17);
    std::uniform_int_distribution<NodeId> pick(0, g.node_count() - 1);
    for (int t = 0; t < 25; ++t) {
        const NodeId s = pick(rng), d = pick(rng);
        if (s == d) continue;
        const auto orig = route_face2(g, fd, Session(s, d), Hand::R);
        const auto mirr = route_face2(m, mfd, Session(s, d), Hand::L);
        REQUIRE(orig.delivered);
        REQUIRE(mirr.delivered);
        CHECK(orig.path == mirr.path);
    }
}

TEST_CASE("face1 circumnavigates and switches at the best crossing") {
    // single face holding both endpoints: delivery during the scout lap
    const auto sq = fixtures::square();
    const auto sqfd = decompose_faces(sq);
    const auto one = route_face1(sq, sqfd, Session(0, 2), Hand::R);
    REQUIRE(one.delivered);
    CHECK(one.hops() <= 4);
    CHECK(one.face_switches == 0);

    // two-face corridor: within the 3|E| bound
    const auto corr = fixtures::two_square_corridor();
    const auto cfd = decompose_faces(corr);
    const auto w = route_face1(corr, cfd, Session(0, 2), Hand::R);
    REQUIRE(w.delivered);
    CHECK(w.messages <= 3 * corr.edge_count());
}

TEST_CASE("face1 delivers on random graphs, usually costlier than face2") {
    std::uint64_t seed = 12000;
    int done = 0;
    std::mt19937_64 rng(23);
    std::uint64_t f1_total = 0, f2_total = 0;
    while (done < 6) {
        const auto g0 = generate_unit_disk(40, 2.0, 0.55, seed++);
        if (!g0) continue;
        ++done;
        const auto g = gabriel_planarize(*g0);
        const auto fd = decompose_faces(g);
        std::uniform_int_distribution<NodeId> pick(0, g.node_count() - 1);
        for (int t = 0; t < 10; ++t) {
            const NodeId s = pick(rng), d = pick(rng);
            if (s == d) continue;
            const auto f1 = route_face1(g, fd, Session(s, d), Hand::R);
            const auto f2 = route_face2(g, fd, Session(s, d), Hand::R);
            REQUIRE(f1.delivered);
            REQUIRE(f2.delivered);
            f1_total += f1.messages;
            f2_total += f2.messages;
        }
    }
    CHECK(f1_total >= f2_total);  // scouting full faces costs messages
}

TEST_CASE("degree-1 source sends both tokens to its only neighbor") {
    // pendant source hanging off a square
    const auto g = GeometricGraph::from_edges(
        {{-1, 0.1}, {0, 0}, {1, 0}, {1, 1}, {0, 1}},
        {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 1}});
    auto gp = g;
    gp.planar = true;
    const auto fd = decompose_faces(gp);
    FifoScheduler fifo;
    const auto r = run_2face(gp, fd, 0, 3, fifo);
    REQUIRE(r.delivered);
    check_pair_accounting(r);
    CHECK(r.delivered_path.front() == 0);
    CHECK(r.delivered_path[1] == 1);  // only neighbor
}
