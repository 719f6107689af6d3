// Acceptance suite: one test per release criterion, each printing a
// PASS/FAIL line. Run via ctest or directly.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <set>

#include "facewalk/graph_io.hpp"
#include "facewalk/harness.hpp"
#include "fixtures.hpp"

using namespace facewalk;

namespace {

struct Instance {
    GeometricGraph full;
    GeometricGraph planar;
    FaceDecomposition fd;
    std::vector<Session> pairs;
};

// Deterministic sweep shared by the criteria: desk-scale cells, ten pairs per
// graph. Cells that cannot produce connected graphs are skipped.
const std::vector<Instance>& sweep() {
    static const std::vector<Instance> instances = [] {
        std::vector<Instance> out;
        const std::vector<int> nodes = {40, 80};
        const std::vector<double> us = {0.9, 0.5, 0.3};
        const int graphs_per_cell = 12;
        const int pairs_per_graph = 10;
        for (size_t ni = 0; ni < nodes.size(); ++ni) {
            for (size_t ui = 0; ui < us.size(); ++ui) {
                for (int gi = 0; gi < graphs_per_cell; ++gi) {
                    auto g = generate_connected(nodes[ni], 2.0, us[ui],
                                                derive_seed(2026, ni, ui, gi), 500);
                    if (!g) break;  // cell generation exhausted
                    Instance inst;
                    inst.full = std::move(*g);
                    inst.planar = gabriel_planarize(inst.full);
                    inst.fd = decompose_faces(inst.planar);
                    std::mt19937_64 rng(derive_seed(4052, ni, ui, gi));
                    while (inst.pairs.size() < pairs_per_graph) {
                        auto ses = sample_pair(inst.full, inst.planar, rng);
                        if (!ses) break;
                        inst.pairs.push_back(*ses);
                    }
                    out.push_back(std::move(inst));
                }
            }
        }
        return out;
    }();
    return instances;
}

void report(const char* name, bool ok) {
    std::printf("[%s] criterion %s\n", ok ? "PASS" : "FAIL", name);
}

}  // namespace

TEST_CASE("criterion 1: delivery guarantee") {
    const auto& sw = sweep();
    REQUIRE(sw.size() >= 60);
    std::size_t runs = 0, delivered = 0;
    for (const auto& inst : sw) {
        for (const auto& ses : inst.pairs) {
            FifoScheduler fifo;
            DirectoryStore dir(inst.planar.node_count());
            const auto tf = route_2face(inst.planar, inst.fd, ses, fifo, dir);
            FifoScheduler fifo2;
            const auto g2 = route_g2fg(inst.full, inst.planar, inst.fd, ses, fifo2);
            const auto gf = route_gfg(inst.full, inst.planar, inst.fd, ses, Hand::R);
            const auto f1 = route_face1(inst.planar, inst.fd, ses, Hand::R);
            const auto f2 = route_face2(inst.planar, inst.fd, ses, Hand::R);
            runs += 5;
            delivered += tf.delivered + g2.delivered + gf.walk.delivered + f1.delivered +
                         f2.delivered;
        }
    }
    const bool ok = runs >= 3000 && delivered == runs;
    std::printf("  2face/g2fg/gfg/face1/face2 delivered %zu/%zu over %zu graphs\n", delivered,
                runs, sw.size());
    report("1 delivery guarantee", ok);
    CHECK(ok);
}

TEST_CASE("criterion 2: per-face accounting") {
    bool ok = true;
    for (const auto& inst : sweep()) {
        for (const auto& ses : inst.pairs) {
            FifoScheduler fifo;
            DirectoryStore dir(inst.planar.node_count());
            const auto r = route_2face(inst.planar, inst.fd, ses, fifo, dir);
            if (r.lemma_violations != 0) ok = false;  // a (face, hand) passed a node twice
            int spawns_l = 0, spawns_r = 0, deaths = 0;
            for (const auto& [face, fc] : r.per_face) {
                spawns_l += fc.l_spawns;
                spawns_r += fc.r_spawns;
                deaths += fc.annihilations;
                if (fc.l_spawns != fc.r_spawns || fc.l_spawns != fc.annihilations) ok = false;
            }
            if (spawns_l != spawns_r || spawns_l != deaths) ok = false;
        }
    }
    report("2 forwarding and pair accounting", ok);
    CHECK(ok);
}

TEST_CASE("criterion 3: message and latency bounds") {
    bool ok = true;
    for (const auto& inst : sweep()) {
        for (const auto& ses : inst.pairs) {
            FifoScheduler fifo;
            DirectoryStore dir(inst.planar.node_count());
            const auto r = route_2face(inst.planar, inst.fd, ses, fifo, dir);
            if (r.stats.total_messages > 4 * inst.planar.edge_count()) ok = false;
            if (!r.delivered ||
                r.latency > 4 * static_cast<std::uint32_t>(inst.planar.node_count()))
                ok = false;
        }
    }
    report("3 messages <= 4|E|, latency <= 4|V|", ok);
    CHECK(ok);
}

TEST_CASE("criterion 4: improvement bands") {
    double face_ratio = 0;
    int face_n = 0;
    double greedy_ratio = 0;
    int greedy_n = 0;
    for (const auto& inst : sweep()) {
        for (const auto& ses : inst.pairs) {
            FifoScheduler fifo;
            DirectoryStore dir(inst.planar.node_count());
            const auto tf = route_2face(inst.planar, inst.fd, ses, fifo, dir);
            const auto tb = run_traceback(inst.planar, inst.fd, tf, dir, ses);
            const auto f2 = route_face2(inst.planar, inst.fd, ses, Hand::R);
            if (tf.delivered && f2.delivered && tb.hops() > 0) {
                face_ratio += static_cast<double>(f2.hops()) / static_cast<double>(tb.hops());
                ++face_n;
            }
            // greedy variants compared only where a local minimum engaged
            // face traversal; otherwise both run the identical greedy path
            if (!route_greedy(inst.full, ses).delivered) {
                const auto gf = route_gfg(inst.full, inst.planar, inst.fd, ses, Hand::R);
                FifoScheduler fifo2;
                const auto g2 = route_g2fg(inst.full, inst.planar, inst.fd, ses, fifo2);
                if (gf.walk.delivered && g2.delivered && g2.preferred_hops() > 0) {
                    greedy_ratio += static_cast<double>(gf.walk.hops()) /
                                    static_cast<double>(g2.preferred_hops());
                    ++greedy_n;
                }
            }
        }
    }
    const double fr = face_ratio / face_n;
    const double gr = greedy_ratio / greedy_n;
    std::printf("  face2/2face preferred ratio %.3f (n=%d), gfg/g2fg %.3f (n=%d)\n", fr, face_n,
                gr, greedy_n);
    const bool ok = fr >= 1.5 && fr <= 4.0 && gr >= 1.5 && gr <= 4.0;
    report("4 improvement within [1.5, 4.0]", ok);
    CHECK(ok);
}

TEST_CASE("criterion 5: break-even band") {
    // break-even of the mean session per density cell, pooled
    struct Acc {
        double mb = 0, ms = 0, hs = 0, hp = 0;
        int n = 0;
    };
    std::map<std::pair<int, int>, Acc> cells;
    for (const auto& inst : sweep()) {
        for (const auto& ses : inst.pairs) {
            FifoScheduler fifo;
            DirectoryStore dir(inst.planar.node_count());
            const auto tf = route_2face(inst.planar, inst.fd, ses, fifo, dir);
            const auto tb = run_traceback(inst.planar, inst.fd, tf, dir, ses);
            const auto f2 = route_face2(inst.planar, inst.fd, ses, Hand::R);
            if (!tf.delivered || !f2.delivered) continue;
            auto& acc = cells[{inst.planar.node_count(),
                               static_cast<int>(inst.planar.radius * 10)}];
            acc.mb += static_cast<double>(tf.stats.total_messages + tb.messages);
            acc.ms += static_cast<double>(f2.messages);
            acc.hs += static_cast<double>(f2.hops());
            acc.hp += static_cast<double>(tb.hops());
            acc.n += 1;
        }
    }
    double pooled = 0;
    int defined = 0;
    for (auto& [key, acc] : cells) {
        const auto k = break_even(acc.mb / acc.n, acc.ms / acc.n, acc.hs / acc.n, acc.hp / acc.n);
        if (k) {
            std::printf("  cell n=%d u=%.1f: break-even k=%d\n", key.first, key.second / 10.0,
                        *k);
            pooled += *k;
            ++defined;
        }
    }
    const double mean = pooled / defined;
    std::printf("  pooled mean break-even %.2f over %d cells\n", mean, defined);
    const bool ok = defined > 0 && mean >= 1.5 && mean <= 6.0;
    report("5 break-even within [1.5, 6.0]", ok);
    CHECK(ok);
}

TEST_CASE("criterion 6: preferred path near-optimality") {
    double stretch = 0;
    int n = 0;
    bool pointwise = true;
    for (const auto& inst : sweep()) {
        for (const auto& ses : inst.pairs) {
            FifoScheduler fifo;
            DirectoryStore dir(inst.planar.node_count());
            const auto tf = route_2face(inst.planar, inst.fd, ses, fifo, dir);
            if (!tf.delivered) continue;
            const auto tb = run_traceback(inst.planar, inst.fd, tf, dir, ses);
            const int sp = shortest_path_hops(inst.planar, ses.source, ses.dest);
            if (sp <= 0) continue;
            const double ratio = static_cast<double>(tb.hops()) / sp;
            if (ratio < 1.0) pointwise = false;
            stretch += ratio;
            ++n;
        }
    }
    const double mean = stretch / n;
    std::printf("  mean preferred/shortest %.3f over %d runs\n", mean, n);
    const bool ok = pointwise && mean <= 2.0;
    report("6 preferred stretch >= 1 and pooled <= 2", ok);
    CHECK(ok);
}

TEST_CASE("criterion 7: session statelessness") {
    bool ok = true;
    int sessions = 0;
    for (const auto& inst : sweep()) {
        for (size_t pi = 0; pi < inst.pairs.size(); pi += 4) {  // subsample for runtime
            DirectoryStore dir(inst.planar.node_count());
            const std::string before = dir.snapshot();
            RandomScheduler sched(derive_seed(77, sessions));
            const auto ses = route_session(inst.planar, inst.fd, inst.pairs[pi], 4, sched, dir);
            ++sessions;
            if (!ses.directory_clean || dir.snapshot() != before) ok = false;
        }
    }
    std::printf("  %d sessions, directories byte-identical before/after\n", sessions);
    report("7 session statelessness", ok);
    CHECK(ok);
}

TEST_CASE("criterion 8: scheduler robustness") {
    const auto& sw = sweep();
    bool ok = true;
    int instances = 0;
    for (size_t k = 0; k < sw.size() && instances < 20; k += 3) {
        const auto& inst = sw[k];
        if (inst.pairs.empty()) continue;
        ++instances;
        const auto ses = inst.pairs.front();
        FifoScheduler fifo;
        DirectoryStore dir(inst.planar.node_count());
        const auto base = route_2face(inst.planar, inst.fd, ses, fifo, dir);
        if (!base.delivered || base.stats.total_messages > 4 * inst.planar.edge_count())
            ok = false;
        for (std::uint64_t seed = 1; seed <= 50; ++seed) {
            RandomScheduler sched(derive_seed(9000, k, seed));
            DirectoryStore d2(inst.planar.node_count());
            const auto r = route_2face(inst.planar, inst.fd, ses, sched, d2);
            if (!r.delivered || r.stats.total_messages > 4 * inst.planar.edge_count())
                ok = false;
        }
    }
    std::printf("  %d instances x (fifo + 50 random schedules)\n", instances);
    report("8 scheduler robustness", ok && instances == 20);
    CHECK(ok);
    CHECK(instances == 20);
}

TEST_CASE("criterion 9: byte-identical reproducibility") {
    const auto cfg = ExperimentConfig::desk(20260809);
    const auto r1 = run_experiment(cfg);
    const auto r2 = run_experiment(cfg);
    const bool ok = metrics_to_csv(r1.rows) == metrics_to_csv(r2.rows) &&
                    aggregates_to_csv(r1.aggregates) == aggregates_to_csv(r2.aggregates);
    std::printf("  %zu metric rows compared\n", r1.rows.size());
    report("9 reproducibility", ok);
    CHECK(ok);
}

TEST_CASE("criterion 10: worked example fidelity") {
    const auto fx = fixtures::worked_example();
    const auto fd = decompose_faces(fx.graph);
    FifoScheduler fifo;
    DirectoryStore dir(fx.graph.node_count());
    const auto r = route_2face(fx.graph, fd, Session(fx["s"], fx["d"]), fifo, dir);

    const bool delivered_via =
        r.delivered && r.delivered_path.size() >= 3 &&
        r.delivered_path[r.delivered_path.size() - 3] == fx["c"] &&
        r.delivered_path[r.delivered_path.size() - 2] == fx["e"] &&
        r.delivered_path.back() == fx["d"];
    const bool sites = r.annihilation_sites == std::set<NodeId>{fx["g"], fx["h"], fx["k"]};
    const bool entries = r.entry_points == std::set<NodeId>{fx["s"], fx["c"], fx["i"]};
    std::printf("  delivery via c,e,d: %d; annihilations at g,h,k: %d; entry points s,c,i: %d\n",
                delivered_via, sites, entries);
    report("10 worked example fidelity", delivered_via && sites && entries);
    CHECK(delivered_via);
    CHECK(sites);
    CHECK(entries);
}
