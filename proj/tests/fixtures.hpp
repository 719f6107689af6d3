#pragma once

// Hand-built topologies shared by the unit and acceptance suites.

#include <map>
#include <string>
#include <vector>

#include "facewalk/faces.hpp"

namespace facewalk::fixtures {

struct NamedGraph {
    GeometricGraph graph;
    std::map<std::string, NodeId> id;
    NodeId operator[](const std::string& name) const { return id.at(name); }
};

// Two adjacent faces with two entry points, a worked end-to-end example of
// bi-directional traversal. The source face F1 is the big upper region
// (s, a, b, b2, c, h, g, f, i, p1, pl); the target face F2 is the pocket
// below the shared chain c-h-g-f-i, bounded by the floor c-e-d-k-q1-q2-q3-i.
// The s->d segment crosses edge (c,h); the extended line exits the pocket
// through (f,i), so c and i both act as entry points into F2. The pendant u
// off node i sits inside F1 and only delays the F1 walkers. Under FIFO
// scheduling the three token pairs die at g (F1 pair), h (chain pair) and
// k (floor pair), and the first delivery reaches d through c, e.
inline NamedGraph worked_example() {
    NamedGraph fx;
    std::vector<Point> pos;
    std::vector<std::pair<NodeId, NodeId>> edges;
    auto add = [&](const std::string& name, double x, double y) {
        fx.id[name] = static_cast<NodeId>(pos.size());
        pos.emplace_back(x, y);
    };
    auto link = [&](const std::string& a, const std::string& b) {
        edges.emplace_back(fx.id.at(a), fx.id.at(b));
    };

    add("s", 0.0, 3.0);
    add("a", -1.002449, 2.5);
    add("b", -1.425, 2.0);
    add("b2", -1.027451, 1.5);
    add("c", -0.3, 1.0);
    add("h", 0.8, 1.0);
    add("g", 1.5, 0.2);
    add("f", 1.4, -1.6);
    add("i", -0.4, -1.9);
    add("p1", 3.142336, -2.0);
    add("pl", 2.8, -30.0);
    add("u", 0.136, -2.35);
    add("e", -0.75, 0.2);
    add("d", 0.0, -0.6);
    add("k", -0.55, -1.05);
    add("q1", -0.905698, -1.2625);
    add("q2", -1.075, -1.475);
    add("q3", -0.980699, -1.6875);

    // upper face rim
    link("s", "a");
    link("a", "b");
    link("b", "b2");
    link("b2", "c");
    // shared chain between the two faces
    link("c", "h");
    link("h", "g");
    link("g", "f");
    link("f", "i");
    // right rim back to the source
    link("s", "p1");
    link("p1", "pl");
    link("pl", "i");
    // pendant spur inside the upper face
    link("i", "u");
    // pocket floor
    link("c", "e");
    link("e", "d");
    link("d", "k");
    link("k", "q1");
    link("q1", "q2");
    link("q2", "q3");
    link("q3", "i");

    fx.graph = GeometricGraph::from_edges(std::move(pos), edges);
    fx.graph.planar = true;
    return fx;
}

// Unit square, nodes counter-clockwise from the origin.
inline GeometricGraph square() {
    return GeometricGraph::from_edges({{0, 0}, {1, 0}, {1, 1}, {0, 1}},
                                      {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

// A corridor of two square faces side by side.
inline GeometricGraph two_square_corridor() {
    // 0-1-2 bottom row, 3-4-5 top row
    return GeometricGraph::from_edges(
        {{0, 0}, {1, 0.02}, {2, 0}, {0, 1}, {1, 0.98}, {2, 1}},
        {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 3}, {1, 4}, {2, 5}});
}

// Greedy trap: a "U" shaped wall between the source side and the destination.
// Greedy reaches the dead-end tip m and must recover by face traversal.
inline NamedGraph greedy_trap() {
    NamedGraph fx;
    std::vector<Point> pos;
    std::vector<std::pair<NodeId, NodeId>> edges;
    auto add = [&](const std::string& name, double x, double y) {
        fx.id[name] = static_cast<NodeId>(pos.size());
        pos.emplace_back(x, y);
    };
    auto link = [&](const std::string& a, const std::string& b) {
        edges.emplace_back(fx.id.at(a), fx.id.at(b));
    };
    add("s", -4.0, 0.1);
    add("m", -1.0, 0.0);   // local minimum at the U's inner tip
    add("w1", -1.2, 1.2);  // upper arm
    add("w2", -1.2, -1.2); // lower arm
    add("t1", 0.2, 2.2);   // arm tips, farther from d than m
    add("t2", 0.2, -2.2);
    add("r1", 1.8, 1.6);   // outside the U, closer to d
    add("r2", 1.8, -1.6);
    add("d", 3.0, 0.0);

    link("s", "m");
    link("s", "w1");
    link("s", "w2");
    link("m", "w1");
    link("m", "w2");
    link("w1", "t1");
    link("w2", "t2");
    link("t1", "r1");
    link("t2", "r2");
    link("r1", "d");
    link("r2", "d");
    link("r1", "r2");

    fx.graph = GeometricGraph::from_edges(std::move(pos), edges);
    fx.graph.planar = true;
    return fx;
}

// Compass trap: at u the angle to d is minimized by v and vice versa, so the
// message ping-pongs forever between them.
inline NamedGraph compass_trap() {
    NamedGraph fx;
    std::vector<Point> pos;
    std::vector<std::pair<NodeId, NodeId>> edges;
    auto add = [&](const std::string& name, double x, double y) {
        fx.id[name] = static_cast<NodeId>(pos.size());
        pos.emplace_back(x, y);
    };
    auto link = [&](const std::string& a, const std::string& b) {
        edges.emplace_back(fx.id.at(a), fx.id.at(b));
    };
    add("d", 0.0, 0.0);
    add("p", -2.0, 2.0);
    add("u", -1.0, 0.02);
    add("v", 1.0, -0.02);
    add("q", 2.0, -2.0);
    link("u", "v");
    link("u", "p");
    link("v", "q");
    link("p", "d");
    fx.graph = GeometricGraph::from_edges(std::move(pos), edges);
    return fx;
}

}  // namespace facewalk::fixtures
