#include "facewalk/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace facewalk {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string graph_to_json(const GeometricGraph& g) {
    ordered_json j;
    j["area_side"] = g.area_side;
    j["u"] = g.radius;
    j["seed"] = g.seed;
    j["nodes"] = ordered_json::array();
    for (NodeId n = 0; n < g.node_count(); ++n) {
        ordered_json node;
        node["id"] = n;
        node["x"] = g.position(n).x;
        node["y"] = g.position(n).y;
        j["nodes"].push_back(node);
    }
    j["edges"] = ordered_json::array();
    for (auto [a, b] : g.edges()) j["edges"].push_back(ordered_json::array({a, b}));
    j["planar"] = g.planar;
    return j.dump(2) + "\n";
}

GeometricGraph graph_from_json(const std::string& text) {
    const json j = json::parse(text);
    const auto& nodes = j.at("nodes");
    std::vector<Point> pos(nodes.size());
    for (const auto& n : nodes) {
        const auto id = n.at("id").get<size_t>();
        if (id >= pos.size()) throw std::runtime_error("graph_from_json: node ids must be dense");
        pos[id] = Point(n.at("x").get<double>(), n.at("y").get<double>());
    }
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (const auto& e : j.at("edges"))
        edges.emplace_back(e.at(0).get<NodeId>(), e.at(1).get<NodeId>());
    GeometricGraph g = GeometricGraph::from_edges(std::move(pos), edges);
    g.area_side = j.value("area_side", 0.0);
    g.radius = j.value("u", 0.0);
    g.seed = j.value("seed", 0ULL);
    g.planar = j.value("planar", false);
    return g;
}

void save_graph(const GeometricGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_graph: cannot write " + path);
    out << graph_to_json(g);
}

GeometricGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_graph: cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return graph_from_json(ss.str());
}

std::string trace_event_to_json(const TraceEvent& ev) {
    ordered_json j;
    j["step"] = ev.step;
    j["from"] = ev.from;
    j["to"] = ev.to;
    j["hand"] = std::string(1, hand_char(ev.hand));
    j["face"] = ordered_json::array({ev.face.canon.from, ev.face.canon.to});
    j["causal_depth"] = ev.causal_depth;
    j["annihilated"] = ev.annihilated;
    return j.dump();
}

}  // namespace facewalk
