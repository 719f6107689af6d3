// Geometric routing simulator: graph generation, route execution, the
// experiment sweep, and figure export.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "facewalk/graph_io.hpp"
#include "facewalk/harness.hpp"

using namespace facewalk;
using nlohmann::json;

namespace {

int cmd_gen(int n, double u, double area, std::uint64_t seed, const std::string& out,
            bool planarize) {
    int rejections = 0;
    auto g = generate_connected(n, area, u, seed, 500, &rejections);
    if (!g) {
        std::cerr << "gen: no connected graph after 500 attempts (n=" << n << ", u=" << u
                  << ")\n";
        return 1;
    }
    GeometricGraph result = planarize ? gabriel_planarize(*g) : *g;
    save_graph(result, out);
    std::cout << "wrote " << out << " (nodes=" << result.node_count()
              << ", edges=" << result.edge_count() << ", rejected_seeds=" << rejections << ")\n";
    return 0;
}

int cmd_route(const std::string& graph_path, const std::string& alg, NodeId src, NodeId dst,
              std::uint64_t seed, int session_k, const std::string& trace_path) {
    if (is_reserved_algorithm(alg)) {
        std::cerr << "route: algorithm '" << alg
                  << "' names a traversal this toolkit does not implement; supported: ";
        for (const auto& a : kAlgorithms) std::cerr << a << ' ';
        std::cerr << "\n";
        return 1;
    }
    if (!is_known_algorithm(alg)) {
        std::cerr << "route: unknown algorithm '" << alg << "'\n";
        return 1;
    }
    const GeometricGraph full = load_graph(graph_path);
    if (src < 0 || dst < 0 || src >= full.node_count() || dst >= full.node_count() ||
        src == dst) {
        std::cerr << "route: bad src/dst\n";
        return 1;
    }
    const GeometricGraph planar = full.planar ? full : gabriel_planarize(full);
    const FaceDecomposition fd = decompose_faces(planar);

    std::ofstream trace_file;
    TraceSink sink;
    if (!trace_path.empty()) {
        trace_file.open(trace_path);
        if (!trace_file) {
            std::cerr << "route: cannot write " << trace_path << "\n";
            return 1;
        }
        sink = [&trace_file](const TraceEvent& ev) {
            trace_file << trace_event_to_json(ev) << "\n";
        };
    }

    const RouteMetrics m =
        run_single(alg, full, planar, fd, Session(src, dst), seed, session_k, sink);
    nlohmann::ordered_json j;
    j["algorithm"] = m.algorithm;
    j["src"] = m.src;
    j["dst"] = m.dst;
    j["delivered"] = m.delivered;
    j["path_hops"] = m.path_hops;
    j["preferred_hops"] = m.preferred_hops;
    j["total_messages"] = m.total_messages;
    j["causal_latency"] = m.causal_latency;
    j["shortest_planar_hops"] = m.shortest_planar_hops;
    j["shortest_full_hops"] = m.shortest_full_hops;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_experiment(const std::string& preset, std::uint64_t seed, const std::string& out_dir,
                   const std::string& format, const std::vector<std::string>& algorithms) {
    ExperimentConfig cfg;
    if (preset == "desk")
        cfg = ExperimentConfig::desk(seed);
    else if (preset == "full")
        cfg = ExperimentConfig::full(seed);
    else {
        std::cerr << "experiment: preset must be desk or full\n";
        return 1;
    }
    if (!algorithms.empty()) cfg.algorithms = algorithms;
    cfg.validate();

    const ExperimentResult res = run_experiment(cfg);
    emit_results(res, format, out_dir);
    for (const auto& cell : res.cells) {
        if (!cell.generated)
            std::cout << "cell n=" << cell.n << " u=" << cell.u
                      << ": generation exhausted after " << cell.rejections << " rejections\n";
    }
    std::cout << "rows=" << res.rows.size() << " aggregates=" << res.aggregates.size()
              << " -> " << out_dir << "\n";
    return 0;
}

int cmd_trace(const std::string& graph_path, const std::string& paths_path,
              const std::string& svg_path, const std::string& json_path) {
    const GeometricGraph g = load_graph(graph_path);
    std::vector<LabeledPath> paths;
    if (!paths_path.empty()) {
        std::ifstream in(paths_path);
        if (!in) {
            std::cerr << "trace: cannot read " << paths_path << "\n";
            return 1;
        }
        json j;
        in >> j;
        const json& arr = j.contains("paths") ? j["paths"] : j;
        for (const auto& p : arr) {
            LabeledPath lp;
            lp.label = p.value("label", std::string("path"));
            for (const auto& n : p.at("nodes")) lp.nodes.push_back(n.get<NodeId>());
            paths.push_back(std::move(lp));
        }
    }
    emit_route_figure(g, paths, json_path, svg_path);
    std::cout << "wrote";
    if (!json_path.empty()) std::cout << ' ' << json_path;
    if (!svg_path.empty()) std::cout << ' ' << svg_path;
    std::cout << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"facewalk: geometric routing over planarized unit-disk graphs"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a connected unit-disk graph");
    int gen_n = 40;
    double gen_u = 0.9, gen_area = 2.0;
    std::uint64_t gen_seed = 1;
    std::string gen_out = "graph.json";
    bool gen_planarize = false;
    gen->add_option("--n", gen_n, "node count");
    gen->add_option("--u", gen_u, "connectivity radius");
    gen->add_option("--area", gen_area, "square side length");
    gen->add_option("--seed", gen_seed, "base seed (retries derive from it)");
    gen->add_option("--out", gen_out, "output graph file");
    gen->add_flag("--planarize", gen_planarize, "emit the Gabriel subgraph");

    // route
    auto* route = app.add_subcommand("route", "run one algorithm on one pair");
    std::string r_graph, r_alg = "2face", r_trace;
    NodeId r_src = 0, r_dst = 1;
    std::uint64_t r_seed = 1;
    int r_k = 5;
    route->add_option("--graph", r_graph, "graph file")->required();
    route->add_option("--alg", r_alg, "algorithm identifier");
    route->add_option("--src", r_src, "source node id")->required();
    route->add_option("--dst", r_dst, "destination node id")->required();
    route->add_option("--seed", r_seed, "scheduler seed");
    route->add_option("--session-k", r_k, "messages per session (session algorithm)");
    route->add_option("--trace", r_trace, "write per-step trace (JSON Lines)");

    // experiment
    auto* exp = app.add_subcommand("experiment", "run the sweep and emit metrics");
    std::string e_preset = "desk", e_out = "results", e_format = "csv";
    std::uint64_t e_seed = 1;
    std::vector<std::string> e_algs;
    exp->add_option("--preset", e_preset, "desk or full");
    exp->add_option("--seed", e_seed, "master seed");
    exp->add_option("--out", e_out, "output directory");
    exp->add_option("--format", e_format, "csv or json");
    exp->add_option("--algorithms", e_algs, "override algorithm list");

    // trace (figure export)
    auto* tr = app.add_subcommand("trace", "render a graph and routes to SVG/JSON");
    std::string t_graph, t_paths, t_svg = "routes.svg", t_json;
    tr->add_option("--graph", t_graph, "graph file")->required();
    tr->add_option("--paths", t_paths, "paths JSON ({\"paths\":[{label,nodes}]})");
    tr->add_option("--svg", t_svg, "output SVG file");
    tr->add_option("--json", t_json, "output figure-data JSON file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_gen(gen_n, gen_u, gen_area, gen_seed, gen_out, gen_planarize);
        if (route->parsed()) return cmd_route(r_graph, r_alg, r_src, r_dst, r_seed, r_k, r_trace);
        if (exp->parsed()) return cmd_experiment(e_preset, e_seed, e_out, e_format, e_algs);
        if (tr->parsed()) return cmd_trace(t_graph, t_paths, t_svg, t_json);
    } catch (const ProtocolError& e) {
        std::cerr << "protocol assertion failed: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
