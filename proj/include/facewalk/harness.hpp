#pragma once

#include <map>
#include <string>

#include "facewalk/routing.hpp"

namespace facewalk {

// Algorithm identifiers accepted by the CLI and the experiment config.
inline const std::vector<std::string> kAlgorithms = {"greedy", "compass", "face1", "face2",
                                                     "2face",  "gfg",     "g2fg",  "session"};
// Identifiers reserved for traversals this toolkit does not implement.
inline const std::vector<std::string> kReservedAlgorithms = {"void2", "2void", "g2vg",
                                                             "shortcut2hop"};

bool is_known_algorithm(const std::string& name);
bool is_reserved_algorithm(const std::string& name);

struct ExperimentConfig {
    std::vector<int> node_counts = {40, 60, 80, 100, 120, 140, 160, 180};
    double area_side = 2.0;
    std::vector<double> u_values = {0.9, 0.8, 0.7, 0.6, 0.5, 0.4, 0.3, 0.2};
    int graphs_per_density = 20;
    int pairs_per_graph = 20;
    std::uint64_t master_seed = 1;
    std::vector<std::string> algorithms = {"greedy", "compass", "face1", "face2",
                                           "2face",  "gfg",     "g2fg",  "session"};
    int max_generation_attempts = 500;
    int session_k = 5;

    static ExperimentConfig desk(std::uint64_t seed);
    static ExperimentConfig full(std::uint64_t seed);
    void validate() const;
};

struct RouteMetrics {
    int graph_id = 0;
    int n = 0;
    double u = 0.0;
    int pair_id = 0;
    NodeId src = kInvalidNode;
    NodeId dst = kInvalidNode;
    std::string algorithm;
    bool delivered = false;
    std::int64_t path_hops = -1;       // -1 when undelivered
    std::int64_t preferred_hops = -1;  // -1 for single-direction algorithms
    std::uint64_t total_messages = 0;
    std::int64_t causal_latency = -1;
    int shortest_planar_hops = -1;
    int shortest_full_hops = -1;
};

struct AggregateRow {
    int n = 0;
    double u = 0.0;
    int graphs = 0;
    int pairs = 0;
    std::map<std::string, double> mean_path_hops;  // delivered runs only
    std::map<std::string, double> mean_messages;
    // (single-direction - bi-directional) / bi-directional, path lengths.
    double improvement_face2_vs_2face = 0.0;
    // Pooled over pairs where the route actually left greedy mode; pairs the
    // plain greedy walk already delivers run identical paths in both.
    double improvement_gfg_vs_g2fg = 0.0;
    int face_engaged_pairs = 0;
    // Bi-directional message overhead (first message + traceback vs FACE-2).
    double message_overhead = 0.0;
    // Break-even of the cell's mean session: repeats needed before the mean
    // bi-directional cost undercuts resending single-direction messages.
    double mean_break_even = 0.0;
    int break_even_defined = 0;  // pairs with a finite per-instance break-even
    double mean_preferred_stretch = 0.0;  // preferred hops / shortest planar hops
};

struct CellReport {
    int n = 0;
    double u = 0.0;
    bool generated = false;  // false when generation kept rejecting
    int rejections = 0;
};

struct ExperimentResult {
    std::vector<RouteMetrics> rows;
    std::vector<AggregateRow> aggregates;
    std::vector<CellReport> cells;
};

// Smallest k >= 1 with messages_bi + (k-1)*hops_preferred <=
// messages_single + (k-1)*hops_single; nullopt when the preferred path is no
// shorter than the single-direction one.
std::optional<int> break_even(double messages_bi, double messages_single, double hops_single,
                              double hops_preferred);

// Full sweep: generate graphs per density cell, planarize, sample pairs, run
// every configured algorithm. Deterministic in (config, master_seed).
ExperimentResult run_experiment(const ExperimentConfig& cfg);

// Deterministic metric/aggregate emission; format is "csv" or "json".
// Writes <prefix>metrics.<ext> and <prefix>aggregates.<ext>.
void emit_results(const ExperimentResult& res, const std::string& format,
                  const std::string& out_dir);

std::string metrics_to_csv(const std::vector<RouteMetrics>& rows);
std::string aggregates_to_csv(const std::vector<AggregateRow>& rows);
std::string metrics_to_json(const std::vector<RouteMetrics>& rows);
std::string aggregates_to_json(const std::vector<AggregateRow>& rows);

struct LabeledPath {
    std::string label;
    std::vector<NodeId> nodes;
};

// Plot-ready figure data (JSON) plus an SVG rendering of the graph with the
// given routes highlighted.
void emit_route_figure(const GeometricGraph& g, const std::vector<LabeledPath>& paths,
                       const std::string& json_path, const std::string& svg_path);

std::string route_figure_json(const GeometricGraph& g, const std::vector<LabeledPath>& paths);
std::string route_figure_svg(const GeometricGraph& g, const std::vector<LabeledPath>& paths);

// Runs one algorithm on one (graph, pair); used by the route CLI and tests.
RouteMetrics run_single(const std::string& algorithm, const GeometricGraph& g_full,
                        const GeometricGraph& g_planar, const FaceDecomposition& fd, Session ses,
                        std::uint64_t sched_seed, int session_k = 5, TraceSink trace = nullptr);

// Deterministic per-purpose seed derivation.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0,
                          std::uint64_t c = 0, std::uint64_t d = 0);

// Generates a connected, degeneracy-free unit-disk graph, retrying up to
// max_attempts seeds derived from `seed_base`. Reports rejections.
std::optional<GeometricGraph> generate_connected(int n, double area_side, double u,
                                                 std::uint64_t seed_base, int max_attempts,
                                                 int* rejections = nullptr);

// Samples a route pair whose segment stays clear of other vertices.
std::optional<Session> sample_pair(const GeometricGraph& g_full, const GeometricGraph& g_planar,
                                   std::mt19937_64& rng, int max_attempts = 200);

}  // namespace facewalk
