#include "facewalk/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <set>
#include <sstream>

#include <json.hpp>

namespace facewalk {

using ordered_json = nlohmann::ordered_json;

bool is_known_algorithm(const std::string& name) {
    return std::find(kAlgorithms.begin(), kAlgorithms.end(), name) != kAlgorithms.end();
}

bool is_reserved_algorithm(const std::string& name) {
    return std::find(kReservedAlgorithms.begin(), kReservedAlgorithms.end(), name) !=
           kReservedAlgorithms.end();
}

ExperimentConfig ExperimentConfig::desk(std::uint64_t seed) {
    ExperimentConfig cfg;
    cfg.node_counts = {40, 80};
    cfg.u_values = {0.9, 0.5, 0.3};
    cfg.graphs_per_density = 5;
    cfg.pairs_per_graph = 10;
    cfg.master_seed = seed;
    return cfg;
}

ExperimentConfig ExperimentConfig::full(std::uint64_t seed) {
    ExperimentConfig cfg;
    cfg.master_seed = seed;
    return cfg;
}

void ExperimentConfig::validate() const {
    if (node_counts.empty() || u_values.empty())
        throw std::invalid_argument("config: need node counts and u values");
    for (int n : node_counts)
        if (n < 2) throw std::invalid_argument("config: node counts must be >= 2");
    for (double u : u_values)
        if (u <= 0.0 || u > area_side)
            throw std::invalid_argument("config: u values must lie in (0, area_side]");
    if (graphs_per_density < 1 || pairs_per_graph < 1 || session_k < 1)
        throw std::invalid_argument("config: counts must be positive");
    for (const auto& a : algorithms) {
        if (is_reserved_algorithm(a))
            throw std::invalid_argument("algorithm '" + a +
                                        "' is a reserved identifier for an unimplemented "
                                        "traversal; supported: greedy compass face1 face2 "
                                        "2face gfg g2fg session");
        if (!is_known_algorithm(a))
            throw std::invalid_argument("unknown algorithm '" + a + "'");
    }
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b,
                          std::uint64_t c, std::uint64_t d) {
    // splitmix64 over the mixed words
    std::uint64_t x = master;
    for (std::uint64_t w : {a, b, c, d}) {
        x += 0x9e3779b97f4a7c15ULL + w;
        std::uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        x = z ^ (z >> 31);
    }
    return x;
}

std::optional<GeometricGraph> generate_connected(int n, double area_side, double u,
                                                 std::uint64_t seed_base, int max_attempts,
                                                 int* rejections) {
    int rejected = 0;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        auto g = generate_unit_disk(n, area_side, u, derive_seed(seed_base, attempt));
        if (g) {
            if (rejections) *rejections = rejected;
            return g;
        }
        ++rejected;
    }
    if (rejections) *rejections = rejected;
    return std::nullopt;
}

std::optional<Session> sample_pair(const GeometricGraph& g_full, const GeometricGraph& g_planar,
                                   std::mt19937_64& rng, int max_attempts) {
    std::uniform_int_distribution<NodeId> pick(0, g_full.node_count() - 1);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        const NodeId s = pick(rng);
        const NodeId d = pick(rng);
        if (s == d) continue;
        const Segment sd(g_full.position(s), g_full.position(d));
        bool degenerate = false;
        for (NodeId w = 0; w < g_full.node_count() && !degenerate; ++w) {
            if (w == s || w == d) continue;
            if (point_segment_distance(g_full.position(w), sd) < kCoincidentEps)
                degenerate = true;
        }
        if (degenerate) continue;
        (void)g_planar;
        return Session(s, d);
    }
    return std::nullopt;
}

RouteMetrics run_single(const std::string& algorithm, const GeometricGraph& g_full,
                        const GeometricGraph& g_planar, const FaceDecomposition& fd, Session ses,
                        std::uint64_t sched_seed, int session_k, TraceSink trace) {
    RouteMetrics m;
    m.src = ses.source;
    m.dst = ses.dest;
    m.algorithm = algorithm;
    m.n = g_full.node_count();
    m.u = g_full.radius;
    m.shortest_planar_hops = shortest_path_hops(g_planar, ses.source, ses.dest);
    m.shortest_full_hops = shortest_path_hops(g_full, ses.source, ses.dest);

    auto from_walk = [&m](const WalkResult& w) {
        m.delivered = w.delivered;
        m.total_messages = w.messages;
        if (w.delivered) {
            m.path_hops = static_cast<std::int64_t>(w.hops());
            m.causal_latency = static_cast<std::int64_t>(w.hops());
        }
    };

    if (algorithm == "greedy") {
        from_walk(route_greedy(g_full, ses));
    } else if (algorithm == "compass") {
        from_walk(route_compass(g_full, ses));
    } else if (algorithm == "face1") {
        from_walk(route_face1(g_planar, fd, ses, Hand::R));
    } else if (algorithm == "face2") {
        from_walk(route_face2(g_planar, fd, ses, Hand::R));
    } else if (algorithm == "2face") {
        RandomScheduler sched(sched_seed);
        DirectoryStore dir(g_planar.node_count());
        TwoFaceOptions opts;
        opts.trace = trace;
        const TwoFaceResult r = route_2face(g_planar, fd, ses, sched, dir, opts);
        m.delivered = r.delivered;
        m.total_messages = r.stats.total_messages;
        if (r.delivered) {
            m.path_hops = static_cast<std::int64_t>(r.delivered_path.size()) - 1;
            m.causal_latency = r.latency;
            const auto tb = run_traceback(g_planar, fd, r, dir, ses);
            m.preferred_hops = static_cast<std::int64_t>(tb.hops());
        }
        return m;
    } else if (algorithm == "gfg") {
        const GfgResult r = route_gfg(g_full, g_planar, fd, ses, Hand::R);
        from_walk(r.walk);
    } else if (algorithm == "g2fg") {
        RandomScheduler sched(sched_seed);
        const G2fgResult r = route_g2fg(g_full, g_planar, fd, ses, sched);
        m.delivered = r.delivered;
        m.total_messages = r.total_messages;
        if (r.delivered) {
            m.path_hops = static_cast<std::int64_t>(r.hops());
            m.causal_latency = r.latency;
            m.preferred_hops = static_cast<std::int64_t>(r.preferred_hops());
        }
    } else if (algorithm == "session") {
        RandomScheduler sched(sched_seed);
        DirectoryStore dir(g_planar.node_count());
        const SessionResult r = route_session(g_planar, fd, ses, session_k, sched, dir);
        m.delivered = true;
        m.total_messages = r.total_messages();
        m.path_hops = static_cast<std::int64_t>(r.preferred_path.size()) - 1;
        m.preferred_hops = m.path_hops;
        m.causal_latency = r.first.latency;
    } else if (is_reserved_algorithm(algorithm)) {
        throw std::invalid_argument("algorithm '" + algorithm +
                                    "' names a traversal this toolkit does not implement");
    } else {
        throw std::invalid_argument("unknown algorithm '" + algorithm + "'");
    }
    return m;
}

std::optional<int> break_even(double messages_bi, double messages_single, double hops_single,
                              double hops_preferred) {
    if (!(hops_preferred < hops_single)) return std::nullopt;
    const double overhead = messages_bi - messages_single;
    if (overhead <= 0) return 1;
    const double saving = hops_single - hops_preferred;
    return 1 + static_cast<int>(std::ceil(overhead / saving));
}

namespace {

struct PairOutcome {
    int graph_id = 0, pair_id = 0;
    Session ses{0, 1};
    std::vector<RouteMetrics> rows;
    // paired quantities for the aggregates
    double msgs_2face = 0, msgs_traceback = 0, msgs_face2 = 0;
    double hops_face2 = -1, hops_pref = -1;
    double hops_gfg = -1, hops_g2fg_pref = -1;
    int shortest_planar = -1;
    bool have_face_pair = false, have_greedy_pair = false;
    bool greedy_engaged = false;  // plain greedy alone does not deliver
};

struct CellOutput {
    CellReport report;
    std::vector<PairOutcome> pairs;
};

CellOutput run_cell(const ExperimentConfig& cfg, int ni, int ui, int graph_id_base) {
    CellOutput out;
    const int n = cfg.node_counts[static_cast<size_t>(ni)];
    const double u = cfg.u_values[static_cast<size_t>(ui)];
    out.report.n = n;
    out.report.u = u;

    for (int gi = 0; gi < cfg.graphs_per_density; ++gi) {
        int rej = 0;
        auto g = generate_connected(
            n, cfg.area_side, u,
            derive_seed(cfg.master_seed, 11, static_cast<std::uint64_t>(ni),
                        static_cast<std::uint64_t>(ui), static_cast<std::uint64_t>(gi)),
            cfg.max_generation_attempts, &rej);
        out.report.rejections += rej;
        if (!g) return out;  // cell exhausted; report stays !generated
        const GeometricGraph planar = gabriel_planarize(*g);
        const FaceDecomposition fd = decompose_faces(planar);

        std::mt19937_64 pair_rng(derive_seed(cfg.master_seed, 13,
                                             static_cast<std::uint64_t>(ni),
                                             static_cast<std::uint64_t>(ui),
                                             static_cast<std::uint64_t>(gi)));
        std::set<std::pair<NodeId, NodeId>> used;
        for (int pi = 0; pi < cfg.pairs_per_graph; ++pi) {
            std::optional<Session> ses;
            for (int tries = 0; tries < 50; ++tries) {
                ses = sample_pair(*g, planar, pair_rng);
                if (ses && !used.count({ses->source, ses->dest})) break;
                ses.reset();
            }
            if (!ses) continue;
            used.insert({ses->source, ses->dest});

            PairOutcome po;
            po.graph_id = graph_id_base + gi;
            po.pair_id = pi;
            po.ses = *ses;
            po.shortest_planar = shortest_path_hops(planar, ses->source, ses->dest);
            po.greedy_engaged = !route_greedy(*g, *ses).delivered;

            for (size_t ai = 0; ai < cfg.algorithms.size(); ++ai) {
                const std::string& alg = cfg.algorithms[ai];
                const std::uint64_t sseed =
                    derive_seed(cfg.master_seed, 17, static_cast<std::uint64_t>(po.graph_id),
                                static_cast<std::uint64_t>(pi), ai);
                RouteMetrics m = run_single(alg, *g, planar, fd, *ses, sseed, cfg.session_k);
                m.graph_id = po.graph_id;
                m.pair_id = pi;
                m.n = n;
                m.u = u;

                if (alg == "2face" && m.delivered) {
                    po.msgs_2face = static_cast<double>(m.total_messages);
                    po.msgs_traceback = static_cast<double>(m.preferred_hops);
                    po.hops_pref = static_cast<double>(m.preferred_hops);
                } else if (alg == "face2" && m.delivered) {
                    po.msgs_face2 = static_cast<double>(m.total_messages);
                    po.hops_face2 = static_cast<double>(m.path_hops);
                } else if (alg == "gfg" && m.delivered) {
                    po.hops_gfg = static_cast<double>(m.path_hops);
                } else if (alg == "g2fg" && m.delivered) {
                    po.hops_g2fg_pref = static_cast<double>(m.preferred_hops);
                }
                po.rows.push_back(std::move(m));
            }
            po.have_face_pair = po.hops_face2 >= 0 && po.hops_pref > 0;
            po.have_greedy_pair = po.hops_gfg >= 0 && po.hops_g2fg_pref > 0;
            out.pairs.push_back(std::move(po));
        }
    }
    out.report.generated = true;
    return out;
}

AggregateRow aggregate_cell(const ExperimentConfig& cfg, const CellOutput& cell) {
    AggregateRow row;
    row.n = cell.report.n;
    row.u = cell.report.u;
    row.pairs = static_cast<int>(cell.pairs.size());
    row.graphs = cfg.graphs_per_density;

    std::map<std::string, std::pair<double, int>> hops_acc, msg_acc;
    double imp_face = 0;
    int imp_face_n = 0;
    double imp_greedy = 0;
    int imp_greedy_n = 0;
    double overhead = 0;
    int overhead_n = 0;
    double stretch = 0;
    int stretch_n = 0;
    double mb = 0, ms = 0, hs = 0, hp = 0;
    int mean_n = 0;

    for (const PairOutcome& po : cell.pairs) {
        for (const RouteMetrics& m : po.rows) {
            if (!m.delivered) continue;
            auto& h = hops_acc[m.algorithm];
            h.first += static_cast<double>(m.path_hops);
            h.second += 1;
            auto& g = msg_acc[m.algorithm];
            g.first += static_cast<double>(m.total_messages);
            g.second += 1;
        }
        if (po.have_face_pair) {
            imp_face += (po.hops_face2 - po.hops_pref) / po.hops_pref;
            ++imp_face_n;
            overhead += (po.msgs_2face + po.msgs_traceback) - po.msgs_face2;
            ++overhead_n;
            mb += po.msgs_2face + po.msgs_traceback;
            ms += po.msgs_face2;
            hs += po.hops_face2;
            hp += po.hops_pref;
            ++mean_n;
            if (break_even(po.msgs_2face + po.msgs_traceback, po.msgs_face2, po.hops_face2,
                           po.hops_pref))
                ++row.break_even_defined;
            if (po.shortest_planar > 0) {
                stretch += po.hops_pref / po.shortest_planar;
                ++stretch_n;
            }
        }
        if (po.have_greedy_pair && po.greedy_engaged) {
            imp_greedy += (po.hops_gfg - po.hops_g2fg_pref) / po.hops_g2fg_pref;
            ++imp_greedy_n;
        }
    }
    for (auto& [alg, acc] : hops_acc) row.mean_path_hops[alg] = acc.first / acc.second;
    for (auto& [alg, acc] : msg_acc) row.mean_messages[alg] = acc.first / acc.second;
    row.improvement_face2_vs_2face = imp_face_n ? imp_face / imp_face_n : 0.0;
    row.improvement_gfg_vs_g2fg = imp_greedy_n ? imp_greedy / imp_greedy_n : 0.0;
    row.face_engaged_pairs = imp_greedy_n;
    row.message_overhead = overhead_n ? overhead / overhead_n : 0.0;
    if (mean_n) {
        const auto k = break_even(mb / mean_n, ms / mean_n, hs / mean_n, hp / mean_n);
        row.mean_break_even = k ? *k : 0.0;
    }
    row.mean_preferred_stretch = stretch_n ? stretch / stretch_n : 0.0;
    return row;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    ExperimentResult res;

    struct CellJob {
        int ni, ui, base;
        std::future<CellOutput> fut;
    };
    std::vector<CellJob> jobs;
    int graph_id_base = 0;
    for (size_t ni = 0; ni < cfg.node_counts.size(); ++ni) {
        for (size_t ui = 0; ui < cfg.u_values.size(); ++ui) {
            CellJob job;
            job.ni = static_cast<int>(ni);
            job.ui = static_cast<int>(ui);
            job.base = graph_id_base;
            job.fut = std::async(std::launch::async, run_cell, std::cref(cfg),
                                 static_cast<int>(ni), static_cast<int>(ui), graph_id_base);
            jobs.push_back(std::move(job));
            graph_id_base += cfg.graphs_per_density;
        }
    }
    // Assemble in cell order, not completion order.
    for (auto& job : jobs) {
        CellOutput cell = job.fut.get();
        res.cells.push_back(cell.report);
        if (!cell.report.generated) continue;
        res.aggregates.push_back(aggregate_cell(cfg, cell));
        for (auto& po : cell.pairs)
            for (auto& m : po.rows) res.rows.push_back(std::move(m));
    }
    return res;
}

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

std::string metrics_to_csv(const std::vector<RouteMetrics>& rows) {
    std::ostringstream os;
    os << "graph_id,n,u,pair_id,src,dst,algorithm,delivered,path_hops,preferred_hops,"
          "total_messages,causal_latency,shortest_planar_hops,shortest_full_hops\n";
    for (const auto& m : rows) {
        os << m.graph_id << ',' << m.n << ',' << fmt_double(m.u) << ',' << m.pair_id << ','
           << m.src << ',' << m.dst << ',' << m.algorithm << ',' << (m.delivered ? 1 : 0) << ','
           << m.path_hops << ',' << m.preferred_hops << ',' << m.total_messages << ','
           << m.causal_latency << ',' << m.shortest_planar_hops << ',' << m.shortest_full_hops
           << '\n';
    }
    return os.str();
}

std::string aggregates_to_csv(const std::vector<AggregateRow>& rows) {
    std::ostringstream os;
    os << "n,u,graphs,pairs,improvement_face2_vs_2face,improvement_gfg_vs_g2fg,"
          "face_engaged_pairs,message_overhead,mean_break_even,break_even_defined,"
          "mean_preferred_stretch\n";
    for (const auto& a : rows) {
        os << a.n << ',' << fmt_double(a.u) << ',' << a.graphs << ',' << a.pairs << ','
           << fmt_double(a.improvement_face2_vs_2face) << ','
           << fmt_double(a.improvement_gfg_vs_g2fg) << ',' << a.face_engaged_pairs << ','
           << fmt_double(a.message_overhead) << ','
           << (a.mean_break_even > 0 ? fmt_double(a.mean_break_even) : std::string("null"))
           << ',' << a.break_even_defined << ',' << fmt_double(a.mean_preferred_stretch) << '\n';
    }
    return os.str();
}

std::string metrics_to_json(const std::vector<RouteMetrics>& rows) {
    ordered_json arr = ordered_json::array();
    for (const auto& m : rows) {
        ordered_json j;
        j["graph_id"] = m.graph_id;
        j["n"] = m.n;
        j["u"] = m.u;
        j["pair_id"] = m.pair_id;
        j["src"] = m.src;
        j["dst"] = m.dst;
        j["algorithm"] = m.algorithm;
        j["delivered"] = m.delivered;
        j["path_hops"] = m.path_hops;
        j["preferred_hops"] = m.preferred_hops;
        j["total_messages"] = m.total_messages;
        j["causal_latency"] = m.causal_latency;
        j["shortest_planar_hops"] = m.shortest_planar_hops;
        j["shortest_full_hops"] = m.shortest_full_hops;
        arr.push_back(j);
    }
    return arr.dump(2) + "\n";
}

std::string aggregates_to_json(const std::vector<AggregateRow>& rows) {
    ordered_json arr = ordered_json::array();
    for (const auto& a : rows) {
        ordered_json j;
        j["n"] = a.n;
        j["u"] = a.u;
        j["graphs"] = a.graphs;
        j["pairs"] = a.pairs;
        j["mean_path_hops"] = a.mean_path_hops;
        j["mean_messages"] = a.mean_messages;
        j["improvement_face2_vs_2face"] = a.improvement_face2_vs_2face;
        j["improvement_gfg_vs_g2fg"] = a.improvement_gfg_vs_g2fg;
        j["face_engaged_pairs"] = a.face_engaged_pairs;
        j["message_overhead"] = a.message_overhead;
        if (a.mean_break_even > 0)
            j["mean_break_even"] = a.mean_break_even;
        else
            j["mean_break_even"] = nullptr;
        j["break_even_defined"] = a.break_even_defined;
        j["mean_preferred_stretch"] = a.mean_preferred_stretch;
        arr.push_back(j);
    }
    return arr.dump(2) + "\n";
}

void emit_results(const ExperimentResult& res, const std::string& format,
                  const std::string& out_dir) {
    if (format != "csv" && format != "json")
        throw std::invalid_argument("emit_results: format must be csv or json");
    std::filesystem::create_directories(out_dir);
    const auto write = [&](const std::string& name, const std::string& body) {
        const std::string path = out_dir + "/" + name;
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("emit_results: cannot write " + path);
        out << body;
    };
    if (format == "csv") {
        write("metrics.csv", metrics_to_csv(res.rows));
        write("aggregates.csv", aggregates_to_csv(res.aggregates));
    } else {
        write("metrics.json", metrics_to_json(res.rows));
        write("aggregates.json", aggregates_to_json(res.aggregates));
    }
}

std::string route_figure_json(const GeometricGraph& g, const std::vector<LabeledPath>& paths) {
    ordered_json j;
    j["nodes"] = ordered_json::array();
    for (NodeId n = 0; n < g.node_count(); ++n)
        j["nodes"].push_back({{"id", n}, {"x", g.position(n).x}, {"y", g.position(n).y}});
    j["edges"] = ordered_json::array();
    for (auto [a, b] : g.edges()) j["edges"].push_back(ordered_json::array({a, b}));
    j["paths"] = ordered_json::array();
    for (const auto& p : paths) {
        for (NodeId n : p.nodes)
            if (n < 0 || n >= g.node_count())
                throw std::invalid_argument("route figure: path references unknown node " +
                                            std::to_string(n));
        j["paths"].push_back({{"label", p.label}, {"nodes", p.nodes}});
    }
    return j.dump(2) + "\n";
}

std::string route_figure_svg(const GeometricGraph& g, const std::vector<LabeledPath>& paths) {
    double minx = 1e30, miny = 1e30, maxx = -1e30, maxy = -1e30;
    for (NodeId n = 0; n < g.node_count(); ++n) {
        minx = std::min(minx, g.position(n).x);
        maxx = std::max(maxx, g.position(n).x);
        miny = std::min(miny, g.position(n).y);
        maxy = std::max(maxy, g.position(n).y);
    }
    const double pad = 0.05 * std::max(maxx - minx, maxy - miny) + 0.01;
    const double w = 640.0;
    const double scale = (w - 20) / std::max(maxx - minx + 2 * pad, 1e-9);
    const double h = (maxy - miny + 2 * pad) * scale + 20;
    auto X = [&](double x) { return 10 + (x - minx + pad) * scale; };
    auto Y = [&](double y) { return h - 10 - (y - miny + pad) * scale; };

    static const char* colors[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e"};
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\">\n";
    for (auto [a, b] : g.edges())
        os << "  <line x1=\"" << X(g.position(a).x) << "\" y1=\"" << Y(g.position(a).y)
           << "\" x2=\"" << X(g.position(b).x) << "\" y2=\"" << Y(g.position(b).y)
           << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    for (size_t pi = 0; pi < paths.size(); ++pi) {
        const auto& p = paths[pi];
        const char* color = colors[pi % 5];
        for (size_t i = 0; i + 1 < p.nodes.size(); ++i) {
            const Point& a = g.position(p.nodes[i]);
            const Point& b = g.position(p.nodes[i + 1]);
            os << "  <line x1=\"" << X(a.x) << "\" y1=\"" << Y(a.y) << "\" x2=\"" << X(b.x)
               << "\" y2=\"" << Y(b.y) << "\" stroke=\"" << color
               << "\" stroke-width=\"2.5\" opacity=\"0.85\"/>\n";
        }
        os << "  <text x=\"15\" y=\"" << 18 + 16 * pi << "\" fill=\"" << color
           << "\" font-size=\"13\">" << p.label << "</text>\n";
    }
    for (NodeId n = 0; n < g.node_count(); ++n)
        os << "  <circle cx=\"" << X(g.position(n).x) << "\" cy=\"" << Y(g.position(n).y)
           << "\" r=\"2.5\" fill=\"#333333\"/>\n";
    os << "</svg>\n";
    return os.str();
}

void emit_route_figure(const GeometricGraph& g, const std::vector<LabeledPath>& paths,
                       const std::string& json_path, const std::string& svg_path) {
    const std::string body = route_figure_json(g, paths);  // validates node refs
    if (!json_path.empty()) {
        std::ofstream out(json_path, std::ios::binary);
        if (!out) throw std::runtime_error("emit_route_figure: cannot write " + json_path);
        out << body;
    }
    if (!svg_path.empty()) {
        std::ofstream out(svg_path, std::ios::binary);
        if (!out) throw std::runtime_error("emit_route_figure: cannot write " + svg_path);
        out << route_figure_svg(g, paths);
    }
}

}  // namespace facewalk
