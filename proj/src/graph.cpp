#include "facewalk/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>
#include <stdexcept>

namespace facewalk {

namespace {

double ccw_angle(const Point& from, const Point& to) {
    double a = std::atan2(to.y - from.y, to.x - from.x);
    if (a < 0) a += 2.0 * M_PI;
    return a;
}

}  // namespace

GeometricGraph GeometricGraph::from_edges(std::vector<Point> positions,
                                          const std::vector<std::pair<NodeId, NodeId>>& edges) {
    GeometricGraph g;
    g.pos_ = std::move(positions);
    g.adj_.assign(g.pos_.size(), {});
    for (auto [a, b] : edges) {
        if (a == b || a < 0 || b < 0 || a >= g.node_count() || b >= g.node_count())
            throw std::invalid_argument("from_edges: bad edge");
        g.adj_[static_cast<size_t>(a)].push_back(b);
        g.adj_[static_cast<size_t>(b)].push_back(a);
    }
    for (auto& lst : g.adj_) {
        std::sort(lst.begin(), lst.end());
        if (std::adjacent_find(lst.begin(), lst.end()) != lst.end())
            throw std::invalid_argument("from_edges: duplicate edge");
    }
    g.edge_count_ = edges.size();
    g.sort_adjacency();
    return g;
}

void GeometricGraph::sort_adjacency() {
    for (NodeId n = 0; n < node_count(); ++n) {
        auto& lst = adj_[static_cast<size_t>(n)];
        const Point& c = pos_[static_cast<size_t>(n)];
        std::sort(lst.begin(), lst.end(), [&](NodeId a, NodeId b) {
            return ccw_angle(c, pos_[static_cast<size_t>(a)]) <
                   ccw_angle(c, pos_[static_cast<size_t>(b)]);
        });
    }
}

bool GeometricGraph::has_edge(NodeId a, NodeId b) const {
    return neighbor_index(a, b) >= 0;
}

int GeometricGraph::neighbor_index(NodeId n, NodeId m) const {
    const auto& lst = adj_[static_cast<size_t>(n)];
    for (size_t i = 0; i < lst.size(); ++i)
        if (lst[i] == m) return static_cast<int>(i);
    return -1;
}

NodeId GeometricGraph::cw_neighbor_after(NodeId n, NodeId m) const {
    const auto& lst = adj_[static_cast<size_t>(n)];
    const int i = neighbor_index(n, m);
    if (i < 0) throw std::invalid_argument("cw_neighbor_after: not a neighbor");
    const size_t k = lst.size();
    return lst[(static_cast<size_t>(i) + k - 1) % k];
}

NodeId GeometricGraph::ccw_neighbor_after(NodeId n, NodeId m) const {
    const auto& lst = adj_[static_cast<size_t>(n)];
    const int i = neighbor_index(n, m);
    if (i < 0) throw std::invalid_argument("ccw_neighbor_after: not a neighbor");
    return lst[(static_cast<size_t>(i) + 1) % lst.size()];
}

NodeId GeometricGraph::cw_neighbor_from_direction(NodeId n, const Point& toward) const {
    const auto& lst = adj_[static_cast<size_t>(n)];
    if (lst.empty()) throw std::invalid_argument("cw_neighbor_from_direction: isolated node");
    std::vector<Point> cand;
    cand.reserve(lst.size());
    for (NodeId m : lst) cand.push_back(pos_[static_cast<size_t>(m)]);
    const Point chosen = angle_order_after(pos_[static_cast<size_t>(n)], toward, cand,
                                           RotationSense::CW);
    for (size_t i = 0; i < cand.size(); ++i)
        if (cand[i] == chosen) return lst[i];
    return lst[0];  // unreachable
}

std::vector<std::pair<NodeId, NodeId>> GeometricGraph::edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(edge_count_);
    for (NodeId n = 0; n < node_count(); ++n)
        for (NodeId m : adj_[static_cast<size_t>(n)])
            if (n < m) out.emplace_back(n, m);
    std::sort(out.begin(), out.end());
    return out;
}

bool GeometricGraph::is_connected() const {
    if (node_count() == 0) return false;
    std::vector<char> seen(static_cast<size_t>(node_count()), 0);
    std::deque<NodeId> queue{0};
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        const NodeId n = queue.front();
        queue.pop_front();
        for (NodeId m : adj_[static_cast<size_t>(n)]) {
            if (!seen[static_cast<size_t>(m)]) {
                seen[static_cast<size_t>(m)] = 1;
                ++reached;
                queue.push_back(m);
            }
        }
    }
    return reached == node_count();
}

bool GeometricGraph::has_angular_ties() const {
    for (NodeId n = 0; n < node_count(); ++n) {
        const auto& lst = adj_[static_cast<size_t>(n)];
        const Point& c = pos_[static_cast<size_t>(n)];
        // Equal angles end up adjacent in the sorted list.
        for (size_t i = 0; i + 1 < lst.size(); ++i) {
            const Point& pa = pos_[static_cast<size_t>(lst[i])];
            const Point& pb = pos_[static_cast<size_t>(lst[i + 1])];
            // Same angle means collinear with c and on the same side.
            if (std::abs(cross(c, pa, pb)) < kCollinearEps &&
                (pa.x - c.x) * (pb.x - c.x) + (pa.y - c.y) * (pb.y - c.y) > 0)
                return true;
        }
    }
    return false;
}

std::optional<GeometricGraph> generate_unit_disk(int n, double area_side, double u,
                                                 std::uint64_t seed) {
    if (n < 2 || u <= 0 || area_side <= 0)
        throw std::invalid_argument("generate_unit_disk: need n >= 2, u > 0, area > 0");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(0.0, area_side);

    GeometricGraph g;
    g.pos_.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double x = coord(rng);
        const double y = coord(rng);
        g.pos_.emplace_back(x, y);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (dist(g.pos_[static_cast<size_t>(i)], g.pos_[static_cast<size_t>(j)]) <
                kCoincidentEps)
                return std::nullopt;

    g.adj_.assign(static_cast<size_t>(n), {});
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = 0; j < i; ++j) {
            if (dist(g.pos_[static_cast<size_t>(i)], g.pos_[static_cast<size_t>(j)]) < u) {
                g.adj_[static_cast<size_t>(i)].push_back(j);
                g.adj_[static_cast<size_t>(j)].push_back(i);
                ++g.edge_count_;
            }
        }
    }
    g.sort_adjacency();
    g.area_side = area_side;
    g.radius = u;
    g.seed = seed;

    if (!g.is_connected()) return std::nullopt;
    if (g.has_angular_ties()) return std::nullopt;
    return g;
}

GeometricGraph gabriel_planarize(const GeometricGraph& g) {
    GeometricGraph out;
    out.pos_ = g.pos_;
    out.adj_.assign(out.pos_.size(), {});
    out.area_side = g.area_side;
    out.radius = g.radius;
    out.seed = g.seed;
    out.planar = true;

    for (auto [a, b] : g.edges()) {
        const Point& pa = g.position(a);
        const Point& pb = g.position(b);
        const Point mid{(pa.x + pb.x) / 2.0, (pa.y + pb.y) / 2.0};
        const double r2 = dist_sq(pa, pb) / 4.0;
        bool witness = false;
        for (NodeId w = 0; w < g.node_count(); ++w) {
            if (w == a || w == b) continue;
            if (dist_sq(g.position(w), mid) < r2 - kCollinearEps) {
                witness = true;
                break;
            }
        }
        if (!witness) {
            out.adj_[static_cast<size_t>(a)].push_back(b);
            out.adj_[static_cast<size_t>(b)].push_back(a);
            ++out.edge_count_;
        }
    }
    out.sort_adjacency();
    return out;
}

int shortest_path_hops(const GeometricGraph& g, NodeId s, NodeId d) {
    if (s == d) return 0;
    std::vector<int> depth(static_cast<size_t>(g.node_count()), -1);
    std::deque<NodeId> queue{s};
    depth[static_cast<size_t>(s)] = 0;
    while (!queue.empty()) {
        const NodeId n = queue.front();
        queue.pop_front();
        for (NodeId m : g.neighbors(n)) {
            if (depth[static_cast<size_t>(m)] < 0) {
                depth[static_cast<size_t>(m)] = depth[static_cast<size_t>(n)] + 1;
                if (m == d) return depth[static_cast<size_t>(m)];
                queue.push_back(m);
            }
        }
    }
    return -1;
}

}  // namespace facewalk
