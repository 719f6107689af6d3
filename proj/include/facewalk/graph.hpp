#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "facewalk/geometry.hpp"

namespace facewalk {

using NodeId = int;
inline constexpr NodeId kInvalidNode = -1;

// Coincident-node rejection threshold for generated graphs.
inline constexpr double kCoincidentEps = 1e-9;

// Geometric graph embedded in the plane. Adjacency lists are kept sorted by
// angle ascending, counter-clockwise from the +x axis, which fixes the
// rotation system every face walk relies on.
class GeometricGraph {
public:
    GeometricGraph() = default;

    // Builds from explicit positions and an undirected edge list.
    static GeometricGraph from_edges(std::vector<Point> positions,
                                     const std::vector<std::pair<NodeId, NodeId>>& edges);

    int node_count() const { return static_cast<int>(pos_.size()); }
    size_t edge_count() const { return edge_count_; }

    const Point& position(NodeId n) const { return pos_[static_cast<size_t>(n)]; }
    const std::vector<Point>& positions() const { return pos_; }
    const std::vector<NodeId>& neighbors(NodeId n) const { return adj_[static_cast<size_t>(n)]; }
    int degree(NodeId n) const { return static_cast<int>(adj_[static_cast<size_t>(n)].size()); }

    bool has_edge(NodeId a, NodeId b) const;
    // Position of m within n's angular adjacency list; -1 if absent.
    int neighbor_index(NodeId n, NodeId m) const;

    // Next neighbor of n strictly clockwise after m (right-hand rule step).
    NodeId cw_neighbor_after(NodeId n, NodeId m) const;
    // Next neighbor of n strictly counter-clockwise after m (left-hand rule step).
    NodeId ccw_neighbor_after(NodeId n, NodeId m) const;

    // First neighbor of n encountered rotating clockwise from the direction
    // n -> toward. Used to locate the face a ray leaves a node through.
    NodeId cw_neighbor_from_direction(NodeId n, const Point& toward) const;

    // Undirected edge list, smaller id first, sorted. Stable interchange order.
    std::vector<std::pair<NodeId, NodeId>> edges() const;

    bool is_connected() const;

    // True when some vertex has two neighbors at an indistinguishable angle,
    // which would make the rotation system ambiguous.
    bool has_angular_ties() const;

    double area_side = 0.0;
    double radius = 0.0;  // unit-disk connectivity radius used to build the graph
    std::uint64_t seed = 0;
    bool planar = false;

private:
    std::vector<Point> pos_;
    std::vector<std::vector<NodeId>> adj_;
    size_t edge_count_ = 0;

    void sort_adjacency();
    friend GeometricGraph gabriel_planarize(const GeometricGraph& g);
    friend std::optional<GeometricGraph> generate_unit_disk(int n, double area_side, double u,
                                                            std::uint64_t seed);
};

// Scatters n nodes uniformly over an area_side x area_side square and links
// every pair closer than u. Returns nullopt when the result is disconnected
// or degenerate (coincident nodes, angular ties); the caller retries with the
// next seed.
std::optional<GeometricGraph> generate_unit_disk(int n, double area_side, double u,
                                                 std::uint64_t seed);

// Keeps an edge (a,b) iff no third node lies strictly inside the circle with
// diameter ab. Planar for point sets in general position, and connectivity-
// preserving on unit-disk inputs.
GeometricGraph gabriel_planarize(const GeometricGraph& g);

// Minimum hop count between s and d by breadth-first search; -1 if unreachable.
int shortest_path_hops(const GeometricGraph& g, NodeId s, NodeId d);

}  // namespace facewalk
