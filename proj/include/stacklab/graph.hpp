#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace stacklab {

using Vertex = std::int32_t;  // 1-based vertex ids

struct Edge {
    Vertex u = 0;  // u < v always
    Vertex v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) {
    return a < b ? Edge{a, b} : Edge{b, a};
}

// Coordinate tuple attached to product vertices. Only the first `dim`
// entries are meaningful (dim between 1 and 3).
using Label = std::array<Vertex, 3>;

// Simple undirected graph. Vertices are 1..n, edges are stored sorted and
// deduplicated; adjacency is CSR with sorted neighbor lists. Immutable after
// construction.
class Graph {
public:
    Graph() = default;
    Graph(Vertex n, std::vector<Edge> edges, int label_dim = 0,
          std::vector<Label> labels = {});

    Vertex vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    std::span<const Edge> edges() const { return edges_; }
    const Edge& edge(std::size_t i) const { return edges_[i]; }

    bool has_edge(Vertex u, Vertex v) const;
    // Index into edges() of {u,v}, or -1 when absent.
    std::int64_t edge_index(Vertex u, Vertex v) const;

    std::span<const Vertex> neighbors(Vertex v) const;
    int degree(Vertex v) const;
    int max_degree() const;

    int label_dim() const { return label_dim_; }
    bool labeled() const { return label_dim_ > 0; }
    const Label& label(Vertex v) const { return labels_[static_cast<std::size_t>(v - 1)]; }
    const std::vector<Label>& labels() const { return labels_; }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    Vertex n_ = 0;
    int label_dim_ = 0;
    std::vector<Edge> edges_;          // sorted lex, unique
    std::vector<Label> labels_;        // size n_ when label_dim_ > 0
    std::vector<std::size_t> adj_off_; // CSR offsets, size n_+1
    std::vector<Vertex> adj_;          // sorted neighbor lists
};

struct Arc {
    Vertex from = 0;
    Vertex to = 0;

    friend bool operator==(const Arc&, const Arc&) = default;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Directed graph used as a factor of triangulated products.
class DirectedGraph {
public:
    DirectedGraph() = default;
    DirectedGraph(Vertex n, std::vector<Arc> arcs);

    Vertex vertex_count() const { return n_; }
    std::span<const Arc> arcs() const { return arcs_; }
    // Underlying undirected graph.
    Graph underlying() const;

private:
    Vertex n_ = 0;
    std::vector<Arc> arcs_;  // sorted, unique, no loops
};

// Base generators.
Graph path(Vertex n);
Graph complete(Vertex t);
Graph star(Vertex n);          // n leaves; centre is vertex 1
Graph cycle(Vertex n);
DirectedGraph directed_path(Vertex n);  // oriented 1 -> 2 -> ... -> n

// Products. Vertex numbering is lexicographic (row-major) in factor
// coordinates; labels are the concatenated factor coordinate tuples.
Graph cartesian_product(const Graph& g1, const Graph& g2);
Graph strong_product(const Graph& g1, const Graph& g2);

// Per-cell diagonal override for triangulated products: given the axis pair
// and the cell's lower-corner coordinates, return true to flip the diagonal
// chosen by the arc orientations. axis pair is (0,1), (0,2) or (1,2).
using DiagonalFlip =
    std::function<bool(int axis_a, int axis_b, std::array<Vertex, 3> cell)>;

Graph triangulated_product(const DirectedGraph& d1, const DirectedGraph& d2,
                           const DiagonalFlip& flip = nullptr);
Graph triangulated_product(const DirectedGraph& d1, const DirectedGraph& d2,
                           const DirectedGraph& d3,
                           const DiagonalFlip& flip = nullptr);

}  // namespace stacklab
