#pragma once

#include <cstdint>
#include <vector>

#include "stacklab/graph.hpp"
#include "stacklab/hadamard.hpp"
#include "stacklab/layout.hpp"

namespace stacklab {

// Proper vertex coloring with colors 1..p.
struct ProperColoring {
    std::vector<std::int32_t> color;  // index v-1
    std::int32_t colors = 0;
};

bool is_proper(const Graph& g, const ProperColoring& c);

// A valid stack layout whose every page is a matching.
struct DispersableLayout {
    StackLayout layout;
    std::int32_t d = 0;  // page count
};

// Verifies validity and the matching property of every page.
DispersableLayout make_dispersable(const Graph& g, StackLayout layout);

// Boustrophedon order on V(P_n x P_n) (strong product, row-major ids):
// row i (0-based) runs left to right when even and right to left when odd.
VertexOrder snake_order(Vertex n);

// 4-stack layout of P_n x P_n on the snake order, or the 8-matching
// refinement when dispersable is set.
StackLayout grid_stack_layout(Vertex n, bool dispersable);

// rho(i,j) = 2(i mod 2) + (j mod 2) + 1; proper for the strong product.
ProperColoring grid_coloring(Vertex n);

struct ProductWithPathResult {
    Graph product;        // G x P_{m^(p-1)} (strong product)
    StackLayout layout;
    std::int32_t intra_stacks = 0;   // shared path stacks (<= 2p-3)
    std::int32_t inter_stacks = 0;   // per-page rank slots summed over pages
};

// Layout engine for G x P_{m^(p-1)}: blocks ordered by the dispersable
// layout of G, each block ordered by pi_{rho(v)}^{-1}; intra-path edges share
// 2p-3 stacks and the inter-path edges of each G-edge are split by the
// endpoint sum pi_{rho(u)}(i) + pi_{rho(v)}(j).
ProductWithPathResult product_with_path(const Graph& g, const DispersableLayout& d,
                                        const ProperColoring& rho,
                                        const HadamardMatrix& h, int m);

struct TriplePathResult {
    Graph graph;   // P_n x P_n x P_n (strong product)
    StackLayout layout;
    int m = 0;             // ceil(n^(1/3))
    int stacks_used = 0;   // nonempty stacks
};

// Headline construction: stack layout of P_n x P_n x P_n with at most
// 56*ceil(n^(1/3)) + 5 nonempty stacks.
TriplePathResult triple_path_layout(Vertex n);

struct QueueTriplePathResult {
    Graph graph;   // triangulated product of three directed n-paths
    QueueLayout layout;
};

// 4-queue layout of the triangulated triple path on the lexicographic
// order; queues keyed by which of {1}, {n,n+1}, {n^2,n^2+1}, {n^2+n}
// contains the position difference.
QueueTriplePathResult queue_layout_triple_path(Vertex n);

// Edge-partition of an outerplanar graph (witnessed by a valid 1-stack
// layout) into 3 spanning star forests with every vertex the designated
// centre of a star component somewhere.
struct StarForestPartition {
    std::vector<std::int32_t> forest_of_edge;   // 1..3, aligned with g.edges()
    std::vector<Vertex> centre_of_edge;         // designated hub endpoint
    std::vector<std::int32_t> witness_forest;   // per vertex: forest where it is a centre
};

StarForestPartition star_forest_partition(const Graph& g, const StackLayout& one_stack);

// Independent checker: forests are edge-disjoint and cover E, components are
// stars with consistent designated centres, every vertex is a centre.
bool check_star_forest_partition(const Graph& g, const StarForestPartition& p,
                                 std::string* why = nullptr);

// Zigzag layout of K_t with ceil(t/2) stacks.
StackLayout complete_graph_layout(Vertex t);

struct ProductWithCompleteResult {
    Graph product;  // G x K_t (strong product)
    StackLayout layout;
};

// Layout of G x K_t with at most max{3*s*t, ceil(t/2)} stacks, built from a
// star-forest refinement of each page of the s-stack layout of G.
ProductWithCompleteResult product_with_complete(const Graph& g,
                                                const StackLayout& layout,
                                                Vertex t);

}  // namespace stacklab
