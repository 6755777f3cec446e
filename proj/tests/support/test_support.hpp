#pragma once

#include <random>
#include <vector>

#include "stacklab/graph.hpp"
#include "stacklab/layout.hpp"

namespace stacklab::testsupport {

// O(E^2) reference checks the sweep validators are measured against.
inline std::uint64_t naive_crossings(const Graph& g, const StackLayout& l) {
    std::uint64_t bad = 0;
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        for (std::size_t j = i + 1; j < g.edge_count(); ++j) {
            if (l.page[i] != l.page[j]) continue;
            std::int64_t a1 = l.order.position(g.edge(i).u);
            std::int64_t b1 = l.order.position(g.edge(i).v);
            std::int64_t a2 = l.order.position(g.edge(j).u);
            std::int64_t b2 = l.order.position(g.edge(j).v);
            if (a1 > b1) std::swap(a1, b1);
            if (a2 > b2) std::swap(a2, b2);
            if ((a1 < a2 && a2 < b1 && b1 < b2) || (a2 < a1 && a1 < b2 && b2 < b1))
                ++bad;
        }
    return bad;
}

inline std::uint64_t naive_nestings(const Graph& g, const QueueLayout& l) {
    std::uint64_t bad = 0;
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        for (std::size_t j = i + 1; j < g.edge_count(); ++j) {
            if (l.page[i] != l.page[j]) continue;
            std::int64_t a1 = l.order.position(g.edge(i).u);
            std::int64_t b1 = l.order.position(g.edge(i).v);
            std::int64_t a2 = l.order.position(g.edge(j).u);
            std::int64_t b2 = l.order.position(g.edge(j).v);
            if (a1 > b1) std::swap(a1, b1);
            if (a2 > b2) std::swap(a2, b2);
            if ((a1 < a2 && b2 < b1) || (a2 < a1 && b1 < b2)) ++bad;
        }
    return bad;
}

inline Graph random_graph(std::mt19937_64& rng, Vertex n, std::size_t max_edges) {
    std::vector<Edge> all;
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v) all.push_back({u, v});
    std::shuffle(all.begin(), all.end(), rng);
    std::size_t m = std::uniform_int_distribution<std::size_t>(
        0, std::min(max_edges, all.size()))(rng);
    all.resize(m);
    return Graph(n, std::move(all));
}

inline VertexOrder random_order(std::mt19937_64& rng, Vertex n) {
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 1);
    std::shuffle(order.begin(), order.end(), rng);
    return VertexOrder(std::move(order));
}

// Random triangulation of the convex polygon 1..n: maximal outerplanar with
// the identity order as a 1-stack witness.
inline Graph random_maximal_outerplanar(std::mt19937_64& rng, Vertex n) {
    std::vector<Edge> es;
    for (Vertex i = 1; i < n; ++i) es.push_back({i, i + 1});
    es.push_back({1, n});
    // Split polygon intervals recursively with random apexes.
    std::vector<std::pair<Vertex, Vertex>> stack{{1, n}};
    while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        if (b - a < 2) continue;
        Vertex c = std::uniform_int_distribution<Vertex>(a + 1, b - 1)(rng);
        if (c - a >= 2) es.push_back({a, c});
        if (b - c >= 2) es.push_back({c, b});
        stack.push_back({a, c});
        stack.push_back({c, b});
    }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return Graph(n, std::move(es));
}

inline StackLayout one_stack_witness(const Graph& g) {
    return StackLayout{VertexOrder::identity(g.vertex_count()),
                       std::vector<std::int32_t>(g.edge_count(), 1),
                       g.edge_count() ? 1 : 0};
}

}  // namespace stacklab::testsupport
