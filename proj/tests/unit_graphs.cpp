#include <doctest.h>

#include <set>
#include <stdexcept>

#include "stacklab/graph.hpp"

using namespace stacklab;

TEST_CASE("path generator") {
    Graph p1 = path(1);
    CHECK(p1.vertex_count() == 1);
    CHECK(p1.edge_count() == 0);

    Graph p5 = path(5);
    CHECK(p5.edge_count() == 4);
    CHECK(p5.has_edge(1, 2));
    CHECK(p5.has_edge(4, 5));
    CHECK_FALSE(p5.has_edge(1, 3));

    CHECK_THROWS_AS(path(0), std::invalid_argument);
}

TEST_CASE("complete and star") {
    CHECK(complete(4).edge_count() == 6);
    CHECK(complete(2) == path(2));

    Graph s3 = star(3);
    CHECK(s3.vertex_count() == 4);
    CHECK(s3.edge_count() == 3);
    std::multiset<int> degs;
    for (Vertex v = 1; v <= 4; ++v) degs.insert(s3.degree(v));
    CHECK(degs == std::multiset<int>{1, 1, 1, 3});

    CHECK_THROWS_AS(complete(0), std::invalid_argument);
    CHECK_THROWS_AS(star(0), std::invalid_argument);
}

TEST_CASE("cartesian product") {
    Graph c4 = cartesian_product(path(2), path(2));
    CHECK(c4.vertex_count() == 4);
    CHECK(c4.edge_count() == 4);
    for (Vertex v = 1; v <= 4; ++v) CHECK(c4.degree(v) == 2);

    Graph g = cartesian_product(path(4), path(4));
    CHECK(g.vertex_count() == 16);
    CHECK(g.edge_count() == 24);

    // |E(P_n box P_n)| = 2n(n-1), checked against plain enumeration.
    for (Vertex n = 2; n <= 10; ++n) {
        Graph pn = cartesian_product(path(n), path(n));
        CHECK(pn.edge_count() == static_cast<std::size_t>(2 * n * (n - 1)));
        std::size_t count = 0;
        for (Vertex u = 1; u <= pn.vertex_count(); ++u)
            for (Vertex v = u + 1; v <= pn.vertex_count(); ++v) {
                auto lu = pn.label(u), lv = pn.label(v);
                int dx = std::abs(lu[0] - lv[0]), dy = std::abs(lu[1] - lv[1]);
                if (dx + dy == 1) ++count;
            }
        CHECK(pn.edge_count() == count);
    }
}

TEST_CASE("strong product") {
    Graph k4 = strong_product(path(2), path(2));
    Graph ref = complete(4);
    CHECK(k4.vertex_count() == 4);
    CHECK(std::equal(k4.edges().begin(), k4.edges().end(), ref.edges().begin(),
                     ref.edges().end()));

    // |E(P_n strong P_n)| = 4n^2 - 6n + 2, verified by enumeration.
    for (Vertex n = 2; n <= 10; ++n) {
        Graph pn = strong_product(path(n), path(n));
        CHECK(pn.edge_count() == static_cast<std::size_t>(4 * n * n - 6 * n + 2));
        std::size_t count = 0;
        for (Vertex u = 1; u <= pn.vertex_count(); ++u)
            for (Vertex v = u + 1; v <= pn.vertex_count(); ++v) {
                auto lu = pn.label(u), lv = pn.label(v);
                int dx = std::abs(lu[0] - lv[0]), dy = std::abs(lu[1] - lv[1]);
                if (std::max(dx, dy) == 1) ++count;
            }
        CHECK(pn.edge_count() == count);
    }
}

TEST_CASE("strong product associativity") {
    Graph a = strong_product(strong_product(path(2), path(3)), path(4));
    Graph b = strong_product(path(2), strong_product(path(3), path(4)));
    CHECK(a == b);
}

TEST_CASE("products are supersets in the right order") {
    for (Vertex n : {3, 5}) {
        Graph cart = cartesian_product(path(n), path(n));
        Graph strong = strong_product(path(n), path(n));
        Graph tri = triangulated_product(directed_path(n), directed_path(n));
        for (const auto& e : cart.edges()) CHECK(tri.has_edge(e.u, e.v));
        for (const auto& e : tri.edges()) CHECK(strong.has_edge(e.u, e.v));
    }
}

TEST_CASE("triangulated product of two paths") {
    Graph t = triangulated_product(directed_path(2), directed_path(2));
    CHECK(t.vertex_count() == 4);
    CHECK(t.edge_count() == 5);  // C_4 plus one diagonal

    for (Vertex n = 2; n <= 8; ++n) {
        Graph tn = triangulated_product(directed_path(n), directed_path(n));
        CHECK(tn.edge_count() ==
              static_cast<std::size_t>(2 * n * (n - 1) + (n - 1) * (n - 1)));
    }
}

TEST_CASE("per-cell diagonal flip") {
    auto always = [](int, int, std::array<Vertex, 3>) { return true; };
    Graph plain = triangulated_product(directed_path(3), directed_path(3));
    Graph flipped = triangulated_product(directed_path(3), directed_path(3), always);
    CHECK(plain.edge_count() == flipped.edge_count());
    CHECK_FALSE(plain == flipped);
    Graph strong = strong_product(path(3), path(3));
    for (const auto& e : flipped.edges()) CHECK(strong.has_edge(e.u, e.v));
}

TEST_CASE("triangulated triple path has maximum degree 12") {
    DirectedGraph d = directed_path(5);
    Graph t = triangulated_product(d, d, d);
    CHECK(t.max_degree() == 12);
    CHECK(t.vertex_count() == 125);
    // Subgraph of the strong product.
    Graph s = strong_product(strong_product(path(5), path(5)), path(5));
    for (const auto& e : t.edges()) CHECK(s.has_edge(e.u, e.v));
}

TEST_CASE("vertex numbering is lexicographic in factor coordinates") {
    Graph g = strong_product(path(3), path(2));
    CHECK(g.label(1) == Label{1, 1, 0});
    CHECK(g.label(2) == Label{1, 2, 0});
    CHECK(g.label(3) == Label{2, 1, 0});
    CHECK(g.vertex_count() == 6);
}

TEST_CASE("graph invariants rejected") {
    CHECK_THROWS_AS((Graph(3, {{1, 1}})), std::invalid_argument);
    CHECK_THROWS_AS((Graph(3, {{1, 2}, {1, 2}})), std::invalid_argument);
    CHECK_THROWS_AS((Graph(2, {{1, 3}})), std::invalid_argument);
}
