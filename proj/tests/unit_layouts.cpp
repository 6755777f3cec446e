#include <doctest.h>

#include <random>

#include "stacklab/graph.hpp"
#include "stacklab/layout.hpp"
#include "test_support.hpp"

using namespace stacklab;
namespace ts = stacklab::testsupport;

namespace {

StackLayout all_one_page(const Graph& g, VertexOrder order) {
    return StackLayout{std::move(order),
                       std::vector<std::int32_t>(g.edge_count(), 1),
                       g.edge_count() ? 1 : 0};
}

}  // namespace

TEST_CASE("K4 on natural order has exactly one crossing") {
    Graph k4 = complete(4);
    StackLayout l = all_one_page(k4, VertexOrder::identity(4));
    LayoutReport rep = validate_stack_layout(k4, l);
    CHECK_FALSE(rep.valid);
    CHECK(rep.violation_count == 1);
    REQUIRE(rep.first_violations.size() == 1);
    Edge a = rep.first_violations[0].first, b = rep.first_violations[0].second;
    CHECK(((a == Edge{1, 3} && b == Edge{2, 4}) || (a == Edge{2, 4} && b == Edge{1, 3})));
}

TEST_CASE("paths are one-stack in natural order") {
    for (Vertex n : {2, 5, 40}) {
        Graph p = path(n);
        LayoutReport rep = validate_stack_layout(p, all_one_page(p, VertexOrder::identity(n)));
        CHECK(rep.valid);
        CHECK(rep.pages_used == 1);
    }
}

TEST_CASE("queue validator basics") {
    // Star with the centre first: every edge shares position 0, one queue.
    Graph s3 = star(3);
    QueueLayout ql{VertexOrder::identity(4), {1, 1, 1}, 1};
    CHECK(validate_queue_layout(s3, ql).valid);

    // Edges (1,4) and (2,3) nest.
    Graph g(4, {{1, 4}, {2, 3}});
    QueueLayout bad{VertexOrder::identity(4), {1, 1}, 1};
    LayoutReport rep = validate_queue_layout(g, bad);
    CHECK_FALSE(rep.valid);
    CHECK(rep.violation_count == 1);
}

TEST_CASE("coverage errors name the edge") {
    Graph k3 = complete(3);
    StackLayout short_assign{VertexOrder::identity(3), {1, 1}, 1};
    CHECK_THROWS_WITH_AS(validate_stack_layout(k3, short_assign),
                         doctest::Contains("does not cover"), std::invalid_argument);
    StackLayout bad_page{VertexOrder::identity(3), {1, 0, 1}, 1};
    CHECK_THROWS_AS(validate_stack_layout(k3, bad_page), std::invalid_argument);
}

TEST_CASE("sweep agrees with the quadratic reference on random layouts") {
    std::mt19937_64 rng(0);
    for (int round = 0; round < 500; ++round) {
        Vertex n = std::uniform_int_distribution<Vertex>(2, 21)(rng);
        Graph g = ts::random_graph(rng, n, 200);
        int pages = std::uniform_int_distribution<int>(1, 4)(rng);
        std::vector<std::int32_t> assign(g.edge_count());
        for (auto& p : assign) p = std::uniform_int_distribution<std::int32_t>(1, pages)(rng);
        VertexOrder order = ts::random_order(rng, n);

        StackLayout sl{order, assign, pages};
        CHECK(validate_stack_layout(g, sl).violation_count == ts::naive_crossings(g, sl));
        QueueLayout ql{order, assign, pages};
        CHECK(validate_queue_layout(g, ql).violation_count == ts::naive_nestings(g, ql));
    }
}

TEST_CASE("min_stacks_for_order") {
    Graph k4 = complete(4);
    auto [s, assign] = min_stacks_for_order(k4, VertexOrder::identity(4));
    CHECK(s == 2);
    StackLayout l{VertexOrder::identity(4), assign, s};
    CHECK(validate_stack_layout(k4, l).valid);

    Graph p9 = path(9);
    CHECK(min_stacks_for_order(p9, VertexOrder::identity(9)).first == 1);

    // Row-major order of P_3 x P_3 (strong) needs at least 3 stacks.
    Graph grid = strong_product(path(3), path(3));
    auto [s3, a3] = min_stacks_for_order(grid, VertexOrder::identity(9));
    CHECK(s3 >= 3);
    CHECK(validate_stack_layout(grid, StackLayout{VertexOrder::identity(9), a3, s3}).valid);
}

TEST_CASE("greedy assignments always validate") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 100; ++round) {
        Vertex n = std::uniform_int_distribution<Vertex>(2, 18)(rng);
        Graph g = ts::random_graph(rng, n, 120);
        VertexOrder order = ts::random_order(rng, n);
        auto [s, assign] = min_stacks_for_order(g, order, /*exact_threshold=*/0);
        if (g.edge_count() == 0) {
            CHECK(s == 0);
            continue;
        }
        StackLayout l{order, assign, s};
        CHECK(validate_stack_layout(g, l).valid);
        // The exact solver never does worse.
        if (g.edge_count() <= 24) {
            auto [se, ae] = min_stacks_for_order(g, order, 24);
            CHECK(se <= s);
            StackLayout le{order, ae, se};
            CHECK(validate_stack_layout(g, le).valid);
        }
    }
}

TEST_CASE("exact stack numbers of small graphs") {
    CHECK(exact_stack_number(complete(4)) == 2);
    CHECK(exact_stack_number(complete(5)) == 3);
    CHECK(exact_stack_number(complete(6)) == 3);
    CHECK(exact_stack_number(cycle(5)) == 1);
    CHECK(exact_stack_number(cycle(8)) == 1);
    CHECK(exact_stack_number(star(5)) == 1);
    CHECK(exact_stack_number(path(7)) == 1);
    CHECK_THROWS_AS(exact_stack_number(complete(10)), std::invalid_argument);
}

TEST_CASE("exact_stack_number lower-bounds any fixed order") {
    std::mt19937_64 rng(13);
    for (int round = 0; round < 20; ++round) {
        Graph g = ts::random_graph(rng, 6, 15);
        if (g.edge_count() == 0) continue;
        int exact = exact_stack_number(g);
        auto [s, assign] = min_stacks_for_order(g, ts::random_order(rng, 6), 15);
        CHECK(exact <= s);
    }
}

TEST_CASE("is_dispersable") {
    Graph g(2, {{1, 2}});
    StackLayout l = all_one_page(g, VertexOrder::identity(2));
    CHECK(is_dispersable(g, l));

    // A path in one stack is valid but not a matching.
    Graph p3 = path(3);
    CHECK_FALSE(is_dispersable(p3, all_one_page(p3, VertexOrder::identity(3))));

    // Invalid layouts are a precondition error.
    Graph k4 = complete(4);
    CHECK_THROWS_AS(is_dispersable(k4, all_one_page(k4, VertexOrder::identity(4))),
                    std::invalid_argument);
}

TEST_CASE("restriction of a valid layout stays valid") {
    std::mt19937_64 rng(21);
    for (int round = 0; round < 50; ++round) {
        Vertex n = std::uniform_int_distribution<Vertex>(3, 16)(rng);
        Graph g = ts::random_graph(rng, n, 80);
        VertexOrder order = ts::random_order(rng, n);
        auto [s, assign] = min_stacks_for_order(g, order, 0);
        if (g.edge_count() == 0) continue;
        StackLayout l{order, assign, s};
        REQUIRE(validate_stack_layout(g, l).valid);
        std::vector<bool> keep(static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < keep.size(); ++i)
            keep[i] = std::bernoulli_distribution(0.7)(rng);
        auto [h, lh] = restrict_layout(g, l, keep);
        if (h.edge_count() == 0) continue;
        CHECK(validate_stack_layout(h, lh).valid);
    }
}
