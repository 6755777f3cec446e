#include <doctest.h>

#include <random>

#include "stacklab/io.hpp"
#include "test_support.hpp"

using namespace stacklab;
namespace ts = stacklab::testsupport;

TEST_CASE("graph round trip is byte exact") {
    std::mt19937_64 rng(3);
    for (int round = 0; round < 50; ++round) {
        Graph g = ts::random_graph(rng, std::uniform_int_distribution<Vertex>(1, 30)(rng), 100);
        std::string text = graph_to_string(g);
        Graph back = graph_from_string(text);
        CHECK(back == g);
        CHECK(graph_to_string(back) == text);
    }
    // Labeled graphs too.
    Graph s = strong_product(path(3), path(4));
    std::string text = graph_to_string(s);
    CHECK(graph_from_string(text) == s);
    CHECK(graph_to_string(graph_from_string(text)) == text);
}

TEST_CASE("graph parser tolerates comments and blank lines") {
    std::string text = "# a comment\n\ngraph 3 2\n e 1 2\n\n# another\ne 2 3\n";
    Graph g = graph_from_string(text);
    CHECK(g == path(3));
}

TEST_CASE("graph parser rejects malformed input") {
    CHECK_THROWS(graph_from_string("graph 2 1\ne 2 1\n"));        // u >= v
    CHECK_THROWS(graph_from_string("graph 2 2\ne 1 2\n"));        // count mismatch
    CHECK_THROWS(graph_from_string("graph 2 1\nx 1 2\n"));        // unknown kind
    CHECK_THROWS(graph_from_string("nograph 2 1\ne 1 2\n"));      // header
}

TEST_CASE("stack layout round trip") {
    Graph k4 = complete(4);
    StackLayout l{VertexOrder::identity(4), {1, 2, 1, 1, 2, 1}, 2};
    std::string text = stack_layout_to_string(k4, l);
    StackLayout back = stack_layout_from_string(text, k4);
    CHECK(back.order == l.order);
    CHECK(back.page == l.page);
    CHECK(back.pages == l.pages);
    CHECK(stack_layout_to_string(k4, back) == text);
}

TEST_CASE("layout reader names coverage problems") {
    Graph k3 = complete(3);
    // Unknown edge.
    CHECK_THROWS_WITH(
        (void)stack_layout_from_string(
            "stacklayout 3 3 1\norder 1 2 3\ne 1 2 1\ne 1 3 1\ne 2 4 1\n", k3),
        doctest::Contains("not present"));
    // Missing edge.
    CHECK_THROWS_WITH(
        (void)stack_layout_from_string(
            "stacklayout 3 3 1\norder 1 2 3\ne 1 2 1\ne 1 3 1\n", k3),
        doctest::Contains("(2,3)"));
    // Duplicate.
    CHECK_THROWS_WITH(
        (void)stack_layout_from_string(
            "stacklayout 3 3 1\norder 1 2 3\ne 1 2 1\ne 1 2 1\ne 2 3 1\n", k3),
        doctest::Contains("duplicate"));
}

TEST_CASE("queue layout round trip") {
    Graph s3 = star(3);
    QueueLayout l{VertexOrder::identity(4), {1, 1, 1}, 1};
    std::string text = queue_layout_to_string(s3, l);
    QueueLayout back = queue_layout_from_string(text, s3);
    CHECK(back.order == l.order);
    CHECK(back.page == l.page);
    CHECK(queue_layout_to_string(s3, back) == text);
}

TEST_CASE("csv report shape") {
    Graph k4 = complete(4);
    StackLayout l{VertexOrder::identity(4), {1, 2, 1, 1, 2, 1}, 2};
    LayoutReport rep = validate_stack_layout(k4, l);
    std::string csv = report_to_csv(k4, l.page, l.pages, rep);
    CHECK(csv.substr(0, 33) == "page,edges,violations,is_matching");
    CHECK(csv.find("1,4,") != std::string::npos);
    CHECK(csv.find("2,2,") != std::string::npos);
}
