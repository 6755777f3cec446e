#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "stacklab/graph.hpp"

namespace stacklab {

// Total order on the vertices: order[p] is the vertex at position p (0-based
// internally) and position_of[v-1] is the inverse.
class VertexOrder {
public:
    VertexOrder() = default;
    explicit VertexOrder(std::vector<Vertex> order);

    static VertexOrder identity(Vertex n);

    Vertex size() const { return static_cast<Vertex>(order_.size()); }
    Vertex at(std::int64_t pos) const { return order_[static_cast<std::size_t>(pos)]; }
    std::int64_t position(Vertex v) const { return pos_[static_cast<std::size_t>(v - 1)]; }
    const std::vector<Vertex>& order() const { return order_; }

    friend bool operator==(const VertexOrder&, const VertexOrder&) = default;

private:
    std::vector<Vertex> order_;
    std::vector<std::int64_t> pos_;
};

// Edge -> page assignment over a host graph's edge list. Pages are 1-based;
// page[i] belongs to edges()[i] of the host graph.
struct StackLayout {
    VertexOrder order;
    std::vector<std::int32_t> page;
    std::int32_t pages = 0;
};

struct QueueLayout {
    VertexOrder order;
    std::vector<std::int32_t> page;
    std::int32_t pages = 0;
};

struct LayoutReport {
    bool valid = false;
    std::uint64_t violation_count = 0;
    // Up to 10 witness pairs of conflicting edges.
    std::vector<std::pair<Edge, Edge>> first_violations;
    std::int32_t pages_used = 0;  // nonempty pages
    std::vector<bool> per_page_is_matching;          // indexed by page-1
    std::vector<std::uint64_t> per_page_violations;  // indexed by page-1
};

inline constexpr int kMaxWitnesses = 10;

// Same-page crossing check (positions i<k<j<l with edges (i,j),(k,l)).
// Throws std::invalid_argument when the assignment does not cover E(G).
LayoutReport validate_stack_layout(const Graph& g, const StackLayout& layout);

// Same-page nesting check (positions i<k<l<j).
LayoutReport validate_queue_layout(const Graph& g, const QueueLayout& layout);

// True iff every page of a valid stack layout is a matching. Throws when the
// layout is not valid.
bool is_dispersable(const Graph& g, const StackLayout& layout);

// Thrown by the exact search when the node budget runs out; carries the best
// assignment found so far.
class bounded_search_error : public std::runtime_error {
public:
    bounded_search_error(std::string msg, int best_pages,
                         std::vector<std::int32_t> best)
        : std::runtime_error(std::move(msg)), best_pages(best_pages),
          best_assignment(std::move(best)) {}

    int best_pages;
    std::vector<std::int32_t> best_assignment;
};

// Minimum stacks for a fixed vertex order: exact chromatic number of the
// crossing graph when |E| <= exact_threshold (backtracking, most-conflicts
// first), first-fit greedy over edges sorted by (left endpoint, right
// endpoint descending) otherwise. The assignment always validates.
std::pair<int, std::vector<std::int32_t>> min_stacks_for_order(
    const Graph& g, const VertexOrder& order, int exact_threshold = 30,
    std::uint64_t node_budget = 200'000'000);

// Brute-force stack-number over all circular orders (vertex 1 pinned,
// reflections skipped). Refuses graphs with more than max_n vertices.
int exact_stack_number(const Graph& g, int max_n = 9);

// Induced restriction of a layout: keeps vertices with keep[v-1] true,
// renumbers them by order position, and drops the other edges.
std::pair<Graph, StackLayout> restrict_layout(const Graph& g,
                                              const StackLayout& layout,
                                              const std::vector<bool>& keep);

}  // namespace stacklab
