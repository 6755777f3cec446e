#include "stacklab/layout.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace stacklab {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

std::string edge_str(const Edge& e) {
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

// Fenwick tree over positions with O(touched) reset.
class Bit {
public:
    explicit Bit(std::size_t n) : tree_(n + 1, 0) {}

    void add(std::size_t i) {
        for (++i; i < tree_.size(); i += i & (~i + 1)) {
            if (tree_[i] == 0) touched_.push_back(i);
            ++tree_[i];
        }
    }

    std::uint64_t prefix(std::int64_t i) const {  // sum of [0..i]
        std::uint64_t s = 0;
        for (std::int64_t j = i + 1; j > 0; j -= j & (-j))
            s += tree_[static_cast<std::size_t>(j)];
        return s;
    }

    std::uint64_t range(std::int64_t lo, std::int64_t hi) const {  // [lo..hi]
        if (lo > hi) return 0;
        return prefix(hi) - (lo > 0 ? prefix(lo - 1) : 0);
    }

    void reset() {
        for (auto i : touched_) tree_[i] = 0;
        touched_.clear();
    }

private:
    std::vector<std::uint32_t> tree_;
    std::vector<std::size_t> touched_;
};

struct PosEdge {
    std::int64_t l, r;       // positions, l < r
    std::uint32_t edge_idx;  // into g.edges()
};

void check_coverage(const Graph& g, const std::vector<std::int32_t>& page,
                    std::int32_t pages) {
    if (page.size() != g.edge_count()) {
        // Name the first edge affected by the mismatch.
        std::size_t i = std::min(page.size(), g.edge_count());
        std::string which = page.size() < g.edge_count()
                                ? "uncovered edge " + edge_str(g.edge(i))
                                : "assignment longer than edge list";
        throw std::invalid_argument("layout: assignment does not cover E(G): " + which);
    }
    for (std::size_t i = 0; i < page.size(); ++i) {
        if (page[i] < 1 || page[i] > pages)
            throw std::invalid_argument("layout: edge " + edge_str(g.edge(i)) +
                                        " has page " + std::to_string(page[i]) +
                                        " outside 1.." + std::to_string(pages));
    }
}

// Shared sweep machinery for both layout kinds. Mode selects the forbidden
// pattern: crossings for stacks, nestings for queues.
enum class Conflict { Cross, Nest };

LayoutReport validate(const Graph& g, const VertexOrder& order,
                      const std::vector<std::int32_t>& page, std::int32_t pages,
                      Conflict mode) {
    require(order.size() == g.vertex_count(), "layout: order size mismatch");
    check_coverage(g, page, pages);

    LayoutReport rep;
    rep.per_page_is_matching.assign(static_cast<std::size_t>(pages), true);
    rep.per_page_violations.assign(static_cast<std::size_t>(pages), 0);

    // Bucket edges by page.
    std::vector<std::uint32_t> bucket_off(static_cast<std::size_t>(pages) + 1, 0);
    for (auto p : page) ++bucket_off[static_cast<std::size_t>(p)];
    for (std::size_t p = 1; p <= static_cast<std::size_t>(pages); ++p)
        bucket_off[p] += bucket_off[p - 1];
    std::vector<PosEdge> buckets(page.size());
    std::vector<std::uint32_t> cursor(bucket_off.begin(), bucket_off.end() - 1);
    for (std::size_t i = 0; i < page.size(); ++i) {
        const Edge& e = g.edge(i);
        std::int64_t a = order.position(e.u), b = order.position(e.v);
        if (a > b) std::swap(a, b);
        buckets[cursor[static_cast<std::size_t>(page[i] - 1)]++] =
            PosEdge{a, b, static_cast<std::uint32_t>(i)};
    }

    Bit bit(static_cast<std::size_t>(g.vertex_count()));
    std::vector<std::uint8_t> seen_vertex(static_cast<std::size_t>(g.vertex_count()), 0);

    for (std::int32_t p = 1; p <= pages; ++p) {
        auto begin = buckets.begin() + bucket_off[static_cast<std::size_t>(p - 1)];
        auto end = buckets.begin() + bucket_off[static_cast<std::size_t>(p)];
        if (begin == end) continue;
        ++rep.pages_used;

        // Matching flag: any repeated endpoint breaks it.
        bool matching = true;
        for (auto it = begin; it != end; ++it) {
            const Edge& e = g.edge(it->edge_idx);
            for (Vertex v : {e.u, e.v}) {
                auto& s = seen_vertex[static_cast<std::size_t>(v - 1)];
                if (s) matching = false;
                s = 1;
            }
        }
        for (auto it = begin; it != end; ++it) {
            const Edge& e = g.edge(it->edge_idx);
            seen_vertex[static_cast<std::size_t>(e.u - 1)] = 0;
            seen_vertex[static_cast<std::size_t>(e.v - 1)] = 0;
        }
        rep.per_page_is_matching[static_cast<std::size_t>(p - 1)] = matching;

        std::sort(begin, end, [](const PosEdge& a, const PosEdge& b) {
            return a.l != b.l ? a.l < b.l : a.r < b.r;
        });

        // Process groups of equal left endpoint: count conflicts against
        // edges with strictly smaller l, then insert the group.
        bit.reset();
        auto group = begin;
        while (group != end) {
            auto gend = group;
            while (gend != end && gend->l == group->l) ++gend;
            for (auto it = group; it != gend; ++it) {
                std::uint64_t c =
                    mode == Conflict::Cross
                        ? bit.range(it->l + 1, it->r - 1)
                        : bit.range(it->r + 1, order.size() - 1);
                rep.violation_count += c;
                rep.per_page_violations[static_cast<std::size_t>(p - 1)] += c;
                if (c > 0 &&
                    rep.first_violations.size() < static_cast<std::size_t>(kMaxWitnesses)) {
                    // Linear rescan for one witness partner; rare path.
                    for (auto jt = begin; jt != group; ++jt) {
                        bool hit = mode == Conflict::Cross
                                       ? (jt->r > it->l && jt->r < it->r)
                                       : (jt->r > it->r);
                        if (hit) {
                            rep.first_violations.emplace_back(g.edge(jt->edge_idx),
                                                              g.edge(it->edge_idx));
                            break;
                        }
                    }
                }
            }
            for (auto it = group; it != gend; ++it)
                bit.add(static_cast<std::size_t>(it->r));
            group = gend;
        }
    }

    rep.valid = rep.violation_count == 0;
    return rep;
}

}  // namespace

VertexOrder::VertexOrder(std::vector<Vertex> order) : order_(std::move(order)) {
    pos_.assign(order_.size(), -1);
    for (std::size_t p = 0; p < order_.size(); ++p) {
        Vertex v = order_[p];
        require(v >= 1 && static_cast<std::size_t>(v) <= order_.size(),
                "order: vertex id out of range");
        require(pos_[static_cast<std::size_t>(v - 1)] == -1, "order: repeated vertex");
        pos_[static_cast<std::size_t>(v - 1)] = static_cast<std::int64_t>(p);
    }
}

VertexOrder VertexOrder::identity(Vertex n) {
    std::vector<Vertex> o(static_cast<std::size_t>(n));
    std::iota(o.begin(), o.end(), 1);
    return VertexOrder(std::move(o));
}

LayoutReport validate_stack_layout(const Graph& g, const StackLayout& layout) {
    return validate(g, layout.order, layout.page, layout.pages, Conflict::Cross);
}

LayoutReport validate_queue_layout(const Graph& g, const QueueLayout& layout) {
    return validate(g, layout.order, layout.page, layout.pages, Conflict::Nest);
}

bool is_dispersable(const Graph& g, const StackLayout& layout) {
    LayoutReport rep = validate_stack_layout(g, layout);
    if (!rep.valid)
        throw std::invalid_argument(
            "is_dispersable: layout is not a valid stack layout (" +
            std::to_string(rep.violation_count) + " crossings)");
    for (std::int32_t p = 1; p <= layout.pages; ++p)
        if (!rep.per_page_is_matching[static_cast<std::size_t>(p - 1)]) return false;
    return true;
}

namespace {

struct CrossingGraph {
    int n = 0;
    std::vector<std::vector<std::uint64_t>> adj;  // bitset rows
    std::vector<int> deg;

    bool edge(int a, int b) const {
        return (adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b) >> 6] >>
                (static_cast<std::size_t>(b) & 63)) & 1;
    }
    void add(int a, int b) {
        adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b) >> 6] |=
            1ull << (static_cast<std::size_t>(b) & 63);
        adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(a) >> 6] |=
            1ull << (static_cast<std::size_t>(a) & 63);
        ++deg[static_cast<std::size_t>(a)];
        ++deg[static_cast<std::size_t>(b)];
    }
};

CrossingGraph build_crossing_graph(const std::vector<std::pair<std::int64_t, std::int64_t>>& es) {
    CrossingGraph cg;
    cg.n = static_cast<int>(es.size());
    std::size_t words = (static_cast<std::size_t>(cg.n) + 63) / 64;
    cg.adj.assign(static_cast<std::size_t>(cg.n), std::vector<std::uint64_t>(words, 0));
    cg.deg.assign(static_cast<std::size_t>(cg.n), 0);
    for (int a = 0; a < cg.n; ++a)
        for (int b = a + 1; b < cg.n; ++b) {
            auto [l1, r1] = es[static_cast<std::size_t>(a)];
            auto [l2, r2] = es[static_cast<std::size_t>(b)];
            bool cross = (l1 < l2 && l2 < r1 && r1 < r2) ||
                         (l2 < l1 && l1 < r2 && r2 < r1);
            if (cross) cg.add(a, b);
        }
    return cg;
}

// Exact coloring by branch and bound; vertices pre-sorted most-conflicts
// first. Returns the chromatic number if it is < ub, otherwise ub.
class ExactColorer {
public:
    ExactColorer(const CrossingGraph& cg, std::uint64_t budget)
        : cg_(cg), budget_(budget) {
        order_.resize(static_cast<std::size_t>(cg.n));
        std::iota(order_.begin(), order_.end(), 0);
        std::sort(order_.begin(), order_.end(), [&](int a, int b) {
            return cg.deg[static_cast<std::size_t>(a)] != cg.deg[static_cast<std::size_t>(b)]
                       ? cg.deg[static_cast<std::size_t>(a)] > cg.deg[static_cast<std::size_t>(b)]
                       : a < b;
        });
        color_.assign(static_cast<std::size_t>(cg.n), 0);
    }

    // best coloring found (1-based colors aligned with crossing-graph ids)
    std::vector<std::int32_t> best_color;
    int best = 0;
    bool exhausted_budget = false;

    void run(int ub_hint) {
        best = ub_hint;
        dfs(0, 0);
    }

private:
    bool dfs(std::size_t idx, int used) {
        if (used >= best) return false;
        if (++nodes_ > budget_) {
            exhausted_budget = true;
            return true;  // unwind
        }
        if (idx == order_.size()) {
            best = used;
            best_color.assign(color_.begin(), color_.end());
            return false;
        }
        int v = order_[idx];
        for (int c = 1; c <= used + 1 && c <= best; ++c) {
            bool ok = true;
            for (std::size_t j = 0; j < idx; ++j) {
                int w = order_[j];
                if (color_[static_cast<std::size_t>(w)] == c && cg_.edge(v, w)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            color_[static_cast<std::size_t>(v)] = c;
            if (dfs(idx + 1, std::max(used, c))) return true;
            color_[static_cast<std::size_t>(v)] = 0;
        }
        return false;
    }

    const CrossingGraph& cg_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<int> order_;
    std::vector<std::int32_t> color_;
};

std::vector<std::pair<std::int64_t, std::int64_t>> position_edges(
    const Graph& g, const VertexOrder& order) {
    std::vector<std::pair<std::int64_t, std::int64_t>> es(g.edge_count());
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        std::int64_t a = order.position(g.edge(i).u);
        std::int64_t b = order.position(g.edge(i).v);
        if (a > b) std::swap(a, b);
        es[i] = {a, b};
    }
    return es;
}

std::pair<int, std::vector<std::int32_t>> greedy_stacks(
    const Graph& g, const std::vector<std::pair<std::int64_t, std::int64_t>>& es) {
    std::vector<std::uint32_t> idx(es.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
        return es[a].first != es[b].first ? es[a].first < es[b].first
                                          : es[a].second > es[b].second;
    });
    std::vector<std::int32_t> page(es.size(), 0);
    // One sorted set of right endpoints per open page; an edge fits when the
    // page has no right endpoint strictly inside it.
    std::vector<std::vector<std::int64_t>> rights;  // kept sorted
    int pages = 0;
    for (auto i : idx) {
        auto [l, r] = es[i];
        std::int32_t chosen = 0;
        for (std::size_t p = 0; p < rights.size(); ++p) {
            auto& rs = rights[p];
            auto it = std::upper_bound(rs.begin(), rs.end(), l);
            if (it == rs.end() || *it >= r) {
                rs.insert(std::upper_bound(rs.begin(), rs.end(), r), r);
                chosen = static_cast<std::int32_t>(p) + 1;
                break;
            }
        }
        if (chosen == 0) {
            rights.push_back({r});
            chosen = static_cast<std::int32_t>(rights.size());
            pages = std::max(pages, chosen);
        }
        page[i] = chosen;
    }
    (void)g;
    return {pages, std::move(page)};
}

}  // namespace

std::pair<int, std::vector<std::int32_t>> min_stacks_for_order(
    const Graph& g, const VertexOrder& order, int exact_threshold,
    std::uint64_t node_budget) {
    require(order.size() == g.vertex_count(), "min_stacks: order size mismatch");
    require(g.edge_count() <= 1'000'000, "min_stacks: more than 10^6 edges");
    if (g.edge_count() == 0) return {0, {}};

    auto es = position_edges(g, order);

    if (g.edge_count() <= static_cast<std::size_t>(exact_threshold)) {
        CrossingGraph cg = build_crossing_graph(es);
        // Start from the greedy bound so the search only improves on it.
        auto [gpages, gassign] = greedy_stacks(g, es);
        ExactColorer ec(cg, node_budget);
        ec.run(gpages + 1);
        if (ec.exhausted_budget)
            throw bounded_search_error("min_stacks: node budget exhausted",
                                       gpages, std::move(gassign));
        if (ec.best_color.empty()) return {gpages, std::move(gassign)};
        return {ec.best, std::move(ec.best_color)};
    }
    return greedy_stacks(g, es);
}

int exact_stack_number(const Graph& g, int max_n) {
    Vertex n = g.vertex_count();
    if (n > max_n)
        throw std::invalid_argument("exact_stack_number: " + std::to_string(n) +
                                    " vertices exceeds limit " + std::to_string(max_n));
    if (g.edge_count() == 0) return 0;
    if (n <= 2) return 1;

    auto es_template = std::vector<std::pair<std::int64_t, std::int64_t>>();
    int best = static_cast<int>(g.edge_count());
    std::vector<Vertex> rest(static_cast<std::size_t>(n) - 1);
    std::iota(rest.begin(), rest.end(), 2);
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    order[0] = 1;
    do {
        // Fix rotation by pinning vertex 1 first; fix reflection by requiring
        // the second entry below the last.
        if (rest.front() > rest.back()) continue;
        std::copy(rest.begin(), rest.end(), order.begin() + 1);
        VertexOrder vo{order};
        auto es = position_edges(g, vo);
        CrossingGraph cg = build_crossing_graph(es);
        ExactColorer ec(cg, 200'000'000);
        ec.run(best);
        if (ec.exhausted_budget)
            throw bounded_search_error("exact_stack_number: budget exhausted", best, {});
        if (!ec.best_color.empty() && ec.best < best) best = ec.best;
        if (best == 1) break;
        (void)es_template;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return best;
}

std::pair<Graph, StackLayout> restrict_layout(const Graph& g,
                                              const StackLayout& layout,
                                              const std::vector<bool>& keep) {
    require(keep.size() == static_cast<std::size_t>(g.vertex_count()),
            "restrict: mask size mismatch");
    std::vector<Vertex> remap(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<Vertex> new_order;
    for (std::int64_t p = 0; p < g.vertex_count(); ++p) {
        Vertex v = layout.order.at(p);
        if (keep[static_cast<std::size_t>(v - 1)]) new_order.push_back(v);
    }
    // New ids follow the old ids' relative order so labels stay aligned.
    Vertex next = 0;
    for (Vertex v = 1; v <= g.vertex_count(); ++v)
        if (keep[static_cast<std::size_t>(v - 1)]) remap[static_cast<std::size_t>(v - 1)] = ++next;

    std::vector<Edge> new_edges;
    std::vector<std::int32_t> new_page;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edge(i);
        if (!keep[static_cast<std::size_t>(e.u - 1)] || !keep[static_cast<std::size_t>(e.v - 1)])
            continue;
        new_edges.push_back(make_edge(remap[static_cast<std::size_t>(e.u - 1)],
                                      remap[static_cast<std::size_t>(e.v - 1)]));
        new_page.push_back(layout.page[i]);
    }
    // Graph() sorts its edge list; sort the pages the same way.
    std::vector<std::size_t> idx(new_edges.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return new_edges[a] < new_edges[b];
    });
    std::vector<Edge> sorted_edges(new_edges.size());
    std::vector<std::int32_t> sorted_page(new_edges.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        sorted_edges[i] = new_edges[idx[i]];
        sorted_page[i] = new_page[idx[i]];
    }

    std::vector<Label> new_labels;
    int dim = g.label_dim();
    if (dim > 0) {
        for (Vertex v = 1; v <= g.vertex_count(); ++v)
            if (keep[static_cast<std::size_t>(v - 1)]) new_labels.push_back(g.label(v));
    }
    Graph h(next, std::move(sorted_edges), dim, std::move(new_labels));

    std::vector<Vertex> mapped_order;
    mapped_order.reserve(new_order.size());
    for (Vertex v : new_order) mapped_order.push_back(remap[static_cast<std::size_t>(v - 1)]);
    StackLayout lay{VertexOrder(std::move(mapped_order)), std::move(sorted_page),
                    layout.pages};
    return {std::move(h), std::move(lay)};
}

}  // namespace stacklab
