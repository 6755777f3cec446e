#include "stacklab/product_layouts.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace stacklab {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// Relabels pages so the nonempty ones are consecutive starting at 1.
void compress_pages(StackLayout& l) {
    std::vector<std::int32_t> map(static_cast<std::size_t>(l.pages) + 1, 0);
    for (auto p : l.page) map[static_cast<std::size_t>(p)] = 1;
    std::int32_t next = 0;
    for (std::size_t p = 1; p < map.size(); ++p)
        if (map[p]) map[p] = ++next;
    for (auto& p : l.page) p = map[static_cast<std::size_t>(p)];
    l.pages = next;
}

}  // namespace

bool is_proper(const Graph& g, const ProperColoring& c) {
    if (c.color.size() != static_cast<std::size_t>(g.vertex_count())) return false;
    for (const auto& e : g.edges())
        if (c.color[static_cast<std::size_t>(e.u - 1)] ==
            c.color[static_cast<std::size_t>(e.v - 1)])
            return false;
    for (auto col : c.color)
        if (col < 1 || col > c.colors) return false;
    return true;
}

DispersableLayout make_dispersable(const Graph& g, StackLayout layout) {
    if (!is_dispersable(g, layout))
        throw std::invalid_argument("make_dispersable: some page is not a matching");
    std::int32_t d = layout.pages;
    return DispersableLayout{std::move(layout), d};
}

VertexOrder snake_order(Vertex n) {
    require(n >= 1, "snake_order: size must be positive");
    std::vector<Vertex> order(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (Vertex x = 1; x <= n; ++x) {
        bool reversed = (x - 1) % 2 == 1;
        for (Vertex y = 1; y <= n; ++y) {
            std::int64_t pos = static_cast<std::int64_t>(x - 1) * n +
                               (reversed ? n - y : y - 1);
            order[static_cast<std::size_t>(pos)] = (x - 1) * n + y;
        }
    }
    return VertexOrder(std::move(order));
}

StackLayout grid_stack_layout(Vertex n, bool dispersable) {
    require(n >= 2, "grid_stack_layout: need n >= 2");
    Graph g = strong_product(path(n), path(n));
    VertexOrder order = snake_order(n);

    std::vector<std::int32_t> page(g.edge_count(), 0);
    for (std::size_t idx = 0; idx < g.edge_count(); ++idx) {
        const Edge& e = g.edge(idx);
        const Label& a = g.label(e.u);
        const Label& b = g.label(e.v);
        Vertex x1 = a[0], y1 = a[1], x2 = b[0], y2 = b[1];
        std::int32_t s;
        if (x1 == x2) {
            // Horizontal: consecutive snake positions.
            s = dispersable ? (std::min(y1, y2) % 2 == 1 ? 7 : 8) : 1;
        } else {
            if (x1 > x2) {
                std::swap(x1, x2);
                std::swap(y1, y2);
            }
            bool even_pair = (x1 - 1) % 2 == 0;
            int kind = y1 == y2 ? 0 : (y2 == y1 + 1 ? 1 : 2);  // vertical/NE/NW
            if (dispersable) {
                s = static_cast<std::int32_t>((even_pair ? 1 : 4) + kind);
            } else {
                if (kind <= 1)
                    s = even_pair ? 1 : 3;
                else
                    s = even_pair ? 2 : 4;
            }
        }
        page[idx] = s;
    }
    return StackLayout{std::move(order), std::move(page), dispersable ? 8 : 4};
}

ProperColoring grid_coloring(Vertex n) {
    require(n >= 1, "grid_coloring: size must be positive");
    std::vector<std::int32_t> color(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (Vertex x = 1; x <= n; ++x)
        for (Vertex y = 1; y <= n; ++y)
            color[static_cast<std::size_t>((x - 1) * n + y - 1)] =
                static_cast<std::int32_t>(2 * (x % 2) + (y % 2) + 1);
    return ProperColoring{std::move(color), 4};
}

ProductWithPathResult product_with_path(const Graph& g, const DispersableLayout& d,
                                        const ProperColoring& rho,
                                        const HadamardMatrix& h, int m) {
    int p = h.order();
    require(p >= 2, "product_with_path: Hadamard order must be at least 2");
    require(rho.colors <= p, "product_with_path: coloring uses more colors than the matrix order");
    require(is_proper(g, rho), "product_with_path: coloring is not proper");
    if (!is_dispersable(g, d.layout))
        throw std::invalid_argument("product_with_path: layout is not dispersable");

    PermutationFamily family(normalize_last_column(h), m);
    std::int64_t n = family.n();
    require(n >= 1, "product_with_path: empty path");

    Graph product = strong_product(g, path(static_cast<Vertex>(n)));

    // Vertex order: blocks in the G-layout order, block v ordered so that
    // (v, i) sits at local position pi_{rho(v)}(i).
    std::vector<Vertex> order(static_cast<std::size_t>(product.vertex_count()));
    for (std::int64_t b = 0; b < g.vertex_count(); ++b) {
        Vertex v = d.layout.order.at(b);
        int k = rho.color[static_cast<std::size_t>(v - 1)];
        for (std::int64_t i = 1; i <= n; ++i) {
            std::int64_t pos = b * n + family.apply(k, i) - 1;
            order[static_cast<std::size_t>(pos)] =
                static_cast<Vertex>((v - 1) * n + i);
        }
    }

    std::int32_t intra = p >= 2 ? 2 * p - 3 : 0;

    // First pass: phi values of the inter-path edges, grouped by G-edge.
    std::vector<std::int64_t> phi(product.edge_count(), -1);
    std::vector<std::int64_t> owner(product.edge_count(), -1);
    std::vector<std::size_t> group_size(g.edge_count(), 0);
    for (std::size_t idx = 0; idx < product.edge_count(); ++idx) {
        const Edge& e = product.edge(idx);
        Vertex va = static_cast<Vertex>((e.u - 1) / n + 1);
        Vertex vb = static_cast<Vertex>((e.v - 1) / n + 1);
        if (va == vb) continue;
        std::int64_t ia = (e.u - 1) % n + 1;
        std::int64_t ib = (e.v - 1) % n + 1;
        std::int64_t ge = g.edge_index(va, vb);
        phi[idx] = family.apply(rho.color[static_cast<std::size_t>(va - 1)], ia) +
                   family.apply(rho.color[static_cast<std::size_t>(vb - 1)], ib);
        owner[idx] = ge;
        ++group_size[static_cast<std::size_t>(ge)];
    }

    // Distinct phi values per G-edge, sorted; the rank of an edge's phi value
    // inside its own group is the shared page slot within psi's page.
    std::vector<std::size_t> group_off(g.edge_count() + 1, 0);
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        group_off[i + 1] = group_off[i] + group_size[i];
    std::vector<std::int64_t> pool(group_off.back());
    {
        std::vector<std::size_t> cur(group_off.begin(), group_off.end() - 1);
        for (std::size_t idx = 0; idx < product.edge_count(); ++idx)
            if (owner[idx] >= 0)
                pool[cur[static_cast<std::size_t>(owner[idx])]++] = phi[idx];
    }
    std::vector<std::size_t> distinct_off(g.edge_count() + 1, 0);
    for (std::size_t ge = 0; ge < g.edge_count(); ++ge) {
        auto b = pool.begin() + static_cast<std::ptrdiff_t>(group_off[ge]);
        auto e = pool.begin() + static_cast<std::ptrdiff_t>(group_off[ge + 1]);
        std::sort(b, e);
        distinct_off[ge + 1] = static_cast<std::size_t>(std::unique(b, e) - b);
    }

    // Page slot counts per psi-page: the widest group in the page.
    std::vector<std::size_t> slots(static_cast<std::size_t>(d.d), 0);
    for (std::size_t ge = 0; ge < g.edge_count(); ++ge) {
        std::int32_t k = d.layout.page[ge];
        slots[static_cast<std::size_t>(k - 1)] =
            std::max(slots[static_cast<std::size_t>(k - 1)], distinct_off[ge + 1]);
    }
    std::vector<std::size_t> slot_off(static_cast<std::size_t>(d.d) + 1, 0);
    for (std::size_t k = 0; k < slots.size(); ++k)
        slot_off[k + 1] = slot_off[k] + slots[k];
    std::int32_t inter = static_cast<std::int32_t>(slot_off.back());

    std::vector<std::int32_t> page(product.edge_count(), 0);
    for (std::size_t idx = 0; idx < product.edge_count(); ++idx) {
        const Edge& e = product.edge(idx);
        if (owner[idx] < 0) {
            // Intra-path edge: the shared split by the base-m valuation of
            // the smaller path index.
            std::int64_t ia = (e.u - 1) % n + 1;
            std::int64_t ib = (e.v - 1) % n + 1;
            std::int64_t i = std::min(ia, ib);
            std::int32_t s;
            if (m == 1 || i % m != 0) {
                s = 1;
            } else {
                std::int64_t q = i;
                int a = 0;
                while (q % m == 0) {
                    q /= m;
                    ++a;
                }
                s = static_cast<std::int32_t>(2 * a + (q % 2 == 0 ? 1 : 0));
            }
            page[idx] = s;
        } else {
            std::size_t ge = static_cast<std::size_t>(owner[idx]);
            auto b = pool.begin() + static_cast<std::ptrdiff_t>(group_off[ge]);
            auto e2 = b + static_cast<std::ptrdiff_t>(distinct_off[ge + 1]);
            std::size_t rank =
                static_cast<std::size_t>(std::lower_bound(b, e2, phi[idx]) - b);
            std::int32_t k = d.layout.page[ge];
            page[idx] = intra + static_cast<std::int32_t>(
                                    slot_off[static_cast<std::size_t>(k - 1)] + rank) + 1;
        }
    }

    ProductWithPathResult out{std::move(product),
                              StackLayout{VertexOrder(std::move(order)),
                                          std::move(page), intra + inter},
                              intra, inter};
    return out;
}

namespace {

int ceil_cbrt(Vertex n) {
    int m = 1;
    while (static_cast<std::int64_t>(m) * m * m < n) ++m;
    return m;
}

}  // namespace

TriplePathResult triple_path_layout(Vertex n) {
    require(n >= 2, "triple_path_layout: need n >= 2");
    int m = ceil_cbrt(n);
    Graph grid = strong_product(path(n), path(n));
    DispersableLayout d = make_dispersable(grid, grid_stack_layout(n, true));
    ProperColoring rho = grid_coloring(n);
    auto built = product_with_path(grid, d, rho, reference_order4(), m);

    // The engine's stack count obeys the d(2p-1)m + (2p-3) budget before any
    // relabeling (p = 4, so 56m + 5 with the 8-page grid layout).
    require(built.layout.pages <= 56 * m + 5,
            "triple_path_layout: stack budget exceeded");

    std::int64_t path_len = 1;
    for (int i = 0; i < 3; ++i) path_len *= m;
    Graph graph = std::move(built.product);
    StackLayout layout = std::move(built.layout);
    if (path_len > n) {
        std::vector<bool> keep(static_cast<std::size_t>(graph.vertex_count()), false);
        for (Vertex v = 1; v <= graph.vertex_count(); ++v)
            keep[static_cast<std::size_t>(v - 1)] = ((v - 1) % path_len) < n;
        auto [h, l] = restrict_layout(graph, layout, keep);
        graph = std::move(h);
        layout = std::move(l);
    }
    compress_pages(layout);
    int used = layout.pages;
    return TriplePathResult{std::move(graph), std::move(layout), m, used};
}

QueueTriplePathResult queue_layout_triple_path(Vertex n) {
    require(n >= 2, "queue_layout_triple_path: need n >= 2");
    DirectedGraph dp = directed_path(n);
    Graph g = triangulated_product(dp, dp, dp);

    std::int64_t n2 = static_cast<std::int64_t>(n) * n;
    std::vector<std::int32_t> page(g.edge_count(), 0);
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        std::int64_t diff = g.edge(i).v - g.edge(i).u;
        std::int32_t q;
        if (diff == 1)
            q = 1;
        else if (diff == n || diff == n + 1)
            q = 2;
        else if (diff == n2 || diff == n2 + 1)
            q = 3;
        else if (diff == n2 + n)
            q = 4;
        else
            throw std::logic_error("queue_layout_triple_path: unexpected difference " +
                                   std::to_string(diff));
        page[i] = q;
    }
    QueueLayout l{VertexOrder::identity(g.vertex_count()), std::move(page), 4};
    return QueueTriplePathResult{std::move(g), std::move(l)};
}

StarForestPartition star_forest_partition(const Graph& g, const StackLayout& one_stack) {
    LayoutReport rep = validate_stack_layout(g, one_stack);
    if (!rep.valid || one_stack.pages > 1)
        throw std::invalid_argument(
            "star_forest_partition: need a valid 1-stack layout witness");

    Vertex n = g.vertex_count();
    std::vector<std::set<Vertex>> adj(static_cast<std::size_t>(n) + 1);
    for (const auto& e : g.edges()) {
        adj[static_cast<std::size_t>(e.u)].insert(e.v);
        adj[static_cast<std::size_t>(e.v)].insert(e.u);
    }

    // Peel vertices of degree <= 2, adding the fill edge between the two
    // remaining neighbors; outerplanar graphs always admit this.
    std::vector<char> removed(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::int64_t> peel_pos(static_cast<std::size_t>(n) + 1, -1);
    std::vector<std::vector<Vertex>> peel_nbrs(static_cast<std::size_t>(n) + 1);
    for (std::int64_t step = 0; step < n; ++step) {
        Vertex pick = 0;
        for (Vertex v = 1; v <= n; ++v)
            if (!removed[static_cast<std::size_t>(v)] &&
                adj[static_cast<std::size_t>(v)].size() <= 2) {
                pick = v;
                break;
            }
        if (pick == 0)
            throw std::invalid_argument(
                "star_forest_partition: graph has no vertex of degree <= 2 "
                "(not outerplanar)");
        peel_pos[static_cast<std::size_t>(pick)] = step;
        for (Vertex u : adj[static_cast<std::size_t>(pick)])
            peel_nbrs[static_cast<std::size_t>(pick)].push_back(u);
        for (Vertex u : peel_nbrs[static_cast<std::size_t>(pick)])
            adj[static_cast<std::size_t>(u)].erase(pick);
        if (peel_nbrs[static_cast<std::size_t>(pick)].size() == 2) {
            Vertex x = peel_nbrs[static_cast<std::size_t>(pick)][0];
            Vertex y = peel_nbrs[static_cast<std::size_t>(pick)][1];
            adj[static_cast<std::size_t>(x)].insert(y);
            adj[static_cast<std::size_t>(y)].insert(x);
        }
        adj[static_cast<std::size_t>(pick)].clear();
        removed[static_cast<std::size_t>(pick)] = 1;
    }

    // Greedy proper 3-coloring in reverse peel order; each vertex's peel-time
    // neighbors are already colored and pairwise adjacent.
    std::vector<std::int32_t> color(static_cast<std::size_t>(n) + 1, 0);
    std::vector<Vertex> by_reverse(static_cast<std::size_t>(n));
    for (Vertex v = 1; v <= n; ++v)
        by_reverse[static_cast<std::size_t>(n - 1 - peel_pos[static_cast<std::size_t>(v)])] = v;
    for (Vertex v : by_reverse) {
        bool used[4] = {false, false, false, false};
        for (Vertex u : peel_nbrs[static_cast<std::size_t>(v)])
            used[color[static_cast<std::size_t>(u)]] = true;
        for (std::int32_t c = 1; c <= 3; ++c)
            if (!used[c]) {
                color[static_cast<std::size_t>(v)] = c;
                break;
            }
    }

    StarForestPartition out;
    out.forest_of_edge.resize(g.edge_count());
    out.centre_of_edge.resize(g.edge_count());
    out.witness_forest.resize(static_cast<std::size_t>(n));
    for (Vertex v = 1; v <= n; ++v)
        out.witness_forest[static_cast<std::size_t>(v - 1)] =
            color[static_cast<std::size_t>(v)];
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edge(i);
        // The endpoint peeled later comes earlier in reverse order and is the
        // star centre.
        Vertex c = peel_pos[static_cast<std::size_t>(e.u)] >
                           peel_pos[static_cast<std::size_t>(e.v)]
                       ? e.u
                       : e.v;
        out.forest_of_edge[i] = color[static_cast<std::size_t>(c)];
        out.centre_of_edge[i] = c;
    }
    return out;
}

bool check_star_forest_partition(const Graph& g, const StarForestPartition& p,
                                 std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (p.forest_of_edge.size() != g.edge_count() ||
        p.centre_of_edge.size() != g.edge_count() ||
        p.witness_forest.size() != static_cast<std::size_t>(g.vertex_count()))
        return fail("partition arrays have wrong sizes");

    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        if (p.forest_of_edge[i] < 1 || p.forest_of_edge[i] > 3)
            return fail("edge assigned outside forests 1..3");
        const Edge& e = g.edge(i);
        if (p.centre_of_edge[i] != e.u && p.centre_of_edge[i] != e.v)
            return fail("designated centre is not an endpoint");
    }

    // Union-find per forest; every component must be a star whose edges all
    // name the same hub.
    for (std::int32_t a = 1; a <= 3; ++a) {
        std::vector<Vertex> parent(static_cast<std::size_t>(g.vertex_count()) + 1);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<Vertex(Vertex)> find = [&](Vertex x) {
            while (parent[static_cast<std::size_t>(x)] != x) {
                parent[static_cast<std::size_t>(x)] =
                    parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
                x = parent[static_cast<std::size_t>(x)];
            }
            return x;
        };
        for (std::size_t i = 0; i < g.edge_count(); ++i)
            if (p.forest_of_edge[i] == a) {
                Vertex ru = find(g.edge(i).u), rv = find(g.edge(i).v);
                if (ru == rv) return fail("forest contains a cycle");
                parent[static_cast<std::size_t>(ru)] = rv;
            }
        std::map<Vertex, Vertex> comp_centre;
        for (std::size_t i = 0; i < g.edge_count(); ++i)
            if (p.forest_of_edge[i] == a) {
                Vertex root = find(g.edge(i).u);
                auto [it, inserted] = comp_centre.emplace(root, p.centre_of_edge[i]);
                if (!inserted && it->second != p.centre_of_edge[i])
                    return fail("component edges disagree on the centre");
            }
        for (std::size_t i = 0; i < g.edge_count(); ++i)
            if (p.forest_of_edge[i] == a) {
                Vertex c = comp_centre[find(g.edge(i).u)];
                if (g.edge(i).u != c && g.edge(i).v != c)
                    return fail("component is not a star (edge misses the hub)");
            }
        // Witness claims for this forest.
        for (Vertex v = 1; v <= g.vertex_count(); ++v) {
            if (p.witness_forest[static_cast<std::size_t>(v - 1)] != a) continue;
            Vertex root = find(v);
            auto it = comp_centre.find(root);
            if (it != comp_centre.end() && it->second != v)
                return fail("vertex " + std::to_string(v) +
                            " is not the centre of its component in its witness forest");
        }
    }
    for (Vertex v = 1; v <= g.vertex_count(); ++v) {
        auto w = p.witness_forest[static_cast<std::size_t>(v - 1)];
        if (w < 1 || w > 3) return fail("witness forest out of range");
    }
    return true;
}

StackLayout complete_graph_layout(Vertex t) {
    require(t >= 1, "complete_graph_layout: size must be positive");
    if (t == 1) return StackLayout{VertexOrder::identity(1), {}, 0};

    // Zigzag Hamiltonian-path decomposition for even order; odd orders embed
    // in K_{t+1} and drop the extra vertex.
    Vertex tt = t % 2 == 0 ? t : t + 1;
    Graph kt = complete(t);
    std::vector<std::int32_t> page(kt.edge_count());
    for (std::size_t i = 0; i < kt.edge_count(); ++i) {
        std::int64_t s = (kt.edge(i).u - 1 + kt.edge(i).v - 1) % tt;
        page[i] = static_cast<std::int32_t>(s / 2) + 1;
    }
    return StackLayout{VertexOrder::identity(t), std::move(page),
                       static_cast<std::int32_t>((t + 1) / 2)};
}

ProductWithCompleteResult product_with_complete(const Graph& g,
                                                const StackLayout& layout,
                                                Vertex t) {
    require(t >= 1, "product_with_complete: t must be positive");
    LayoutReport rep = validate_stack_layout(g, layout);
    if (!rep.valid)
        throw std::invalid_argument("product_with_complete: invalid layout of G");

    Graph product = strong_product(g, complete(t));
    std::vector<Vertex> order(static_cast<std::size_t>(product.vertex_count()));
    for (std::int64_t b = 0; b < g.vertex_count(); ++b) {
        Vertex v = layout.order.at(b);
        for (Vertex i = 1; i <= t; ++i)
            order[static_cast<std::size_t>(b * t + i - 1)] = (v - 1) * t + i;
    }

    std::vector<std::int32_t> page(product.edge_count(), 0);

    if (g.edge_count() == 0) {
        // Blocks are disjoint complete graphs; reuse the zigzag pages.
        StackLayout kt = complete_graph_layout(t);
        Graph ktg = complete(t);
        for (std::size_t idx = 0; idx < product.edge_count(); ++idx) {
            const Edge& e = product.edge(idx);
            Vertex i = (e.u - 1) % t + 1, j = (e.v - 1) % t + 1;
            page[idx] = kt.page[static_cast<std::size_t>(ktg.edge_index(i, j))];
        }
        return ProductWithCompleteResult{
            std::move(product),
            StackLayout{VertexOrder(std::move(order)), std::move(page), kt.pages}};
    }

    std::int32_t s = layout.pages;
    // Star-forest refinement of every page of the layout of G.
    std::vector<StarForestPartition> parts(static_cast<std::size_t>(s));
    std::vector<std::vector<std::int64_t>> page_edge_index(static_cast<std::size_t>(s));
    for (std::int32_t k = 1; k <= s; ++k) {
        std::vector<Edge> es;
        std::vector<std::int64_t> back;
        for (std::size_t i = 0; i < g.edge_count(); ++i)
            if (layout.page[i] == k) {
                es.push_back(g.edge(i));
                back.push_back(static_cast<std::int64_t>(i));
            }
        Graph sub(g.vertex_count(), es);
        StackLayout one{layout.order,
                        std::vector<std::int32_t>(es.size(), 1),
                        es.empty() ? 0 : 1};
        parts[static_cast<std::size_t>(k - 1)] = star_forest_partition(sub, one);
        page_edge_index[static_cast<std::size_t>(k - 1)] = std::move(back);
    }
    // Map each G-edge to its (forest, centre) refinement.
    std::vector<std::int32_t> forest_of(g.edge_count(), 0);
    std::vector<Vertex> centre_of(g.edge_count(), 0);
    for (std::int32_t k = 1; k <= s; ++k) {
        const auto& part = parts[static_cast<std::size_t>(k - 1)];
        const auto& back = page_edge_index[static_cast<std::size_t>(k - 1)];
        for (std::size_t j = 0; j < back.size(); ++j) {
            forest_of[static_cast<std::size_t>(back[j])] = part.forest_of_edge[j];
            centre_of[static_cast<std::size_t>(back[j])] = part.centre_of_edge[j];
        }
    }

    auto page_id = [&](std::int32_t k, std::int32_t a, Vertex i) {
        return (k - 1) * 3 * t + (a - 1) * t + i;
    };

    for (std::size_t idx = 0; idx < product.edge_count(); ++idx) {
        const Edge& e = product.edge(idx);
        Vertex vu = (e.u - 1) / t + 1, vv = (e.v - 1) / t + 1;
        Vertex iu = (e.u - 1) % t + 1, iv = (e.v - 1) % t + 1;
        if (vu == vv) {
            // Copy of K_t inside block vu: fan from the leftmost endpoint,
            // filed under the block vertex's centre witness in page 1.
            std::int32_t a = parts[0].witness_forest[static_cast<std::size_t>(vu - 1)];
            page[idx] = page_id(1, a, std::min(iu, iv));
        } else {
            std::int64_t ge = g.edge_index(vu, vv);
            std::int32_t k = layout.page[static_cast<std::size_t>(ge)];
            std::int32_t a = forest_of[static_cast<std::size_t>(ge)];
            Vertex centre = centre_of[static_cast<std::size_t>(ge)];
            Vertex i = centre == vu ? iu : iv;
            page[idx] = page_id(k, a, i);
        }
    }

    StackLayout out{VertexOrder(std::move(order)), std::move(page), 3 * s * t};
    compress_pages(out);
    return ProductWithCompleteResult{std::move(product), std::move(out)};
}

}  // namespace stacklab
