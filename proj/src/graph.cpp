#include "stacklab/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace stacklab {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

Graph::Graph(Vertex n, std::vector<Edge> edges, int label_dim,
             std::vector<Label> labels)
    : n_(n), label_dim_(label_dim), edges_(std::move(edges)),
      labels_(std::move(labels)) {
    require(n_ >= 0, "graph: negative vertex count");
    require(label_dim_ >= 0 && label_dim_ <= 3, "graph: label dimension must be 0..3");
    if (label_dim_ > 0) {
        require(labels_.size() == static_cast<std::size_t>(n_),
                "graph: labels must cover every vertex");
    } else {
        require(labels_.empty(), "graph: labels given without a dimension");
    }
    for (auto& e : edges_) {
        if (e.u > e.v) std::swap(e.u, e.v);
        require(e.u >= 1 && e.v <= n_, "graph: edge endpoint out of range");
        require(e.u != e.v, "graph: self-loop");
    }
    std::sort(edges_.begin(), edges_.end());
    require(std::adjacent_find(edges_.begin(), edges_.end()) == edges_.end(),
            "graph: duplicate edge");

    adj_off_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (const auto& e : edges_) {
        ++adj_off_[static_cast<std::size_t>(e.u)];
        ++adj_off_[static_cast<std::size_t>(e.v)];
    }
    for (std::size_t i = 1; i <= static_cast<std::size_t>(n_); ++i)
        adj_off_[i] += adj_off_[i - 1];
    adj_.resize(edges_.size() * 2);
    std::vector<std::size_t> cursor(adj_off_.begin(), adj_off_.end());
    for (auto it = edges_.rbegin(); it != edges_.rend(); ++it) {
        adj_[--cursor[static_cast<std::size_t>(it->u)]] = it->v;
        adj_[--cursor[static_cast<std::size_t>(it->v)]] = it->u;
    }
    for (Vertex v = 1; v <= n_; ++v) {
        auto b = adj_.begin() + static_cast<std::ptrdiff_t>(adj_off_[static_cast<std::size_t>(v - 1)]);
        auto e = adj_.begin() + static_cast<std::ptrdiff_t>(adj_off_[static_cast<std::size_t>(v)]);
        std::sort(b, e);
    }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u < 1 || v < 1 || u > n_ || v > n_ || u == v) return false;
    if (degree(u) > degree(v)) std::swap(u, v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::int64_t Graph::edge_index(Vertex u, Vertex v) const {
    Edge e = make_edge(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || !(*it == e)) return -1;
    return it - edges_.begin();
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
    auto b = adj_off_[static_cast<std::size_t>(v - 1)];
    auto e = adj_off_[static_cast<std::size_t>(v)];
    return {adj_.data() + b, e - b};
}

int Graph::degree(Vertex v) const {
    return static_cast<int>(adj_off_[static_cast<std::size_t>(v)] -
                            adj_off_[static_cast<std::size_t>(v - 1)]);
}

int Graph::max_degree() const {
    int d = 0;
    for (Vertex v = 1; v <= n_; ++v) d = std::max(d, degree(v));
    return d;
}

DirectedGraph::DirectedGraph(Vertex n, std::vector<Arc> arcs)
    : n_(n), arcs_(std::move(arcs)) {
    require(n_ >= 0, "digraph: negative vertex count");
    for (const auto& a : arcs_) {
        require(a.from >= 1 && a.from <= n_ && a.to >= 1 && a.to <= n_,
                "digraph: arc endpoint out of range");
        require(a.from != a.to, "digraph: self-loop");
    }
    std::sort(arcs_.begin(), arcs_.end());
    require(std::adjacent_find(arcs_.begin(), arcs_.end()) == arcs_.end(),
            "digraph: duplicate arc");
}

Graph DirectedGraph::underlying() const {
    std::vector<Edge> es;
    es.reserve(arcs_.size());
    for (const auto& a : arcs_) es.push_back(make_edge(a.from, a.to));
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return Graph(n_, std::move(es));
}

Graph path(Vertex n) {
    require(n >= 1, "path: size must be positive");
    std::vector<Edge> es;
    es.reserve(static_cast<std::size_t>(n) - 1);
    for (Vertex i = 1; i < n; ++i) es.push_back({i, i + 1});
    return Graph(n, std::move(es));
}

Graph complete(Vertex t) {
    require(t >= 1, "complete: size must be positive");
    std::vector<Edge> es;
    es.reserve(static_cast<std::size_t>(t) * (t - 1) / 2);
    for (Vertex u = 1; u <= t; ++u)
        for (Vertex v = u + 1; v <= t; ++v) es.push_back({u, v});
    return Graph(t, std::move(es));
}

Graph star(Vertex n) {
    require(n >= 1, "star: leaf count must be positive");
    std::vector<Edge> es;
    es.reserve(static_cast<std::size_t>(n));
    for (Vertex v = 2; v <= n + 1; ++v) es.push_back({1, v});
    return Graph(n + 1, std::move(es));
}

Graph cycle(Vertex n) {
    require(n >= 3, "cycle: need at least 3 vertices");
    std::vector<Edge> es;
    for (Vertex i = 1; i < n; ++i) es.push_back({i, i + 1});
    es.push_back({1, n});
    return Graph(n, std::move(es));
}

DirectedGraph directed_path(Vertex n) {
    require(n >= 1, "path: size must be positive");
    std::vector<Arc> as;
    for (Vertex i = 1; i < n; ++i) as.push_back({i, i + 1});
    return DirectedGraph(n, std::move(as));
}

namespace {

int effective_dim(const Graph& g) { return g.labeled() ? g.label_dim() : 1; }

Label coord_of(const Graph& g, Vertex v) {
    if (g.labeled()) return g.label(v);
    return Label{v, 0, 0};
}

// Shared frame for the binary products: row-major vertex numbering plus
// concatenated labels.
struct ProductFrame {
    Vertex n1, n2;
    int d1, d2;
    std::vector<Label> labels;

    ProductFrame(const Graph& g1, const Graph& g2)
        : n1(g1.vertex_count()), n2(g2.vertex_count()),
          d1(effective_dim(g1)), d2(effective_dim(g2)) {
        require(d1 + d2 <= 3, "product: combined label dimension exceeds 3");
        labels.reserve(static_cast<std::size_t>(n1) * static_cast<std::size_t>(n2));
        for (Vertex x = 1; x <= n1; ++x) {
            Label lx = coord_of(g1, x);
            for (Vertex y = 1; y <= n2; ++y) {
                Label ly = coord_of(g2, y);
                Label l{};
                for (int i = 0; i < d1; ++i) l[static_cast<std::size_t>(i)] = lx[static_cast<std::size_t>(i)];
                for (int i = 0; i < d2; ++i) l[static_cast<std::size_t>(d1 + i)] = ly[static_cast<std::size_t>(i)];
                labels.push_back(l);
            }
        }
    }

    Vertex id(Vertex x, Vertex y) const { return (x - 1) * n2 + y; }
    Vertex count() const { return n1 * n2; }
};

}  // namespace

Graph cartesian_product(const Graph& g1, const Graph& g2) {
    ProductFrame f(g1, g2);
    std::vector<Edge> es;
    es.reserve(static_cast<std::size_t>(g1.vertex_count()) * g2.edge_count() +
               g1.edge_count() * static_cast<std::size_t>(g2.vertex_count()));
    for (Vertex x = 1; x <= f.n1; ++x)
        for (const auto& e : g2.edges())
            es.push_back(make_edge(f.id(x, e.u), f.id(x, e.v)));
    for (const auto& e : g1.edges())
        for (Vertex y = 1; y <= f.n2; ++y)
            es.push_back(make_edge(f.id(e.u, y), f.id(e.v, y)));
    return Graph(f.count(), std::move(es), f.d1 + f.d2, std::move(f.labels));
}

Graph strong_product(const Graph& g1, const Graph& g2) {
    ProductFrame f(g1, g2);
    std::vector<Edge> es;
    es.reserve(static_cast<std::size_t>(g1.vertex_count()) * g2.edge_count() +
               g1.edge_count() * static_cast<std::size_t>(g2.vertex_count()) +
               2 * g1.edge_count() * g2.edge_count());
    for (Vertex x = 1; x <= f.n1; ++x)
        for (const auto& e : g2.edges())
            es.push_back(make_edge(f.id(x, e.u), f.id(x, e.v)));
    for (const auto& e : g1.edges())
        for (Vertex y = 1; y <= f.n2; ++y)
            es.push_back(make_edge(f.id(e.u, y), f.id(e.v, y)));
    for (const auto& e1 : g1.edges())
        for (const auto& e2 : g2.edges()) {
            es.push_back(make_edge(f.id(e1.u, e2.u), f.id(e1.v, e2.v)));
            es.push_back(make_edge(f.id(e1.u, e2.v), f.id(e1.v, e2.u)));
        }
    return Graph(f.count(), std::move(es), f.d1 + f.d2, std::move(f.labels));
}

Graph triangulated_product(const DirectedGraph& d1, const DirectedGraph& d2,
                           const DiagonalFlip& flip) {
    Graph u1 = d1.underlying();
    Graph u2 = d2.underlying();
    ProductFrame f(u1, u2);
    std::vector<Edge> es;
    for (Vertex x = 1; x <= f.n1; ++x)
        for (const auto& e : u2.edges())
            es.push_back(make_edge(f.id(x, e.u), f.id(x, e.v)));
    for (const auto& e : u1.edges())
        for (Vertex y = 1; y <= f.n2; ++y)
            es.push_back(make_edge(f.id(e.u, y), f.id(e.v, y)));
    for (const auto& a : d1.arcs())
        for (const auto& b : d2.arcs()) {
            bool fl = flip && flip(0, 1, {std::min(a.from, a.to), std::min(b.from, b.to), 0});
            if (!fl)
                es.push_back(make_edge(f.id(a.from, b.from), f.id(a.to, b.to)));
            else
                es.push_back(make_edge(f.id(a.from, b.to), f.id(a.to, b.from)));
        }
    return Graph(f.count(), std::move(es), f.d1 + f.d2, std::move(f.labels));
}

Graph triangulated_product(const DirectedGraph& d1, const DirectedGraph& d2,
                           const DirectedGraph& d3, const DiagonalFlip& flip) {
    Graph u1 = d1.underlying();
    Graph u2 = d2.underlying();
    Graph u3 = d3.underlying();
    Vertex n1 = u1.vertex_count(), n2 = u2.vertex_count(), n3 = u3.vertex_count();
    require(effective_dim(u1) == 1 && effective_dim(u2) == 1 && effective_dim(u3) == 1,
            "product: three labeled factors exceed 3 coordinates");
    auto id = [&](Vertex x, Vertex y, Vertex z) {
        return (x - 1) * n2 * n3 + (y - 1) * n3 + z;
    };
    std::vector<Label> labels;
    labels.reserve(static_cast<std::size_t>(n1) * n2 * n3);
    for (Vertex x = 1; x <= n1; ++x)
        for (Vertex y = 1; y <= n2; ++y)
            for (Vertex z = 1; z <= n3; ++z) labels.push_back({x, y, z});

    std::vector<Edge> es;
    for (Vertex x = 1; x <= n1; ++x)
        for (Vertex y = 1; y <= n2; ++y)
            for (const auto& e : u3.edges())
                es.push_back(make_edge(id(x, y, e.u), id(x, y, e.v)));
    for (Vertex x = 1; x <= n1; ++x)
        for (const auto& e : u2.edges())
            for (Vertex z = 1; z <= n3; ++z)
                es.push_back(make_edge(id(x, e.u, z), id(x, e.v, z)));
    for (const auto& e : u1.edges())
        for (Vertex y = 1; y <= n2; ++y)
            for (Vertex z = 1; z <= n3; ++z)
                es.push_back(make_edge(id(e.u, y, z), id(e.v, y, z)));

    // One diagonal per 2-dimensional cell of each axis-aligned layer.
    for (Vertex x = 1; x <= n1; ++x)
        for (const auto& b : d2.arcs())
            for (const auto& c : d3.arcs()) {
                bool fl = flip && flip(1, 2, {x, std::min(b.from, b.to), std::min(c.from, c.to)});
                if (!fl)
                    es.push_back(make_edge(id(x, b.from, c.from), id(x, b.to, c.to)));
                else
                    es.push_back(make_edge(id(x, b.from, c.to), id(x, b.to, c.from)));
            }
    for (const auto& a : d1.arcs())
        for (Vertex y = 1; y <= n2; ++y)
            for (const auto& c : d3.arcs()) {
                bool fl = flip && flip(0, 2, {std::min(a.from, a.to), y, std::min(c.from, c.to)});
                if (!fl)
                    es.push_back(make_edge(id(a.from, y, c.from), id(a.to, y, c.to)));
                else
                    es.push_back(make_edge(id(a.from, y, c.to), id(a.to, y, c.from)));
            }
    for (const auto& a : d1.arcs())
        for (const auto& b : d2.arcs())
            for (Vertex z = 1; z <= n3; ++z) {
                bool fl = flip && flip(0, 1, {std::min(a.from, a.to), std::min(b.from, b.to), z});
                if (!fl)
                    es.push_back(make_edge(id(a.from, b.from, z), id(a.to, b.to, z)));
                else
                    es.push_back(make_edge(id(a.from, b.to, z), id(a.to, b.from, z)));
            }
    return Graph(n1 * n2 * n3, std::move(es), 3, std::move(labels));
}

}  // namespace stacklab
