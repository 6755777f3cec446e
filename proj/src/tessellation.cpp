#include "stacklab/tessellation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "stacklab/io.hpp"

namespace stacklab {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

struct TemplateBuilder {
    FaceTemplate t;

    void edge(int a, int b) {
        t.edges.push_back(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
    }
    void tri(int a, int b, int c) { t.triangles.push_back({a, b, c}); }

    // Triangulated annulus: outer cycle (edges assumed present) meets a fresh
    // inner cycle. p[j] is the number of inner vertices joined to outer[j];
    // consecutive runs overlap in exactly one apex, so sum(p[j]-1) must equal
    // the inner length.
    void annulus(const std::vector<int>& outer, const std::vector<int>& p,
                 const std::vector<int>& inner) {
        std::size_t L = outer.size(), M = inner.size();
        std::size_t a = 0;
        std::size_t total = 0;
        for (auto q : p) total += static_cast<std::size_t>(q - 1);
        require(total == M && p.size() == L, "annulus: run lengths do not close");
        for (std::size_t j = 0; j < L; ++j) {
            for (int q = 0; q < p[j]; ++q) {
                edge(outer[j], inner[(a + static_cast<std::size_t>(q)) % M]);
                if (q + 1 < p[j])
                    tri(outer[j], inner[(a + static_cast<std::size_t>(q)) % M],
                        inner[(a + static_cast<std::size_t>(q) + 1) % M]);
            }
            std::size_t apex = (a + static_cast<std::size_t>(p[j]) - 1) % M;
            tri(outer[j], outer[(j + 1) % L], inner[apex]);
            a += static_cast<std::size_t>(p[j]) - 1;
        }
        for (std::size_t i = 0; i < M; ++i) edge(inner[i], inner[(i + 1) % M]);
    }

    void finish() {
        std::sort(t.edges.begin(), t.edges.end());
        require(std::adjacent_find(t.edges.begin(), t.edges.end()) == t.edges.end(),
                "template: duplicate edge");
        t.boundary_degree.assign(static_cast<std::size_t>(t.boundary), 0);
        for (auto [a, b] : t.edges) {
            if (a < t.boundary) ++t.boundary_degree[static_cast<std::size_t>(a)];
            if (b < t.boundary) ++t.boundary_degree[static_cast<std::size_t>(b)];
        }
    }
};

std::vector<int> ring(int first, int count) {
    std::vector<int> ids(static_cast<std::size_t>(count));
    std::iota(ids.begin(), ids.end(), first);
    return ids;
}

std::vector<int> repeat_pattern(std::initializer_list<int> pat, int times) {
    std::vector<int> out;
    for (int i = 0; i < times; ++i)
        for (int x : pat) out.push_back(x);
    return out;
}

FaceTemplate build_square_template() {
    TemplateBuilder b;
    b.t.kind = FaceKind::Square;
    b.t.sides = 4;
    b.t.boundary = 44;
    b.t.interior = 41;

    const int B = 44;
    for (int i = 0; i < B; ++i) b.edge(i, (i + 1) % B);

    // One degree-7 hub behind each corner, fanned over the seven boundary
    // vertices around it and closed by a chord.
    for (int s = 0; s < 4; ++s) {
        int z = 44 + s;
        std::vector<int> arc;
        for (int q = -3; q <= 3; ++q) arc.push_back(((11 * s + q) % B + B) % B);
        for (int v : arc) b.edge(z, v);
        for (std::size_t q = 0; q + 1 < arc.size(); ++q)
            b.tri(z, arc[q], arc[q + 1]);
        b.edge(arc.front(), arc.back());
        b.tri(z, arc.back(), arc.front());
    }

    // The region left after cutting the corner fans is a 24-gon whose cycle
    // alternates boundary paths s3..s8 with the four chords.
    std::vector<int> outer24;
    for (int s = 0; s < 4; ++s)
        for (int q = 3; q <= 8; ++q) outer24.push_back(11 * s + q);
    auto r1 = ring(48, 16);
    b.annulus(outer24, repeat_pattern({1, 3, 1, 1, 3, 1}, 4), r1);

    auto r2 = ring(64, 8);
    b.annulus(r1, repeat_pattern({1, 2}, 8), r2);

    auto r3 = ring(72, 8);
    b.annulus(r2, repeat_pattern({2}, 8), r3);

    auto r4 = ring(80, 4);
    b.annulus(r3, repeat_pattern({2, 1}, 4), r4);

    int centre = 84;
    for (int i = 0; i < 4; ++i) {
        b.edge(centre, r4[static_cast<std::size_t>(i)]);
        b.tri(centre, r4[static_cast<std::size_t>(i)], r4[static_cast<std::size_t>((i + 1) % 4)]);
    }

    b.finish();
    return b.t;
}

FaceTemplate build_hexagon_template() {
    TemplateBuilder b;
    b.t.kind = FaceKind::Hexagon;
    b.t.sides = 6;
    b.t.boundary = 66;
    b.t.interior = 37;

    const int B = 66;
    for (int i = 0; i < B; ++i) b.edge(i, (i + 1) % B);

    // Corners carry no interior edge: a chord between their two side
    // neighbors shields them.
    for (int s = 0; s < 6; ++s) {
        int c = 11 * s;
        int prev = (c + B - 1) % B, next = c + 1;
        b.edge(prev, next);
        b.tri(prev, c, next);
    }

    std::vector<int> outer60;
    for (int s = 0; s < 6; ++s)
        for (int q = 1; q <= 10; ++q) outer60.push_back(11 * s + q);
    auto r1 = ring(66, 24);
    b.annulus(outer60, repeat_pattern({1, 2, 1, 1, 2, 2, 1, 1, 2, 1}, 6), r1);

    auto r2 = ring(90, 12);
    b.annulus(r1, repeat_pattern({1, 1, 3, 1}, 6), r2);

    // The heavily loaded even ring vertices are shielded by chords between
    // their odd neighbors; the remaining hexagon is a fan from the centre.
    for (int s = 0; s < 6; ++s) {
        int lo = (2 * s + 11) % 12, mid = 2 * s, hi = 2 * s + 1;
        b.edge(r2[static_cast<std::size_t>(lo)], r2[static_cast<std::size_t>(hi)]);
        b.tri(r2[static_cast<std::size_t>(lo)], r2[static_cast<std::size_t>(mid)],
              r2[static_cast<std::size_t>(hi)]);
    }
    int centre = 102;
    for (int s = 0; s < 6; ++s) {
        b.edge(centre, r2[static_cast<std::size_t>(2 * s + 1)]);
        b.tri(centre, r2[static_cast<std::size_t>(2 * s + 1)],
              r2[static_cast<std::size_t>((2 * s + 3) % 12)]);
    }

    b.finish();
    return b.t;
}

}  // namespace

const FaceTemplate& square_template() {
    static const FaceTemplate t = build_square_template();
    return t;
}

const FaceTemplate& hexagon_template() {
    static const FaceTemplate t = build_hexagon_template();
    return t;
}

bool validate_template(const FaceTemplate& t, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    int V = t.boundary + t.interior;
    std::set<std::pair<int, int>> edges(t.edges.begin(), t.edges.end());
    if (edges.size() != t.edges.size()) return fail("duplicate edges");
    for (auto [a, b] : edges)
        if (a < 0 || b >= V || a >= b) return fail("bad edge endpoints");
    for (int i = 0; i < t.boundary; ++i) {
        int j = (i + 1) % t.boundary;
        if (!edges.count({std::min(i, j), std::max(i, j)}))
            return fail("boundary cycle edge missing");
    }

    // Each triangle's edges must exist; count incidences per edge.
    std::map<std::pair<int, int>, int> face_count;
    for (const auto& tr : t.triangles) {
        int v[3] = {tr[0], tr[1], tr[2]};
        for (int q = 0; q < 3; ++q) {
            int a = v[q], b = v[(q + 1) % 3];
            auto key = std::make_pair(std::min(a, b), std::max(a, b));
            if (!edges.count(key)) return fail("triangle uses a missing edge");
            ++face_count[key];
        }
    }
    for (auto [a, b] : edges) {
        bool on_cycle =
            (a < t.boundary && b < t.boundary &&
             ((b - a) % t.boundary == 1 || (a == 0 && b == t.boundary - 1)));
        int want = on_cycle ? 1 : 2;
        auto it = face_count.find({a, b});
        int got = it == face_count.end() ? 0 : it->second;
        if (got != want)
            return fail("edge (" + std::to_string(a) + "," + std::to_string(b) +
                        ") lies in " + std::to_string(got) + " triangles, expected " +
                        std::to_string(want));
    }

    // Euler relation for a triangulated disk.
    if (V - static_cast<int>(edges.size()) + static_cast<int>(t.triangles.size()) != 1)
        return fail("Euler count is off");

    // Vertex links: a cycle for interior vertices, a path along the two
    // boundary neighbors for boundary vertices.
    std::vector<std::vector<std::pair<int, int>>> link(static_cast<std::size_t>(V));
    for (const auto& tr : t.triangles)
        for (int q = 0; q < 3; ++q)
            link[static_cast<std::size_t>(tr[static_cast<std::size_t>(q)])].push_back(
                {tr[static_cast<std::size_t>((q + 1) % 3)], tr[static_cast<std::size_t>((q + 2) % 3)]});
    std::vector<int> degree(static_cast<std::size_t>(V), 0);
    for (auto [a, b] : edges) {
        ++degree[static_cast<std::size_t>(a)];
        ++degree[static_cast<std::size_t>(b)];
    }
    for (int v = 0; v < V; ++v) {
        std::map<int, int> cnt;
        for (auto [x, y] : link[static_cast<std::size_t>(v)]) {
            ++cnt[x];
            ++cnt[y];
        }
        if (static_cast<int>(cnt.size()) != degree[static_cast<std::size_t>(v)])
            return fail("link misses a neighbor of vertex " + std::to_string(v));
        int odd = 0;
        for (auto [_, c] : cnt) {
            if (c > 2) return fail("nonmanifold link at vertex " + std::to_string(v));
            if (c == 1) ++odd;
        }
        bool boundary_vertex = v < t.boundary;
        if (boundary_vertex && odd != 2)
            return fail("boundary vertex link is not a path");
        if (!boundary_vertex && odd != 0)
            return fail("interior vertex link is not a cycle");
        // Connectivity of the link.
        std::map<int, std::vector<int>> adj;
        for (auto [x, y] : link[static_cast<std::size_t>(v)]) {
            adj[x].push_back(y);
            adj[y].push_back(x);
        }
        if (!adj.empty()) {
            std::set<int> seen;
            std::vector<int> stack{adj.begin()->first};
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                if (!seen.insert(x).second) continue;
                for (int y : adj[x]) stack.push_back(y);
            }
            if (seen.size() != adj.size())
                return fail("disconnected link at vertex " + std::to_string(v));
        }
    }

    // Degree contract: max 7 everywhere, the exact boundary sequences, and
    // the same palindromic pattern on every side.
    for (int v = 0; v < V; ++v)
        if (degree[static_cast<std::size_t>(v)] > 7)
            return fail("vertex " + std::to_string(v) + " has degree " +
                        std::to_string(degree[static_cast<std::size_t>(v)]));
    const std::vector<int> want_side =
        t.kind == FaceKind::Square ? std::vector<int>{3, 3, 5, 5, 3, 3, 5, 5, 3, 3}
                                   : std::vector<int>{4, 4, 3, 3, 4, 4, 3, 3, 4, 4};
    int want_corner = t.kind == FaceKind::Square ? 3 : 2;
    for (int s = 0; s < t.sides; ++s) {
        if (t.boundary_degree[static_cast<std::size_t>(11 * s)] != want_corner)
            return fail("corner degree mismatch on side " + std::to_string(s));
        for (int q = 1; q <= 10; ++q)
            if (t.boundary_degree[static_cast<std::size_t>(11 * s + q)] !=
                want_side[static_cast<std::size_t>(q - 1)])
                return fail("side degree mismatch at side " + std::to_string(s) +
                            " position " + std::to_string(q));
    }
    for (int q = 1; q <= 10; ++q)
        if (want_side[static_cast<std::size_t>(q - 1)] !=
            want_side[static_cast<std::size_t>(10 - q)])
            return fail("side sequence is not palindromic");
    return true;
}

namespace {

// Corner offsets of the truncated octahedron's faces relative to its centre.
std::vector<std::array<Point3, 4>> square_offsets() {
    std::vector<std::array<Point3, 4>> out;
    for (int axis = 0; axis < 3; ++axis)
        for (int sign : {1, -1}) {
            std::array<Point3, 4> sq{};
            int u = (axis + 1) % 3, v = (axis + 2) % 3;
            Point3 base{};
            base[static_cast<std::size_t>(axis)] = 2 * sign;
            for (int q = 0; q < 4; ++q) {
                Point3 p = base;
                static constexpr int du[4] = {1, 0, -1, 0};
                static constexpr int dv[4] = {0, 1, 0, -1};
                p[static_cast<std::size_t>(u)] = du[q];
                p[static_cast<std::size_t>(v)] = dv[q];
                sq[static_cast<std::size_t>(q)] = p;
            }
            out.push_back(sq);
        }
    return out;
}

std::vector<std::array<Point3, 6>> hexagon_offsets() {
    static constexpr int base[6][3] = {{2, 1, 0}, {1, 2, 0}, {0, 2, 1},
                                       {0, 1, 2}, {1, 0, 2}, {2, 0, 1}};
    std::vector<std::array<Point3, 6>> out;
    for (int s1 : {1, -1})
        for (int s2 : {1, -1})
            for (int s3 : {1, -1}) {
                std::array<Point3, 6> hx{};
                for (int q = 0; q < 6; ++q)
                    hx[static_cast<std::size_t>(q)] = Point3{
                        s1 * base[q][0], s2 * base[q][1], s3 * base[q][2]};
                out.push_back(hx);
            }
    return out;
}

Point3 add(Point3 a, Point3 b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

}  // namespace

TessWindow enumerate_faces(int n) {
    require(n >= 1, "enumerate_faces: window size must be positive");
    TessWindow w;
    w.n = n;
    int lo = 4, hi = 4 * n + 2;
    auto inside = [&](const Point3& p) {
        for (int c : p)
            if (c < lo || c > hi) return false;
        return true;
    };

    auto squares = square_offsets();
    auto hexes = hexagon_offsets();

    std::map<std::vector<Point3>, TessFace> seen;
    std::set<Point3> used_cells;
    auto consider = [&](const Point3& centre, const auto& offs, FaceKind kind) {
        TessFace f;
        f.kind = kind;
        for (const auto& o : offs) f.corners.push_back(add(centre, o));
        for (const auto& c : f.corners)
            if (!inside(c)) return;
        std::vector<Point3> key = f.corners;
        std::sort(key.begin(), key.end());
        used_cells.insert(centre);
        seen.emplace(std::move(key), std::move(f));
    };

    for (int x = -1; x <= n + 1; ++x)
        for (int y = -1; y <= n + 1; ++y)
            for (int z = -1; z <= n + 1; ++z) {
                for (const Point3& centre :
                     {Point3{4 * x, 4 * y, 4 * z}, Point3{4 * x + 2, 4 * y + 2, 4 * z + 2}}) {
                    for (const auto& sq : squares) consider(centre, sq, FaceKind::Square);
                    for (const auto& hx : hexes) consider(centre, hx, FaceKind::Hexagon);
                }
            }

    for (auto& [key, face] : seen) {
        if (face.kind == FaceKind::Hexagon)
            ++w.hexagon_count;
        else
            ++w.square_count;
        w.faces.push_back(std::move(face));
    }
    w.cells.assign(used_cells.begin(), used_cells.end());
    return w;
}

namespace {

struct GlueContext {
    std::map<Point3, Vertex> corner_id;
    std::map<std::tuple<Point3, Point3, int>, Vertex> side_id;
    std::vector<VertexRole> role;
    std::vector<Point3> anchor;
    std::vector<std::int32_t> face_count;
    Vertex next = 0;

    Vertex fresh(VertexRole r, Point3 a) {
        role.push_back(r);
        anchor.push_back(a);
        face_count.push_back(0);
        return ++next;
    }

    Vertex corner(const Point3& p) {
        auto it = corner_id.find(p);
        if (it != corner_id.end()) return it->second;
        Vertex v = fresh(VertexRole::Corner, {22 * p[0], 22 * p[1], 22 * p[2]});
        corner_id.emplace(p, v);
        return v;
    }

    // q counts 1..10 from corner a toward corner b.
    Vertex side_vertex(const Point3& a, const Point3& b, int q) {
        Point3 lo = a, hi = b;
        int qq = q;
        if (!(lo < hi)) {
            std::swap(lo, hi);
            qq = 11 - q;
        }
        auto key = std::make_tuple(lo, hi, qq);
        auto it = side_id.find(key);
        if (it != side_id.end()) return it->second;
        Point3 anchor_p{22 * lo[0] + 2 * qq * (hi[0] - lo[0]),
                        22 * lo[1] + 2 * qq * (hi[1] - lo[1]),
                        22 * lo[2] + 2 * qq * (hi[2] - lo[2])};
        Vertex v = fresh(VertexRole::EdgeVertex, anchor_p);
        side_id.emplace(key, v);
        return v;
    }
};

}  // namespace

TessGraph build_Gn(int n) {
    TessWindow w = enumerate_faces(n);
    GlueContext ctx;
    std::vector<Edge> edges;

    for (const auto& face : w.faces) {
        const FaceTemplate& tpl =
            face.kind == FaceKind::Square ? square_template() : hexagon_template();

        // Deterministic traversal: start at the lex-smallest corner and walk
        // toward its smaller neighbor.
        std::size_t k = face.corners.size();
        std::size_t start = 0;
        for (std::size_t i = 1; i < k; ++i)
            if (face.corners[i] < face.corners[start]) start = i;
        bool forward =
            face.corners[(start + 1) % k] < face.corners[(start + k - 1) % k];
        auto corner_at = [&](int s) {
            std::size_t idx = forward
                                  ? (start + static_cast<std::size_t>(s)) % k
                                  : (start + k - static_cast<std::size_t>(s) % k) % k;
            return face.corners[idx];
        };

        // Map template-local ids to global vertex ids.
        std::vector<Vertex> local(static_cast<std::size_t>(tpl.boundary + tpl.interior), 0);
        for (int s = 0; s < tpl.sides; ++s) {
            Point3 ca = corner_at(s), cb = corner_at(s + 1);
            local[static_cast<std::size_t>(11 * s)] = ctx.corner(ca);
            for (int q = 1; q <= 10; ++q)
                local[static_cast<std::size_t>(11 * s + q)] = ctx.side_vertex(ca, cb, q);
        }
        // Face-interior vertices anchor at the centroid.
        Point3 sum{0, 0, 0};
        for (const auto& c : face.corners) sum = add(sum, c);
        Point3 centroid{static_cast<int>(22 * sum[0] / static_cast<int>(k)),
                        static_cast<int>(22 * sum[1] / static_cast<int>(k)),
                        static_cast<int>(22 * sum[2] / static_cast<int>(k))};
        for (int i = 0; i < tpl.interior; ++i)
            local[static_cast<std::size_t>(tpl.boundary + i)] =
                ctx.fresh(VertexRole::FaceVertex, centroid);

        for (int i = 0; i < tpl.boundary + tpl.interior; ++i) {
            Vertex v = local[static_cast<std::size_t>(i)];
            ++ctx.face_count[static_cast<std::size_t>(v - 1)];
        }
        for (auto [a, b] : tpl.edges)
            edges.push_back(make_edge(local[static_cast<std::size_t>(a)],
                                      local[static_cast<std::size_t>(b)]));
    }

    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    TessGraph out;
    out.graph = Graph(ctx.next, std::move(edges));
    out.role = std::move(ctx.role);
    out.anchor = std::move(ctx.anchor);
    out.face_count = std::move(ctx.face_count);
    out.n = n;
    out.hexagon_count = w.hexagon_count;
    out.square_count = w.square_count;
    return out;
}

bool is_interior_vertex(const TessGraph& g, Vertex v) {
    switch (g.role[static_cast<std::size_t>(v - 1)]) {
        case VertexRole::Corner: return g.face_count[static_cast<std::size_t>(v - 1)] == 6;
        case VertexRole::EdgeVertex: return g.face_count[static_cast<std::size_t>(v - 1)] == 3;
        case VertexRole::FaceVertex: return true;
    }
    return false;
}

TessStats tess_stats(const TessGraph& g) {
    TessStats s;
    s.n = g.n;
    s.vertices = g.graph.vertex_count();
    s.edges = static_cast<std::int64_t>(g.graph.edge_count());
    s.max_degree = g.graph.max_degree();
    s.hexagons = static_cast<std::int64_t>(g.hexagon_count);
    for (Vertex v = 1; v <= g.graph.vertex_count(); ++v)
        if (g.role[static_cast<std::size_t>(v - 1)] == VertexRole::Corner &&
            is_interior_vertex(g, v) && g.graph.degree(v) == 6)
            ++s.corner6_count;
    return s;
}

std::string tessgraph_to_string(const TessGraph& g) {
    std::ostringstream os;
    os << graph_to_string(g.graph);
    for (Vertex v = 1; v <= g.graph.vertex_count(); ++v) {
        const char* r =
            g.role[static_cast<std::size_t>(v - 1)] == VertexRole::Corner ? "corner"
            : g.role[static_cast<std::size_t>(v - 1)] == VertexRole::EdgeVertex
                ? "edge"
                : "face";
        os << "# role " << v << ' ' << r << '\n';
    }
    return os.str();
}

}  // namespace stacklab
