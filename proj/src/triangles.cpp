#include "stacklab/triangles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace stacklab {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

TriangleFamily build_triangle_family(int level) {
    require(level >= 0, "triangle family: level must be nonnegative");

    TriangleFamily f;
    f.points = 3;
    f.triangles = {Triangle{1, 2, 3}};
    f.edge_color = {{1, 1, 1}};
    f.palette_colors = 1;
    f.arc_of = {0, 1, 2};

    // Replacement table: child r of a parent (u,v,w) is u_{r+1} v_{V[r]} w_{W[r]}.
    static constexpr int V[8] = {4, 3, 2, 1, 8, 7, 6, 5};
    static constexpr int W[8] = {6, 5, 8, 7, 2, 1, 4, 3};
    // Color doubling: x' for u_1..u_4 rows, x'' for u_5..u_8; y' when the
    // v-index is odd, y'' when even; z' for w in {1,2,5,6}, z'' otherwise.
    static constexpr bool Zprime[9] = {false, true,  true,  false, false,
                                       true,  true,  false, false};

    for (int step = 0; step < level; ++step) {
        TriangleFamily next;
        next.points = f.points * 8;
        next.palette_colors = f.palette_colors * 2;
        next.arc_of.assign(static_cast<std::size_t>(next.points), 0);
        for (std::int64_t p = 1; p <= f.points; ++p)
            for (int r = 0; r < 8; ++r)
                next.arc_of[static_cast<std::size_t>((p - 1) * 8 + r)] =
                    f.arc_of[static_cast<std::size_t>(p - 1)];
        next.triangles.reserve(f.triangles.size() * 8);
        next.edge_color.reserve(f.triangles.size() * 8);
        for (std::size_t ti = 0; ti < f.triangles.size(); ++ti) {
            const Triangle& t = f.triangles[ti];
            const auto& col = f.edge_color[ti];
            for (int r = 0; r < 8; ++r) {
                std::int64_t u = (t.a - 1) * 8 + (r + 1);
                std::int64_t v = (t.b - 1) * 8 + V[r];
                std::int64_t w = (t.c - 1) * 8 + W[r];
                next.triangles.push_back(Triangle{u, v, w});
                std::int32_t x = static_cast<std::int32_t>(2 * col[0] - (r < 4 ? 1 : 0));
                std::int32_t y = static_cast<std::int32_t>(2 * col[1] - (V[r] % 2 == 1 ? 1 : 0));
                std::int32_t z = static_cast<std::int32_t>(2 * col[2] - (Zprime[W[r]] ? 1 : 0));
                next.edge_color.push_back({x, y, z});
            }
        }
        f = std::move(next);
    }
    return f;
}

bool chords_cross(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    if (a == c || a == d || b == c || b == d) return false;
    if (a > b) std::swap(a, b);
    bool c_in = c > a && c < b;
    bool d_in = d > a && d < b;
    return c_in != d_in;
}

bool triangles_intersect(const Triangle& s, const Triangle& t) {
    // All of t inside one open arc of s means the triangles are disjoint.
    auto inside_arc = [](std::int64_t lo, std::int64_t hi, const Triangle& x,
                         std::int64_t points) {
        auto in = [&](std::int64_t q) {
            if (lo < hi) return q > lo && q < hi;
            return q > lo || q < hi;  // wrapping arc
        };
        (void)points;
        return in(x.a) && in(x.b) && in(x.c);
    };
    std::int64_t points = std::max({s.a, s.b, s.c, t.a, t.b, t.c});
    if (inside_arc(s.a, s.b, t, points)) return false;
    if (inside_arc(s.b, s.c, t, points)) return false;
    if (inside_arc(s.c, s.a, t, points)) return false;
    return true;
}

namespace {

// Edge of a triangle by palette: 0 -> (a,b), 1 -> (b,c), 2 -> (c,a).
std::pair<std::int64_t, std::int64_t> palette_edge(const Triangle& t, int pal) {
    switch (pal) {
        case 0: return {t.a, t.b};
        case 1: return {t.b, t.c};
        default: return {t.c, t.a};
    }
}

}  // namespace

FamilyReport verify_family(const TriangleFamily& f) {
    FamilyReport rep;
    auto record = [&](bool& flag, const std::string& msg) {
        flag = false;
        if (rep.first_failure.empty()) rep.first_failure = msg;
    };

    std::vector<std::int64_t> used;
    for (const auto& t : f.triangles) {
        if (!(t.a < t.b && t.b < t.c))
            record(rep.vertex_disjoint, "triangle vertices not in increasing order");
        used.push_back(t.a);
        used.push_back(t.b);
        used.push_back(t.c);
    }
    std::sort(used.begin(), used.end());
    if (std::adjacent_find(used.begin(), used.end()) != used.end())
        record(rep.vertex_disjoint, "triangles share a vertex");
    if (!used.empty() && (used.front() < 1 || used.back() > f.points))
        record(rep.vertex_disjoint, "vertex outside the circle positions");

    for (std::size_t i = 0; i < f.triangles.size(); ++i)
        for (std::size_t j = i + 1; j < f.triangles.size(); ++j) {
            ++rep.pair_count;
            if (!triangles_intersect(f.triangles[i], f.triangles[j]))
                record(rep.pairwise_intersecting,
                       "triangles " + std::to_string(i) + " and " + std::to_string(j) +
                           " are disjoint");
            for (int pal = 0; pal < 3; ++pal) {
                auto [u1, v1] = palette_edge(f.triangles[i], pal);
                auto [u2, v2] = palette_edge(f.triangles[j], pal);
                if (chords_cross(u1, v1, u2, v2) &&
                    f.edge_color[i][static_cast<std::size_t>(pal)] ==
                        f.edge_color[j][static_cast<std::size_t>(pal)])
                    record(rep.coloring_valid,
                           "same-palette crossing edges share a color (pair " +
                               std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }
    return rep;
}

namespace {

struct OracleContext {
    int max_m;
    std::uint64_t budget;
    CubeBoundReport rep;

    bool spend() {
        if (rep.families + rep.colorings + ++rep.checks > budget) {
            rep.complete = false;
            return false;
        }
        return true;
    }
};

// All partitions of {1..3m} into m increasing triples, pairwise intersecting
// and vertex-disjoint by construction; calls fn on each.
void enumerate_families(int m, std::vector<Triangle>& acc,
                        std::vector<std::int64_t>& free_points,
                        const std::function<bool(const std::vector<Triangle>&)>& fn,
                        bool& keep_going) {
    if (!keep_going) return;
    if (acc.size() == static_cast<std::size_t>(m)) {
        keep_going = fn(acc);
        return;
    }
    // The smallest free point anchors the next triple, killing permutations
    // of the triangle list.
    std::int64_t a = free_points.front();
    std::vector<std::int64_t> rest(free_points.begin() + 1, free_points.end());
    for (std::size_t i = 0; i < rest.size() && keep_going; ++i)
        for (std::size_t j = i + 1; j < rest.size() && keep_going; ++j) {
            Triangle t{a, rest[i], rest[j]};
            bool ok = true;
            for (const auto& prev : acc)
                if (!triangles_intersect(prev, t)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            std::vector<std::int64_t> remaining;
            for (std::size_t q = 0; q < rest.size(); ++q)
                if (q != i && q != j) remaining.push_back(rest[q]);
            acc.push_back(t);
            enumerate_families(m, acc, remaining, fn, keep_going);
            acc.pop_back();
        }
}

}  // namespace

CubeBoundReport cube_bound_oracle(int max_m, int max_points, std::uint64_t budget) {
    require(max_m >= 1 && max_m <= 5, "cube_bound_oracle: max_m must be 1..5");
    require(max_points >= 3 * max_m && max_points <= 15,
            "cube_bound_oracle: max_points must cover 3*max_m and stay <= 15");

    OracleContext ctx{max_m, budget, {}};

    for (int m = 2; m <= max_m; ++m) {
        int n_edges = 3 * m;
        // Crossing relation between the 3m edges, rebuilt per family.
        auto handle_family = [&](const std::vector<Triangle>& fam) {
            ++ctx.rep.families;
            std::vector<std::pair<std::int64_t, std::int64_t>> edges;
            for (const auto& t : fam) {
                edges.push_back({t.a, t.b});
                edges.push_back({t.a, t.c});
                edges.push_back({t.b, t.c});
            }
            std::vector<std::uint32_t> conflict(static_cast<std::size_t>(n_edges), 0);
            for (int i = 0; i < n_edges; ++i)
                for (int j = i + 1; j < n_edges; ++j)
                    if (chords_cross(edges[static_cast<std::size_t>(i)].first,
                                     edges[static_cast<std::size_t>(i)].second,
                                     edges[static_cast<std::size_t>(j)].first,
                                     edges[static_cast<std::size_t>(j)].second)) {
                        conflict[static_cast<std::size_t>(i)] |= 1u << j;
                        conflict[static_cast<std::size_t>(j)] |= 1u << i;
                    }

            // Enumerate set partitions into crossing-free classes as
            // restricted-growth strings; every k-coloring is a renaming of
            // exactly one of them.
            std::vector<int> cls(static_cast<std::size_t>(n_edges), 0);
            std::vector<std::uint32_t> members;  // bitmask per class
            bool go = true;
            std::function<void(int, int)> rec = [&](int e, int used) {
                if (!go) return;
                if (e == n_edges) {
                    ++ctx.rep.colorings;
                    // f(i) = class triple of triangle i's (AB, AC, BC) edges.
                    for (int i = 0; i < m && go; ++i)
                        for (int j = i + 1; j < m && go; ++j) {
                            if (!ctx.spend()) {
                                go = false;
                                return;
                            }
                            if (cls[static_cast<std::size_t>(3 * i)] ==
                                    cls[static_cast<std::size_t>(3 * j)] &&
                                cls[static_cast<std::size_t>(3 * i + 1)] ==
                                    cls[static_cast<std::size_t>(3 * j + 1)] &&
                                cls[static_cast<std::size_t>(3 * i + 2)] ==
                                    cls[static_cast<std::size_t>(3 * j + 2)]) {
                                ctx.rep.injective = false;
                                std::ostringstream os;
                                os << "f collision between triangles " << i << " and " << j;
                                ctx.rep.failure = os.str();
                            }
                        }
                    return;
                }
                for (int c = 0; c <= used && c < n_edges; ++c) {
                    bool fresh = c == used;
                    if (!fresh && (members[static_cast<std::size_t>(c)] &
                                   conflict[static_cast<std::size_t>(e)]))
                        continue;  // class already holds a crossing partner
                    cls[static_cast<std::size_t>(e)] = c;
                    if (fresh)
                        members.push_back(1u << e);
                    else
                        members[static_cast<std::size_t>(c)] |= 1u << e;
                    rec(e + 1, fresh ? used + 1 : used);
                    if (fresh)
                        members.pop_back();
                    else
                        members[static_cast<std::size_t>(c)] &= ~(1u << e);
                    if (!go) return;
                }
            };
            rec(0, 0);
            return go;
        };

        std::vector<Triangle> acc;
        std::vector<std::int64_t> points(static_cast<std::size_t>(3 * m));
        for (int i = 0; i < 3 * m; ++i) points[static_cast<std::size_t>(i)] = i + 1;
        bool keep_going = true;
        enumerate_families(m, acc, points, handle_family, keep_going);
        if (!keep_going && !ctx.rep.complete) break;
    }
    return ctx.rep;
}

std::string triangle_family_to_string(const TriangleFamily& f) {
    std::ostringstream os;
    os << "triangles " << f.points << ' ' << f.triangles.size() << '\n';
    for (const auto& t : f.triangles)
        os << "t " << t.a << ' ' << t.b << ' ' << t.c << '\n';
    for (std::size_t i = 0; i < f.triangles.size(); ++i)
        for (int pal = 0; pal < 3; ++pal) {
            auto [u, v] = palette_edge(f.triangles[i], pal);
            os << "c " << u << ' ' << v << ' ' << pal << ' '
               << f.edge_color[i][static_cast<std::size_t>(pal)] << '\n';
        }
    return os.str();
}

TriangleFamily triangle_family_from_string(const std::string& text) {
    std::istringstream is(text);
    std::string tag;
    std::int64_t points = 0, count = 0;
    if (!(is >> tag >> points >> count) || tag != "triangles")
        throw std::runtime_error("parse error: expected 'triangles <points> <count>'");
    TriangleFamily f;
    f.points = points;
    f.triangles.resize(static_cast<std::size_t>(count));
    f.edge_color.assign(static_cast<std::size_t>(count), {0, 0, 0});
    std::map<std::pair<std::int64_t, std::int64_t>, std::pair<std::size_t, int>> lookup;
    for (std::int64_t i = 0; i < count; ++i) {
        Triangle t;
        if (!(is >> tag >> t.a >> t.b >> t.c) || tag != "t")
            throw std::runtime_error("parse error: expected triangle row");
        f.triangles[static_cast<std::size_t>(i)] = t;
        for (int pal = 0; pal < 3; ++pal) {
            auto [u, v] = palette_edge(t, pal);
            lookup[{std::min(u, v), std::max(u, v)}] = {static_cast<std::size_t>(i), pal};
        }
    }
    std::int64_t u, v;
    int pal;
    std::int32_t color;
    std::int32_t max_color = 0;
    while (is >> tag >> u >> v >> pal >> color) {
        if (tag != "c") throw std::runtime_error("parse error: expected color row");
        auto it = lookup.find({std::min(u, v), std::max(u, v)});
        if (it == lookup.end() || it->second.second != pal)
            throw std::runtime_error("parse error: color row names an unknown edge");
        f.edge_color[it->second.first][static_cast<std::size_t>(pal)] = color;
        max_color = std::max(max_color, color);
    }
    f.palette_colors = max_color;
    return f;
}

}  // namespace stacklab
