#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace stacklab {

// Inscribed triangle given by circle positions a < b < c (clockwise
// numbering 1..points).
struct Triangle {
    std::int64_t a = 0, b = 0, c = 0;

    friend bool operator==(const Triangle&, const Triangle&) = default;
};

// Palettes: 0 = AB edges, 1 = BC edges, 2 = CA edges.
struct TriangleFamily {
    std::int64_t points = 0;
    std::vector<Triangle> triangles;
    // Per triangle, the color of its AB/BC/CA edge within that palette
    // (colors are 1..palette_colors).
    std::vector<std::array<std::int32_t, 3>> edge_color;
    std::int32_t palette_colors = 0;
    // Arc membership of each point (0 = A, 1 = B, 2 = C) for constructed
    // families; empty for ad-hoc ones.
    std::vector<std::int8_t> arc_of;
};

// Recursive family: 8^level pairwise intersecting, pairwise vertex-disjoint
// triangles on 3*8^level points, each palette using 2^level colors.
TriangleFamily build_triangle_family(int level);

// Chords {a,b} and {c,d} on disjoint endpoints cross iff exactly one of c,d
// lies on the open arc from a to b.
bool chords_cross(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

// Vertex-disjoint inscribed triangles are disjoint iff one lies inside a
// single open arc between consecutive vertices of the other.
bool triangles_intersect(const Triangle& s, const Triangle& t);

struct FamilyReport {
    bool vertex_disjoint = true;
    bool pairwise_intersecting = true;
    bool coloring_valid = true;  // same-palette crossing edges differ
    std::uint64_t pair_count = 0;
    std::string first_failure;
};

FamilyReport verify_family(const TriangleFamily& f);

struct CubeBoundReport {
    bool injective = true;          // f(i) = (AB,AC,BC colors) never collides
    bool complete = true;           // false when the node budget ran out
    std::uint64_t families = 0;     // vertex-disjoint intersecting families
    std::uint64_t colorings = 0;    // valid colorings enumerated
    std::uint64_t checks = 0;       // injectivity comparisons
    std::string failure;
};

// Exhaustive check of the injection behind the m <= k^3 bound: enumerates
// every family of 2..max_m pairwise vertex-disjoint, pairwise intersecting
// triangles on 3m points (unused circle points cannot change any predicate)
// and every edge partition into crossing-free classes.
CubeBoundReport cube_bound_oracle(int max_m, int max_points,
                                  std::uint64_t budget = 2'000'000'000);

// Family text format: "triangles <points> <count>", rows "t <a> <b> <c>",
// color rows "c <u> <v> <palette> <color>".
std::string triangle_family_to_string(const TriangleFamily& f);
TriangleFamily triangle_family_from_string(const std::string& text);

}  // namespace stacklab
