#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "stacklab/graph.hpp"

namespace stacklab {

using Point3 = std::array<int, 3>;

enum class FaceKind : std::uint8_t { Square, Hexagon };

// One face of the truncated-octahedron tessellation: corners with integer
// coordinates in cyclic order.
struct TessFace {
    FaceKind kind = FaceKind::Square;
    std::vector<Point3> corners;  // 4 or 6, cyclic
};

struct TessWindow {
    int n = 0;
    std::vector<Point3> cells;    // cell centers with a face in the window
    std::vector<TessFace> faces;  // faces fully inside [4, 4n+2]^3
    std::size_t hexagon_count = 0;
    std::size_t square_count = 0;
};

// Faces of the infinite tessellation contained in [4, 4n+2]^3.
TessWindow enumerate_faces(int n);

// Combinatorial face template: boundary cycle of `boundary` vertices
// (corners every 11 positions), `interior` extra vertices, all inner faces
// triangles. Local vertex ids: 0..boundary-1 around the cycle, then
// interiors.
struct FaceTemplate {
    FaceKind kind = FaceKind::Square;
    int sides = 0;
    int boundary = 0;  // 11 * sides
    int interior = 0;
    std::vector<std::pair<int, int>> edges;        // includes the boundary cycle
    std::vector<std::array<int, 3>> triangles;     // the internal faces
    std::vector<int> boundary_degree;              // degree of each cycle vertex
};

// The two fixed templates; both satisfy the degree, palindrome, and
// max-degree-7 invariants checked by validate_template.
const FaceTemplate& square_template();
const FaceTemplate& hexagon_template();

// Full structural check: triangulated disk (edge/face incidences, vertex
// links), exact boundary degree sequences, palindromic sides, max degree 7.
bool validate_template(const FaceTemplate& t, std::string* why = nullptr);

enum class VertexRole : std::uint8_t { Corner, EdgeVertex, FaceVertex };

struct TessGraph {
    Graph graph;
    std::vector<VertexRole> role;          // per vertex
    std::vector<Point3> anchor;            // coordinates scaled by 22
    std::vector<std::int32_t> face_count;  // incident retained faces (corners/edge verts)
    int n = 0;
    std::size_t hexagon_count = 0;
    std::size_t square_count = 0;
};

// Glues template copies over every face of the window, identifying corners
// and the 10 subdivision vertices of each shared tessellation edge.
TessGraph build_Gn(int n);

// True for corner vertices whose full set of 6 incident faces was retained,
// and for edge vertices with all 3.
bool is_interior_vertex(const TessGraph& g, Vertex v);

struct TessStats {
    int n = 0;
    std::int64_t vertices = 0;
    std::int64_t edges = 0;
    int max_degree = 0;
    std::int64_t corner6_count = 0;  // interior corners (degree 6)
    std::int64_t hexagons = 0;
};

TessStats tess_stats(const TessGraph& g);

// Graphs-module text format plus "# role <id> corner|edge|face" comments.
std::string tessgraph_to_string(const TessGraph& g);

}  // namespace stacklab
