#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "swapalg/rational.hpp"

namespace swapalg {

// Unordered edge between polygon vertices, stored with a < b.
struct VertexEdge {
    int a = 0;
    int b = 0;
    VertexEdge() = default;
    VertexEdge(int x, int y) : a(std::min(x, y)), b(std::max(x, y)) {}
    auto operator<=>(const VertexEdge&) const = default;
};

// Ideal triangulation of a convex k-gon with vertices 0..k-1 anticlockwise.
struct PolygonTriangulation {
    int k = 0;
    std::set<VertexEdge> diagonals;  // k-3 non-crossing diagonals

    void validate() const;  // throws std::domain_error
    std::vector<std::array<int, 3>> triangles() const;      // sorted triples
    std::vector<VertexEdge> interior_edges() const;         // = diagonals, sorted
    bool has_edge(const VertexEdge& e) const;               // side or diagonal
};

// Fan triangulation at vertex 0.
PolygonTriangulation fan_triangulation(int k);

// All triangulations of the k-gon (Catalan number C_{k-2} of them).
std::vector<PolygonTriangulation> enumerate_triangulations(int k);

// Replaces diagonal d by the other diagonal of its quadrilateral.
PolygonTriangulation flip(const PolygonTriangulation& t, const VertexEdge& d);

// The two triangles adjacent to an interior edge, as the quad (x, y, z, t):
// the edge is x-z with x < z, y is the opposite vertex with x < y < z, and
// t is the opposite vertex on the other arc.
struct Quad {
    int x = 0, y = 0, z = 0, t = 0;
};
Quad quad_of_edge(const PolygonTriangulation& tri, const VertexEdge& e);

// A vertex of the n-triangulation: either an interior edge point with
// weights (i, n-i) towards the two endpoints, or an interior face point
// with barycentric weights (m, l, p), m + l + p = n, all positive.
struct EdgeVertex {
    VertexEdge edge;
    int i = 0;  // weight at edge.a; weight at edge.b is n - i
    auto operator<=>(const EdgeVertex&) const = default;
};

struct FaceVertex {
    std::array<int, 3> corners{};  // sorted polygon vertices
    int m = 0, l = 0, p = 0;       // weights at corners[0..2]
    auto operator<=>(const FaceVertex&) const = default;
};

using CoordVertex = std::variant<EdgeVertex, FaceVertex>;

std::string label(const CoordVertex& v);
bool operator<(const CoordVertex& a, const CoordVertex& b);

// All coordinate vertices for the n-triangulation of `tri`.
std::vector<CoordVertex> coord_vertices(const PolygonTriangulation& tri, int n);

// Exchange matrix on coordinate vertices: eps[{a,b}] antisymmetric, sparse.
struct Quiver {
    std::vector<CoordVertex> vertices;
    std::map<std::pair<CoordVertex, CoordVertex>, int> eps;

    int epsilon(const CoordVertex& a, const CoordVertex& b) const;
    std::string to_dot() const;
};

Quiver build_quiver(const PolygonTriangulation& tri, int n);

}  // namespace swapalg
