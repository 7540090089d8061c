#include <doctest.h>

#include <cstdlib>

#include "swapalg/triangulation.hpp"

using namespace swapalg;

TEST_CASE("triangulation validation and triangles") {
    PolygonTriangulation t = fan_triangulation(5);
    CHECK(t.diagonals == std::set<VertexEdge>({VertexEdge(0, 2), VertexEdge(0, 3)}));
    auto tri = t.triangles();
    CHECK(tri == std::vector<std::array<int, 3>>({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}}));

    PolygonTriangulation bad;
    bad.k = 5;
    bad.diagonals = {VertexEdge(0, 2), VertexEdge(1, 3)};  // crossing
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    bad.diagonals = {VertexEdge(0, 2)};  // too few
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    bad.diagonals = {VertexEdge(0, 2), VertexEdge(0, 4)};  // side as diagonal
    CHECK_THROWS_AS(bad.validate(), std::domain_error);

    PolygonTriangulation tri3;
    tri3.k = 3;
    tri3.validate();
    CHECK(tri3.triangles().size() == 1);
}

TEST_CASE("triangulation enumeration counts are Catalan") {
    CHECK(enumerate_triangulations(3).size() == 1);
    CHECK(enumerate_triangulations(4).size() == 2);
    CHECK(enumerate_triangulations(5).size() == 5);
    CHECK(enumerate_triangulations(6).size() == 14);
    for (const auto& t : enumerate_triangulations(6)) t.validate();
}

TEST_CASE("quad of an interior edge") {
    PolygonTriangulation t = fan_triangulation(4);  // diagonal 0-2
    Quad q = quad_of_edge(t, VertexEdge(0, 2));
    CHECK(q.x == 0);
    CHECK(q.y == 1);
    CHECK(q.z == 2);
    CHECK(q.t == 3);
    CHECK_THROWS_AS(quad_of_edge(t, VertexEdge(1, 3)), std::domain_error);
}

TEST_CASE("flip replaces a diagonal by the opposite one") {
    PolygonTriangulation t = fan_triangulation(4);
    PolygonTriangulation f = flip(t, VertexEdge(0, 2));
    CHECK(f.diagonals == std::set<VertexEdge>({VertexEdge(1, 3)}));
    CHECK(flip(f, VertexEdge(1, 3)).diagonals == t.diagonals);
}

TEST_CASE("coordinate vertex counts") {
    // (n-1) per interior edge + (n-1)(n-2)/2 per triangle
    for (int n = 2; n <= 4; ++n) {
        for (int k = 4; k <= 6; ++k) {
            PolygonTriangulation t = fan_triangulation(k);
            size_t want = (size_t)((k - 3) * (n - 1) + (k - 2) * (n - 1) * (n - 2) / 2);
            CHECK(coord_vertices(t, n).size() == want);
        }
    }
}

TEST_CASE("labels are distinct and deterministic") {
    PolygonTriangulation t = fan_triangulation(5);
    auto vs = coord_vertices(t, 3);
    std::set<std::string> labels;
    for (const auto& v : vs) labels.insert(label(v));
    CHECK(labels.size() == vs.size());
    CHECK(label(vs.front()) == "edge(0,2):(1)");
}

TEST_CASE("quiver is antisymmetric and boundary-free") {
    PolygonTriangulation t = fan_triangulation(5);
    Quiver q = build_quiver(t, 3);
    for (const auto& [key, val] : q.eps) {
        CHECK(val == -q.epsilon(key.second, key.first));
        CHECK(val != 0);
    }
    // all eps endpoints are genuine coordinate vertices
    std::set<CoordVertex> present(q.vertices.begin(), q.vertices.end());
    for (const auto& [key, val] : q.eps) {
        CHECK(present.count(key.first) == 1);
        CHECK(present.count(key.second) == 1);
    }
}

TEST_CASE("quiver values for the square at n=2") {
    // single shear coordinate: no partner, empty eps
    PolygonTriangulation t = fan_triangulation(4);
    Quiver q = build_quiver(t, 2);
    CHECK(q.vertices.size() == 1);
    CHECK(q.eps.empty());
}

TEST_CASE("quiver values for the pentagon at n=2") {
    PolygonTriangulation t = fan_triangulation(5);
    Quiver q = build_quiver(t, 2);
    CHECK(q.vertices.size() == 2);
    EdgeVertex a{VertexEdge(0, 2), 1}, b{VertexEdge(0, 3), 1};
    // adjacent diagonals of the fan share vertex 0; i=j=n-1=1 couples them
    CHECK(std::abs(q.epsilon(a, b)) == 1);
}

TEST_CASE("square n=3 quiver matches the known case table") {
    PolygonTriangulation t = fan_triangulation(4);
    Quiver q = build_quiver(t, 3);
    CHECK(q.vertices.size() == 4);
    EdgeVertex e1{VertexEdge(0, 2), 1}, e2{VertexEdge(0, 2), 2};
    FaceVertex f1{{0, 1, 2}, 1, 1, 1}, f2{{0, 2, 3}, 1, 1, 1};
    // edge vertices of one edge never interact
    CHECK(q.epsilon(e1, e2) == 0);
    // face (m,l,p)=(1,1,1) against edge (i,n-i) of its xz side:
    // +1 at (i,1,n-i-1) means f1 vs the i=1 vertex of edge 0-2
    CHECK(q.epsilon(f1, e1) == 1);
    CHECK(q.epsilon(f1, e2) == -1);
    // in triangle 0-2-3 the shared edge is the xy side; same rule after relabeling
    CHECK(q.epsilon(f2, e1) != 0);
    CHECK(q.epsilon(f2, e2) != 0);
}

TEST_CASE("dot export lists vertices and arrows") {
    PolygonTriangulation t = fan_triangulation(5);
    Quiver q = build_quiver(t, 2);
    std::string dot = q.to_dot();
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("edge(0,2):(1)") != std::string::npos);
    CHECK(dot.find("->") != std::string::npos);
}
