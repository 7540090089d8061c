#include "swapalg/triangulation.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace swapalg {

namespace {

bool is_side(int k, const VertexEdge& e) {
    return e.b - e.a == 1 || (e.a == 0 && e.b == k - 1);
}

// Diagonals (a,b) and (c,d) cross iff exactly one of c,d lies strictly
// between a and b along the boundary.
bool crosses(const VertexEdge& e, const VertexEdge& f) {
    if (e.a == f.a || e.a == f.b || e.b == f.a || e.b == f.b) return false;
    auto strictly_between = [](int lo, int hi, int v) { return lo < v && v < hi; };
    return strictly_between(e.a, e.b, f.a) != strictly_between(e.a, e.b, f.b);
}

}  // namespace

void PolygonTriangulation::validate() const {
    if (k < 3) throw std::domain_error("triangulation: need k >= 3");
    if ((int)diagonals.size() != k - 3)
        throw std::domain_error("triangulation: expected k-3 diagonals");
    for (const auto& d : diagonals) {
        if (d.a < 0 || d.b >= k || d.a == d.b)
            throw std::domain_error("triangulation: diagonal endpoint out of range");
        if (is_side(k, d)) throw std::domain_error("triangulation: polygon side listed as diagonal");
    }
    for (auto it = diagonals.begin(); it != diagonals.end(); ++it) {
        auto jt = it;
        for (++jt; jt != diagonals.end(); ++jt)
            if (crosses(*it, *jt)) throw std::domain_error("triangulation: crossing diagonals");
    }
}

bool PolygonTriangulation::has_edge(const VertexEdge& e) const {
    return is_side(k, e) || diagonals.count(e) > 0;
}

std::vector<std::array<int, 3>> PolygonTriangulation::triangles() const {
    validate();
    std::vector<std::array<int, 3>> out;
    // Recurse on arcs a..b whose chord a-b is an edge of the triangulation.
    std::function<void(int, int)> go = [&](int a, int b) {
        if (b - a < 2) return;
        for (int c = a + 1; c < b; ++c) {
            if (has_edge(VertexEdge(a, c)) && has_edge(VertexEdge(c, b))) {
                out.push_back({a, c, b});
                go(a, c);
                go(c, b);
                return;
            }
        }
        throw std::domain_error("triangulation: no apex found, invalid diagonal set");
    };
    go(0, k - 1);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexEdge> PolygonTriangulation::interior_edges() const {
    return {diagonals.begin(), diagonals.end()};
}

PolygonTriangulation fan_triangulation(int k) {
    PolygonTriangulation t;
    t.k = k;
    for (int i = 2; i < k - 1; ++i) t.diagonals.insert(VertexEdge(0, i));
    t.validate();
    return t;
}

std::vector<PolygonTriangulation> enumerate_triangulations(int k) {
    if (k < 3) throw std::domain_error("enumerate_triangulations: need k >= 3");
    // T(a,b): all diagonal sets triangulating the arc polygon a..b.
    std::function<std::vector<std::set<VertexEdge>>(int, int)> go =
        [&](int a, int b) -> std::vector<std::set<VertexEdge>> {
        if (b - a < 2) return {{}};
        std::vector<std::set<VertexEdge>> out;
        for (int c = a + 1; c < b; ++c) {
            for (const auto& left : go(a, c)) {
                for (const auto& right : go(c, b)) {
                    std::set<VertexEdge> s = left;
                    s.insert(right.begin(), right.end());
                    if (c - a > 1) s.insert(VertexEdge(a, c));
                    if (b - c > 1) s.insert(VertexEdge(c, b));
                    out.push_back(std::move(s));
                }
            }
        }
        return out;
    };
    std::vector<PolygonTriangulation> result;
    for (auto& s : go(0, k - 1)) {
        PolygonTriangulation t;
        t.k = k;
        t.diagonals = std::move(s);
        result.push_back(std::move(t));
    }
    return result;
}

Quad quad_of_edge(const PolygonTriangulation& tri, const VertexEdge& e) {
    if (tri.diagonals.count(e) == 0)
        throw std::domain_error("quad_of_edge: not an interior edge");
    std::vector<int> opposite;
    for (const auto& t : tri.triangles()) {
        int cnt = 0, other = -1;
        for (int v : t) {
            if (v == e.a || v == e.b) ++cnt; else other = v;
        }
        if (cnt == 2) opposite.push_back(other);
    }
    if (opposite.size() != 2)
        throw std::domain_error("quad_of_edge: edge not shared by two triangles");
    Quad q;
    q.x = e.a;
    q.z = e.b;
    // y sits on the anticlockwise arc from x to z (x < y < z), t on the other.
    bool first_between = e.a < opposite[0] && opposite[0] < e.b;
    q.y = first_between ? opposite[0] : opposite[1];
    q.t = first_between ? opposite[1] : opposite[0];
    return q;
}

PolygonTriangulation flip(const PolygonTriangulation& t, const VertexEdge& d) {
    Quad q = quad_of_edge(t, d);
    PolygonTriangulation r = t;
    r.diagonals.erase(d);
    r.diagonals.insert(VertexEdge(q.y, q.t));
    r.validate();
    return r;
}

std::string label(const CoordVertex& v) {
    std::ostringstream os;
    if (const auto* e = std::get_if<EdgeVertex>(&v)) {
        os << "edge(" << e->edge.a << "," << e->edge.b << "):(" << e->i << ")";
    } else {
        const auto& f = std::get<FaceVertex>(v);
        os << "face(" << f.corners[0] << "," << f.corners[1] << "," << f.corners[2] << "):("
           << f.m << "," << f.l << "," << f.p << ")";
    }
    return os.str();
}

bool operator<(const CoordVertex& a, const CoordVertex& b) {
    if (a.index() != b.index()) return a.index() < b.index();
    if (a.index() == 0) return std::get<EdgeVertex>(a) < std::get<EdgeVertex>(b);
    return std::get<FaceVertex>(a) < std::get<FaceVertex>(b);
}

std::vector<CoordVertex> coord_vertices(const PolygonTriangulation& tri, int n) {
    if (n < 2) throw std::domain_error("coord_vertices: need n >= 2");
    std::vector<CoordVertex> out;
    for (const auto& e : tri.interior_edges())
        for (int i = 1; i < n; ++i) out.push_back(EdgeVertex{e, i});
    for (const auto& t : tri.triangles())
        for (int m = 1; m < n - 1; ++m)
            for (int l = 1; m + l < n; ++l)
                out.push_back(FaceVertex{{t[0], t[1], t[2]}, m, l, n - m - l});
    std::sort(out.begin(), out.end());
    return out;
}

int Quiver::epsilon(const CoordVertex& a, const CoordVertex& b) const {
    auto it = eps.find({a, b});
    return it == eps.end() ? 0 : it->second;
}

std::string Quiver::to_dot() const {
    std::ostringstream os;
    os << "digraph quiver {\n";
    for (const auto& v : vertices) os << "  \"" << label(v) << "\";\n";
    for (const auto& [key, val] : eps) {
        if (val <= 0) continue;
        for (int r = 0; r < val; ++r)
            os << "  \"" << label(key.first) << "\" -> \"" << label(key.second) << "\";\n";
    }
    os << "}\n";
    return os.str();
}

Quiver build_quiver(const PolygonTriangulation& tri, int n) {
    Quiver q;
    q.vertices = coord_vertices(tri, n);
    std::set<CoordVertex> present(q.vertices.begin(), q.vertices.end());

    auto add_arrow = [&](const CoordVertex& a, const CoordVertex& b) {
        if (!present.count(a) || !present.count(b)) return;
        q.eps[{a, b}] += 1;
        q.eps[{b, a}] -= 1;
        if (q.eps[{a, b}] == 0) q.eps.erase({a, b});
        if (q.eps[{b, a}] == 0) q.eps.erase({b, a});
    };

    for (const auto& t : tri.triangles()) {
        // Weights (m,l,p) at the ascending triple (t0,t1,t2); ascending order
        // is the anticlockwise orientation of the triangle in the polygon.
        auto to_vertex = [&](int m, int l, int p) -> CoordVertex {
            if (m > 0 && l > 0 && p > 0) return FaceVertex{{t[0], t[1], t[2]}, m, l, p};
            if (p == 0) {
                VertexEdge e(t[0], t[1]);
                return EdgeVertex{e, t[0] < t[1] ? m : l};
            }
            if (l == 0) {
                VertexEdge e(t[0], t[2]);
                return EdgeVertex{e, t[0] < t[2] ? m : p};
            }
            VertexEdge e(t[1], t[2]);
            return EdgeVertex{e, t[1] < t[2] ? l : p};
        };
        for (int m = 0; m <= n - 1; ++m) {
            for (int l = 0; m + l <= n - 1; ++l) {
                int p = n - 1 - m - l;
                CoordVertex v1 = to_vertex(m + 1, l, p);
                CoordVertex v2 = to_vertex(m, l + 1, p);
                CoordVertex v3 = to_vertex(m, l, p + 1);
                add_arrow(v1, v2);
                add_arrow(v2, v3);
                add_arrow(v3, v1);
            }
        }
    }
    return q;
}

}  // namespace swapalg
