#include "swapalg/surface.hpp"

namespace swapalg {

void SurfaceTriangulation::validate() const {
    if (triangles.empty()) throw std::domain_error("surface: no triangles");
    std::set<TriangleSide> seen;
    for (const auto& [a, b] : gluings) {
        for (const auto& side : {a, b}) {
            if (side.tri < 0 || side.tri >= (int)triangles.size())
                throw std::domain_error("surface: gluing refers to missing triangle");
            if (side.side < 0 || side.side > 2)
                throw std::domain_error("surface: side index out of range");
            if (!seen.insert(side).second)
                throw std::domain_error("surface: side glued more than once");
        }
        if (a == b) throw std::domain_error("surface: side glued to itself");
    }
}

SurfaceTriangulation two_triangle_square() {
    SurfaceTriangulation st;
    st.triangles = {{0, 1, 2}, {0, 2, 3}};
    // side 2 of triangle 0 is edge 2-0, side 0 of triangle 1 is edge 0-2
    st.gluings = {{TriangleSide{0, 2}, TriangleSide{1, 0}}};
    st.validate();
    return st;
}

SurfaceTriangulation punctured_torus() {
    SurfaceTriangulation st;
    // Two triangles with every side glued to the other triangle.
    st.triangles = {{0, 1, 2}, {0, 1, 2}};
    st.gluings = {{TriangleSide{0, 0}, TriangleSide{1, 1}},
                  {TriangleSide{0, 1}, TriangleSide{1, 2}},
                  {TriangleSide{0, 2}, TriangleSide{1, 0}}};
    st.validate();
    return st;
}

std::vector<std::pair<int, int>> adjacent_pairs(const SurfaceTriangulation& st) {
    st.validate();
    std::vector<std::pair<int, int>> out;
    for (const auto& [a, b] : st.gluings) out.emplace_back(a.tri, b.tri);
    return out;
}

Rational GluedGeom::linking(const PairGen& g, const PairGen& h) const {
    int c = circle_of(g.x);
    if (circle_of(g.y) != c || circle_of(h.x) != c || circle_of(h.y) != c) return 0;
    return linking_number(Circle{block_}, local(g.x), local(g.y), local(h.x), local(h.y));
}

SurfaceReport verify_surface_theta(const SurfaceTriangulation& st, int n,
                                   const PitParams& pit) {
    auto pairs = adjacent_pairs(st);
    if (pairs.empty()) throw std::domain_error("verify_surface_theta: need a glued pair");

    SurfaceReport report;
    report.n = n;
    report.ok = true;

    // Each glued pair carries a fresh circle of 4(n-1) points and is a
    // 4-gon with the shared edge as its diagonal.
    PolygonTriangulation square;
    square.k = 4;
    square.diagonals.insert(VertexEdge(0, 2));
    for (size_t i = 0; i < pairs.size(); ++i) {
        SurfacePairReport pr;
        pr.pair_index = (int)i;
        pr.t1 = pairs[i].first;
        pr.t2 = pairs[i].second;
        PitParams sub = pit;
        sub.seed = Rng::derive(pit.seed, (uint64_t)i);
        pr.disk = verify_poisson_hom(square, n, sub);
        if (!pr.disk.ok) report.ok = false;
        report.pairs.push_back(std::move(pr));
    }

    // Across circles every generator bracket vanishes, so the bracket
    // numerator of two images from different pairs is identically zero.
    report.cross_pair_zero = true;
    if (pairs.size() >= 2) {
        MarkedCircle mc{4, n};
        GluedGeom geom((int)pairs.size(), mc.s());
        BracketParams params;
        auto shift = [&](const SwapPoly& p, int circle) {
            SwapPoly out;
            for (const auto& [m, c] : p.terms()) {
                Monomial sm;
                for (const auto& g : m)
                    sm.push_back(PairGen{geom.global(circle, g.x), geom.global(circle, g.y)});
                out.add_term(std::move(sm), c);
            }
            return out;
        };
        auto verts = coord_vertices(square, n);
        for (size_t i = 0; i < pairs.size() && report.cross_pair_zero; ++i) {
            for (size_t j = i + 1; j < pairs.size() && report.cross_pair_zero; ++j) {
                for (const auto& va : verts) {
                    for (const auto& vb : verts) {
                        SwapFraction a = theta_of_vertex(mc, square, va);
                        SwapFraction b = theta_of_vertex(mc, square, vb);
                        SwapFraction sa(shift(a.num, (int)i), shift(a.den, (int)i));
                        SwapFraction sb(shift(b.num, (int)j), shift(b.den, (int)j));
                        SwapFraction br = frac_bracket(sa, sb, params, geom);
                        if (!br.num.is_zero()) { report.cross_pair_zero = false; break; }
                    }
                    if (!report.cross_pair_zero) break;
                }
            }
        }
    }
    if (!report.cross_pair_zero) report.ok = false;
    return report;
}

}  // namespace swapalg
