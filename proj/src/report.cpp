#include "swapalg/report.hpp"

namespace swapalg {

namespace {

std::string rat(const Rational& r) { return to_string(r); }

}  // namespace

Json to_json(const PolygonTriangulation& t) {
    Json j;
    j["k"] = t.k;
    j["diagonals"] = Json::array();
    for (const auto& d : t.diagonals) j["diagonals"].push_back({d.a, d.b});
    return j;
}

PolygonTriangulation triangulation_from_json(const Json& j) {
    PolygonTriangulation t;
    t.k = j.at("k").get<int>();
    for (const auto& d : j.at("diagonals"))
        t.diagonals.insert(VertexEdge(d.at(0).get<int>(), d.at(1).get<int>()));
    t.validate();
    return t;
}

Json to_json(const Quiver& q) {
    Json j;
    j["vertices"] = Json::array();
    for (const auto& v : q.vertices) j["vertices"].push_back(label(v));
    std::map<CoordVertex, int> index;
    for (size_t i = 0; i < q.vertices.size(); ++i) index[q.vertices[i]] = (int)i;
    j["eps"] = Json::array();
    for (const auto& [key, val] : q.eps) {
        if (val <= 0) continue;  // antisymmetry: store the positive half
        j["eps"].push_back({index.at(key.first), index.at(key.second), val});
    }
    return j;
}

Json to_json(const PoissonHomReport& r) {
    Json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["trials"] = r.trials;
    j["bound"] = r.bound;
    j["ok"] = r.ok;
    j["pairs"] = Json::array();
    for (const auto& p : r.pairs) {
        Json pj;
        pj["A"] = label(p.a);
        pj["B"] = label(p.b);
        pj["expected"] = rat(p.expected);
        pj["computed"] = rat(p.computed);
        pj["error_bound"] = p.error_bound;
        pj["verdict"] = p.ok ? "pass" : "fail";
        j["pairs"].push_back(std::move(pj));
    }
    return j;
}

Json to_json(const MainPropReport& r) {
    Json j;
    j["n"] = r.n;
    j["trials"] = r.trials;
    j["bound"] = r.bound;
    j["error_bound"] = r.error_bound;
    j["ok"] = r.ok;
    j["cases"] = Json::array();
    for (const auto& c : r.cases) {
        Json cj;
        cj["mlp"] = {c.a[0], c.a[1], c.a[2]};
        cj["mlp_prime"] = {c.b[0], c.b[1], c.b[2]};
        cj["expected"] = rat(c.expected);
        cj["computed"] = rat(c.computed);
        cj["verdict"] = c.ok ? "pass" : "fail";
        j["cases"].push_back(std::move(cj));
    }
    return j;
}

Json to_json(const SurfaceReport& r) {
    Json j;
    j["n"] = r.n;
    j["ok"] = r.ok;
    j["cross_pair_zero"] = r.cross_pair_zero;
    j["pairs"] = Json::array();
    for (const auto& p : r.pairs) {
        Json pj;
        pj["pair"] = p.pair_index;
        pj["triangles"] = {p.t1, p.t2};
        pj["disk"] = to_json(p.disk);
        j["pairs"].push_back(std::move(pj));
    }
    return j;
}

Json to_json(const PoissonLieReport& r) {
    Json j;
    j["m"] = r.m;
    j["n"] = r.n;
    j["ok"] = r.ok;
    j["cases"] = Json::array();
    for (const auto& c : r.cases) {
        j["cases"].push_back(
            {{"ij", {c.a.i, c.a.j}}, {"ipjp", {c.b.i, c.b.j}}, {"verdict", c.ok ? "pass" : "fail"}});
    }
    return j;
}

Json to_json(const GrassmannReport& r) {
    Json j;
    j["n"] = r.n;
    j["m"] = r.m;
    j["alpha"] = rat(r.alpha);
    j["beta"] = rat(r.beta);
    j["trials"] = r.trials;
    j["bound"] = r.bound;
    j["error_bound"] = r.error_bound;
    j["ok"] = r.ok;
    j["cases"] = Json::array();
    for (const auto& c : r.cases) {
        j["cases"].push_back({{"ij", {c.i, c.j}},
                              {"ipjp", {c.ip, c.jp}},
                              {"verdict", c.ok ? "pass" : "fail"}});
    }
    return j;
}

Json to_json(const FlagConfig& cfg) {
    Json j;
    j["k"] = cfg.k;
    j["n"] = cfg.n;
    j["flags"] = Json::array();
    for (const auto& m : cfg.basis) {
        Json mj = Json::array();
        for (const auto& row : m) {
            Json rj = Json::array();
            for (const auto& x : row) rj.push_back(rat(x));
            mj.push_back(std::move(rj));
        }
        j["flags"].push_back(std::move(mj));
    }
    return j;
}

FlagConfig flags_from_json(const Json& j) {
    FlagConfig cfg;
    cfg.k = j.at("k").get<int>();
    cfg.n = j.at("n").get<int>();
    for (const auto& mj : j.at("flags")) {
        Matrix m;
        for (const auto& rj : mj) {
            std::vector<Rational> row;
            for (const auto& x : rj) row.push_back(parse_rational(x.get<std::string>()));
            if ((int)row.size() != cfg.n) throw std::invalid_argument("flag row size mismatch");
            m.push_back(std::move(row));
        }
        if ((int)m.size() != cfg.n) throw std::invalid_argument("flag matrix size mismatch");
        cfg.basis.push_back(std::move(m));
    }
    if ((int)cfg.basis.size() != cfg.k) throw std::invalid_argument("flag count mismatch");
    return cfg;
}

SurfaceTriangulation surface_from_json(const Json& j) {
    SurfaceTriangulation st;
    for (const auto& t : j.at("triangles"))
        st.triangles.push_back({t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>()});
    for (const auto& g : j.at("gluings")) {
        TriangleSide a{g.at(0).at(0).get<int>(), g.at(0).at(1).get<int>()};
        TriangleSide b{g.at(1).at(0).get<int>(), g.at(1).at(1).get<int>()};
        st.gluings.emplace_back(a, b);
    }
    st.validate();
    return st;
}

Json coords_to_json(const std::map<CoordVertex, Rational>& coords) {
    Json j = Json::object();
    for (const auto& [v, val] : coords) j[label(v)] = rat(val);
    return j;
}

}  // namespace swapalg
