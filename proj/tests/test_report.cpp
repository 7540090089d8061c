#include <doctest.h>

#include "swapalg/report.hpp"

using namespace swapalg;

TEST_CASE("triangulation json round trip") {
    PolygonTriangulation t = fan_triangulation(6);
    Json j = to_json(t);
    PolygonTriangulation back = triangulation_from_json(j);
    CHECK(back.k == t.k);
    CHECK(back.diagonals == t.diagonals);
    Json bad = j;
    bad["diagonals"].push_back({1, 3});
    CHECK_THROWS(triangulation_from_json(bad));
}

TEST_CASE("quiver json") {
    Quiver q = build_quiver(fan_triangulation(4), 3);
    Json j = to_json(q);
    CHECK(j["vertices"].size() == 4);
    for (const auto& e : j["eps"]) {
        CHECK(e.size() == 3);
        CHECK(e[2].get<int>() > 0);
    }
    // empty quiver for the triangle
    Json j3 = to_json(build_quiver(fan_triangulation(3), 2));
    CHECK(j3["vertices"].empty());
    CHECK(j3["eps"].empty());
}

TEST_CASE("flag config json round trip") {
    Rng rng(1);
    FlagConfig cfg = random_flag_config(3, 2, 20, rng);
    FlagConfig back = flags_from_json(to_json(cfg));
    CHECK(back.k == cfg.k);
    CHECK(back.n == cfg.n);
    CHECK(back.basis == cfg.basis);
}

TEST_CASE("surface json") {
    Json j;
    j["triangles"] = {{0, 1, 2}, {0, 2, 3}};
    j["gluings"] = {{{0, 2}, {1, 0}}};
    SurfaceTriangulation st = surface_from_json(j);
    CHECK(st.triangles.size() == 2);
    CHECK(adjacent_pairs(st).size() == 1);
}

TEST_CASE("coordinates json keyed by labels") {
    Rng rng(2);
    FlagConfig cfg = random_flag_config(4, 2, 20, rng);
    PolygonTriangulation tri = fan_triangulation(4);
    Json j = coords_to_json(fg_coordinates(cfg, tri, 2));
    CHECK(j.size() == 1);
    CHECK(j.contains("edge(0,2):(1)"));
}

TEST_CASE("report json carries verdicts") {
    PitParams pit;
    pit.trials = 3;
    pit.seed = 7;
    PoissonHomReport r = verify_poisson_hom(fan_triangulation(4), 2, pit);
    Json j = to_json(r);
    CHECK(j["ok"].get<bool>());
    CHECK(j["pairs"][0]["verdict"] == "pass");
}
