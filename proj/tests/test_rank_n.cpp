#include <doctest.h>

#include "swapalg/rank_n.hpp"

using namespace swapalg;

TEST_CASE("det_pairing expansion") {
    SwapPoly d = det_pairing({{0, 1}, {2, 3}});
    SwapPoly want = SwapPoly::pair_gen(0, 2) * SwapPoly::pair_gen(1, 3) -
                    SwapPoly::pair_gen(0, 3) * SwapPoly::pair_gen(1, 2);
    CHECK(d == want);
    // row swap flips the sign
    CHECK(det_pairing({{1, 0}, {2, 3}}) == -want);
    CHECK(det_pairing({{0, 1}, {3, 2}}) == -want);
    CHECK_THROWS_AS(det_pairing({{0, 1}, {2}}), std::domain_error);
}

TEST_CASE("model points have zero self-pairing and evaluation is a ring hom") {
    Rng rng(11);
    EvalPoint pt = sample_model_point(3, 6, 50, rng);
    PairingTable t(pt);
    for (int i = 0; i < 6; ++i) CHECK(t.at(i, i) == 0);

    SwapPoly p = det_pairing({{0, 1, 2}, {3, 4, 5}});
    SwapPoly q = SwapPoly::pair_gen(1, 4) + SwapPoly::constant(2);
    CHECK(evaluate(p * q, t) == evaluate(p, t) * evaluate(q, t));
    CHECK(evaluate(p + q, t) == evaluate(p, t) + evaluate(q, t));
}

TEST_CASE("same seed reproduces the same sample") {
    Rng a(99), b(99);
    EvalPoint pa = sample_model_point(2, 5, 100, a);
    EvalPoint pb = sample_model_point(2, 5, 100, b);
    CHECK(pa.vectors == pb.vectors);
    CHECK(pa.covectors == pb.covectors);
    Rng c(100);
    EvalPoint pc = sample_model_point(2, 5, 100, c);
    CHECK(pa.vectors != pc.vectors);
}

TEST_CASE("rank relation: (n+1)x(n+1) determinants vanish at model points") {
    for (int n = 2; n <= 3; ++n) {
        Rng rng(7 + n);
        EvalPoint pt = sample_model_point(n, 2 * n + 2, 100, rng);
        PairingTable t(pt);
        std::vector<PointId> rows, cols;
        for (int i = 0; i <= n; ++i) rows.push_back(i);
        for (int i = 0; i <= n; ++i) cols.push_back(n + 1 + i);
        CHECK(evaluate(det_pairing({rows, cols}), t) == 0);
    }
}

TEST_CASE("bracket_eval agrees with evaluating the symbolic bracket") {
    Circle c{8};
    SingleCircleGeom geom(c);
    BracketParams params{Rational(1), Rational(1, 3)};
    Rng rng(5);
    EvalPoint pt = sample_model_point(2, 8, 100, rng);
    PairingTable t(pt);
    SwapPoly p = det_pairing({{0, 1}, {4, 5}}) + SwapPoly::pair_gen(2, 7);
    SwapPoly q = det_pairing({{2, 3}, {6, 7}}) * SwapPoly::pair_gen(0, 5);
    CHECK(bracket_eval(p, q, params, geom, t) == evaluate(bracket(p, q, params, geom), t));
    CHECK(bracket_eval(q, p, params, geom, t) == -bracket_eval(p, q, params, geom, t));
}

TEST_CASE("evaluate_with_partials computes first derivatives") {
    Rng rng(3);
    EvalPoint pt = sample_model_point(2, 4, 30, rng);
    PairingTable t(pt);
    // p = (01)(23) + 2*(01): dp/d(01) = (23) + 2, dp/d(23) = (01)
    SwapPoly p = SwapPoly::pair_gen(0, 1) * SwapPoly::pair_gen(2, 3) +
                 Rational(2) * SwapPoly::pair_gen(0, 1);
    PolyEval e = evaluate_with_partials(p, t);
    CHECK(e.value == t.at(0, 1) * t.at(2, 3) + 2 * t.at(0, 1));
    CHECK(e.partials.at(PairGen{0, 1}) == t.at(2, 3) + 2);
    CHECK(e.partials.at(PairGen{2, 3}) == t.at(0, 1));
}

TEST_CASE("pit bounds") {
    CHECK(pit_bound_for_degree(10, 5000) == 5000);
    CHECK(pit_bound_for_degree(1, 0) == 1000);
    CHECK(pit_bound_for_degree(36, 0) == 14400);
    // per-trial failure ratio <= 1/200 with the automatic bound
    double e = pit_error_bound(36, 14400, 8);
    CHECK(e < 1e-12);
    CHECK(pit_error_bound(4, 1000, 1) == doctest::Approx(16.0 / 2001.0));
}

TEST_CASE("is_zero_mod_Rn separates members from non-members") {
    PitParams pit;
    pit.seed = 12345;
    for (int n = 2; n <= 3; ++n) {
        int s = 2 * n + 2;
        std::vector<PointId> rows, cols;
        for (int i = 0; i <= n; ++i) rows.push_back(i);
        for (int i = 0; i <= n; ++i) cols.push_back(n + 1 + i);
        SwapPoly gen = det_pairing({rows, cols});
        CHECK(is_zero_mod_Rn(gen, n, s, pit));
        CHECK(is_zero_mod_Rn(SwapPoly::pair_gen(0, 1) * gen, n, s, pit));
        CHECK_FALSE(is_zero_mod_Rn(SwapPoly::pair_gen(0, 1), n, s, pit));
        // n x n determinant is not in R_n
        std::vector<PointId> r2(rows.begin(), rows.end() - 1), c2(cols.begin(), cols.end() - 1);
        CHECK_FALSE(is_zero_mod_Rn(det_pairing({r2, c2}), n, s, pit));
    }
}

TEST_CASE("det_quotient shapes and right tuple policy") {
    CHECK(default_right_tuple(3) == std::vector<PointId>({0, 1, 2}));
    DetQuotient q;
    q.left = {4, 5};
    q.t = 6;
    q.y = 7;
    q.right = {0, 1, 2};
    SwapFraction f = det_quotient(q);
    CHECK(f.num == det_pairing({{4, 5, 6}, {0, 1, 2}}));
    CHECK(f.den == det_pairing({{4, 5, 7}, {0, 1, 2}}));
    q.right = {0, 0, 2};
    CHECK_THROWS_AS(det_quotient(q), std::domain_error);
    q.right = {0, 1};
    CHECK_THROWS_AS(det_quotient(q), std::domain_error);
}

TEST_CASE("cofactor expansion of a determinant bracket") {
    Circle c{8};
    SingleCircleGeom geom(c);
    BracketParams params;
    SwapPoly b = SwapPoly::pair_gen(1, 6) * SwapPoly::pair_gen(0, 7);
    DetSpec spec{{0, 2, 4}, {3, 5, 7}};
    CHECK(bracket_det_cofactor(spec, b, params, geom) ==
          bracket(det_pairing(spec), b, params, geom));
}

TEST_CASE("right side reference formula equals the direct bracket") {
    Circle c{8};
    SingleCircleGeom geom(c);
    BracketParams params;
    // chord 1 -> 5; rows 2,3,6 (right prefix 2,3), cols 4,7,0 (right prefix 4)
    std::vector<PointId> xs{2, 3, 6}, ys{4, 7, 0};
    SwapPoly direct = bracket(SwapPoly::pair_gen(1, 5), det_pairing({xs, ys}), params, geom);
    CHECK(delta_R_reference(c, 1, 5, xs, ys) == direct);
    // rows not anticlockwise
    CHECK_THROWS_AS(delta_R_reference(c, 1, 5, {3, 2, 6}, ys), std::domain_error);
    // right-side points not a prefix
    CHECK_THROWS_AS(delta_R_reference(c, 1, 5, {6, 2, 3}, ys), std::domain_error);
}

TEST_CASE("frac_eq_mod_Rn") {
    PitParams pit;
    pit.seed = 5150;
    int n = 2, s = 8;
    DetQuotient q1{{4}, 6, 7, {0, 1}};
    DetQuotient q2{{4}, 6, 7, {2, 3}};
    CHECK(frac_eq_mod_Rn(det_quotient(q1), det_quotient(q2), n, s, pit));
    DetQuotient q3{{4}, 7, 6, {0, 1}};  // swapped arguments: the reciprocal
    CHECK_FALSE(frac_eq_mod_Rn(det_quotient(q1), det_quotient(q3), n, s, pit));
}
