#include <doctest.h>

#include "swapalg/poly.hpp"
#include "swapalg/rank_n.hpp"

using namespace swapalg;

namespace {

SwapPoly random_poly(Rng& rng, int s, int max_terms, int max_deg) {
    SwapPoly p;
    int terms = 1 + (int)rng.uniform(0, max_terms - 1);
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        int deg = 1 + (int)rng.uniform(0, max_deg - 1);
        for (int d = 0; d < deg; ++d) {
            PointId x = (PointId)rng.uniform(0, s - 1);
            PointId y = (PointId)rng.uniform(0, s - 1);
            m.push_back(PairGen{x, y});
        }
        p.add_term(std::move(m), rng.uniform(-5, 5));
    }
    return p;
}

}  // namespace

TEST_CASE("self-pairs vanish and terms merge") {
    SwapPoly p;
    p.add_term({PairGen{1, 1}}, 7);
    CHECK(p.is_zero());
    p.add_term({PairGen{0, 1}, PairGen{2, 3}}, 2);
    p.add_term({PairGen{2, 3}, PairGen{0, 1}}, -2);  // same sorted monomial
    CHECK(p.is_zero());
}

TEST_CASE("ring operations") {
    SwapPoly a = SwapPoly::pair_gen(0, 1);
    SwapPoly b = SwapPoly::pair_gen(2, 3);
    CHECK((a + b) - b == a);
    CHECK(a * b == b * a);
    CHECK((a * Rational(0)).is_zero());
    CHECK((a - a).is_zero());
    CHECK(a.degree() == 1);
    CHECK((a * b).degree() == 2);
    CHECK(SwapPoly::constant(3).degree() == 0);
}

TEST_CASE("bracket on generators matches the defining formula") {
    Circle c{4};
    SingleCircleGeom geom(c);
    SwapPoly lhs = bracket(SwapPoly::pair_gen(0, 2), SwapPoly::pair_gen(1, 3),
                           BracketParams{}, geom);
    // J(02,13) = 1, (1,0)-bracket gives {02,13} = 03 * 12
    SwapPoly want = SwapPoly::pair_gen(0, 3) * SwapPoly::pair_gen(1, 2);
    CHECK(lhs == want);

    BracketParams both{Rational(2), Rational(3, 2)};
    SwapPoly lhs2 = bracket(SwapPoly::pair_gen(0, 2), SwapPoly::pair_gen(1, 3), both, geom);
    SwapPoly want2 = Rational(2) * (SwapPoly::pair_gen(0, 3) * SwapPoly::pair_gen(1, 2)) +
                     Rational(3, 2) * (SwapPoly::pair_gen(0, 2) * SwapPoly::pair_gen(1, 3));
    CHECK(lhs2 == want2);
}

TEST_CASE("bracket is bilinear antisymmetric and Leibniz") {
    Circle c{6};
    SingleCircleGeom geom(c);
    BracketParams params{Rational(1), Rational(-1, 2)};
    Rng rng(2024);
    for (int it = 0; it < 30; ++it) {
        SwapPoly p = random_poly(rng, 6, 3, 2);
        SwapPoly q = random_poly(rng, 6, 3, 2);
        SwapPoly r = random_poly(rng, 6, 3, 2);
        CHECK(bracket(p, q, params, geom) == -bracket(q, p, params, geom));
        CHECK(bracket(p + q, r, params, geom) ==
              bracket(p, r, params, geom) + bracket(q, r, params, geom));
        CHECK(bracket(p * q, r, params, geom) ==
              p * bracket(q, r, params, geom) + q * bracket(p, r, params, geom));
    }
}

TEST_CASE("bracket satisfies the Jacobi identity") {
    Circle c{5};
    SingleCircleGeom geom(c);
    BracketParams params{Rational(3), Rational(2)};
    Rng rng(77);
    for (int it = 0; it < 20; ++it) {
        SwapPoly p = random_poly(rng, 5, 2, 2);
        SwapPoly q = random_poly(rng, 5, 2, 2);
        SwapPoly r = random_poly(rng, 5, 2, 2);
        SwapPoly jac = bracket(p, bracket(q, r, params, geom), params, geom) +
                       bracket(q, bracket(r, p, params, geom), params, geom) +
                       bracket(r, bracket(p, q, params, geom), params, geom);
        CHECK(jac.is_zero());
    }
}

TEST_CASE("fraction bracket quotient rule") {
    Circle c{6};
    SingleCircleGeom geom(c);
    BracketParams params;
    SwapPoly a = SwapPoly::pair_gen(0, 3);
    SwapPoly b = SwapPoly::pair_gen(1, 4);
    SwapFraction f(a, b);
    // {f, const} = 0
    SwapFraction g(SwapPoly::constant(5), SwapPoly::constant(1));
    CHECK(frac_bracket(f, g, params, geom).num.is_zero());
    // {a/1, b/1} = {a,b}
    SwapFraction fa(a, SwapPoly::constant(1)), fb(b, SwapPoly::constant(1));
    SwapFraction fr = frac_bracket(fa, fb, params, geom);
    CHECK(fr.num == bracket(a, b, params, geom));
    CHECK(fr.den == SwapPoly::constant(1));
    CHECK_THROWS_AS(SwapFraction(a, SwapPoly::zero()), std::domain_error);
}
