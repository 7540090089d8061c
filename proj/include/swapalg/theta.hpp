#pragma once

#include <array>

#include "swapalg/flags.hpp"

namespace swapalg {

// Circle of k blocks of n-1 points, one block per polygon vertex in
// anticlockwise order; block v lists x_{n-1},...,x_1, so the j-th flag
// basis direction of vertex v sits at index v*(n-1) + (n-1-j).
struct MarkedCircle {
    int k = 0;
    int n = 0;

    int s() const { return k * (n - 1); }
    Circle circle() const { return Circle{s()}; }
    PointId point(int v, int j) const {
        if (v < 0 || v >= k) throw std::domain_error("marked circle: vertex out of range");
        if (j < 1 || j > n - 1) throw std::domain_error("marked circle: depth out of range");
        return v * (n - 1) + (n - 1 - j);
    }
};

// Image of one coordinate: a product of determinant quotients sharing the
// given right n-tuple.
SwapFraction theta_of_vertex(const MarkedCircle& mc, const PolygonTriangulation& tri,
                             const CoordVertex& v, const std::vector<PointId>& right);
SwapFraction theta_of_vertex(const MarkedCircle& mc, const PolygonTriangulation& tri,
                             const CoordVertex& v);

// Evaluating each coordinate image at the point whose vectors are the flag
// bases reproduces the coordinate value exactly.
bool verify_section(const FlagConfig& cfg, const PolygonTriangulation& tri, int n, Rng& rng);

// The constant c with {A,B} = c * A * B mod R_n, found by evaluating
// {A,B}/(A*B) at sampled points. Throws if the ratio is not constant
// across trials.
Rational bracket_constant(const SwapFraction& A, const SwapFraction& B,
                          const BracketParams& params, const LinkingGeom& geom, int n, int s,
                          const PitParams& pit);

struct BracketReport {
    CoordVertex a, b;
    Rational expected;
    Rational computed;
    double error_bound = 0;
    bool ok = false;
};

struct PoissonHomReport {
    int n = 0, k = 0;
    int trials = 0;
    long long bound = 0;
    bool ok = false;
    std::vector<BracketReport> pairs;
};

// Checks {theta(A), theta(B)} = eps_AB * theta(A) * theta(B) mod R_n for
// every unordered pair of coordinate vertices, eps from the quiver.
PoissonHomReport verify_poisson_hom(const PolygonTriangulation& tri, int n,
                                    const PitParams& pit);

// 1/2 min{m,m'} - 1/2 min{l,l'} - 1/2 min{p,p'} under the stated
// hypotheses (l >= l' or p <= p'); throws outside them.
Rational main_prop_oracle(int n, int m, int l, int p, int mp, int lp, int pp);

struct MainPropCase {
    std::array<int, 3> a{}, b{};
    Rational expected;
    Rational computed;
    bool ok = false;
};

struct MainPropReport {
    int n = 0;
    int trials = 0;
    long long bound = 0;
    double error_bound = 0;
    bool ok = false;
    std::vector<MainPropCase> cases;
};

// Builds the 5n-3 point arrangement x^{n-1} v^n y^{n-1} z^{n-1} u^n, takes
// the symbolic bracket of the two determinants and tests
// {D1,D2} - C*D1*D2 = 0 mod R_n over all admissible weight pairs.
MainPropReport verify_main_prop(int n, const PitParams& pit);

}  // namespace swapalg
