#pragma once

#include "swapalg/rank_n.hpp"

namespace swapalg {

// Matrix coordinate x_ij on the slice where the top n x n block is the
// identity: n < i <= m, 1 <= j <= n. Image is the single generator
// a_i a_j on a circle of m points (1-based labels).
struct MatrixCoord {
    int i = 0;
    int j = 0;
};

SwapPoly phi(const MatrixCoord& c, int m, int n);

struct PoissonLieCase {
    MatrixCoord a, b;
    bool ok = false;
};

struct PoissonLieReport {
    int m = 0, n = 0;
    bool ok = false;
    std::vector<PoissonLieCase> cases;
};

// Exact identity {phi(x_ij), phi(x_i'j')} = 1/2 (sgn(i'-i) + sgn(j'-j))
// phi(x_ij') phi(x_i'j) over all coordinate pairs.
PoissonLieReport verify_poisson_lie(int m, int n);

// The five-case order factor on circle labels 1..m.
Rational s_eq(int i, int j, int ip, int jp);

// Grassmannian cell coordinate m_ij for I = {1..n}: E(I \ {i} | a_j, a_i).
SwapFraction theta_ab(int i, int j, int n, int m);

struct GrassmannCase {
    int i = 0, j = 0, ip = 0, jp = 0;
    bool ok = false;
};

struct GrassmannReport {
    int n = 0, m = 0;
    Rational alpha, beta;
    int trials = 0;
    long long bound = 0;
    double error_bound = 0;
    bool ok = false;
    std::vector<GrassmannCase> cases;
};

// Checks {theta(m_ij), theta(m_i'j')} under the (beta-alpha, alpha+beta)
// bracket against (alpha-beta) s_= theta(m_ij') theta(m_i'j) +
// (alpha+beta) J theta(m_ij) theta(m_i'j') mod R_n.
GrassmannReport verify_grassmannian(int n, int m, const Rational& alpha, const Rational& beta,
                                    const PitParams& pit);

}  // namespace swapalg
