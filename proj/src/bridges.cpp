#include "swapalg/bridges.hpp"

namespace swapalg {

namespace {

// circle label a_i (1-based) to PointId
PointId pid(int i) { return i - 1; }

}  // namespace

SwapPoly phi(const MatrixCoord& c, int m, int n) {
    if (!(c.i > n && c.i <= m && c.j >= 1 && c.j <= n))
        throw std::domain_error("phi: need n < i <= m and 1 <= j <= n");
    return SwapPoly::pair_gen(pid(c.i), pid(c.j));
}

PoissonLieReport verify_poisson_lie(int m, int n) {
    if (!(m > n && n >= 1)) throw std::domain_error("verify_poisson_lie: need m > n >= 1");
    PoissonLieReport report;
    report.m = m;
    report.n = n;
    report.ok = true;
    Circle circle{m};
    SingleCircleGeom geom(circle);
    BracketParams params;
    for (int i = n + 1; i <= m; ++i) {
        for (int j = 1; j <= n; ++j) {
            for (int ip = n + 1; ip <= m; ++ip) {
                for (int jp = 1; jp <= n; ++jp) {
                    SwapPoly lhs = bracket(phi({i, j}, m, n), phi({ip, jp}, m, n), params, geom);
                    Rational factor =
                        Rational(signature(ip - i) + signature(jp - j)) / 2;
                    SwapPoly rhs =
                        factor * (SwapPoly::pair_gen(pid(i), pid(jp)) *
                                  SwapPoly::pair_gen(pid(ip), pid(j)));
                    PoissonLieCase pc;
                    pc.a = {i, j};
                    pc.b = {ip, jp};
                    pc.ok = (lhs == rhs);
                    if (!pc.ok) report.ok = false;
                    report.cases.push_back(pc);
                }
            }
        }
    }
    return report;
}

Rational s_eq(int i, int j, int ip, int jp) {
    if (i < ip && ip < jp && jp < j) return 1;
    if (ip < i && i < j && j < jp) return -1;
    if ((i == ip && ip < jp && jp < j) || (i < ip && ip < jp && jp == j)) return Rational(1, 2);
    if ((ip == i && i < j && j < jp) || (ip < i && i < j && j == jp)) return Rational(-1, 2);
    return 0;
}

SwapFraction theta_ab(int i, int j, int n, int m) {
    if (!(1 <= i && i <= n && j > n && j <= m))
        throw std::domain_error("theta_ab: need i in I = {1..n} and j outside");
    DetQuotient q;
    for (int a = 1; a <= n; ++a)
        if (a != i) q.left.push_back(pid(a));
    q.t = pid(j);
    q.y = pid(i);
    if (n >= 2) {
        q.right = default_right_tuple(n);
    } else {
        // 1x1 quotient a_j v / a_i v: v must avoid both arguments
        for (int a = 1; a <= m; ++a)
            if (a != i && a != j) { q.right = {pid(a)}; break; }
        if (q.right.empty()) throw std::domain_error("theta_ab: no admissible right point");
    }
    return det_quotient(q);
}

GrassmannReport verify_grassmannian(int n, int m, const Rational& alpha, const Rational& beta,
                                    const PitParams& pit) {
    if (!(2 <= n && n < m))
        throw std::domain_error("verify_grassmannian: need 2 <= n < m (n=1 images have no shared right tuple)");
    GrassmannReport report;
    report.n = n;
    report.m = m;
    report.alpha = alpha;
    report.beta = beta;
    report.trials = pit.trials;
    report.ok = true;

    Circle circle{m};
    SingleCircleGeom geom(circle);
    BracketParams params{beta - alpha, alpha + beta};

    int deg = 4 * n;  // cross-multiplied comparison of the two sides
    report.bound = pit_bound_for_degree(deg, pit.bound);
    report.error_bound = pit_error_bound(deg, report.bound, pit.trials);

    size_t case_index = 0;
    for (int i = 1; i <= n; ++i) {
        for (int j = n + 1; j <= m; ++j) {
            for (int ip = 1; ip <= n; ++ip) {
                for (int jp = n + 1; jp <= m; ++jp) {
                    SwapFraction fij = theta_ab(i, j, n, m);
                    SwapFraction fipjp = theta_ab(ip, jp, n, m);
                    SwapFraction lhs = frac_bracket(fij, fipjp, params, geom);

                    // Both exchange products share the denominator
                    // den(m_ij) * den(m_i'j'), so the right side is a
                    // single fraction.
                    SwapFraction fijp = theta_ab(i, jp, n, m);
                    SwapFraction fipj = theta_ab(ip, j, n, m);
                    Rational se = s_eq(i, j, ip, jp);
                    Rational lk = linking_number(circle, pid(i), pid(j), pid(ip), pid(jp));
                    SwapPoly rhs_num = ((alpha - beta) * se) * (fijp.num * fipj.num) +
                                       ((alpha + beta) * lk) * (fij.num * fipjp.num);
                    SwapFraction rhs(rhs_num, fij.den * fipjp.den);

                    GrassmannCase gc{i, j, ip, jp, false};
                    PitParams sub = pit;
                    sub.seed = Rng::derive(pit.seed, (uint64_t)case_index++);
                    gc.ok = frac_eq_mod_Rn(lhs, rhs, n, m, sub);
                    if (!gc.ok) report.ok = false;
                    report.cases.push_back(gc);
                }
            }
        }
    }
    return report;
}

}  // namespace swapalg
