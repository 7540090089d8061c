#include "swapalg/theta.hpp"

#include <algorithm>

namespace swapalg {

namespace {

// x_1..x_c of vertex v, appended.
void append_points(const MarkedCircle& mc, std::vector<PointId>& out, int v, int c) {
    for (int j = 1; j <= c; ++j) out.push_back(mc.point(v, j));
}

SwapFraction quotient(const MarkedCircle& mc, std::vector<PointId> left, PointId t, PointId y,
                      const std::vector<PointId>& right) {
    DetQuotient q;
    q.left = std::move(left);
    q.t = t;
    q.y = y;
    q.right = right;
    return det_quotient(q);
}

}  // namespace

SwapFraction theta_of_vertex(const MarkedCircle& mc, const PolygonTriangulation& tri,
                             const CoordVertex& v, const std::vector<PointId>& right) {
    const int n = mc.n;
    if (const auto* e = std::get_if<EdgeVertex>(&v)) {
        Quad q = quad_of_edge(tri, e->edge);
        const int i = e->i;
        if (i < 1 || i > n - 1) throw std::domain_error("theta: edge weight out of range");
        std::vector<PointId> left1, left2;
        append_points(mc, left1, q.x, i);
        append_points(mc, left1, q.z, n - i - 1);
        append_points(mc, left2, q.x, i - 1);
        append_points(mc, left2, q.z, n - i);
        PointId t1 = mc.point(q.t, 1), y1 = mc.point(q.y, 1);
        return quotient(mc, std::move(left1), t1, y1, right) *
               quotient(mc, std::move(left2), y1, t1, right);
    }
    const auto& f = std::get<FaceVertex>(v);
    const int x = f.corners[0], y = f.corners[1], z = f.corners[2];
    const int m = f.m, l = f.l, p = f.p;
    if (m < 1 || l < 1 || p < 1 || m + l + p != n)
        throw std::domain_error("theta: face weights out of range");
    std::vector<PointId> left1, left2, left3;
    append_points(mc, left1, x, m + 1);
    append_points(mc, left1, y, l - 1);
    append_points(mc, left1, z, p - 1);
    append_points(mc, left2, x, m - 1);
    append_points(mc, left2, y, l + 1);
    append_points(mc, left2, z, p - 1);
    append_points(mc, left3, x, m - 1);
    append_points(mc, left3, y, l - 1);
    append_points(mc, left3, z, p + 1);
    PointId xm = mc.point(x, m), yl = mc.point(y, l), zp = mc.point(z, p);
    return quotient(mc, std::move(left1), yl, zp, right) *
           quotient(mc, std::move(left2), zp, xm, right) *
           quotient(mc, std::move(left3), xm, yl, right);
}

SwapFraction theta_of_vertex(const MarkedCircle& mc, const PolygonTriangulation& tri,
                             const CoordVertex& v) {
    return theta_of_vertex(mc, tri, v, default_right_tuple(mc.n));
}

bool verify_section(const FlagConfig& cfg, const PolygonTriangulation& tri, int n, Rng& rng) {
    if (cfg.n != n || cfg.k != tri.k)
        throw std::domain_error("verify_section: flags and triangulation disagree");
    MarkedCircle mc{tri.k, n};
    const int s = mc.s();
    auto coords = fg_coordinates(cfg, tri, n);

    const int retry_budget = 64;
    for (int tries = 0; tries < retry_budget; ++tries) {
        EvalPoint pt;
        pt.n = n;
        pt.vectors.resize((size_t)s);
        pt.covectors.resize((size_t)s);
        for (int v = 0; v < tri.k; ++v)
            for (int j = 1; j <= n - 1; ++j)
                pt.vectors[(size_t)mc.point(v, j)] = cfg.basis[(size_t)v][(size_t)(j - 1)];
        bool bad = false;
        for (int i = 0; i < s && !bad; ++i) {
            const auto& v = pt.vectors[(size_t)i];
            int e = -1;
            for (int j = 0; j < n; ++j)
                if (v[(size_t)j] != 0) { e = j; break; }
            if (e < 0) { bad = true; break; }
            std::vector<Rational> u((size_t)n);
            for (int j = 0; j < n; ++j) u[(size_t)j] = rng.uniform(-1000, 1000);
            Rational vu = 0;
            for (int j = 0; j < n; ++j) vu += v[(size_t)j] * u[(size_t)j];
            u[(size_t)e] -= vu / v[(size_t)e];
            pt.covectors[(size_t)i] = std::move(u);
        }
        if (bad) throw std::domain_error("verify_section: zero flag basis vector");

        PairingTable table(pt);
        bool degenerate = false;
        bool all_match = true;
        for (const auto& [cv, want] : coords) {
            SwapFraction f = theta_of_vertex(mc, tri, cv);
            Rational den = evaluate(f.den, table);
            if (den == 0) { degenerate = true; break; }
            if (evaluate(f.num, table) / den != want) all_match = false;
        }
        if (degenerate) continue;  // unlucky covectors, retry
        return all_match;
    }
    throw std::runtime_error("verify_section: retry budget exhausted");
}

namespace {

struct FracEval {
    PolyEval num, den;
};

// [A,B] = {A,B}/(A*B) at one sample, expanded through the quotient rule.
Rational log_bracket_at(const FracEval& a, const FracEval& b, const BracketParams& params,
                        const LinkingGeom& geom, const PairingTable& t) {
    auto part = [&](const PolyEval& p, const PolyEval& q) {
        return bracket_eval(p, q, params, geom, t) / (p.value * q.value);
    };
    return part(a.num, b.num) - part(a.num, b.den) - part(a.den, b.num) + part(a.den, b.den);
}

}  // namespace

Rational bracket_constant(const SwapFraction& A, const SwapFraction& B,
                          const BracketParams& params, const LinkingGeom& geom, int n, int s,
                          const PitParams& pit) {
    if (pit.trials < 1) throw std::domain_error("bracket_constant: trials must be >= 1");
    int deg = A.num.degree() + A.den.degree() + B.num.degree() + B.den.degree();
    long long bound = pit_bound_for_degree(deg, pit.bound);
    const int resample_budget = 64;
    int done = 0, dead = 0;
    uint64_t stream = 0;
    Rational constant = 0;
    while (done < pit.trials) {
        if (dead > resample_budget)
            throw std::domain_error("bracket_constant: coordinate vanishes at every sample");
        Rng rng = Rng(pit.seed).derived(stream++);
        EvalPoint pt = sample_model_point(n, s, bound, rng);
        PairingTable t(pt);
        FracEval fa{evaluate_with_partials(A.num, t), evaluate_with_partials(A.den, t)};
        FracEval fb{evaluate_with_partials(B.num, t), evaluate_with_partials(B.den, t)};
        if (fa.num.value == 0 || fa.den.value == 0 || fb.num.value == 0 || fb.den.value == 0) {
            ++dead;
            continue;
        }
        Rational c = log_bracket_at(fa, fb, params, geom, t);
        if (done == 0) {
            constant = c;
        } else if (c != constant) {
            throw std::runtime_error("bracket_constant: ratio not constant across trials");
        }
        ++done;
    }
    return constant;
}

PoissonHomReport verify_poisson_hom(const PolygonTriangulation& tri, int n,
                                    const PitParams& pit) {
    if (pit.trials < 1) throw std::domain_error("verify_poisson_hom: trials must be >= 1");
    MarkedCircle mc{tri.k, n};
    const int s = mc.s();
    SingleCircleGeom geom(mc.circle());
    BracketParams params;
    Quiver quiver = build_quiver(tri, n);

    std::vector<SwapFraction> images;
    images.reserve(quiver.vertices.size());
    int dmax = 0;
    for (const auto& v : quiver.vertices) {
        images.push_back(theta_of_vertex(mc, tri, v));
        dmax = std::max(dmax, images.back().num.degree() + images.back().den.degree());
    }
    const int deg = 2 * dmax;
    const long long bound = pit_bound_for_degree(deg, pit.bound);
    const double err = pit_error_bound(deg, bound, pit.trials);

    PoissonHomReport report;
    report.n = n;
    report.k = tri.k;
    report.trials = pit.trials;
    report.bound = bound;

    const size_t nv = quiver.vertices.size();
    std::vector<std::vector<Rational>> computed(nv, std::vector<Rational>(nv));
    std::vector<std::vector<bool>> constant_ok(nv, std::vector<bool>(nv, true));

    const int resample_budget = 64;
    int done = 0, dead = 0;
    uint64_t stream = 0;
    while (done < pit.trials) {
        if (dead > resample_budget)
            throw std::domain_error("verify_poisson_hom: degenerate samples only");
        Rng rng = Rng(pit.seed).derived(stream++);
        EvalPoint pt = sample_model_point(n, s, bound, rng);
        PairingTable t(pt);
        std::vector<FracEval> evals(nv);
        bool degenerate = false;
        for (size_t i = 0; i < nv && !degenerate; ++i) {
            evals[i].num = evaluate_with_partials(images[i].num, t);
            evals[i].den = evaluate_with_partials(images[i].den, t);
            if (evals[i].num.value == 0 || evals[i].den.value == 0) degenerate = true;
        }
        if (degenerate) { ++dead; continue; }
        for (size_t i = 0; i < nv; ++i) {
            for (size_t j = i; j < nv; ++j) {
                Rational c = log_bracket_at(evals[i], evals[j], params, geom, t);
                if (done == 0) computed[i][j] = c;
                else if (c != computed[i][j]) constant_ok[i][j] = false;
            }
        }
        ++done;
    }

    report.ok = true;
    for (size_t i = 0; i < nv; ++i) {
        for (size_t j = i; j < nv; ++j) {
            BracketReport br;
            br.a = quiver.vertices[i];
            br.b = quiver.vertices[j];
            br.expected = quiver.epsilon(quiver.vertices[i], quiver.vertices[j]);
            br.computed = computed[i][j];
            br.error_bound = err;
            br.ok = constant_ok[i][j] && br.computed == br.expected;
            if (!br.ok) report.ok = false;
            report.pairs.push_back(std::move(br));
        }
    }
    return report;
}

Rational main_prop_oracle(int n, int m, int l, int p, int mp, int lp, int pp) {
    auto check = [&](int a, int b, int c) {
        if (a < 0 || b < 0 || c < 0 || a > n - 1 || b > n - 1 || c > n - 1)
            throw std::domain_error("main_prop_oracle: weights must lie in [0, n-1]");
        if (a + b + c != n) throw std::domain_error("main_prop_oracle: weights must sum to n");
    };
    check(m, l, p);
    check(mp, lp, pp);
    if (!(l >= lp || p <= pp))
        throw std::domain_error("main_prop_oracle: hypothesis l >= l' or p <= p' violated");
    return Rational(std::min(m, mp)) / 2 - Rational(std::min(l, lp)) / 2 -
           Rational(std::min(p, pp)) / 2;
}

MainPropReport verify_main_prop(int n, const PitParams& pit) {
    const int s = 5 * n - 3;
    Circle circle{s};
    SingleCircleGeom geom(circle);
    BracketParams params;

    // Arrangement: x_{n-1}..x_1, v_1..v_n, y_{n-1}..y_1, z_{n-1}..z_1,
    // u_1..u_n anticlockwise.
    auto xat = [&](int j) { return n - 1 - j; };
    auto yat = [&](int j) { return (2 * n - 1) + (n - 1 - j); };
    auto zat = [&](int j) { return (3 * n - 2) + (n - 1 - j); };
    std::vector<PointId> vt, ut;
    for (int i = 0; i < n; ++i) vt.push_back(n - 1 + i);
    for (int i = 0; i < n; ++i) ut.push_back(4 * n - 3 + i);

    auto rows_for = [&](int m, int l, int p) {
        std::vector<PointId> rows;
        for (int j = 1; j <= m; ++j) rows.push_back(xat(j));
        for (int j = 1; j <= l; ++j) rows.push_back(yat(j));
        for (int j = 1; j <= p; ++j) rows.push_back(zat(j));
        return rows;
    };

    std::vector<std::array<int, 3>> weights;
    for (int m = 0; m <= n - 1; ++m)
        for (int l = 0; l <= n - 1 && m + l <= n; ++l) {
            int p = n - m - l;
            if (p >= 0 && p <= n - 1) weights.push_back({m, l, p});
        }

    MainPropReport report;
    report.n = n;
    report.trials = pit.trials;
    report.ok = true;

    int dmax_deg = 4 * n;  // deg({D1,D2} - C D1 D2) = 2n + 2n
    report.bound = pit_bound_for_degree(dmax_deg, pit.bound);
    report.error_bound = pit_error_bound(dmax_deg, report.bound, pit.trials);

    for (const auto& a : weights) {
        SwapPoly d1 = det_pairing({rows_for(a[0], a[1], a[2]), vt});
        for (const auto& b : weights) {
            if (!(a[1] >= b[1] || a[2] <= b[2])) continue;
            SwapPoly d2 = det_pairing({rows_for(b[0], b[1], b[2]), ut});
            MainPropCase mc;
            mc.a = a;
            mc.b = b;
            mc.expected = main_prop_oracle(n, a[0], a[1], a[2], b[0], b[1], b[2]);
            SwapPoly z = bracket(d1, d2, params, geom) - mc.expected * (d1 * d2);
            PitParams sub = pit;
            sub.seed = Rng::derive(pit.seed, (uint64_t)report.cases.size());
            mc.ok = is_zero_mod_Rn(z, n, s, sub);
            // the constant at one sample, for the report
            Rng rng = Rng(sub.seed).derived(0);
            const int resample_budget = 64;
            for (int tries = 0; tries < resample_budget; ++tries) {
                EvalPoint pt = sample_model_point(n, s, report.bound, rng);
                PairingTable t(pt);
                Rational v1 = evaluate(d1, t), v2 = evaluate(d2, t);
                if (v1 == 0 || v2 == 0) continue;
                mc.computed = bracket_eval(d1, d2, params, geom, t) / (v1 * v2);
                break;
            }
            if (!mc.ok) report.ok = false;
            report.cases.push_back(std::move(mc));
        }
    }
    return report;
}

}  // namespace swapalg
