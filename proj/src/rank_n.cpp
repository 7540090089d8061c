#include "swapalg/rank_n.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace swapalg {

SwapPoly det_pairing(const DetSpec& spec) {
    if (spec.rows.size() != spec.cols.size())
        throw std::domain_error("det_pairing: rows and cols must have equal length");
    const size_t m = spec.rows.size();
    if (m == 0) throw std::domain_error("det_pairing: empty spec");
    std::vector<size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    SwapPoly result;
    // Sum over permutations with the sign tracked by inversion count.
    do {
        int inversions = 0;
        for (size_t i = 0; i < m; ++i)
            for (size_t j = i + 1; j < m; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Monomial mono;
        mono.reserve(m);
        for (size_t i = 0; i < m; ++i)
            mono.push_back(PairGen{spec.rows[i], spec.cols[perm[i]]});
        result.add_term(std::move(mono), (inversions % 2 == 0) ? Rational(1) : Rational(-1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return result;
}

Rational EvalPoint::pairing(PointId x, PointId y) const {
    Rational r = 0;
    for (int i = 0; i < n; ++i) r += vectors[(size_t)x][(size_t)i] * covectors[(size_t)y][(size_t)i];
    return r;
}

EvalPoint sample_model_point(int n, int s, long long bound, Rng& rng) {
    if (n < 2 || s < 1) throw std::domain_error("sample_model_point: need n >= 2, s >= 1");
    if (bound < 1) throw std::domain_error("sample_model_point: bound must be positive");
    EvalPoint pt;
    pt.n = n;
    pt.vectors.resize((size_t)s);
    pt.covectors.resize((size_t)s);
    const int retry_budget = 64;
    for (int i = 0; i < s; ++i) {
        int tries = 0;
        for (;;) {
            if (++tries > retry_budget)
                throw std::runtime_error("sample_model_point: retry budget exhausted, enlarge bound");
            std::vector<Rational> v((size_t)n), u((size_t)n);
            int e = -1;
            for (int j = 0; j < n; ++j) {
                v[(size_t)j] = rng.uniform(-bound, bound);
                u[(size_t)j] = rng.uniform(-bound, bound);
                if (e < 0 && v[(size_t)j] != 0) e = j;
            }
            if (e < 0) continue;  // zero vector, resample
            Rational vu = 0;
            for (int j = 0; j < n; ++j) vu += v[(size_t)j] * u[(size_t)j];
            // covector = u - (<v|u>/v_e) * e_basis, so <v|c> = 0 exactly
            u[(size_t)e] -= vu / v[(size_t)e];
            bool all_zero = true;
            for (int j = 0; j < n; ++j)
                if (u[(size_t)j] != 0) { all_zero = false; break; }
            if (all_zero) continue;
            pt.vectors[(size_t)i] = std::move(v);
            pt.covectors[(size_t)i] = std::move(u);
            break;
        }
    }
    return pt;
}

PairingTable::PairingTable(const EvalPoint& pt) : s_(pt.s()) {
    table_.resize((size_t)(s_ * s_));
    for (int x = 0; x < s_; ++x)
        for (int y = 0; y < s_; ++y) table_[(size_t)(x * s_ + y)] = pt.pairing(x, y);
}

Rational evaluate(const SwapPoly& p, const PairingTable& t) {
    Rational result = 0;
    for (const auto& [m, c] : p.terms()) {
        Rational prod = c;
        for (const auto& g : m) {
            const Rational& v = t.at(g.x, g.y);
            if (v == 0) { prod = 0; break; }
            prod *= v;
        }
        result += prod;
    }
    return result;
}

PolyEval evaluate_with_partials(const SwapPoly& p, const PairingTable& t) {
    PolyEval out;
    out.value = 0;
    for (const auto& [m, c] : p.terms()) {
        const size_t d = m.size();
        std::vector<Rational> vals(d);
        for (size_t i = 0; i < d; ++i) vals[i] = t.at(m[i].x, m[i].y);
        // prefix/suffix products give each leave-one-out product in O(d)
        std::vector<Rational> pre(d + 1), suf(d + 1);
        pre[0] = 1;
        for (size_t i = 0; i < d; ++i) pre[i + 1] = pre[i] * vals[i];
        suf[d] = 1;
        for (size_t i = d; i > 0; --i) suf[i - 1] = suf[i] * vals[i - 1];
        out.value += c * pre[d];
        for (size_t i = 0; i < d; ++i) {
            Rational leave_out = c * pre[i] * suf[i + 1];
            if (leave_out != 0) out.partials[m[i]] += leave_out;
        }
    }
    return out;
}

Rational bracket_eval(const PolyEval& p, const PolyEval& q, const BracketParams& params,
                      const LinkingGeom& geom, const PairingTable& t) {
    Rational result = 0;
    for (const auto& [g, dp] : p.partials) {
        for (const auto& [h, dq] : q.partials) {
            Rational j = geom.linking(g, h);
            if (j == 0) continue;
            Rational factor = 0;
            if (params.c1 != 0) factor += params.c1 * t.at(g.x, h.y) * t.at(h.x, g.y);
            if (params.c2 != 0) factor += params.c2 * t.at(g.x, g.y) * t.at(h.x, h.y);
            if (factor != 0) result += dp * dq * j * factor;
        }
    }
    return result;
}

Rational bracket_eval(const SwapPoly& p, const SwapPoly& q, const BracketParams& params,
                      const LinkingGeom& geom, const PairingTable& t) {
    return bracket_eval(evaluate_with_partials(p, t), evaluate_with_partials(q, t), params,
                        geom, t);
}

long long pit_bound_for_degree(int degree, long long requested) {
    if (requested > 0) return requested;
    return std::max<long long>(1000, 400LL * std::max(degree, 1));
}

double pit_error_bound(int degree, long long bound, int trials) {
    double per_trial = 4.0 * std::max(degree, 1) / (2.0 * (double)bound + 1.0);
    per_trial = std::min(per_trial, 1.0);
    return std::pow(per_trial, trials);
}

bool is_zero_mod_Rn(const SwapPoly& p, int n, int s, const PitParams& pit) {
    if (pit.trials < 1) throw std::domain_error("is_zero_mod_Rn: trials must be >= 1");
    if (p.is_zero()) return true;
    long long bound = pit_bound_for_degree(p.degree(), pit.bound);
    for (int trial = 0; trial < pit.trials; ++trial) {
        Rng rng = Rng(pit.seed).derived((uint64_t)trial);
        EvalPoint pt = sample_model_point(n, s, bound, rng);
        if (evaluate(p, PairingTable(pt)) != 0) return false;
    }
    return true;
}

bool frac_eq_mod_Rn(const SwapFraction& f, const SwapFraction& g, int n, int s,
                    const PitParams& pit) {
    if (pit.trials < 1) throw std::domain_error("frac_eq_mod_Rn: trials must be >= 1");
    int deg = std::max(f.num.degree() + g.den.degree(), g.num.degree() + f.den.degree());
    long long bound = pit_bound_for_degree(deg, pit.bound);
    const int resample_budget = 64;
    int done = 0;
    uint64_t stream = 0;
    int dead_samples = 0;
    while (done < pit.trials) {
        if (dead_samples > resample_budget)
            throw std::domain_error("frac_eq_mod_Rn: denominator vanishes at every sample");
        Rng rng = Rng(pit.seed).derived(stream++);
        EvalPoint pt = sample_model_point(n, s, bound, rng);
        PairingTable t(pt);
        Rational fd = evaluate(f.den, t), gd = evaluate(g.den, t);
        if (fd == 0 || gd == 0) { ++dead_samples; continue; }
        if (evaluate(f.num, t) * gd != evaluate(g.num, t) * fd) return false;
        ++done;
    }
    return true;
}

std::vector<PointId> default_right_tuple(int n) {
    std::vector<PointId> r((size_t)n);
    std::iota(r.begin(), r.end(), 0);
    return r;
}

SwapFraction det_quotient(const DetQuotient& q) {
    const int n = (int)q.right.size();
    if ((int)q.left.size() != n - 1)
        throw std::domain_error("det_quotient: left tuple must have n-1 points");
    for (size_t i = 0; i < q.right.size(); ++i)
        for (size_t j = i + 1; j < q.right.size(); ++j)
            if (q.right[i] == q.right[j])
                throw std::domain_error("det_quotient: right tuple entries must be distinct");
    std::vector<PointId> num_rows = q.left;
    num_rows.push_back(q.t);
    std::vector<PointId> den_rows = q.left;
    den_rows.push_back(q.y);
    return SwapFraction(det_pairing({num_rows, q.right}), det_pairing({den_rows, q.right}));
}

SwapPoly bracket_det_cofactor(const DetSpec& spec, const SwapPoly& b,
                              const BracketParams& params, const LinkingGeom& geom) {
    if (spec.rows.size() != spec.cols.size())
        throw std::domain_error("bracket_det_cofactor: square spec required");
    const size_t m = spec.rows.size();
    SwapPoly result;
    for (size_t s = 0; s < m; ++s) {
        for (size_t t = 0; t < m; ++t) {
            SwapPoly entry_bracket =
                bracket(SwapPoly::pair_gen(spec.rows[s], spec.cols[t]), b, params, geom);
            if (entry_bracket.is_zero()) continue;
            SwapPoly cofactor;
            if (m == 1) {
                cofactor = SwapPoly::constant(1);
            } else {
                DetSpec minor;
                for (size_t i = 0; i < m; ++i)
                    if (i != s) minor.rows.push_back(spec.rows[i]);
                for (size_t j = 0; j < m; ++j)
                    if (j != t) minor.cols.push_back(spec.cols[j]);
                cofactor = det_pairing(minor);
            }
            Rational sign = ((s + t) % 2 == 0) ? 1 : -1;
            result += sign * (cofactor * entry_bracket);
        }
    }
    return result;
}

namespace {

// True iff pts is a rotation of a strictly increasing sequence: exactly one
// descent around the cycle.
bool cyclically_increasing(const std::vector<PointId>& pts) {
    if (pts.size() <= 1) return true;
    int descents = 0;
    for (size_t i = 0; i < pts.size(); ++i)
        if (pts[i] >= pts[(i + 1) % pts.size()]) ++descents;
    return descents == 1;
}

}  // namespace

SwapPoly delta_R_reference(const Circle& c, PointId a, PointId b,
                           const std::vector<PointId>& xs, const std::vector<PointId>& ys) {
    c.check(a);
    c.check(b);
    if (a == b) throw std::domain_error("delta_R_reference: a and b must differ");
    if (xs.size() != ys.size() || xs.empty())
        throw std::domain_error("delta_R_reference: xs and ys must have equal positive length");
    auto check_tuple = [&](const std::vector<PointId>& pts, const char* name) -> size_t {
        for (size_t i = 0; i < pts.size(); ++i) {
            c.check(pts[i]);
            for (size_t j = i + 1; j < pts.size(); ++j)
                if (pts[i] == pts[j])
                    throw std::domain_error(std::string("delta_R_reference: repeated point in ") + name);
        }
        if (!cyclically_increasing(pts))
            throw std::domain_error(std::string("delta_R_reference: ") + name +
                                    " not anticlockwise");
        // right-side points (coinciding with a or b included) must form a prefix
        size_t count = 0;
        bool in_prefix = true;
        for (const auto& p : pts) {
            Side side = side_of_chord(c, a, b, p);
            bool right = (side == Side::Right || side == Side::On);
            if (right && !in_prefix)
                throw std::domain_error(std::string("delta_R_reference: right-side points of ") +
                                        name + " do not form a prefix");
            if (right) ++count; else in_prefix = false;
        }
        return count;
    };
    const size_t l = check_tuple(xs, "xs");
    const size_t k = check_tuple(ys, "ys");

    // Auxiliary point strictly on the left of a->b: just past b anticlockwise.
    const Rational u_pos = Rational(b) + Rational(1, 4);
    const Rational circ = Rational(c.size);

    SwapPoly result;
    for (size_t d = 0; d < l; ++d) {
        Rational j = linking_number_positions(Rational(a), Rational(b), Rational(xs[d]), u_pos, circ);
        if (j == 0) continue;
        std::vector<PointId> rows = xs;
        rows[d] = a;
        result += j * (SwapPoly::pair_gen(xs[d], b) * det_pairing({rows, ys}));
    }
    for (size_t d = 0; d < k; ++d) {
        Rational j = linking_number_positions(Rational(a), Rational(b), u_pos, Rational(ys[d]), circ);
        if (j == 0) continue;
        std::vector<PointId> cols = ys;
        cols[d] = b;
        result += j * (SwapPoly::pair_gen(a, ys[d]) * det_pairing({xs, cols}));
    }
    return result;
}

}  // namespace swapalg
