#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "swapalg/poly.hpp"

namespace swapalg {

// Deterministic RNG; all randomized verifiers derive per-trial streams so
// runs with the same seed are reproducible.
class Rng {
public:
    explicit Rng(uint64_t seed) : seed0_(seed), engine_(seed) {}

    // splitmix64-style derivation, independent of engine state
    static uint64_t derive(uint64_t seed, uint64_t stream) {
        uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    Rng derived(uint64_t stream) const { return Rng(derive(seed0_, stream)); }
    uint64_t seed() const { return seed0_; }

    long long uniform(long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(engine_);
    }

private:
    uint64_t seed0_;
    std::mt19937_64 engine_;
};

// Square (or rectangular list) determinant specification: det(x_i y_j).
struct DetSpec {
    std::vector<PointId> rows;
    std::vector<PointId> cols;
};

// det of the matrix of pair generators, expanded as a SwapPoly.
SwapPoly det_pairing(const DetSpec& spec);

// A point of the geometric model: one vector and one covector in K^n per
// circle point, with vanishing self-pairing.
struct EvalPoint {
    int n = 0;
    std::vector<std::vector<Rational>> vectors;    // s x n
    std::vector<std::vector<Rational>> covectors;  // s x n

    int s() const { return (int)vectors.size(); }
    Rational pairing(PointId x, PointId y) const;  // <v_x | c_y>
};

EvalPoint sample_model_point(int n, int s, long long bound, Rng& rng);

// Cached pairing matrix for repeated polynomial evaluation at one point.
class PairingTable {
public:
    explicit PairingTable(const EvalPoint& pt);
    const Rational& at(PointId x, PointId y) const { return table_[(size_t)(x * s_ + y)]; }
    int s() const { return s_; }

private:
    int s_;
    std::vector<Rational> table_;
};

// Ring-homomorphism evaluation: xy -> <v_x | c_y>.
Rational evaluate(const SwapPoly& p, const PairingTable& t);
inline Rational evaluate(const SwapPoly& p, const EvalPoint& pt) {
    return evaluate(p, PairingTable(pt));
}

// Value and all first partial derivatives of a SwapPoly at a point.
struct PolyEval {
    Rational value;
    std::map<PairGen, Rational> partials;
};
PolyEval evaluate_with_partials(const SwapPoly& p, const PairingTable& t);

// {p,q} evaluated at a point through the biderivation formula
// sum_{g,h} dp/dg dq/dh {g,h}; exactly equals evaluate(bracket(p,q)).
Rational bracket_eval(const PolyEval& p, const PolyEval& q, const BracketParams& params,
                      const LinkingGeom& geom, const PairingTable& t);
Rational bracket_eval(const SwapPoly& p, const SwapPoly& q, const BracketParams& params,
                      const LinkingGeom& geom, const PairingTable& t);

struct PitParams {
    int trials = 8;
    long long bound = 0;  // 0: choose from the degree so each trial is < 1/200
    uint64_t seed = 0;
};

long long pit_bound_for_degree(int degree, long long requested);
double pit_error_bound(int degree, long long bound, int trials);

// One-sided randomized zero test modulo R_n: "false" is certain, "true"
// errs with probability at most pit_error_bound(deg, bound, trials).
bool is_zero_mod_Rn(const SwapPoly& p, int n, int s, const PitParams& pit);

// Cross-multiplied comparison of fractions modulo R_n. Denominators that
// vanish at a sample are resampled; identically-zero denominators throw.
bool frac_eq_mod_Rn(const SwapFraction& f, const SwapFraction& g, int n, int s,
                    const PitParams& pit);

// E(left | t, y) with an explicit right side n-tuple.
struct DetQuotient {
    std::vector<PointId> left;  // n-1 points
    PointId t = 0;
    PointId y = 0;
    std::vector<PointId> right;  // n points
};

std::vector<PointId> default_right_tuple(int n);
SwapFraction det_quotient(const DetQuotient& q);

// Cofactor route for {det M, B}: sum (-1)^{s+t} A_st {a_s b_t, B}.
SwapPoly bracket_det_cofactor(const DetSpec& spec, const SwapPoly& b,
                              const BracketParams& params, const LinkingGeom& geom);

// Right-side reference formula for {ab, det}: the sum over rows/columns on
// the right of the directed chord a->b, each weighted by a linking number
// against an auxiliary point strictly on the left. Hypotheses are checked.
SwapPoly delta_R_reference(const Circle& c, PointId a, PointId b,
                           const std::vector<PointId>& xs, const std::vector<PointId>& ys);

}  // namespace swapalg
