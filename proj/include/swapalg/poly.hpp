#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "swapalg/cyclic.hpp"
#include "swapalg/rational.hpp"

namespace swapalg {

// An ordered pair generator xy. Self-pairs xx are the zero generator and
// are killed at polynomial construction time.
struct PairGen {
    PointId x = 0;
    PointId y = 0;
    auto operator<=>(const PairGen&) const = default;
};

// Sorted multiset of pair generators.
using Monomial = std::vector<PairGen>;

// Sparse multivariate polynomial over exact rationals in pair generators.
// Terms with zero coefficient and monomials containing a self-pair are
// never stored, so equality is structural.
class SwapPoly {
public:
    SwapPoly() = default;

    static SwapPoly zero() { return SwapPoly(); }
    static SwapPoly constant(const Rational& c);
    static SwapPoly pair_gen(PointId x, PointId y);
    static SwapPoly monomial(Monomial m, const Rational& coeff);

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // max monomial length; 0 for constants and zero

    void add_term(Monomial m, const Rational& coeff);

    SwapPoly operator-() const;
    SwapPoly& operator+=(const SwapPoly& o);
    SwapPoly& operator-=(const SwapPoly& o);

    friend SwapPoly operator+(SwapPoly a, const SwapPoly& b) { a += b; return a; }
    friend SwapPoly operator-(SwapPoly a, const SwapPoly& b) { a -= b; return a; }
    friend SwapPoly operator*(const SwapPoly& a, const SwapPoly& b);
    friend SwapPoly operator*(const SwapPoly& a, const Rational& c);
    friend SwapPoly operator*(const Rational& c, const SwapPoly& a) { return a * c; }
    friend bool operator==(const SwapPoly& a, const SwapPoly& b) { return a.terms_ == b.terms_; }

    // Distinct generators appearing in the polynomial.
    std::vector<PairGen> variables() const;

    std::string to_text() const;

private:
    std::map<Monomial, Rational> terms_;
};

struct BracketParams {
    Rational c1 = 1;
    Rational c2 = 0;
};

// Linking-number provider for brackets; single circles and glued disjoint
// unions of circles implement this.
class LinkingGeom {
public:
    virtual ~LinkingGeom() = default;
    virtual Rational linking(const PairGen& g, const PairGen& h) const = 0;
};

class SingleCircleGeom final : public LinkingGeom {
public:
    explicit SingleCircleGeom(Circle c) : circle_(c) {}
    Rational linking(const PairGen& g, const PairGen& h) const override {
        uint64_t key = (((uint64_t)(uint16_t)g.x) << 48) | (((uint64_t)(uint16_t)g.y) << 32) |
                       (((uint64_t)(uint16_t)h.x) << 16) | (uint64_t)(uint16_t)h.y;
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        Rational v = linking_number(circle_, g.x, g.y, h.x, h.y);
        cache_.emplace(key, v);
        return v;
    }
    const Circle& circle() const { return circle_; }

private:
    Circle circle_;
    mutable std::map<uint64_t, Rational> cache_;
};

// (c1,c2)-swapping bracket extended from generators by Leibniz's rule.
SwapPoly bracket(const SwapPoly& p, const SwapPoly& q, const BracketParams& params,
                 const LinkingGeom& geom);

// Unreduced numerator/denominator pair. No GCD reduction; equality is
// semantic and delegated to the randomized mod-R_n test.
struct SwapFraction {
    SwapPoly num;
    SwapPoly den = SwapPoly::constant(1);

    SwapFraction() = default;
    SwapFraction(SwapPoly n, SwapPoly d);

    friend SwapFraction operator*(const SwapFraction& a, const SwapFraction& b) {
        return SwapFraction(a.num * b.num, a.den * b.den);
    }
};

// {a/b, c/d} = ({a,c}bd - {a,d}bc - {b,c}ad + {b,d}ac) / (b^2 d^2)
SwapFraction frac_bracket(const SwapFraction& f, const SwapFraction& g,
                          const BracketParams& params, const LinkingGeom& geom);

}  // namespace swapalg
