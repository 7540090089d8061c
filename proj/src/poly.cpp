#include "swapalg/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace swapalg {

SwapPoly SwapPoly::constant(const Rational& c) {
    SwapPoly p;
    p.add_term({}, c);
    return p;
}

SwapPoly SwapPoly::pair_gen(PointId x, PointId y) {
    SwapPoly p;
    p.add_term({PairGen{x, y}}, 1);
    return p;
}

SwapPoly SwapPoly::monomial(Monomial m, const Rational& coeff) {
    SwapPoly p;
    p.add_term(std::move(m), coeff);
    return p;
}

void SwapPoly::add_term(Monomial m, const Rational& coeff) {
    if (coeff == 0) return;
    for (const auto& g : m)
        if (g.x == g.y) return;  // xx = 0 in Z(P)
    std::sort(m.begin(), m.end());
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

int SwapPoly::degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max<int>(d, (int)m.size());
    return d;
}

SwapPoly SwapPoly::operator-() const {
    SwapPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

SwapPoly& SwapPoly::operator+=(const SwapPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SwapPoly& SwapPoly::operator-=(const SwapPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

SwapPoly operator*(const SwapPoly& a, const SwapPoly& b) {
    SwapPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            r.add_term(std::move(m), ca * cb);
        }
    return r;
}

SwapPoly operator*(const SwapPoly& a, const Rational& c) {
    SwapPoly r;
    if (c == 0) return r;
    for (const auto& [m, coeff] : a.terms_) r.terms_.emplace(m, coeff * c);
    return r;
}

std::vector<PairGen> SwapPoly::variables() const {
    std::set<PairGen> vars;
    for (const auto& [m, c] : terms_)
        for (const auto& g : m) vars.insert(g);
    return {vars.begin(), vars.end()};
}

std::string SwapPoly::to_text() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << to_string(c);
        for (const auto& g : m) os << "*(" << g.x << "," << g.y << ")";
    }
    return os.str();
}

namespace {

// {rx, sy} on generators.
SwapPoly generator_bracket(const PairGen& g, const PairGen& h, const BracketParams& params,
                           const LinkingGeom& geom) {
    Rational j = geom.linking(g, h);
    SwapPoly r;
    if (j == 0) return r;
    if (params.c1 != 0)
        r.add_term({PairGen{g.x, h.y}, PairGen{h.x, g.y}}, j * params.c1);
    if (params.c2 != 0)
        r.add_term({PairGen{g.x, g.y}, PairGen{h.x, h.y}}, j * params.c2);
    return r;
}

Monomial erase_one(const Monomial& m, size_t idx) {
    Monomial r = m;
    r.erase(r.begin() + (long)idx);
    return r;
}

}  // namespace

SwapPoly bracket(const SwapPoly& p, const SwapPoly& q, const BracketParams& params,
                 const LinkingGeom& geom) {
    SwapPoly result;
    for (const auto& [mp, cp] : p.terms()) {
        for (const auto& [mq, cq] : q.terms()) {
            Rational c = cp * cq;
            // Leibniz over each occurrence of each generator in both monomials.
            for (size_t i = 0; i < mp.size(); ++i) {
                Monomial restp = erase_one(mp, i);
                for (size_t j = 0; j < mq.size(); ++j) {
                    SwapPoly gb = generator_bracket(mp[i], mq[j], params, geom);
                    if (gb.is_zero()) continue;
                    Monomial rest = restp;
                    Monomial restq = erase_one(mq, j);
                    rest.insert(rest.end(), restq.begin(), restq.end());
                    for (const auto& [mg, cg] : gb.terms()) {
                        Monomial m = rest;
                        m.insert(m.end(), mg.begin(), mg.end());
                        result.add_term(std::move(m), c * cg);
                    }
                }
            }
        }
    }
    return result;
}

SwapFraction::SwapFraction(SwapPoly n, SwapPoly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw std::domain_error("zero denominator in SwapFraction");
}

SwapFraction frac_bracket(const SwapFraction& f, const SwapFraction& g,
                          const BracketParams& params, const LinkingGeom& geom) {
    const SwapPoly& a = f.num;
    const SwapPoly& b = f.den;
    const SwapPoly& c = g.num;
    const SwapPoly& d = g.den;
    SwapPoly num = bracket(a, c, params, geom) * b * d - bracket(a, d, params, geom) * b * c -
                   bracket(b, c, params, geom) * a * d + bracket(b, d, params, geom) * a * c;
    return SwapFraction(std::move(num), b * b * d * d);
}

}  // namespace swapalg
