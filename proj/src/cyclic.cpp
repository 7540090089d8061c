#include "swapalg/cyclic.hpp"

namespace swapalg {

int signature(const Rational& a) {
    if (a < 0) return -1;
    if (a > 0) return 1;
    return 0;
}

Rational linking_number_positions_cut(const Rational& r, const Rational& x,
                                      const Rational& s, const Rational& y,
                                      const Rational& circ, const Rational& cut) {
    auto shift = [&](const Rational& p) {
        Rational d = p - cut;
        if (d < 0) d += circ;
        if (d <= 0 || d >= circ) throw std::domain_error("cut point coincides with an argument");
        return d;
    };
    Rational rr = shift(r), xx = shift(x), ss = shift(s), yy = shift(y);
    int term1 = signature(rr - xx) * signature(rr - yy) * signature(yy - xx);
    int term2 = signature(rr - xx) * signature(rr - ss) * signature(ss - xx);
    return Rational(term1 - term2) / 2;
}

Rational linking_number_positions(const Rational& r, const Rational& x,
                                  const Rational& s, const Rational& y,
                                  const Rational& circ) {
    // Find a gap: try midpoints between 0 and each argument, plus a few
    // fixed fractions; the first candidate distinct from all four works.
    const Rational args[4] = {r, x, s, y};
    for (int denom = 2; denom <= 16; denom *= 2) {
        for (int num = 1; num < 2 * denom; num += 2) {
            Rational cand = circ * num / (2 * denom);
            bool hits = false;
            for (const auto& a : args)
                if (a == cand) { hits = true; break; }
            if (!hits) return linking_number_positions_cut(r, x, s, y, circ, cand);
        }
    }
    throw std::domain_error("no admissible cut point found");
}

Rational linking_number_cut(const Circle& c, PointId r, PointId x, PointId s, PointId y,
                            int cut) {
    c.check(r); c.check(x); c.check(s); c.check(y);
    // Cut at the gap between indices cut-1 and cut.
    Rational o = Rational(cut) - Rational(1, 2);
    return linking_number_positions_cut(Rational(r), Rational(x), Rational(s), Rational(y),
                                        Rational(c.size), o);
}

Rational linking_number(const Circle& c, PointId r, PointId x, PointId s, PointId y) {
    return linking_number_cut(c, r, x, s, y, 0);
}

Side side_of_chord(const Circle& c, PointId a, PointId b, PointId p) {
    c.check(a); c.check(b); c.check(p);
    if (a == b) throw std::domain_error("chord endpoints coincide");
    if (p == a || p == b) return Side::On;
    int da = ((b - a) % c.size + c.size) % c.size;
    int dp = ((p - a) % c.size + c.size) % c.size;
    return (dp < da) ? Side::Right : Side::Left;
}

}  // namespace swapalg
